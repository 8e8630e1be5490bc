#ifndef GWALK_ERRORS_HPP
#define GWALK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gwalk {

/// Malformed input text (adjacency list, graph6, LCF, numeric literals).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was invoked outside its stated domain (e.g. girth too
/// small for the requested power, non-regular graph, k < 3).
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// A checked internal invariant failed; indicates a bug, not bad input.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

} // namespace gwalk

#endif
