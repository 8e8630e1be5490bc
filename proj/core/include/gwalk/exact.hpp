#ifndef GWALK_EXACT_HPP
#define GWALK_EXACT_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace gwalk {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Exact sign in {-1, 0, +1}.
inline int sign_of(const Rational& q) { return q.sign(); }
inline int sign_of(const Int& z) { return z.sign(); }

/// Parse "123", "-4/7" or a decimal literal like "2.75" into an exact
/// rational. Throws ParseError on anything else.
Rational rational_from_string(const std::string& text);

/// Exact integer square root test: returns true and sets root when n is a
/// perfect square.
bool perfect_square(const Int& n, Int& root);

std::string to_string(const Rational& q);

/// Element of the real quadratic extension Q(sqrt(radicand)):
/// value = rat + irr * sqrt(radicand). The radicand is fixed per walk
/// instance (degree k gives radicand k-1) and mixing radicands is rejected.
/// A perfect-square radicand is folded into the rational part on
/// construction, so the representation is unique.
class ExtScalar {
public:
    ExtScalar() : rat_(0), irr_(0), radicand_(1) {}
    ExtScalar(Rational rat, Rational irr, std::uint64_t radicand);

    /// Purely rational value embedded at the given radicand.
    static ExtScalar rational(Rational value, std::uint64_t radicand) {
        return ExtScalar(std::move(value), Rational(0), radicand);
    }

    const Rational& rat() const { return rat_; }
    const Rational& irr() const { return irr_; }
    std::uint64_t radicand() const { return radicand_; }

    ExtScalar operator+(const ExtScalar& other) const;
    ExtScalar operator-(const ExtScalar& other) const;
    ExtScalar operator*(const ExtScalar& other) const;
    ExtScalar operator-() const;
    ExtScalar& operator+=(const ExtScalar& other) { *this = *this + other; return *this; }
    ExtScalar& operator-=(const ExtScalar& other) { *this = *this - other; return *this; }
    ExtScalar& operator*=(const ExtScalar& other) { *this = *this * other; return *this; }

    bool operator==(const ExtScalar& other) const;
    bool operator!=(const ExtScalar& other) const { return !(*this == other); }

    bool is_zero() const { return rat_.is_zero() && irr_.is_zero(); }

    /// Exact sign of rat + irr*sqrt(radicand), by case analysis on the
    /// component signs and exact comparison of rat^2 against
    /// irr^2 * radicand. No floating point involved.
    int sign() const;

    /// Double approximation (sanity cross-checks and rendering only).
    double to_double() const;

    std::string str() const;

private:
    void check_same_field(const ExtScalar& other) const;

    Rational rat_;
    Rational irr_;
    std::uint64_t radicand_;
};

} // namespace gwalk

#endif
