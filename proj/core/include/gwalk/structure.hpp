#ifndef GWALK_STRUCTURE_HPP
#define GWALK_STRUCTURE_HPP

#include "gwalk/graph.hpp"
#include "gwalk/linewalk.hpp"
#include "gwalk/matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gwalk {

/// 0/1 coefficients of the support decomposition of S(U^n):
///
///   S(U^n) = sum_j eps[j] * T_j  +  tau[j] * J * T_j,
///   T_j = S(U)^j for j >= 0, transpose(S(U)^|j|) for j < 0,
///
/// with j running over [-(n-1), n]. The coefficients come from the exact
/// line walk at step n via the cell correspondence
///
///   eps[j] <- phase of cell (j; R),   tau[j] <- phase of cell (j-1; L),
///
/// a coefficient being 1 exactly when the phase is zero. All index
/// bookkeeping lives here; everything downstream (matrix assembly,
/// 2x2 spectral reduction, printing) consumes this table.
class StructureFormula {
public:
    StructureFormula(int k, int n);

    int k() const { return k_; }
    int n() const { return n_; }
    int min_index() const { return -(n_ - 1); }
    int max_index() const { return n_; }

    bool eps(int j) const { return in_range(j) && eps_[offset(j)]; }
    bool tau(int j) const { return in_range(j) && tau_[offset(j)]; }
    void set_eps(int j, bool v) { eps_[offset(j)] = v; }
    void set_tau(int j, bool v) { tau_[offset(j)] = v; }

    bool operator==(const StructureFormula& other) const {
        return k_ == other.k_ && n_ == other.n_ && eps_ == other.eps_ && tau_ == other.tau_;
    }

private:
    bool in_range(int j) const { return j >= min_index() && j <= max_index(); }
    std::size_t offset(int j) const { return static_cast<std::size_t>(j + n_ - 1); }

    int k_;
    int n_;
    std::vector<std::uint8_t> eps_;
    std::vector<std::uint8_t> tau_;
};

/// Runs the exact line walk for n steps and reads the coefficients off
/// the phase row. Requires k >= 3.
StructureFormula coefficients(int k, int n);

/// Evaluates the decomposition's right-hand side on a concrete graph.
/// The graph must be k-regular for the formula's k; when the girth
/// exceeds 2(n-1) every entry of the sum is checked to be 0 or 1.
IntMatrix assemble_rhs(const Graph& g, const StructureFormula& f);

struct VerificationReport {
    bool pass = false;
    int n = 0;
    int k = 0;
    std::optional<int> girth;
    std::vector<std::pair<int, int>> mismatches;  // (row b, col a)

    std::string to_json() const;
};

/// Compares assemble_rhs against the brute-force S(U^n). Refuses (throws
/// PreconditionError) when the graph is not regular with k >= 3 or the
/// girth condition girth > 2(n-1) fails.
VerificationReport verify(const Graph& g, int n);

enum class FormulaFormat { Text, Json };

/// Text form lists terms left to right in cell order, e.g.
/// "^T S(U)^3 + J ^T S(U)^2 + ^T S(U) + S(U) + J S(U)^2 + S(U)^5".
std::string pretty_print(const StructureFormula& f, FormulaFormat format);

} // namespace gwalk

#endif
