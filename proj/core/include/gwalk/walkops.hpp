#ifndef GWALK_WALKOPS_HPP
#define GWALK_WALKOPS_HPP

#include "gwalk/graph.hpp"
#include "gwalk/matrix.hpp"
#include "gwalk/poly.hpp"

namespace gwalk {

enum class FlipSide { Left, Right };

/// Grover evolution U over arcs: entry (a, b) = 2/deg(o(a)) - [b = inv(a)]
/// for t(b) = o(a), zero otherwise. Exact rationals throughout.
RatMatrix build_grover(const Graph& g);

/// deg(o(a)) * U as an integer matrix, valid for regular graphs; entries
/// are 2 on continuations and 2-k on reversals. Taking supports is
/// scale-invariant, so powers of this matrix replace powers of U.
IntMatrix build_scaled_grover(const Graph& g);

/// 0/1 matrix marking strictly positive entries.
IntMatrix positive_support(const RatMatrix& m);
IntMatrix positive_support(const IntMatrix& m);

/// S(U^n): exact power then support. Uses the integer fast path on
/// regular graphs and rational arithmetic otherwise.
IntMatrix support_of_power(const Graph& g, int n);

/// Arc-reversal operator J: left flip permutes rows by the involution,
/// right flip permutes columns.
IntMatrix flip_J(const IntMatrix& m, FlipSide side);

/// Monic characteristic polynomial det(xI - A), exact integer
/// coefficients via the Faddeev-LeVerrier recurrence (the trace divisions
/// are exact over Z).
IntPoly char_poly(const IntMatrix& a);

/// Reciprocal zeta polynomial det(I - u * S(U^n)), constant term first.
IntPoly zeta_poly(const Graph& g, int n);

} // namespace gwalk

#endif
