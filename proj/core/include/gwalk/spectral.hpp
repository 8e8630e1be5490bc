#ifndef GWALK_SPECTRAL_HPP
#define GWALK_SPECTRAL_HPP

#include "gwalk/graph.hpp"
#include "gwalk/poly.hpp"
#include "gwalk/structure.hpp"

#include <string>
#include <vector>

namespace gwalk {

/// 2x2 matrix with integer-polynomial entries in the spectral parameter
/// mu (the regularity k is fixed per computation).
struct PolyMat2 {
    IntPoly a, b, c, d;  // [[a, b], [c, d]]

    static PolyMat2 identity();
    /// The companion-style seed [[0, -1], [k-1, mu]].
    static PolyMat2 seed(int k);

    PolyMat2 operator+(const PolyMat2& other) const;
    PolyMat2 operator*(const PolyMat2& other) const;
    bool operator==(const PolyMat2& other) const = default;

    /// Left/right multiplication by the swap matrix [[0,1],[1,0]].
    PolyMat2 swap_rows() const;
    PolyMat2 swap_cols() const;
    /// Conjugation by the swap matrix.
    PolyMat2 swap_conj() const { return swap_rows().swap_cols(); }

    IntPoly trace() const { return a + d; }
    IntPoly det() const { return a * d - b * c; }
};

/// The 2x2 reduction of the support decomposition: each arc-space term
/// maps to a word in the seed matrix and the swap matrix, so the whole
/// formula becomes one polynomial matrix F_n(mu).
PolyMat2 f_n_matrix(int k, int n);
PolyMat2 f_n_matrix(const StructureFormula& f);

struct TraceDetDisc {
    IntPoly tr;    // trace of F_n
    IntPoly det;   // determinant of F_n
    IntPoly disc;  // tr^2 - 4 det
};
TraceDetDisc trace_det_disc(int k, int n);

/// Plane-curve encodings of the eigenvalue orbit: the real-part curve is
/// the zero set of q_mu(mu) + x_coeff * x, the imaginary-part curve the
/// zero set of p_mu(mu) + y2_coeff * y^2.
struct CurvePolys {
    IntPoly q_mu;       // trace polynomial
    int x_coeff = -2;
    IntPoly p_mu;       // discriminant polynomial
    int y2_coeff = 4;

    std::string to_json(int k, int n) const;
};
CurvePolys appendix_polys(int k, int n);

enum class CurveBranch { RealPair, ComplexPair };

struct CurvePoint {
    double mu = 0;
    double x = 0;
    double y = 0;  // >= 0; the conjugate is implied
    CurveBranch branch = CurveBranch::RealPair;
};

/// Exact evaluation of trace/det/disc on an even grid of rational mu,
/// emitted as floating-point curve points: two real roots where the
/// discriminant is positive, one conjugate pair where it is negative.
std::vector<CurvePoint> curve_samples(int k, int n, const Rational& mu_min,
                                      const Rational& mu_max, int count);
std::string curve_csv(const std::vector<CurvePoint>& points);

struct LiftEntry {
    double mu = 0;
    double lambda_re = 0;
    double lambda_im = 0;
    double residual = 0;
};

struct LiftReport {
    bool pass = false;
    int n = 0;
    int k = 0;
    std::optional<int> girth;
    double tol = 0;
    double max_residual = 0;
    int excluded = 0;  // eigenvalues at +-k, skipped by the lift
    std::vector<LiftEntry> entries;

    std::string to_json() const;
};

/// Checks that every adjacency eigenvalue mu != +-k lifts onto roots of
/// the exact characteristic polynomial of S(U^n): the quadratic
/// lambda^2 - tr(F_n(mu)) lambda + det(F_n(mu)) is solved per eigenvalue
/// and the char-poly residual at the roots is compared against
/// tol * max|coefficient|. The char-poly side is exact; only the
/// adjacency spectrum is numeric.
LiftReport lift_verify(const Graph& g, int n, double tol = 1e-8);

struct NondiagFlag {
    double mu = 0;
    bool exact = false;       // certified with exact rational arithmetic
    std::string mu_exact;     // the recognized rational, when exact
};

struct NondiagReport {
    int n = 0;
    int k = 0;
    double tol = 0;
    std::vector<NondiagFlag> flags;

    std::string to_json() const;
};

/// Flags adjacency eigenvalues sitting on zeros of the discriminant
/// where F_n is not a scalar matrix: the spectral-lift quadratic then has
/// a double root with a defective 2x2 block, predicting that S(U^n) is
/// not diagonalizable. Eigenvalues recognized as small rationals are
/// certified exactly; the rest are screened numerically. A prediction
/// report, not a Jordan-form proof.
NondiagReport nondiag_predict(const Graph& g, int n, double tol = 1e-8);

} // namespace gwalk

#endif
