#include "gwalk/spectral.hpp"
#include "gwalk/errors.hpp"
#include "gwalk/walkops.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <json.hpp>

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace gwalk {

using BigFloat = boost::multiprecision::mpf_float_50;

PolyMat2 PolyMat2::identity() {
    return PolyMat2{IntPoly{1}, IntPoly{}, IntPoly{}, IntPoly{1}};
}

PolyMat2 PolyMat2::seed(int k) {
    return PolyMat2{IntPoly{}, IntPoly{-1}, IntPoly{k - 1}, IntPoly{0, 1}};
}

PolyMat2 PolyMat2::operator+(const PolyMat2& o) const {
    return PolyMat2{a + o.a, b + o.b, c + o.c, d + o.d};
}

PolyMat2 PolyMat2::operator*(const PolyMat2& o) const {
    return PolyMat2{a * o.a + b * o.c, a * o.b + b * o.d,
                    c * o.a + d * o.c, c * o.b + d * o.d};
}

PolyMat2 PolyMat2::swap_rows() const { return PolyMat2{c, d, a, b}; }
PolyMat2 PolyMat2::swap_cols() const { return PolyMat2{b, a, d, c}; }

PolyMat2 f_n_matrix(const StructureFormula& f) {
    const int n = f.n();
    PolyMat2 sum{};
    PolyMat2 power = PolyMat2::identity();
    const PolyMat2 seed = PolyMat2::seed(f.k());
    for (int j = 0; j <= n; ++j) {
        if (j > 0)
            power = power * seed;
        if (f.eps(j))
            sum = sum + power;
        if (f.tau(j))
            sum = sum + power.swap_rows();
        if (j >= 1 && j <= n - 1) {
            if (f.eps(-j))
                sum = sum + power.swap_conj();
            if (f.tau(-j))
                sum = sum + power.swap_cols();
        }
    }
    return sum;
}

PolyMat2 f_n_matrix(int k, int n) { return f_n_matrix(coefficients(k, n)); }

TraceDetDisc trace_det_disc(int k, int n) {
    const PolyMat2 f = f_n_matrix(k, n);
    TraceDetDisc out;
    out.tr = f.trace();
    out.det = f.det();
    out.disc = out.tr * out.tr - out.det.scaled(4);
    return out;
}

CurvePolys appendix_polys(int k, int n) {
    if (k < 3)
        throw PreconditionError("curve polynomials require k >= 3");
    const TraceDetDisc t = trace_det_disc(k, n);
    CurvePolys out;
    out.q_mu = t.tr;
    out.p_mu = t.disc;
    return out;
}

namespace {

std::string poly_json_array(const IntPoly& p) {
    std::ostringstream out;
    out << '[';
    const auto& coeffs = p.coefficients();
    if (coeffs.empty()) {
        out << '0';
    } else {
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (i)
                out << ',';
            out << coeffs[i];
        }
    }
    out << ']';
    return out.str();
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string CurvePolys::to_json(int k, int n) const {
    std::ostringstream out;
    out << "{\n"
        << "  \"k\": " << k << ",\n"
        << "  \"n\": " << n << ",\n"
        << "  \"Q\": {\"mu_coefficients\": " << poly_json_array(q_mu)
        << ", \"x_coefficient\": " << x_coeff << "},\n"
        << "  \"P\": {\"mu_coefficients\": " << poly_json_array(p_mu)
        << ", \"y2_coefficient\": " << y2_coeff << "}\n"
        << "}";
    return out.str();
}

std::vector<CurvePoint> curve_samples(int k, int n, const Rational& mu_min,
                                      const Rational& mu_max, int count) {
    if (count < 2)
        throw PreconditionError("need at least two samples");
    const TraceDetDisc polys = trace_det_disc(k, n);
    std::vector<CurvePoint> points;
    points.reserve(static_cast<std::size_t>(count) * 2);
    const Rational span = mu_max - mu_min;
    for (int i = 0; i < count; ++i) {
        const Rational mu = mu_min + span * Rational(i, count - 1);
        const Rational tr = polys.tr.eval_rational(mu);
        const Rational disc = polys.disc.eval_rational(mu);
        const double mu_d = mu.convert_to<double>();
        const double tr_d = tr.convert_to<double>();
        const double disc_d = disc.convert_to<double>();
        if (disc.sign() < 0) {
            points.push_back({mu_d, tr_d / 2, std::sqrt(-disc_d) / 2, CurveBranch::ComplexPair});
        } else if (disc.sign() == 0) {
            points.push_back({mu_d, tr_d / 2, 0.0, CurveBranch::RealPair});
        } else {
            const double root = std::sqrt(disc_d);
            points.push_back({mu_d, (tr_d + root) / 2, 0.0, CurveBranch::RealPair});
            points.push_back({mu_d, (tr_d - root) / 2, 0.0, CurveBranch::RealPair});
        }
    }
    return points;
}

std::string curve_csv(const std::vector<CurvePoint>& points) {
    std::ostringstream out;
    out << "mu,x,y,branch\n";
    for (const CurvePoint& p : points) {
        out << format_double(p.mu) << ',' << format_double(p.x) << ',' << format_double(p.y)
            << ',' << (p.branch == CurveBranch::RealPair ? "real_pair" : "complex_pair") << '\n';
    }
    return out.str();
}

namespace {

void require_lift_preconditions(const GraphReport& report, int n) {
    if (!report.is_regular)
        throw PreconditionError("spectral lift requires a regular graph");
    if (*report.regularity_k < 3)
        throw PreconditionError("spectral lift requires regularity k >= 3, got k = " +
                                std::to_string(*report.regularity_k));
    if (n < 1)
        throw PreconditionError("power must be >= 1");
    if (report.girth && *report.girth <= 2 * (n - 1))
        throw PreconditionError("girth too small: need > 2(n-1) = " +
                                std::to_string(2 * (n - 1)) + ", got " +
                                std::to_string(*report.girth));
}

std::vector<double> adjacency_spectrum(const Graph& g) {
    const int n = g.vertex_count();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int a = 0; a < g.arc_count(); ++a)
        m(g.origin(a), g.terminus(a)) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success)
        throw InvariantViolation("adjacency eigensolver failed to converge");
    std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    return out;
}

// p(lambda) for lambda a root of x^2 - t x + d: reduce p modulo the
// quadratic, keeping only a linear remainder c1 * x + c0. Everything is
// exact: mu comes in as a double, i.e. a dyadic rational, so t and d are
// exact rationals and the recurrence never rounds. This keeps the huge
// intermediate cancellations (degree ~ arc count, |lambda| > 1) out of
// floating point entirely.
struct QuadRemainder {
    Rational c1, c0;
};

QuadRemainder reduce_mod_quadratic(const IntPoly& p, const Rational& t, const Rational& d) {
    QuadRemainder r{Rational(0), Rational(0)};
    const auto& coeffs = p.coefficients();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        Rational c1 = r.c1 * t + r.c0;
        Rational c0 = Rational(*it) - r.c1 * d;
        r.c1 = std::move(c1);
        r.c0 = std::move(c0);
    }
    return r;
}

// Backward-error denominator sum_i |c_i| |lambda|^i: all terms positive,
// so the high-precision Horner never cancels.
BigFloat scale_at(const IntPoly& p, const BigFloat& abs_lambda) {
    BigFloat acc(0);
    for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it)
        acc = acc * abs_lambda + abs(BigFloat(*it));
    return acc;
}

} // namespace

LiftReport lift_verify(const Graph& g, int n, double tol) {
    if (tol <= 0)
        throw PreconditionError("tolerance must be positive");
    const GraphReport report = analyze(g);
    require_lift_preconditions(report, n);
    const int k = *report.regularity_k;

    LiftReport out;
    out.n = n;
    out.k = k;
    out.girth = report.girth;
    out.tol = tol;

    const TraceDetDisc polys = trace_det_disc(k, n);
    const IntPoly cp = char_poly(support_of_power(g, n));

    for (double mu : adjacency_spectrum(g)) {
        if (std::abs(mu - k) <= 1e-9 * std::max(1, k) ||
            std::abs(mu + k) <= 1e-9 * std::max(1, k)) {
            ++out.excluded;
            continue;
        }
        const Rational mu_q(mu);  // exact dyadic value of the double
        const Rational tr = polys.tr.eval_rational(mu_q);
        const Rational det = polys.det.eval_rational(mu_q);
        const Rational disc = tr * tr - 4 * det;
        const QuadRemainder rem = reduce_mod_quadratic(cp, tr, det);
        const double tr_d = tr.convert_to<double>();

        // residual = |p(lambda)| / sum_i |c_i| |lambda|^i, the backward
        // error of lambda as a root of the exact char poly.
        if (disc.sign() < 0) {
            // Conjugate pair: |lambda|^2 = det, Re lambda = tr/2, and
            // |p(lambda)|^2 = c1^2 det + c1 c0 tr + c0^2, all exact.
            const Rational mag2 = rem.c1 * rem.c1 * det + rem.c1 * rem.c0 * tr + rem.c0 * rem.c0;
            const BigFloat scale = scale_at(cp, sqrt(BigFloat(det)));
            const double residual =
                mag2.is_zero() ? 0.0
                               : (sqrt(BigFloat(mag2)) / scale).convert_to<double>();
            const double im = std::sqrt(-disc.convert_to<double>()) / 2;
            out.entries.push_back({mu, tr_d / 2, im, residual});
            out.entries.push_back({mu, tr_d / 2, -im, residual});
        } else if (disc.is_zero()) {
            // Double root lambda = tr/2; p(lambda) = A exactly.
            const Rational a = rem.c0 + rem.c1 * tr / 2;
            const BigFloat scale = scale_at(cp, abs(BigFloat(tr) / 2));
            const double residual =
                a.is_zero() ? 0.0 : (abs(BigFloat(a)) / scale).convert_to<double>();
            out.entries.push_back({mu, tr_d / 2, 0.0, residual});
            out.entries.push_back({mu, tr_d / 2, 0.0, residual});
        } else {
            // Real roots lambda = (tr +- sqrt(disc))/2. With
            // A = c0 + c1 tr / 2 and B = c1 / 2,
            // p(lambda+-) = A +- B sqrt(disc), and the product
            // p(lambda+) p(lambda-) = A^2 - B^2 disc is exact, so each
            // |p| is that product over the conjugate, which never
            // cancels when its partner is the small one.
            const Rational a = rem.c0 + rem.c1 * tr / 2;
            const Rational b = rem.c1 / 2;
            const Rational cross = a * a - b * b * disc;
            const BigFloat root = sqrt(BigFloat(disc));
            for (int sign : {+1, -1}) {
                const BigFloat lambda = (BigFloat(tr) + sign * root) / 2;
                const BigFloat scale = scale_at(cp, abs(lambda));
                double residual;
                if (cross.is_zero()) {
                    // This side vanishes iff A and sign * B sqrt(disc)
                    // have opposite signs; the other side equals 2A.
                    const bool vanishes = (a.sign() == 0 && b.sign() == 0) ||
                                          a.sign() == -sign * b.sign();
                    residual = vanishes
                                   ? 0.0
                                   : (2 * abs(BigFloat(a)) / scale).convert_to<double>();
                } else {
                    const BigFloat conjugate = abs(BigFloat(a) - sign * BigFloat(b) * root);
                    residual = std::abs(
                        (BigFloat(cross) / (scale * conjugate)).convert_to<double>());
                }
                out.entries.push_back({mu, lambda.convert_to<double>(), 0.0, residual});
            }
        }
    }
    out.max_residual = 0;
    for (const LiftEntry& e : out.entries)
        out.max_residual = std::max(out.max_residual, e.residual);
    out.pass = out.max_residual <= tol;
    return out;
}

std::string LiftReport::to_json() const {
    nlohmann::ordered_json j;
    j["pass"] = pass;
    j["n"] = n;
    j["k"] = k;
    if (girth)
        j["girth"] = *girth;
    else
        j["girth"] = "infinity";
    j["tol"] = tol;
    j["max_residual"] = max_residual;
    j["excluded_trivial"] = excluded;
    auto& lifts = j["lifts"] = nlohmann::ordered_json::array();
    for (const LiftEntry& e : entries) {
        lifts.push_back({{"mu", e.mu},
                         {"lambda_re", e.lambda_re},
                         {"lambda_im", e.lambda_im},
                         {"residual", e.residual}});
    }
    return j.dump(2);
}

namespace {

// Continued-fraction recognition of a nearby small rational.
bool recognize_rational(double x, long max_den, double tol, Rational& out) {
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double value = x;
    for (int iter = 0; iter < 64; ++iter) {
        const double floor_v = std::floor(value);
        if (floor_v > 1e17 || floor_v < -1e17)
            return false;
        const long a = static_cast<long>(floor_v);
        const long p2 = a * p1 + p0;
        const long q2 = a * q1 + q0;
        if (q2 > max_den)
            break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        if (std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) <= tol) {
            out = Rational(p1, q1);
            return true;
        }
        const double frac = value - floor_v;
        if (frac < 1e-15)
            break;
        value = 1.0 / frac;
    }
    if (q1 >= 1 && std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) <= tol) {
        out = Rational(p1, q1);
        return true;
    }
    return false;
}

double eval_scale(const IntPoly& p, double mu) {
    double scale = 0;
    double power = 1;
    const double base = std::max(1.0, std::abs(mu));
    for (const Int& c : p.coefficients()) {
        scale += std::abs(c.convert_to<double>()) * power;
        power *= base;
    }
    return scale;
}

} // namespace

NondiagReport nondiag_predict(const Graph& g, int n, double tol) {
    if (tol <= 0)
        throw PreconditionError("tolerance must be positive");
    const GraphReport report = analyze(g);
    require_lift_preconditions(report, n);
    const int k = *report.regularity_k;

    NondiagReport out;
    out.n = n;
    out.k = k;
    out.tol = tol;

    const PolyMat2 f = f_n_matrix(k, n);
    const IntPoly tr = f.trace();
    const IntPoly det = f.det();
    const IntPoly disc = tr * tr - det.scaled(4);
    const IntPoly off_sum = f.b * f.b + f.c * f.c;  // zero iff both off-diagonals vanish
    const IntPoly diag_diff = f.a - f.d;

    for (double mu : adjacency_spectrum(g)) {
        if (std::abs(mu - k) <= 1e-9 * k || std::abs(mu + k) <= 1e-9 * k)
            continue;
        bool duplicate = false;
        for (const NondiagFlag& seen : out.flags)
            if (std::abs(seen.mu - mu) <= 1e-9)
                duplicate = true;
        if (duplicate)
            continue;

        Rational exact_mu;
        if (recognize_rational(mu, 64, 1e-9, exact_mu)) {
            if (disc.eval_rational(exact_mu).is_zero()) {
                const bool scalar = off_sum.eval_rational(exact_mu).is_zero() &&
                                    diag_diff.eval_rational(exact_mu).is_zero();
                if (!scalar)
                    out.flags.push_back({mu, true, to_string(exact_mu)});
            }
            continue;
        }
        const double disc_val = disc.eval_rational(Rational(mu)).convert_to<double>();
        if (std::abs(disc_val) > tol * eval_scale(disc, mu))
            continue;
        const double off = std::abs(f.b.eval<double>(mu)) + std::abs(f.c.eval<double>(mu));
        const double diag = std::abs(diag_diff.eval<double>(mu));
        const double fscale = eval_scale(tr, mu) + 1;
        if (off + diag > tol * fscale)
            out.flags.push_back({mu, false, ""});
    }
    return out;
}

std::string NondiagReport::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["k"] = k;
    j["tol"] = tol;
    auto& flags_json = j["flags"] = nlohmann::ordered_json::array();
    for (const NondiagFlag& f : flags) {
        nlohmann::ordered_json entry;
        entry["mu"] = f.mu;
        entry["exact"] = f.exact;
        if (f.exact)
            entry["mu_exact"] = f.mu_exact;
        flags_json.push_back(entry);
    }
    return j.dump(2);
}

} // namespace gwalk
