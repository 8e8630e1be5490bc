#include "gwalk/walkops.hpp"
#include "gwalk/errors.hpp"

#include <algorithm>

namespace gwalk {

RatMatrix build_grover(const Graph& g) {
    const int dim = g.arc_count();
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0)
            throw PreconditionError("isolated vertex " + std::to_string(v));
    RatMatrix u(dim);
    for (int a = 0; a < dim; ++a) {
        const int tail = g.origin(a);
        const Rational transmit(2, g.degree(tail));
        for (int b_rev : g.out_arcs(tail)) {
            // b runs over arcs with terminus(b) = o(a), i.e. reversals of
            // the arcs leaving o(a).
            const int b = Graph::inverse(b_rev);
            u.at(a, b) = transmit;
            if (b == Graph::inverse(a))
                u.at(a, b) -= 1;
        }
    }
    return u;
}

IntMatrix build_scaled_grover(const Graph& g) {
    const GraphReport report = analyze(g);
    if (!report.is_regular)
        throw PreconditionError("scaled Grover operator needs a regular graph");
    const int k = *report.regularity_k;
    if (k == 0)
        throw PreconditionError("isolated vertices");
    const int dim = g.arc_count();
    IntMatrix u(dim);
    for (int a = 0; a < dim; ++a) {
        const int tail = g.origin(a);
        for (int b_rev : g.out_arcs(tail)) {
            const int b = Graph::inverse(b_rev);
            u.at(a, b) = (b == Graph::inverse(a)) ? Int(2 - k) : Int(2);
        }
    }
    return u;
}

namespace {

template <typename T>
IntMatrix support_impl(const DenseMatrix<T>& m) {
    IntMatrix out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            if (sign_of(m.at(i, j)) > 0)
                out.at(i, j) = 1;
    return out;
}

} // namespace

IntMatrix positive_support(const RatMatrix& m) { return support_impl(m); }
IntMatrix positive_support(const IntMatrix& m) { return support_impl(m); }

IntMatrix support_of_power(const Graph& g, int n) {
    if (n < 1)
        throw PreconditionError("power must be >= 1");
    const GraphReport report = analyze(g);
    if (report.is_regular && *report.regularity_k >= 1) {
        return positive_support(build_scaled_grover(g).power(static_cast<std::size_t>(n)));
    }
    return positive_support(build_grover(g).power(static_cast<std::size_t>(n)));
}

IntMatrix flip_J(const IntMatrix& m, FlipSide side) {
    IntMatrix out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (side == FlipSide::Left)
                out.at(i, j) = m.at(i ^ 1, j);
            else
                out.at(i, j) = m.at(i, j ^ 1);
        }
    return out;
}

IntPoly char_poly(const IntMatrix& a) {
    const std::size_t dim = a.dim();
    std::vector<Int> coeffs(dim + 1, Int(0));  // ascending in x
    coeffs[dim] = 1;
    IntMatrix m = a;
    Int c(0);
    for (std::size_t step = 1; step <= dim; ++step) {
        if (step > 1) {
            // M <- A * (M + c I)
            IntMatrix shifted = m;
            for (std::size_t i = 0; i < dim; ++i)
                shifted.at(i, i) += c;
            m = a * shifted;
        }
        Int tr = m.trace();
        Int q, r;
        divide_qr(tr, Int(step), q, r);
        if (!r.is_zero())
            throw InvariantViolation("Faddeev-LeVerrier trace division was inexact");
        c = -q;
        coeffs[dim - step] = c;
    }
    return IntPoly(std::move(coeffs));
}

IntPoly zeta_poly(const Graph& g, int n) {
    const IntMatrix s = support_of_power(g, n);
    const IntPoly p = char_poly(s);
    // det(I - uA) = u^d * p(1/u): reverse the coefficient order. The
    // constant term is 1; the u-degree drops below d exactly when A is
    // singular.
    std::vector<Int> rev(p.coefficients().rbegin(), p.coefficients().rend());
    return IntPoly(std::move(rev));
}

} // namespace gwalk
