#ifndef GWALK_POLY_HPP
#define GWALK_POLY_HPP

#include "gwalk/exact.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace gwalk {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, constant term first. Leading zeros are trimmed, so the
/// zero polynomial has an empty coefficient vector.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long long> coeffs);
    explicit IntPoly(std::vector<Int> coeffs);

    static IntPoly constant(Int c);
    /// The monomial c * x^power.
    static IntPoly monomial(Int c, std::size_t power);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Int>& coefficients() const { return coeffs_; }
    /// Coefficient of x^i (0 beyond the degree).
    const Int& coeff(std::size_t i) const;

    IntPoly operator+(const IntPoly& other) const;
    IntPoly operator-(const IntPoly& other) const;
    IntPoly operator*(const IntPoly& other) const;
    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& other) { *this = *this + other; return *this; }
    IntPoly& operator-=(const IntPoly& other) { *this = *this - other; return *this; }
    IntPoly& operator*=(const IntPoly& other) { *this = *this * other; return *this; }
    bool operator==(const IntPoly& other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const IntPoly& other) const { return coeffs_ != other.coeffs_; }

    IntPoly scaled(const Int& factor) const;

    /// Exact quotient; throws InvariantViolation when the division leaves
    /// a remainder. Fraction-free elimination relies on every interior
    /// division being exact.
    IntPoly divide_exact(const IntPoly& divisor) const;

    /// Horner evaluation in any ring constructible from Int.
    template <typename T>
    T eval(const T& x) const {
        T acc = T(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + T(*it);
        return acc;
    }

    Rational eval_rational(const Rational& x) const;
    Int max_abs_coeff() const;

    /// Human-readable form such as "x^3 - 5*x + 2" in the given variable.
    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Int> coeffs_;
};

} // namespace gwalk

#endif
