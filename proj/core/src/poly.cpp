#include "gwalk/poly.hpp"
#include "gwalk/errors.hpp"

#include <algorithm>
#include <sstream>

namespace gwalk {

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs)
        coeffs_.emplace_back(c);
    trim();
}

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(Int c) {
    IntPoly p;
    p.coeffs_.push_back(std::move(c));
    p.trim();
    return p;
}

IntPoly IntPoly::monomial(Int c, std::size_t power) {
    IntPoly p;
    if (!c.is_zero()) {
        p.coeffs_.assign(power + 1, Int(0));
        p.coeffs_[power] = std::move(c);
    }
    return p;
}

const Int& IntPoly::coeff(std::size_t i) const {
    static const Int zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& other) const {
    std::vector<Int> out(std::max(coeffs_.size(), other.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        out[i] += other.coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& other) const {
    std::vector<Int> out(std::max(coeffs_.size(), other.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        out[i] -= other.coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& other) const {
    if (is_zero() || other.is_zero())
        return IntPoly();
    std::vector<Int> out(coeffs_.size() + other.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * other.coeffs_[j];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> out(coeffs_);
    for (auto& c : out)
        c = -c;
    return IntPoly(std::move(out));
}

IntPoly IntPoly::scaled(const Int& factor) const {
    std::vector<Int> out(coeffs_);
    for (auto& c : out)
        c *= factor;
    return IntPoly(std::move(out));
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
    if (divisor.is_zero())
        throw InvariantViolation("polynomial division by zero");
    if (is_zero())
        return IntPoly();
    if (degree() < divisor.degree())
        throw InvariantViolation("inexact polynomial division (degree underflow)");
    std::vector<Int> rem(coeffs_);
    std::vector<Int> quot(coeffs_.size() - divisor.coeffs_.size() + 1, Int(0));
    const Int& lead = divisor.coeffs_.back();
    for (std::size_t i = quot.size(); i-- > 0;) {
        Int top = rem[i + divisor.coeffs_.size() - 1];
        if (top.is_zero())
            continue;
        Int q, r;
        divide_qr(top, lead, q, r);
        if (!r.is_zero())
            throw InvariantViolation("inexact polynomial division (leading term)");
        quot[i] = q;
        for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j)
            rem[i + j] -= q * divisor.coeffs_[j];
    }
    for (const Int& c : rem)
        if (!c.is_zero())
            throw InvariantViolation("inexact polynomial division (remainder)");
    return IntPoly(std::move(quot));
}

Rational IntPoly::eval_rational(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + Rational(*it);
    return acc;
}

Int IntPoly::max_abs_coeff() const {
    Int best(0);
    for (const Int& c : coeffs_)
        best = std::max(best, Int(abs(c)));
    return best;
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Int& c = coeffs_[i];
        if (c.is_zero())
            continue;
        Int mag = abs(c);
        if (first) {
            if (c.sign() < 0)
                out << "-";
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        const bool unit = (mag == 1);
        if (i == 0) {
            out << mag;
        } else {
            if (!unit)
                out << mag << "*";
            out << var;
            if (i > 1)
                out << "^" << i;
        }
    }
    return out.str();
}

} // namespace gwalk
