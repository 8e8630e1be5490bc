#include "gwalk/exact.hpp"
#include "gwalk/errors.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace gwalk {

Rational rational_from_string(const std::string& text) {
    if (text.empty())
        throw ParseError("empty numeric literal");
    const auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            Int num(text.substr(0, slash));
            Int den(text.substr(slash + 1));
            if (den.is_zero())
                throw ParseError("zero denominator in '" + text + "'");
            return Rational(num, den);
        }
        const auto dot = text.find('.');
        if (dot == std::string::npos)
            return Rational(Int(text));
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        const std::size_t frac_len = text.size() - dot - 1;
        if (frac_len == 0 || digits.empty())
            throw ParseError("malformed decimal '" + text + "'");
        Int den(1);
        for (std::size_t i = 0; i < frac_len; ++i)
            den *= 10;
        return Rational(Int(digits), den);
    } catch (const std::runtime_error& e) {
        throw ParseError("cannot parse '" + text + "' as a rational: " + e.what());
    }
}

bool perfect_square(const Int& n, Int& root) {
    if (n.sign() < 0)
        return false;
    root = sqrt(n);
    return root * root == n;
}

std::string to_string(const Rational& q) {
    std::ostringstream out;
    out << q;
    return out.str();
}

ExtScalar::ExtScalar(Rational rat, Rational irr, std::uint64_t radicand)
    : rat_(std::move(rat)), irr_(std::move(irr)), radicand_(radicand) {
    if (radicand_ < 1)
        throw std::invalid_argument("ExtScalar radicand must be >= 1");
    Int root;
    if (!irr_.is_zero() && perfect_square(Int(radicand_), root)) {
        rat_ += irr_ * root;
        irr_ = 0;
    }
}

void ExtScalar::check_same_field(const ExtScalar& other) const {
    if (radicand_ != other.radicand_)
        throw std::invalid_argument("ExtScalar radicand mismatch: " +
                                    std::to_string(radicand_) + " vs " +
                                    std::to_string(other.radicand_));
}

ExtScalar ExtScalar::operator+(const ExtScalar& other) const {
    check_same_field(other);
    return ExtScalar(rat_ + other.rat_, irr_ + other.irr_, radicand_);
}

ExtScalar ExtScalar::operator-(const ExtScalar& other) const {
    check_same_field(other);
    return ExtScalar(rat_ - other.rat_, irr_ - other.irr_, radicand_);
}

ExtScalar ExtScalar::operator*(const ExtScalar& other) const {
    check_same_field(other);
    // (a + b*sqrt(r)) (c + d*sqrt(r)) = (ac + bd*r) + (ad + bc)*sqrt(r)
    Rational rad(radicand_);
    return ExtScalar(rat_ * other.rat_ + irr_ * other.irr_ * rad,
                     rat_ * other.irr_ + irr_ * other.rat_, radicand_);
}

ExtScalar ExtScalar::operator-() const {
    return ExtScalar(-rat_, -irr_, radicand_);
}

bool ExtScalar::operator==(const ExtScalar& other) const {
    check_same_field(other);
    return rat_ == other.rat_ && irr_ == other.irr_;
}

int ExtScalar::sign() const {
    const int sr = rat_.sign();
    const int si = irr_.sign();
    if (si == 0)
        return sr;
    if (sr == 0)
        return si;
    if (sr == si)
        return sr;
    // Opposite component signs: the sign is decided by |rat|^2 vs
    // irr^2 * radicand. Equality cannot happen for a non-square radicand
    // (irr is folded away for square ones), but handle it anyway.
    const Rational lhs = rat_ * rat_;
    const Rational rhs = irr_ * irr_ * Rational(radicand_);
    const int cmp = lhs.compare(rhs);
    if (cmp == 0)
        return 0;
    return cmp > 0 ? sr : si;
}

double ExtScalar::to_double() const {
    return rat_.convert_to<double>() +
           irr_.convert_to<double>() * std::sqrt(static_cast<double>(radicand_));
}

std::string ExtScalar::str() const {
    std::ostringstream out;
    out << rat_;
    if (!irr_.is_zero())
        out << (irr_.sign() > 0 ? "+" : "") << irr_ << "*sqrt(" << radicand_ << ")";
    return out.str();
}

} // namespace gwalk
