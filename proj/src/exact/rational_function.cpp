#include "occ/exact/rational_function.hpp"

#include <stdexcept>

namespace occ::exact {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(1);
        return;
    }
    const Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Polynomial::divmod(num_, g).first;
        den_ = Polynomial::divmod(den_, g).first;
    }
    const Rational lead = den_.leading();
    if (lead != Rational(1)) {
        num_ *= lead.inverse();
        den_ *= lead.inverse();
    }
}

Rational RationalFunction::operator()(const Rational& x) const {
    const Rational d = den_(x);
    if (d.is_zero()) throw std::domain_error("RationalFunction: evaluation at a pole");
    return num_(x) / d;
}

RationalFunction RationalFunction::inverse() const {
    if (num_.is_zero()) throw std::domain_error("RationalFunction: inverse of zero");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(int exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    RationalFunction out(num_.pow(static_cast<unsigned>(exponent)), den_.pow(static_cast<unsigned>(exponent)));
    return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
    if (rhs.is_zero()) throw std::domain_error("RationalFunction: division by zero");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

std::string RationalFunction::str(std::string_view var) const {
    if (den_.degree() == 0) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace occ::exact
