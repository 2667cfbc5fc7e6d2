#pragma once

#include "occ/exact/polynomial.hpp"

namespace occ::exact {

/// Quotient of two polynomials over Q, kept reduced with a monic
/// denominator.
class RationalFunction {
public:
    RationalFunction() : den_(Polynomial::constant(1)) {}
    RationalFunction(const Rational& c) : num_(Polynomial::constant(c)), den_(Polynomial::constant(1)) {}
    RationalFunction(Polynomial num) : num_(std::move(num)), den_(Polynomial::constant(1)) {}
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction x() { return RationalFunction(Polynomial::x()); }

    [[nodiscard]] const Polynomial& numerator() const { return num_; }
    [[nodiscard]] const Polynomial& denominator() const { return den_; }
    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }

    /// Throws std::domain_error at a pole.
    [[nodiscard]] Rational operator()(const Rational& x) const;
    [[nodiscard]] RationalFunction pow(int exponent) const;
    [[nodiscard]] RationalFunction inverse() const;

    /// N * D: same sign as this function wherever it is defined.
    [[nodiscard]] Polynomial sign_polynomial() const { return num_ * den_; }

    RationalFunction& operator+=(const RationalFunction& rhs);
    RationalFunction& operator-=(const RationalFunction& rhs);
    RationalFunction& operator*=(const RationalFunction& rhs);
    RationalFunction& operator/=(const RationalFunction& rhs);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend RationalFunction operator-(const RationalFunction& a) { return RationalFunction(-a.num_, a.den_); }
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    [[nodiscard]] std::string str(std::string_view var = "p") const;

private:
    void normalize();
    Polynomial num_;
    Polynomial den_;
};

}  // namespace occ::exact
