#pragma once

#include "occ/exact/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace occ::exact {

/// Univariate polynomial over the rationals, coefficients lowest degree
/// first. The leading coefficient is nonzero unless the polynomial is zero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(std::initializer_list<Rational> coefficients);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, std::size_t degree);
    /// The indeterminate X.
    static Polynomial x();
    /// (X - root)
    static Polynomial linear_factor(const Rational& root);

    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
    [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
    [[nodiscard]] Rational coefficient(std::size_t k) const;
    [[nodiscard]] const Rational& leading() const;

    [[nodiscard]] Rational operator()(const Rational& x) const;
    [[nodiscard]] Polynomial derivative() const;
    [[nodiscard]] Polynomial monic() const;
    [[nodiscard]] Polynomial pow(unsigned exponent) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Euclidean division: a = q*b + r with deg r < deg b.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

    [[nodiscard]] std::string str(std::string_view var = "X") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

Rational poly_eval(const Polynomial& p, const Rational& x);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace occ::exact
