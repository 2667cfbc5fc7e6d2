#pragma once

#include "occ/exact/rational.hpp"

#include <string>

namespace occ::hypercube {

using exact::Rational;

/// a + b·√d for a fixed positive rational d. When d is a rational square
/// the root is folded into a, so equal numbers compare equal.
class Surd {
public:
    Surd() = default;
    Surd(const Rational& a, const Rational& d) : Surd(a, Rational(0), d) {}
    Surd(const Rational& a, const Rational& b, const Rational& d);

    /// √d itself.
    static Surd root(const Rational& d) { return Surd(Rational(0), Rational(1), d); }

    [[nodiscard]] const Rational& rational_part() const { return a_; }
    [[nodiscard]] const Rational& root_part() const { return b_; }
    [[nodiscard]] const Rational& radicand() const { return d_; }
    [[nodiscard]] bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    [[nodiscard]] bool is_rational() const { return b_.is_zero(); }
    /// Throws std::domain_error if the √d part is nonzero.
    [[nodiscard]] Rational to_rational() const;

    Surd& operator+=(const Surd& rhs);
    Surd& operator-=(const Surd& rhs);
    Surd& operator*=(const Surd& rhs);
    Surd& operator*=(const Rational& rhs);

    friend Surd operator+(Surd x, const Surd& y) { return x += y; }
    friend Surd operator-(Surd x, const Surd& y) { return x -= y; }
    friend Surd operator*(Surd x, const Surd& y) { return x *= y; }
    friend Surd operator*(Surd x, const Rational& y) { return x *= y; }
    friend Surd operator*(const Rational& y, Surd x) { return x *= y; }
    friend Surd operator-(Surd x) { return x *= Rational(-1); }
    friend bool operator==(const Surd& x, const Surd& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

    [[nodiscard]] std::string str() const;

private:
    void check_d() const;
    void fold();
    void join(const Surd& other);
    Rational a_;
    Rational b_;
    Rational d_{1};
    Rational exact_root_{1};  ///< √d when rational
    bool root_is_rational_ = true;
};

}  // namespace occ::hypercube
