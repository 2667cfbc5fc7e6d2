#include "occ/hypercube/surd.hpp"

#include <stdexcept>

namespace occ::hypercube {

namespace {

bool rational_sqrt(const Rational& d, Rational& out) {
    const mpz_class num = d.numerator();
    const mpz_class den = d.denominator();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    out = Rational(rn, rd);
    return true;
}

}  // namespace

Surd::Surd(const Rational& a, const Rational& b, const Rational& d) : a_(a), b_(b), d_(d) {
    check_d();
    fold();
}

void Surd::check_d() const {
    if (d_.sign() <= 0) throw std::domain_error("Surd: radicand must be positive");
}

void Surd::fold() {
    root_is_rational_ = rational_sqrt(d_, exact_root_);
    if (root_is_rational_ && !b_.is_zero()) {
        a_ += b_ * exact_root_;
        b_ = Rational(0);
    }
}

void Surd::join(const Surd& other) {
    if (d_ == other.d_) return;
    // A purely rational operand may adopt the other's radicand.
    if (other.is_rational()) return;
    if (is_rational()) {
        d_ = other.d_;
        exact_root_ = other.exact_root_;
        root_is_rational_ = other.root_is_rational_;
        return;
    }
    throw std::domain_error("Surd: mixed radicands");
}

Rational Surd::to_rational() const {
    if (!b_.is_zero()) throw std::domain_error("Surd: value is irrational");
    return a_;
}

Surd& Surd::operator+=(const Surd& rhs) {
    join(rhs);
    a_ += rhs.a_;
    b_ += rhs.b_;
    return *this;
}

Surd& Surd::operator-=(const Surd& rhs) {
    join(rhs);
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    return *this;
}

Surd& Surd::operator*=(const Surd& rhs) {
    join(rhs);
    const Rational a = a_ * rhs.a_ + b_ * rhs.b_ * d_;
    const Rational b = a_ * rhs.b_ + b_ * rhs.a_;
    a_ = a;
    b_ = b;
    return *this;
}

Surd& Surd::operator*=(const Rational& rhs) {
    a_ *= rhs;
    b_ *= rhs;
    return *this;
}

std::string Surd::str() const {
    if (b_.is_zero()) return a_.str();
    std::string s = a_.is_zero() ? "" : a_.str() + " + ";
    return s + b_.str() + "*sqrt(" + d_.str() + ")";
}

}  // namespace occ::hypercube
