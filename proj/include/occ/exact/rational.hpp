#pragma once

#include <gmpxx.h>

#include <concepts>
#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace occ::exact {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I value) : value_(static_cast<long>(value)) {}

    template <std::integral I, std::integral J>
    Rational(I num, J den) : Rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class value);

    /// Accepts "a", "a/b" and terminating decimals such as "-0.248".
    static Rational parse(std::string_view text);

    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

    /// "3/4", "-2", "0".
    [[nodiscard]] std::string str() const;
    /// Always "num/den", e.g. "1/1".
    [[nodiscard]] std::string fraction_str() const;
    /// Display only; never used on a verification path.
    [[nodiscard]] double approx() const { return value_.get_d(); }

    [[nodiscard]] Rational abs() const;
    [[nodiscard]] Rational inverse() const;
    [[nodiscard]] Rational pow(int exponent) const;

    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// 2^k as a rational (k may be negative).
Rational pow2(int k);

/// Binomial coefficient C(n, k) for small nonnegative arguments.
Rational binomial(long n, long k);

/// The lower end of the validated skew interval, 0.248 stored exactly.
inline const Rational& tau() {
    static const Rational value(31, 125);
    return value;
}

}  // namespace occ::exact
