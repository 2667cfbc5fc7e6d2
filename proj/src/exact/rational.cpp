#include "occ/exact/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace occ::exact {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

mpz_class parse_integer(std::string_view digits, std::string_view whole) {
    if (digits.empty()) throw std::invalid_argument("Rational: malformed number '" + std::string(whole) + "'");
    for (char c : digits) {
        if (c < '0' || c > '9') throw std::invalid_argument("Rational: malformed number '" + std::string(whole) + "'");
    }
    return mpz_class(std::string(digits), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    const std::string_view whole = text;
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\n')) text.remove_suffix(1);
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    Rational result;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        result = Rational(parse_integer(text.substr(0, slash), whole), parse_integer(text.substr(slash + 1), whole));
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        const auto int_part = text.substr(0, dot);
        const auto frac_part = text.substr(dot + 1);
        mpz_class num = int_part.empty() ? mpz_class(0) : parse_integer(int_part, whole);
        mpz_class den = 1;
        if (!frac_part.empty()) {
            mpz_class frac = parse_integer(frac_part, whole);
            mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
            num = num * den + frac;
        } else if (int_part.empty()) {
            throw std::invalid_argument("Rational: malformed number '" + std::string(whole) + "'");
        }
        result = Rational(num, den);
    } else {
        result = Rational(parse_integer(text, whole), mpz_class(1));
    }
    return negative ? -result : result;
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::fraction_str() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(value_.get_den(), value_.get_num());
}

Rational Rational::pow(int exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow2(int k) { return Rational(2).pow(k); }

Rational binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    mpz_class result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(result, mpz_class(1));
}

}  // namespace occ::exact
