#include "occ/exact/polynomial.hpp"
#include "occ/exact/rational.hpp"
#include "occ/exact/rational_function.hpp"
#include "occ/exact/sturm.hpp"
#include "occ/util/random.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace occ::exact;

TEST(Rational, ParsesFractionsAndDecimals) {
    EXPECT_EQ(Rational::parse("31/125"), Rational(31, 125));
    EXPECT_EQ(Rational::parse("0.248"), tau());
    EXPECT_EQ(Rational::parse("-6/8"), Rational(-3, 4));
    EXPECT_EQ(Rational::parse(" 7 "), Rational(7));
    EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
    EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("."), std::invalid_argument);
}

TEST(Rational, ArithmeticAndPrinting) {
    const Rational a(3, 4), b(-5, 6);
    EXPECT_EQ(a + b, Rational(-1, 12));
    EXPECT_EQ(a * b, Rational(-5, 8));
    EXPECT_EQ(a / b, Rational(-9, 10));
    EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
    EXPECT_EQ(Rational(1).fraction_str(), "1/1");
    EXPECT_EQ(Rational(-3, 6).str(), "-1/2");
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_THROW(Rational(0).inverse(), std::domain_error);
    EXPECT_EQ(binomial(7, 3), Rational(35));
    EXPECT_EQ(pow2(-3), Rational(1, 8));
}

TEST(Polynomial, DivmodReconstructs) {
    occ::Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> ca(static_cast<std::size_t>(rng.uniform(1, 7))), cb(static_cast<std::size_t>(rng.uniform(1, 4)));
        for (auto& c : ca) c = rng.rational(9);
        for (auto& c : cb) c = rng.rational(9);
        const Polynomial a(ca), b(cb);
        if (b.is_zero()) continue;
        const auto [q, r] = Polynomial::divmod(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_LT(r.degree(), b.degree());
    }
}

TEST(Polynomial, GcdOfProducts) {
    const auto f = Polynomial::linear_factor(1) * Polynomial::linear_factor(Rational(1, 2));
    const auto g = Polynomial::linear_factor(1) * Polynomial::linear_factor(3);
    EXPECT_EQ(gcd(f, g), Polynomial::linear_factor(1));
    EXPECT_EQ(Polynomial({1, 2, 3}).derivative(), Polynomial({2, 6}));
    EXPECT_EQ(Polynomial({-1, 1}).pow(3)(Rational(3)), Rational(8));
}

TEST(Sturm, ChainForXSquaredMinusTwo) {
    const Polynomial p{-2, 0, 1};
    const auto chain = sturm_chain(p);
    ASSERT_EQ(chain.size(), 3u);
    EXPECT_EQ(chain[0], p);
    EXPECT_EQ(chain[1], Polynomial({0, 2}));
    EXPECT_EQ(chain[2], Polynomial({2}));
    EXPECT_EQ(count_roots(p, -2, 2), 2);
    EXPECT_EQ(count_roots(p, 0, 2), 1);
}

// Roots are planted, so the oracle is the planted multiset itself.
TEST(Sturm, CountsPlantedRootsIncludingEndpoints) {
    occ::Rng rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        std::set<Rational> roots;
        Polynomial p = Polynomial::constant(rng.rational(5) + Rational(7));
        const int k = static_cast<int>(rng.uniform(1, 5));
        for (int i = 0; i < k; ++i) {
            const Rational r(rng.uniform(-8, 8), 4);
            roots.insert(r);
            p *= Polynomial::linear_factor(r).pow(static_cast<unsigned>(rng.uniform(1, 2)));
        }
        const Rational a(rng.uniform(-9, 0), 4), b(rng.uniform(1, 9), 4);
        const long expected = std::count_if(roots.begin(), roots.end(), [&](const Rational& r) { return a < r && r <= b; });
        EXPECT_EQ(count_roots(p, a, b), expected) << p.str();
    }
}

TEST(Sturm, CertifiesConstantSign) {
    const Polynomial p{Rational(-1, 4), 0, 1};  // roots ±1/2
    const auto ok = certify_sign(p, Rational(1, 2), Rational(1), Rational(3, 4), "right");
    EXPECT_TRUE(ok.passed);
    EXPECT_EQ(ok.certified_sign(), 1);
    EXPECT_GT(ok.lo_shift, 0);
    EXPECT_EQ(ok.interior_roots, 0);

    const auto bad = certify_sign(p, 0, 1, Rational(3, 4), "straddle");
    EXPECT_FALSE(bad.passed);
    ASSERT_TRUE(bad.root_bracket.has_value());
    EXPECT_TRUE(bad.sign_change);
    EXPECT_LT(bad.root_bracket->first, Rational(1, 2));
    EXPECT_GE(bad.root_bracket->second, Rational(1, 2));

    const auto j = to_json(ok);
    EXPECT_EQ(j["status"], "pass");
    EXPECT_EQ(j["chain_length"], ok.chain_length);
    EXPECT_THROW(certify_sign(p, 1, 0, Rational(1, 2)), std::invalid_argument);
}

TEST(RationalFunction, NormalizesAndEvaluates) {
    const auto p = RationalFunction::x();
    const auto t = -(p.pow(3)) / (RationalFunction(1) - p.pow(3));
    EXPECT_EQ(t(Rational(1, 2)), Rational(-1, 7));
    const auto r = (p * p - RationalFunction(1)) / (p - RationalFunction(1));
    EXPECT_EQ(r, p + RationalFunction(1));
    EXPECT_EQ(r.denominator(), Polynomial::constant(1));
    EXPECT_EQ(t.sign_polynomial()(Rational(1, 3)).sign(), t(Rational(1, 3)).sign());
}
