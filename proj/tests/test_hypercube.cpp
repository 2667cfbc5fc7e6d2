#include "occ/cutstats/cutstats.hpp"
#include "occ/hypercube/cube.hpp"
#include "occ/hypercube/verify.hpp"
#include "occ/spectra/spectrum.hpp"
#include "occ/util/random.hpp"

#include <gtest/gtest.h>

#include <bit>

using namespace occ::hypercube;
using occ::exact::Rational;
using occ::graph::Graph;

namespace {

const Rational kHalf(1, 2), kThird(1, 3);

std::vector<Graph> bipartite_on(int n) {
    std::vector<Graph> out;
    for (std::uint32_t b = 0; b < (1U << Graph::edge_count_for(n)); ++b) {
        auto g = Graph::from_mask(n, b);
        if (occ::graph::is_bipartite(g)) out.push_back(g);
    }
    return out;
}

FunctionOnCube random_boolean(int bits, const Rational& p, occ::Rng& rng) {
    return FunctionOnCube::indicator(bits, p, [&](std::uint32_t) { return rng.coin(); });
}

}  // namespace

TEST(Surd, ArithmeticInTheExtension) {
    const Rational d(2, 9);
    const Surd r = Surd::root(d);
    EXPECT_EQ(r * r, Surd(d, d));
    EXPECT_TRUE((r * r).is_rational());
    EXPECT_THROW(r.to_rational(), std::domain_error);
    // A rational square radicand folds into the rational part.
    EXPECT_EQ(Surd::root(Rational(1, 4)), Surd(Rational(1, 2), Rational(1, 4)));
    EXPECT_THROW(Surd::root(Rational(2)) + Surd::root(Rational(3)), std::domain_error);
}

TEST(Walsh, ConstantFunction) {
    const auto hat = walsh_transform(FunctionOnCube::constant(3, kThird, Rational(1)));
    EXPECT_EQ(hat[0].to_rational(), Rational(1));
    for (std::uint32_t r = 1; r < 8; ++r) EXPECT_TRUE(hat[r].is_zero());
}

// Oracle: f̂(R) as a direct sum of μ(S) f(S) χ_R(S).
TEST(Walsh, TriangleIndicatorByDirectInnerProduct) {
    const auto f = FunctionOnCube::indicator(3, kHalf, [](std::uint32_t s) { return s == 7; });
    const auto hat = walsh_transform(f);
    for (std::uint32_t r = 0; r < 8; ++r) {
        Rational direct;
        for (std::uint32_t s = 0; s < 8; ++s) {
            if (s != 7) continue;
            direct += Rational(1, 8) * Rational(std::popcount(r & s) % 2 ? -1 : 1);
        }
        EXPECT_EQ(hat[r].to_rational(), direct);
        EXPECT_EQ(direct, Rational(std::popcount(r) % 2 ? -1 : 1, 8));
    }
}

TEST(Walsh, ParsevalAndRoundTripAtRandomMeasures) {
    occ::Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const Rational p = rng.unit_interval(15);
        const auto f = random_boolean(5, p, rng);
        const auto hat = walsh_transform(f);
        Surd energy(Rational(0), f.radicand());
        for (std::uint32_t r = 0; r < hat.size(); ++r) energy += hat[r] * hat[r];
        EXPECT_EQ(energy, expectation(f));  // f² = f for Boolean f
        EXPECT_EQ(inverse_walsh_transform(hat), f);
    }
}

TEST(Walsh, CharactersAreOrthonormal) {
    for (const Rational& p : {kThird, kHalf}) {
        for (std::uint32_t a = 0; a < 8; ++a) {
            for (std::uint32_t b = 0; b < 8; ++b) {
                const auto ip = inner_product(FunctionOnCube::character(3, p, a), FunctionOnCube::character(3, p, b));
                EXPECT_EQ(ip.to_rational(), Rational(a == b ? 1 : 0));
            }
        }
    }
}

TEST(Walsh, ConvolutionAtHalf) {
    occ::Rng rng(6);
    for (int trial = 0; trial < 10; ++trial) {
        FunctionOnCube f(3, kHalf), g(3, kHalf);
        for (std::uint32_t s = 0; s < 8; ++s) {
            f[s] = Surd(rng.rational(5), Rational(1, 4));
            g[s] = Surd(rng.rational(5), Rational(1, 4));
        }
        const auto lhs = walsh_transform(convolution(f, g));
        const auto fh = walsh_transform(f), gh = walsh_transform(g);
        for (std::uint32_t r = 0; r < 8; ++r) EXPECT_EQ(lhs[r], fh[r] * gh[r]);
    }
}

TEST(CayleyOperator, EigenvaluesOnK3) {
    for (const auto& b : bipartite_on(3)) {
        for (std::uint32_t r = 0; r < 8; ++r) {
            const auto chi = FunctionOnCube::character(3, kHalf, r);
            const int sign = (std::popcount(r) + std::popcount(r & static_cast<std::uint32_t>(b.mask()))) % 2 ? -1 : 1;
            EXPECT_EQ(apply_AB(chi, b), Rational(sign) * chi);
        }
    }
    EXPECT_THROW(apply_AB(FunctionOnCube(3, kHalf), occ::graph::named::triangle()), std::invalid_argument);
    EXPECT_THROW(apply_AB(FunctionOnCube(3, kThird), Graph(3)), std::invalid_argument);
}

TEST(CayleyOperator, EmptyBComplements) {
    occ::Rng rng(1);
    const auto f = random_boolean(6, kHalf, rng);
    const auto g = apply_AB(f, Graph(4));
    for (std::uint32_t s = 0; s < 64; ++s) EXPECT_EQ(g[s], f[63 ^ s]);
}

TEST(CayleyOperator, UmvirateKillsEveryShift) {
    const auto f = FunctionOnCube::indicator(3, kHalf, [](std::uint32_t s) { return s == 7; });
    for (const auto& b : bipartite_on(3)) {
        const auto g = apply_AB(f, b);
        for (std::uint32_t s = 0; s < 8; ++s) EXPECT_TRUE((f[s] * g[s]).is_zero());
    }
}

TEST(CayleyOperator, AveragedMatchesCutLaw) {
    const Graph tri(4, {{0, 1}, {0, 2}, {1, 2}});
    const auto r = static_cast<std::uint32_t>(tri.mask());
    const auto chi = FunctionOnCube::character(6, kHalf, r);
    const auto d = occ::cutstats::cut_distribution_bruteforce(tri);
    Rational lambda;
    for (std::size_t k = 0; k < d.q().size(); ++k) lambda += Rational(k % 2 ? -1 : 1) * d[k];
    lambda = -lambda;
    EXPECT_EQ(apply_AB_averaged(chi, 4), lambda * chi);
    EXPECT_EQ(lambda, Rational(-1));

    occ::Rng rng(2);
    const auto one = FunctionOnCube::constant(6, kHalf, Rational(1));
    EXPECT_EQ(apply_AB_averaged(one, 4), one);
    const auto f = random_boolean(6, kHalf, rng), g = random_boolean(6, kHalf, rng);
    EXPECT_EQ(apply_AB_averaged(f + Rational(3) * g, 4), apply_AB_averaged(f, 4) + Rational(3) * apply_AB_averaged(g, 4));
}

// Oracle: the dense matrix assembled column by column from delta functions.
TEST(TensorOperator, ZeroPatternAndEigenvalues) {
    for (const auto& b : bipartite_on(3)) {
        const TensorOperator op(b, kThird);
        for (std::uint32_t h = 0; h < 8; ++h) {
            const auto delta = FunctionOnCube::indicator(3, kThird, [h](std::uint32_t s) { return s == h; });
            const auto column = apply_MB(delta, op);
            for (std::uint32_t g = 0; g < 8; ++g) {
                EXPECT_EQ(column[g].to_rational(), op.entry(g, h));
                if (g & h & op.active_mask()) {
                    EXPECT_TRUE(column[g].is_zero());
                }
            }
        }
        for (std::uint32_t g = 0; g < 8; ++g) {
            const auto chi = FunctionOnCube::character(3, kThird, g);
            const Rational expected = Rational(-1, 2).pow(std::popcount(g & ~static_cast<std::uint32_t>(b.mask()) & 7U));
            EXPECT_EQ(apply_MB(chi, op), expected * chi);
        }
    }
}

TEST(TensorOperator, HalfReducesToCayley) {
    occ::Rng rng(4);
    for (const auto& b : bipartite_on(3)) {
        const auto f = random_boolean(3, kHalf, rng);
        EXPECT_EQ(apply_MB(f, TensorOperator(b, kHalf)), apply_AB(f, b));
    }
    EXPECT_THROW(TensorOperator(occ::graph::named::triangle(), kThird), std::invalid_argument);
}

TEST(TensorOperator, TransposeAndUmvirateForms) {
    const Graph tri(4, {{0, 1}, {0, 2}, {1, 2}});
    const auto tm = static_cast<std::uint32_t>(tri.mask());
    const auto f = FunctionOnCube::indicator(6, kThird, [tm](std::uint32_t s) { return (s & tm) == tm; });
    for (const auto& b : bipartite_on(4)) {
        const TensorOperator op(b, kThird);
        EXPECT_TRUE(inner_product(f, apply_MB(f, op)).is_zero());
        EXPECT_TRUE(inner_product(apply_MBT(f, op), f).is_zero());
    }
}

TEST(TensorOperator, WalkSamplerSmokeTest) {
    occ::Rng rng(77);
    const TensorOperator op(occ::graph::named::path(2, 4), Rational(1, 4));
    FunctionOnCube f(6, Rational(1, 4));
    for (std::uint32_t s = 0; s < 64; ++s) f[s] = Surd(Rational(std::popcount(s)), f.radicand());
    const auto exact = apply_MB(f, op);
    for (std::uint32_t g : {0U, 5U, 63U}) {
        const double estimate = estimate_MB(f, op, g, 20000, rng);
        EXPECT_NEAR(estimate, exact[g].to_rational().approx(), 0.05);
    }
}

TEST(QuadraticForm, UmvirateVanishesWithCombinedSpectrum) {
    const auto f = FunctionOnCube::indicator(3, kHalf, [](std::uint32_t s) { return s == 7; });
    std::map<std::uint32_t, Rational> spectrum;
    for (std::uint32_t r = 0; r < 8; ++r) spectrum[r] = occ::spectra::eval_lambda_combined(Graph::from_mask(3, r));
    EXPECT_EQ(quadratic_form(f, spectrum), Rational(0));
    EXPECT_EQ(quadratic_form(FunctionOnCube::constant(3, kHalf, Rational(1)), spectrum), spectrum[0]);
    spectrum.erase(5);
    EXPECT_THROW(quadratic_form(f, spectrum), std::invalid_argument);
}

TEST(QuadraticForm, AgreeingFamilyOnK4) {
    // All graphs meeting a fixed triangle in exactly one edge pattern.
    const auto f = FunctionOnCube::indicator(6, kHalf, [](std::uint32_t s) { return (s & 0b001011U) == 0b000001U; });
    for (const auto& b : bipartite_on(4)) EXPECT_TRUE(inner_product(f, apply_AB(f, b)).is_zero());
}

TEST(HypercubeSuite, Passes) { EXPECT_TRUE(verify_tensor_operators(1).ok()); }
