#include "occ/families/cayley.hpp"
#include "occ/families/family.hpp"
#include "occ/util/random.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <set>

using namespace occ::families;
using occ::exact::Rational;
using occ::graph::Graph;
namespace named = occ::graph::named;

namespace {

bool oracle_agree(int n, std::uint32_t g, std::uint32_t h, Witness w) {
    const std::uint32_t full = (1U << Graph::edge_count_for(n)) - 1;
    const auto edges = oracle::edges_of(n, full & ~(g ^ h));
    return w == Witness::Triangle ? oracle::has_triangle(n, edges) : !oracle::two_colourable(n, edges);
}

bool oracle_intersect(int n, std::uint32_t g, std::uint32_t h, Witness w) {
    const auto edges = oracle::edges_of(n, g & h);
    return w == Witness::Triangle ? oracle::has_triangle(n, edges) : !oracle::two_colourable(n, edges);
}

template <typename Pred>
bool all_pairs(const Family& f, Pred pred) {
    const auto m = f.members();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i; j < m.size(); ++j)
            if (!pred(m[i], m[j])) return false;
    return true;
}

// Generators of Γ on K_n computed from scratch: complements of 2-colourable masks.
std::set<std::uint32_t> oracle_generators(int n) {
    const std::uint32_t full = (1U << Graph::edge_count_for(n)) - 1;
    std::set<std::uint32_t> out;
    for (std::uint32_t b = 0; b <= full; ++b)
        if (oracle::two_colourable(n, oracle::edges_of(n, b))) out.insert(full & ~b);
    return out;
}

}  // namespace

TEST(Family, PredicatesAgreeWithOracle) {
    occ::Rng rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + trial % 2;
        Family f(n);
        const auto k = rng.uniform(0, 6);
        for (long i = 0; i < k; ++i) f.insert(static_cast<std::uint32_t>(rng.uniform(0, (1L << Graph::edge_count_for(n)) - 1)));
        for (Witness w : {Witness::Triangle, Witness::OddCycle}) {
            EXPECT_EQ(is_agreeing(f, w), all_pairs(f, [&](auto g, auto h) { return oracle_agree(n, g, h, w); }));
            EXPECT_EQ(is_intersecting(f, w), all_pairs(f, [&](auto g, auto h) { return oracle_intersect(n, g, h, w); }));
        }
    }
}

TEST(Family, GraphAndComplementDoNotIntersect) {
    const Graph k4 = Graph::complete(4);
    Family f(4);
    f.insert(k4);
    EXPECT_TRUE(is_intersecting(f, Witness::Triangle));
    f.insert(0U);
    EXPECT_FALSE(is_intersecting(f, Witness::Triangle));
    EXPECT_FALSE(is_agreeing(f, Witness::OddCycle));
}

TEST(Family, UmvirateMeasure) {
    const auto tri = named::triangle(4);
    Family f(4);
    for (std::uint32_t g = 0; g < 64; ++g)
        if ((g & tri.mask()) == tri.mask()) f.insert(g);
    EXPECT_EQ(measure(f, Rational(1, 2)), Rational(1, 8));
    EXPECT_EQ(measure(f, Rational(1, 3)), Rational(1, 27));
    EXPECT_TRUE(is_intersecting(f, Witness::Triangle));
    EXPECT_TRUE(is_agreeing(f, Witness::Triangle));
    EXPECT_EQ(measure(Family::full(4), Rational(2, 7)), Rational(1));
    EXPECT_TRUE(f.is_up_set());
}

TEST(Family, Juntas) {
    const auto tri = named::triangle(4);
    const auto j = make_junta(4, tri, Graph(4, {{0, 1}}));
    EXPECT_EQ(j.size(), 8u);
    EXPECT_TRUE(is_agreeing(j, Witness::OddCycle));
    EXPECT_THROW(make_junta(4, named::path(2, 4), Graph(4)), std::invalid_argument);
    EXPECT_THROW(make_junta(4, tri, Graph(4, {{2, 3}})), std::invalid_argument);
    const auto all = triangle_juntas(4);
    EXPECT_EQ(all.size(), 32u);
    EXPECT_EQ(std::set<Family>(all.begin(), all.end()).size(), 32u);
}

TEST(Family, CompressionKeepsSizeAndRaisesPotential) {
    occ::Rng rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const Family f = random_family(4, rng);
        for (std::size_t e = 0; e < 6; ++e) {
            const auto c = compress(f, e);
            EXPECT_EQ(c.size(), f.size());
            EXPECT_GE(c.potential(), f.potential());
        }
        std::vector<long> potentials;
        const auto up = monotonize(f, &potentials);
        EXPECT_TRUE(up.is_up_set());
        EXPECT_EQ(up.size(), f.size());
        for (std::size_t i = 1; i < potentials.size(); ++i) EXPECT_GT(potentials[i], potentials[i - 1]);
    }
}

TEST(Family, RandomAgreeingFamiliesAgree) {
    occ::Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const auto f = random_agreeing_family(4, rng, trial % 2 == 0);
        EXPECT_TRUE(all_pairs(f, [](auto g, auto h) { return oracle_agree(4, g, h, Witness::OddCycle); }));
        EXPECT_TRUE(monotonize(f) == monotonize(f));
        EXPECT_TRUE(is_agreeing(monotonize(f), Witness::OddCycle));
    }
}

TEST(Family, HexRoundTripAndErrors) {
    occ::Rng rng(3);
    for (int n = 1; n <= 5; ++n) {
        const auto f = random_family(n, rng);
        EXPECT_EQ(from_hex(to_hex(f)), f);
    }
    EXPECT_EQ(to_hex(Family(2, std::vector<std::uint32_t>{0U})), "n=2;edges=01;bits=8");
    EXPECT_THROW(from_hex("n=2;edges=01;bits=1"), std::invalid_argument);
    EXPECT_THROW(from_hex("n=2;edges=01;bits=80"), std::invalid_argument);
    EXPECT_THROW(from_hex("n=2;edges=02;bits=8"), std::invalid_argument);
    EXPECT_THROW(from_hex("n=9;edges=01;bits=8"), std::invalid_argument);
    EXPECT_THROW(from_hex("n=2;edges=01;bits=g"), std::invalid_argument);
}

TEST(Cayley, GeneratorsAndDegree) {
    for (int n = 3; n <= 5; ++n) {
        const auto gens = cayley_generators(n);
        EXPECT_EQ(std::set<std::uint32_t>(gens.begin(), gens.end()), oracle_generators(n));
    }
    EXPECT_EQ(cayley_generators(4).size(), 41u);
    EXPECT_EQ(cayley_generators(5).size(), 376u);
}

// Oracle: Γ on K_4 contains a rank-3 subgroup H with every nonzero element a
// generator. The 8 cosets of H are cliques, so α ≤ 8, and the maximum sets
// are exactly the transversals of the cosets that are independent.
TEST(Cayley, MaximumSetsMatchCosetTransversals) {
    const auto gens = oracle_generators(4);
    auto is_gen = [&](std::uint32_t x) { return gens.count(x) > 0; };
    std::vector<std::uint32_t> h;
    for (auto a : gens) {
        for (auto b : gens) {
            if (b <= a || !is_gen(a ^ b)) continue;
            for (auto c : gens) {
                if (c <= b || c == (a ^ b)) continue;
                if (is_gen(a ^ c) && is_gen(b ^ c) && is_gen(a ^ b ^ c)) {
                    h = {0, a, b, c, a ^ b, a ^ c, b ^ c, a ^ b ^ c};
                    break;
                }
            }
            if (!h.empty()) break;
        }
        if (!h.empty()) break;
    }
    ASSERT_EQ(h.size(), 8u);

    std::vector<std::vector<std::uint32_t>> cosets;
    std::vector<bool> seen(64);
    for (std::uint32_t x = 0; x < 64; ++x) {
        if (seen[x]) continue;
        std::vector<std::uint32_t> coset;
        for (auto y : h) {
            coset.push_back(x ^ y);
            seen[x ^ y] = true;
        }
        cosets.push_back(coset);
    }
    ASSERT_EQ(cosets.size(), 8u);

    std::set<std::vector<std::uint32_t>> expected;
    std::vector<std::uint32_t> chosen;
    auto extend = [&](auto&& self, std::size_t k) -> void {
        if (k == cosets.size()) {
            auto s = chosen;
            std::sort(s.begin(), s.end());
            expected.insert(s);
            return;
        }
        for (auto x : cosets[k]) {
            if (std::any_of(chosen.begin(), chosen.end(), [&](auto y) { return is_gen(x ^ y); })) continue;
            chosen.push_back(x);
            self(self, k + 1);
            chosen.pop_back();
        }
    };
    extend(extend, 0);

    const auto result = cayley_independence_number(4);
    EXPECT_TRUE(result.exact);
    EXPECT_EQ(result.vertices, 64u);
    EXPECT_EQ(result.degree, 41u);
    EXPECT_EQ(result.alpha, 8u);
    std::set<std::vector<std::uint32_t>> found;
    for (const auto& f : result.maximum_sets) found.insert(f.members());
    EXPECT_EQ(found, expected);
    EXPECT_EQ(found.size(), 32u);

    const auto juntas = triangle_juntas(4);
    std::set<std::vector<std::uint32_t>> junta_sets;
    for (const auto& j : juntas) junta_sets.insert(j.members());
    EXPECT_EQ(found, junta_sets);
}

TEST(Cayley, ShuffledSearchAgrees) {
    CayleyOptions options;
    options.shuffle_seed = 99;
    options.workers = 2;
    const auto a = cayley_independence_number(4);
    const auto b = cayley_independence_number(4, options);
    EXPECT_EQ(a.alpha, b.alpha);
    EXPECT_EQ(a.maximum_sets, b.maximum_sets);
}

TEST(Cayley, FiveVertexBounds) {
    const auto r = cayley_independence_number(5);
    EXPECT_FALSE(r.exact);
    EXPECT_EQ(r.lower_bound, 128u);
    EXPECT_EQ(r.upper_bound, 128u);
    EXPECT_EQ(r.spectral_nu, Rational(1, 8));
    EXPECT_THROW(cayley_independence_number(3), std::invalid_argument);
}

TEST(Hoffman, AgreeingFamiliesSatisfyTheInequality) {
    occ::Rng rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = random_agreeing_family(4, rng);
        const auto h = hoffman_check(f);
        EXPECT_TRUE(h.agreeing);
        EXPECT_TRUE(h.ok);
        EXPECT_EQ(h.form, Rational(0));
        EXPECT_LE(h.mu, Rational(1, 8));
    }
    for (const auto& j : triangle_juntas(4)) {
        const auto h = hoffman_check(j);
        EXPECT_TRUE(h.ok);
        EXPECT_EQ(h.mu, Rational(1, 8));
    }
    const auto h = hoffman_check(random_family(4, rng));
    EXPECT_TRUE(h.ok);
}
