#include "occ/hypercube/verify.hpp"

#include "occ/cutstats/cutstats.hpp"
#include "occ/hypercube/cube.hpp"
#include "occ/util/random.hpp"

#include <bit>

namespace occ::hypercube {

namespace {

std::vector<Graph> bipartite_subgraphs(int n) {
    std::vector<Graph> out;
    for (std::uint32_t b = 0; b < (1U << Graph::edge_count_for(n)); ++b) {
        Graph g = Graph::from_mask(n, b);
        if (graph::is_bipartite(g)) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace

Report verify_tensor_operators(std::uint64_t seed) {
    Report report;
    report.suite = "hypercube";
    const Rational third(1, 3), half(1, 2);

    {
        bool zeros = true, eigen = true;
        long checked = 0;
        for (const auto& b : bipartite_subgraphs(3)) {
            const TensorOperator op(b, third);
            for (std::uint32_t g = 0; g < 8; ++g) {
                for (std::uint32_t h = 0; h < 8; ++h) {
                    if ((g & h & op.active_mask()) == 0) continue;
                    ++checked;
                    zeros = zeros && op.entry(g, h).is_zero();
                }
                const auto chi = FunctionOnCube::character(3, third, g);
                eigen = eigen && apply_MB(chi, op) == op.eigenvalue(g) * chi;
            }
        }
        report.add("tensor.zero-pattern", zeros, "(M_B)_{G,H} = 0 whenever G ∩ H ∩ B̄ ≠ ∅ on K_3 at p = 1/3")
            .values["entries"] = std::to_string(checked);
        report.add("tensor.eigenvalues", eigen, "M_B χ_G = (-p/(1-p))^{|G ∩ B̄|} χ_G on K_3 at p = 1/3");
    }

    {
        bool ok = true;
        for (const auto& b : bipartite_subgraphs(3)) {
            const TensorOperator op(b, half);
            for (std::uint32_t g = 0; g < 8; ++g) {
                for (std::uint32_t h = 0; h < 8; ++h) {
                    ok = ok && op.entry(g, h) == Rational((g ^ op.active_mask()) == h ? 1 : 0);
                }
            }
        }
        report.add("tensor.half-is-cayley", ok, "at p = 1/2, M_B is the permutation G ↦ G ⊕ B̄");
    }

    {
        bool ok = true;
        // Triangle umvirates on K_4 at a few measures.
        for (const Rational& p : {Rational(1, 5), third, half}) {
            for (const auto& t : {Graph(4, {{0, 1}, {0, 2}, {1, 2}}), Graph(4, {{1, 2}, {1, 3}, {2, 3}})}) {
                const auto tm = static_cast<std::uint32_t>(t.mask());
                const auto f = FunctionOnCube::indicator(6, p, [tm](std::uint32_t g) { return (g & tm) == tm; });
                for (const auto& b : bipartite_subgraphs(4)) {
                    const TensorOperator op(b, p);
                    ok = ok && inner_product(f, apply_MB(f, op)).is_zero() && inner_product(apply_MBT(f, op), f).is_zero();
                }
            }
        }
        report.add("tensor.umvirate-forms", ok, "<f, M_B f> = <M_Bᵀ f, f> = 0 for umvirates on K_4, every bipartite B");
    }

    {
        Rng rng(seed);
        bool parseval = true, roundtrip = true;
        for (int i = 0; i < 50; ++i) {
            const Rational p = rng.unit_interval(12);
            const auto f = FunctionOnCube::indicator(6, p, [&](std::uint32_t) { return rng.coin(); });
            const auto hat = walsh_transform(f);
            Surd energy(Rational(0), f.radicand());
            for (std::uint32_t r = 0; r < hat.size(); ++r) energy += hat[r] * hat[r];
            parseval = parseval && energy == inner_product(f, f);
            roundtrip = roundtrip && inverse_walsh_transform(hat) == f;
        }
        report.add("walsh.parseval", parseval, "Σ f̂² = E f² for 50 random Boolean f at random p").values["seed"] = std::to_string(seed);
        report.add("walsh.roundtrip", roundtrip, "the inverse transform reconstructs f exactly");
    }

    {
        const auto tri = Graph(4, {{0, 1}, {0, 2}, {1, 2}});
        const auto r = static_cast<std::uint32_t>(tri.mask());
        const auto chi = FunctionOnCube::character(6, half, r);
        const auto averaged = apply_AB_averaged(chi, 4);
        const auto dist = cutstats::cut_distribution_bruteforce(tri);
        Rational expected;
        for (std::size_t k = 0; k < dist.q().size(); ++k) expected += (k % 2 ? Rational(-1) : Rational(1)) * dist[k];
        expected *= Rational(std::popcount(r) % 2 ? -1 : 1);
        report.add("averaged.triangle", averaged == expected * chi, "averaged A_B eigenvalue on χ_triangle matches the cut law")
            .value("eigenvalue", expected);
    }
    return report;
}

}  // namespace occ::hypercube
