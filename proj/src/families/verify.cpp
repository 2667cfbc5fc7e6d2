#include "occ/families/verify.hpp"

#include "occ/families/cayley.hpp"
#include "occ/families/family.hpp"
#include "occ/util/random.hpp"

#include <algorithm>

namespace occ::families {

Report verify_families(std::uint64_t seed, int samples, int workers) {
    Report report;
    report.suite = "families";

    CayleyOptions options;
    options.workers = workers;
    const auto exact = cayley_independence_number(4, options);
    auto juntas = triangle_juntas(4);
    std::sort(juntas.begin(), juntas.end());

    {
        auto& c = report.add("cayley.alpha", exact.exact && exact.alpha == 8, "independence number of Γ on K_4");
        c.values["alpha"] = std::to_string(exact.alpha);
        c.values["vertices"] = std::to_string(exact.vertices);
        c.values["degree"] = std::to_string(exact.degree);
        c.values["nodes"] = std::to_string(exact.nodes);
    }
    report.add("cayley.maximum-sets", exact.maximum_sets == juntas, "maximum independent sets are exactly the triangle juntas")
        .values["count"] = std::to_string(exact.maximum_sets.size());

    options.shuffle_seed = seed;
    const auto shuffled = cayley_independence_number(4, options);
    report.add("cayley.shuffled-rerun", shuffled.alpha == exact.alpha && shuffled.maximum_sets == exact.maximum_sets,
               "order-randomized search reproduces the result")
        .values["seed"] = std::to_string(seed);

    {
        bool ok = true;
        for (const auto& j : juntas) {
            ok = ok && is_agreeing(j, Witness::OddCycle) && measure(j, Rational(1, 2)) == Rational(1, 8);
        }
        report.add("juntas.agreeing", ok && juntas.size() == 32, "all 32 triangle juntas are agreeing with measure 1/8");
    }

    {
        const auto bounds = cayley_independence_number(5);
        auto& c = report.add("cayley.n5-bounds", bounds.lower_bound == 128 && bounds.upper_bound == 128,
                             "junta lower bound meets the spectral upper bound on K_5");
        c.values["lower"] = std::to_string(bounds.lower_bound);
        c.values["upper"] = std::to_string(bounds.upper_bound);
        c.value("nu", bounds.spectral_nu);
        c.value("lambda_min", bounds.spectral_lambda_min);
    }

    {
        Rng rng(seed);
        int kept = 0, up = 0, intersecting = 0, potential = 0, hoffman = 0;
        std::string first_bad;
        for (int i = 0; i < samples; ++i) {
            const Family f = random_agreeing_family(4, rng, i % 2 == 1);
            std::vector<long> trace;
            trace.push_back(f.potential());
            const Family g = monotonize(f, &trace);
            const bool k = g.size() == f.size();
            const bool u = g.is_up_set();
            const bool x = is_intersecting(g, Witness::OddCycle);
            const bool p = std::adjacent_find(trace.begin(), trace.end(), [](long a, long b) { return b <= a; }) == trace.end();
            const bool h = hoffman_check(f).ok && hoffman_check(g).ok;
            kept += k;
            up += u;
            intersecting += x;
            potential += p;
            hoffman += h;
            if (!(k && u && x && p && h) && first_bad.empty()) first_bad = to_hex(f);
        }
        auto& c = report.add("compression.monotonize", kept == samples && up == samples && intersecting == samples && potential == samples,
                             "monotonize keeps size, yields up-sets that are odd-cycle-intersecting, potential strictly rises");
        c.values["samples"] = std::to_string(samples);
        c.values["seed"] = std::to_string(seed);
        c.values["size_preserved"] = std::to_string(kept);
        c.values["up_sets"] = std::to_string(up);
        c.values["intersecting"] = std::to_string(intersecting);
        if (!first_bad.empty()) c.witnesses.push_back(first_bad);
        report.add("hoffman.random-families", hoffman == samples, "Σ λ f̂² = 0 and μ <= 1/8 for agreeing inputs and their monotonizations")
            .values["passed"] = std::to_string(hoffman);
    }

    {
        bool ok = true;
        for (const auto& j : juntas) ok = ok && hoffman_check(j).ok && hoffman_check(j).form.is_zero();
        report.add("hoffman.juntas", ok, "the quadratic form vanishes on every triangle junta");
    }
    return report;
}

}  // namespace occ::families
