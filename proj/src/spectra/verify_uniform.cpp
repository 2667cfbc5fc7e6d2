#include "occ/graph/graph6.hpp"
#include "occ/spectra/verify.hpp"
#include "occ/util/parallel.hpp"

#include <sstream>

namespace occ::spectra {

Rational uniform_r(int m) {
    const Rational bracket = Rational(1) - Rational(5, 7) * Rational(m) - Rational(1, 7) * exact::binomial(m, 2) +
                             Rational(3, 28) * exact::binomial(m, 3);
    return exact::pow2(-m) * bracket;
}

namespace {

bool is_forest(const Graph& g) { return static_cast<int>(g.size()) == g.vertex_count() - g.component_count(); }

std::string name_of(const Graph& g) { return graph::write_graph6(graph::strip_isolated(g)); }

struct Entry {
    Graph g;
    GraphStats stats;
    Rational l1, l2, combined;
};

void check_constant(Report& report, const std::string& id, const Rational& computed, const Rational& expected) {
    report.add(id, computed == expected).value("computed", computed).value("expected", expected);
}

}  // namespace

Report verify_uniform_claims(int max_vertices, int workers) {
    Report report;
    report.suite = "uniform";
    const auto graphs = graph::enumerate_unlabeled(max_vertices);
    const Spectrum s1 = lambda1_uniform();
    const Spectrum s2 = lambda2_uniform();
    const Spectrum sc = combined_uniform();
    const auto entries = parallel_map<Entry>(graphs.size(), workers, [&](std::size_t i) {
        Entry e{graphs[i], graph_stats(graphs[i]), {}, {}, {}};
        e.l1 = s1.eval(e.stats);
        e.l2 = s2.eval(e.stats);
        e.combined = sc.eval(e.stats);
        return e;
    });

    const Rational lmin(-1, 7);
    const Graph tri = graph::named::triangle(max_vertices);
    const Graph k4m = graph::named::k4_minus(max_vertices);

    Rational min1 = entries.front().l1;
    Rational min_off1(2), min_offc(2);
    std::string min_off1_at, min_offc_at;
    std::vector<std::string> tight1_bad, tightc_bad, gap1_bad, gapc_bad, tight1_found, two_edge_tight;
    bool l2_ok = true;
    std::vector<std::string> l2_bad;
    for (const auto& e : entries) {
        const auto size = e.g.size();
        const bool forest = is_forest(e.g);
        const bool expected1 = (forest && (size == 1 || size == 2 || size == 4)) || graph::isomorphic(e.g, tri) ||
                               graph::isomorphic(e.g, k4m);
        const bool expectedc = size == 1 || size == 2 || graph::isomorphic(e.g, tri);
        if (e.l1 < min1) min1 = e.l1;
        if ((e.l1 == lmin) != expected1) tight1_bad.push_back(name_of(e.g));
        if (e.l1 == lmin) tight1_found.push_back(name_of(e.g));
        if (e.l1 == lmin && size == 2) two_edge_tight.push_back(name_of(e.g));
        if (!expected1 && !e.g.empty()) {
            if (e.l1 < lmin + gamma_prime_uniform()) gap1_bad.push_back(name_of(e.g) + " " + e.l1.str());
            if (e.l1 < min_off1) {
                min_off1 = e.l1;
                min_off1_at = name_of(e.g);
            }
        }
        if ((e.combined == lmin) != expectedc) tightc_bad.push_back(name_of(e.g));
        if (!expectedc && !e.g.empty()) {
            if (e.combined < lmin + gamma_combined_uniform()) gapc_bad.push_back(name_of(e.g) + " " + e.combined.str());
            if (e.combined < min_offc) {
                min_offc = e.combined;
                min_offc_at = name_of(e.g);
            }
        }
        // λ2 facts: zero below four edges, 1/16 on 4-forests, 1/8 on K4⁻, |λ2| <= 1.
        bool ok2 = e.l2.abs() <= Rational(1);
        if (size < 4) ok2 = ok2 && e.l2.is_zero();
        if (size == 4 && forest) ok2 = ok2 && e.l2 == Rational(1, 16);
        if (graph::isomorphic(e.g, k4m)) ok2 = ok2 && e.l2 == Rational(1, 8);
        if (!ok2) {
            l2_ok = false;
            l2_bad.push_back(name_of(e.g));
        }
    }
    std::ostringstream count;
    count << entries.size() << " graphs on at most " << max_vertices << " vertices";

    report.add("lambda1.empty", entries.front().g.empty() && entries.front().l1 == Rational(1))
        .value("lambda", entries.front().l1);
    {
        auto& c = report.add("lambda1.min", min1 == lmin, count.str());
        c.value("lambda_min", min1);
    }
    {
        auto& c = report.add("lambda1.tight-set", tight1_bad.empty(),
                             "tight exactly on edge, 2-path, two disjoint edges, triangle, 4-forests, K4-");
        c.witnesses = tight1_bad.empty() ? tight1_found : tight1_bad;
    }
    {
        auto& c = report.add("lambda1.two-edge-tight", two_edge_tight.size() == 2,
                             "both 2-edge graphs are tight");
        c.witnesses = two_edge_tight;
    }
    {
        auto& c = report.add("lambda1.gap", gap1_bad.empty(), "lambda1 >= -1/7 + 1/56 off the tight set");
        c.value("min_off_tight", min_off1).value("gamma_prime", gamma_prime_uniform());
        c.witnesses = gap1_bad.empty() ? std::vector<std::string>{min_off1_at} : gap1_bad;
    }
    {
        auto& c = report.add("lambda2.values", l2_ok, "0 below 4 edges, 1/16 on 4-forests, 1/8 on K4-, |lambda2| <= 1");
        c.witnesses = l2_bad;
    }
    {
        auto& c = report.add("combined.tight-set", tightc_bad.empty(),
                             "tight exactly on nonempty subgraphs of K3 and two disjoint edges");
        c.witnesses = tightc_bad;
    }
    {
        auto& c = report.add("combined.gap", gapc_bad.empty() && min_offc == lmin + gamma_combined_uniform(),
                             "combined >= -1/7 + 1/952 off the tight set, attained");
        c.value("min_off_tight", min_offc).value("gamma", gamma_combined_uniform());
        c.witnesses = gapc_bad.empty() ? std::vector<std::string>{min_offc_at} : gapc_bad;
    }
    check_constant(report, "combined.forest4", eval_lambda_combined(graph::named::path(4)),
                   lmin + Rational(1, 952));
    check_constant(report, "combined.k4minus", eval_lambda_combined(graph::named::k4_minus()),
                   lmin + Rational(1, 476));
    check_constant(report, "combined.gamma", gamma_prime_uniform() / Rational(17), gamma_combined_uniform());

    // Constants of the case analysis.
    check_constant(report, "constants.r5", uniform_r(5), Rational(-41, 448));
    check_constant(report, "constants.r6", uniform_r(6), Rational(-23, 448));
    check_constant(report, "constants.r7", uniform_r(7), Rational(-13, 512));
    {
        bool ok = true;
        for (int m = 7; m <= 64; ++m) ok = ok && uniform_r(m) >= Rational(-13, 512);
        // Numerator step N(m+1) - N(m) = -5/7 - m/7 + 3 C(m,2)/28 is positive at 7 and increasing after.
        const auto step = [](int m) { return Rational(-5, 7) - Rational(m, 7) + Rational(3, 28) * exact::binomial(m, 2); };
        ok = ok && step(7).sign() > 0;
        for (int m = 7; m <= 64; ++m) ok = ok && step(m + 1) > step(m);
        report.add("constants.r-monotone", ok, "r(m) >= -13/512 for m >= 7");
    }
    const auto f_of = [](const Graph& g) {
        const auto d = cutstats::cut_distribution_bruteforce(g);
        return d[0] - Rational(5, 7) * d[1] - Rational(1, 7) * d[2] + Rational(3, 28) * d[3];
    };
    check_constant(report, "constants.f-triangle", f_of(graph::named::triangle()), Rational(1, 7));
    check_constant(report, "constants.f-k4minus", f_of(graph::named::k4_minus()), Rational(1, 7));
    check_constant(report, "constants.odd-m1-bound", Rational(2, 7) * Rational(1, 4) + Rational(3, 28) * Rational(1, 2),
                   Rational(1, 7) - Rational(1, 56));
    check_constant(report, "constants.odd-m0-bound", Rational(1, 16) + Rational(3, 28) * Rational(1, 2),
                   Rational(13, 112));
    check_constant(report, "constants.odd-m0-gap", Rational(13, 112), Rational(1, 7) - Rational(3, 112));
    check_constant(report, "constants.even-m1-bound", Rational(-3, 4) * Rational(1, 56), lmin + Rational(29, 224));
    check_constant(report, "constants.even-m2-a0", uniform_r(2), Rational(-1, 7));
    check_constant(report, "constants.even-m3-a0", uniform_r(3), Rational(-41, 224));
    check_constant(report, "constants.even-m3-bound", uniform_r(3) / Rational(4), lmin + Rational(87, 896));
    check_constant(report, "constants.even-m4-a0", uniform_r(4), Rational(-1, 7));
    check_constant(report, "constants.even-m5-bound", uniform_r(5) / Rational(4), lmin + Rational(215, 1792));
    check_constant(report, "constants.even-m6-bound", uniform_r(6), lmin + Rational(41, 448));
    check_constant(report, "constants.even-m7-bound", uniform_r(7), lmin + Rational(421, 3584));
    check_constant(report, "hoffman.nu", hoffman_bound(lmin).nu, Rational(1, 8));
    return report;
}

}  // namespace occ::spectra
