#include "occ/schur/oldc.hpp"

#include "occ/graph/graph.hpp"
#include "occ/util/parallel.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace occ::schur {

LinearType linear_type(const VectorSet& s) {
    LinearType t;
    const auto vs = s.vectors();
    t.size = static_cast<int>(vs.size());
    const auto d = rank_decompose(s);
    t.rank = d.rank;
    t.m = d.m;
    // dp[k][x] = number of k-subsets with sum x.
    const std::size_t sums = std::size_t{1} << s.n();
    std::vector<std::vector<long>> dp(vs.size() + 1, std::vector<long>(sums));
    dp[0][0] = 1;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t k = i + 1; k-- > 0;) {
            for (std::size_t x = 0; x < sums; ++x) dp[k + 1][x ^ vs[i]] += dp[k][x];
        }
    }
    t.profile.resize(vs.size() + 1);
    for (std::size_t k = 1; k <= vs.size(); ++k) t.profile[k] = static_cast<int>(dp[k][0]);
    return t;
}

std::string type_name(const VectorSet& s) {
    const int size = s.size();
    if (size == 0) return "empty";
    if (size == 1) return "singleton";
    if (size == 2) return "pair";
    const int rank = gf2_rank(s.vectors());
    if (size == 3) return rank == 2 ? "schur-triple" : "independent-3";
    if (size == 4) {
        if (rank == 4) return "independent-4";
        return s.sum() == 0 ? "square" : "triple-plus-one";
    }
    if (size == 5) {
        if (rank == 3) return "k4-minus";
        if (rank == 4 && s.sum() == 0 && rank_decompose(s).m == 0) return "c5";
    }
    if (size == 7 && rank == 3) return "fano";
    return "other";
}

std::vector<int> gl_orbit_ids(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("gl_orbit_ids: n must be in [1, 4]");
    const std::uint32_t sets = 1U << ((1U << n) - 1);
    std::vector<std::uint32_t> parent(sets);
    std::iota(parent.begin(), parent.end(), 0U);
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::vector<std::uint32_t>> maps;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            std::vector<std::uint32_t> add(1U << n), swap(1U << n);
            for (std::uint32_t v = 0; v < (1U << n); ++v) {
                add[v] = v ^ (((v >> i) & 1U) << j);
                const std::uint32_t bi = (v >> i) & 1U, bj = (v >> j) & 1U;
                swap[v] = (v & ~((1U << i) | (1U << j))) | (bi << j) | (bj << i);
            }
            maps.push_back(std::move(add));
            if (i < j) maps.push_back(std::move(swap));
        }
    }
    for (std::uint32_t s = 0; s < sets; ++s) {
        for (const auto& map : maps) {
            std::uint32_t image = 0;
            for (std::uint32_t m = s; m; m &= m - 1) image |= 1U << (map[std::countr_zero(m) + 1] - 1);
            const auto a = find(s), b = find(image);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<int> ids(sets);
    std::map<std::uint32_t, int> numbering;
    for (std::uint32_t s = 0; s < sets; ++s) {
        auto [it, fresh] = numbering.try_emplace(find(s), static_cast<int>(numbering.size()));
        ids[s] = it->second;
    }
    return ids;
}

spectra::GraphStats set_stats(const VectorSet& s) {
    spectra::GraphStats stats;
    stats.dist = hyperplane_cut_distribution(s);
    stats.edges = static_cast<std::size_t>(s.size());
    const auto vs = s.vectors();
    const std::uint32_t points = 1U << s.n();
    long forest4 = 0, square = 0;
    for (std::uint32_t w = 0; w < points; ++w) {
        std::vector<std::uint32_t> cut;
        for (auto v : vs) {
            if (std::popcount(v & w) & 1) cut.push_back(v);
        }
        if (cut.size() != 4) continue;
        const int rank = gf2_rank(cut);
        if (rank == 4) ++forest4;
        if (rank == 3 && (cut[0] ^ cut[1] ^ cut[2] ^ cut[3]) == 0) ++square;
    }
    stats.q_forest4 = Rational(forest4, static_cast<long>(points));
    stats.q_c4 = Rational(square, static_cast<long>(points));
    return stats;
}

Rational eval_lambda1_oldc(const VectorSet& s) { return spectra::lambda1_uniform().eval(set_stats(s)); }

Rational eval_lambda2_oldc(const VectorSet& s) { return spectra::lambda2_uniform().eval(set_stats(s)); }

Rational oldc_f(const VectorSet& s) {
    const auto d = hyperplane_cut_distribution(s);
    return d[0] - Rational(5, 7) * d[1] - Rational(1, 7) * d[2] + Rational(3, 28) * d[3];
}

Rational eval_lambda1_oldc_skew(const VectorSet& s, const Rational& p) { return spectra::lambda1_skew(p).eval(set_stats(s)); }

bool has_odd_dependency_subset(const VectorSet& s) {
    // reach[parity] has bit x set when some subset of that parity sums to x.
    std::uint64_t reach[2] = {1, 0};
    for (auto v : s.vectors()) {
        std::uint64_t shifted[2] = {0, 0};
        for (int parity = 0; parity < 2; ++parity) {
            for (std::uint64_t m = reach[parity]; m; m &= m - 1) {
                shifted[1 - parity] |= std::uint64_t{1} << (static_cast<std::uint32_t>(std::countr_zero(m)) ^ v);
            }
        }
        reach[0] |= shifted[0];
        reach[1] |= shifted[1];
    }
    return reach[1] & 1U;
}

bool has_odd_dependency_hyperplane(const VectorSet& s) {
    const auto vs = s.vectors();
    for (std::uint32_t w = 0; w < (1U << s.n()); ++w) {
        if (std::all_of(vs.begin(), vs.end(), [&](std::uint32_t v) { return std::popcount(v & w) & 1; })) return false;
    }
    return true;
}

bool has_odd_dependency(const VectorSet& s) { return has_odd_dependency_hyperplane(s); }

bool is_odd_ld_intersecting(const std::vector<VectorSet>& family) {
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i; j < family.size(); ++j) {
            if (!has_odd_dependency(family[i] & family[j])) return false;
        }
    }
    return true;
}

bool is_odd_ld_agreeing(const std::vector<VectorSet>& family) {
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i; j < family.size(); ++j) {
            if (!has_odd_dependency(complement(family[i] ^ family[j]))) return false;
        }
    }
    return true;
}

FamilySearch max_agreeing_family_bruteforce(int n) {
    if (n < 1 || n > 2) throw std::invalid_argument("max_agreeing_family_bruteforce: n must be 1 or 2");
    FamilySearch out;
    out.n = n;
    out.subsets = std::size_t{1} << ((1U << n) - 1);
    // compatible[a] has bit b set when {a, b} is agreeing.
    std::vector<std::uint32_t> compatible(out.subsets);
    for (std::uint32_t a = 0; a < out.subsets; ++a) {
        for (std::uint32_t b = 0; b < out.subsets; ++b) {
            if (is_odd_ld_agreeing({VectorSet(n, a), VectorSet(n, b)})) compatible[a] |= 1U << b;
        }
    }
    const std::uint64_t families = std::uint64_t{1} << out.subsets;
    for (std::uint64_t fam = 0; fam < families; ++fam) {
        ++out.families_checked;
        bool ok = true;
        for (std::uint64_t m = fam; m && ok; m &= m - 1) {
            const auto a = static_cast<std::uint32_t>(std::countr_zero(m));
            ok = (compatible[a] & fam) == fam;
        }
        if (!ok) continue;
        const auto size = static_cast<std::size_t>(std::popcount(fam));
        if (size > out.max_size) {
            out.max_size = size;
            out.maximum_families = 0;
        }
        if (size == out.max_size) ++out.maximum_families;
    }
    out.max_measure = Rational(static_cast<long>(out.max_size), static_cast<long>(out.subsets));
    return out;
}

namespace {

struct Row {
    Rational lambda1, lambda2;
    std::string type;
    int rank = 0, m = 0;
    cutstats::CutDistribution dist;
    Rational q0_dependent;  // q_0(J(S)), or 1 when J(S) is empty
    bool subset_decider = false, hyperplane_decider = false;
};

Row analyse(const VectorSet& s) {
    Row r;
    const auto stats = set_stats(s);
    r.lambda1 = spectra::lambda1_uniform().eval(stats);
    r.lambda2 = spectra::lambda2_uniform().eval(stats);
    r.type = type_name(s);
    const auto d = rank_decompose(s);
    r.rank = d.rank;
    r.m = d.m;
    r.dist = stats.dist;
    r.q0_dependent = hyperplane_cut_distribution(d.dependent)[0];
    r.subset_decider = has_odd_dependency_subset(s);
    r.hyperplane_decider = has_odd_dependency_hyperplane(s);
    return r;
}

ClaimResult open_claim(std::string id, std::string detail) {
    ClaimResult c;
    c.id = std::move(id);
    c.passed = true;
    c.detail = std::move(detail);
    return c;
}

bool in_lambda_min(const std::string& type) {
    return type == "singleton" || type == "pair" || type == "schur-triple" || type == "independent-4" || type == "k4-minus";
}

// Checks pred on every row; records up to three failing sets.
template <class Pred>
void check_all(Report& report, const std::string& id, const std::vector<Row>& rows, int n, Pred pred, std::string detail) {
    auto& claim = report.add(id, true, std::move(detail));
    for (std::uint32_t s = 0; s < rows.size(); ++s) {
        if (pred(VectorSet(n, s), rows[s])) continue;
        claim.passed = false;
        if (claim.witnesses.size() < 3) claim.witnesses.push_back(VectorSet(n, s).str());
    }
}

}  // namespace

Report verify_oldc_claims(int n, int workers) {
    if (n < 1 || n > 4) throw std::invalid_argument("verify_oldc_claims: n must be in [1, 4]");
    Report report;
    report.suite = "schur";
    const std::uint32_t sets = 1U << ((1U << n) - 1);
    constexpr std::uint32_t chunk = 512;
    const std::size_t chunks = (sets + chunk - 1) / chunk;
    const auto parts = parallel_map<std::vector<Row>>(chunks, workers, [&](std::size_t c) {
        std::vector<Row> part;
        for (std::uint32_t s = static_cast<std::uint32_t>(c) * chunk; s < std::min(sets, static_cast<std::uint32_t>(c + 1) * chunk); ++s) {
            part.push_back(analyse(VectorSet(n, s)));
        }
        return part;
    });
    std::vector<Row> rows;
    rows.reserve(sets);
    for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(rows));

    const Rational min_value(-1, 7);
    const Rational gap = Rational(1, 56);

    report.add("lambda1.empty", rows[0].lambda1 == Rational(1)).value("lambda", rows[0].lambda1);

    Rational minimum = rows[0].lambda1;
    std::uint32_t argmin = 0;
    for (std::uint32_t s = 0; s < sets; ++s) {
        if (rows[s].lambda1 < minimum) {
            minimum = rows[s].lambda1;
            argmin = s;
        }
    }
    report.add("lambda1.min", minimum == min_value, "minimum over all " + std::to_string(sets) + " subsets")
        .value("minimum", minimum)
        .witnesses.push_back(VectorSet(n, argmin).str());

    {
        auto& claim = report.add("lambda1.tight-set", true, "tight exactly on singletons, pairs, Schur triples, independent 4-sets and {x,y,z,x+y,x+z}");
        std::map<std::string, long> counts;
        for (std::uint32_t s = 0; s < sets; ++s) {
            const bool tight = rows[s].lambda1 == min_value;
            if (tight) ++counts[rows[s].type];
            if (tight != in_lambda_min(rows[s].type)) {
                claim.passed = false;
                if (claim.witnesses.size() < 3) claim.witnesses.push_back(VectorSet(n, s).str() + " " + rows[s].type);
            }
        }
        for (const auto& [type, count] : counts) claim.values["count." + type] = std::to_string(count);
    }

    {
        Rational off = Rational(1);
        std::uint32_t where = 0;
        for (std::uint32_t s = 1; s < sets; ++s) {
            if (in_lambda_min(rows[s].type)) continue;
            if (rows[s].lambda1 < off) {
                off = rows[s].lambda1;
                where = s;
            }
        }
        auto& claim = report.add("lambda1.gap", off >= min_value + gap, "off the tight set λ1 >= -1/7 + 1/56");
        claim.value("minimum", off);
        claim.witnesses.push_back(VectorSet(n, where).str() + " " + rows[where].type);
    }

    if (n >= 3) {
        const VectorSet fano(n, (1U << 7) - 1);
        const auto& row = rows[fano.mask()];
        const auto q = row.dist.generating_function();
        const exact::Polynomial expected{Rational(1, 8), 0, 0, 0, Rational(7, 8)};
        const bool ok = row.lambda1 == Rational(-1, 8) && oldc_f(fano) == Rational(1, 7) - Rational(1, 56) && q == expected && row.type == "fano";
        report.add("lambda1.fano", ok, "Q_S = 1/8 + 7/8 X^4 and f(S) = 1/7 - 1/56").value("lambda", row.lambda1).values["Q"] = q.str();
    }

    check_all(report, "lambda2.small", rows, n, [](const VectorSet& s, const Row& r) { return s.size() > 3 || r.lambda2.is_zero(); },
              "λ2 = 0 when |S| <= 3");
    if (n >= 4) {
        check_all(report, "lambda2.independent4", rows, n,
                  [](const VectorSet&, const Row& r) { return r.type != "independent-4" || r.lambda2 == Rational(1, 16); },
                  "λ2 = 1/16 on independent 4-sets");
    }
    if (n >= 3) {
        check_all(report, "lambda2.k4minus", rows, n,
                  [](const VectorSet&, const Row& r) { return r.type != "k4-minus" || r.lambda2 == Rational(1, 8); },
                  "λ2({x,y,z,x+y,x+z}) = 1/8");
    }
    check_all(report, "lambda2.bounded", rows, n, [](const VectorSet&, const Row& r) { return r.lambda2.abs() <= Rational(1); }, "|λ2| <= 1");

    check_all(report, "genstatistics.q0", rows, n, [](const VectorSet&, const Row& r) { return r.dist[0] == exact::pow2(-r.rank); },
              "q_0 = 2^-rank");
    check_all(report, "genstatistics.q1", rows, n, [](const VectorSet&, const Row& r) { return r.dist[1] == Rational(r.m) * r.dist[0]; },
              "q_1 = m q_0");
    check_all(report, "genstatistics.odd-coordinate", rows, n,
              [n](const VectorSet& s, const Row& r) {
                  bool odd = false;
                  for (int i = 0; i < n; ++i) {
                      int count = 0;
                      for (auto v : s.vectors()) count += (v >> i) & 1U;
                      odd = odd || (count & 1);
                  }
                  if (!odd) return true;
                  return std::all_of(r.dist.q().begin(), r.dist.q().end(), [](const Rational& q) { return q <= Rational(1, 2); });
              },
              "an odd coordinate count forces every q_k <= 1/2");
    check_all(report, "genstatistics.odd-k", rows, n,
              [](const VectorSet&, const Row& r) {
                  for (std::size_t k = 1; k < r.dist.q().size(); k += 2) {
                      if (r.dist[k] > Rational(1, 2)) return false;
                  }
                  return true;
              },
              "q_k <= 1/2 for odd k");
    check_all(report, "genstatistics.q2", rows, n, [](const VectorSet&, const Row& r) { return r.dist[2] <= Rational(3, 4); }, "q_2 <= 3/4");

    check_all(report, "trivialsetics.q0", rows, n,
              [](const VectorSet& s, const Row& r) {
                  if (s.size() == 0) return r.dist[0] == Rational(1);
                  if (s.size() == 1) return r.dist[0] == Rational(1, 2);
                  return r.dist[0] <= Rational(1, 4);
              },
              "q_0(∅) = 1, q_0({x}) = 1/2, otherwise q_0 <= 1/4");
    check_all(report, "trivialsetics.odd-forms", rows, n,
              [](const VectorSet& s, const Row& r) {
                  if (r.m != 0 || s.size() % 2 == 0) return true;
                  return r.dist[0] <= Rational(1, 16) || r.type == "schur-triple" || r.type == "k4-minus" || r.type == "fano";
              },
              "m = 0 and |S| odd: q_0 <= 1/16 or S is a Schur triple, {x,y,z,x+y,x+z} or the seven vectors of a 3-space");
    check_all(report, "trivialsetics.a0", rows, n,
              [](const VectorSet& s, const Row& r) { return r.m == s.size() || r.q0_dependent <= Rational(1, 4); },
              "J(S) nonempty forces a_0 <= 1/4");
    check_all(report, "trivialsetics-p.m1", rows, n, [](const VectorSet& s, const Row& r) { return r.m != 1 || s.size() <= 1 || s.size() >= 4; },
              "m = 1 and |S| > 1 forces |S| >= 4");
    check_all(report, "trivialsetics-p.forms", rows, n,
              [](const VectorSet& s, const Row& r) {
                  if (r.m != 0 || s.size() == 0 || s.size() > 5) return true;
                  return r.type == "schur-triple" || r.type == "square" || r.type == "c5" || r.type == "k4-minus";
              },
              "m = 0 and |S| <= 5: Schur triple, {x,y,z,x+y+z}, {x,y,z,w,x+y+z+w} or {x,y,z,x+y,x+z}");

    check_all(report, "odd-ld.deciders", rows, n, [](const VectorSet&, const Row& r) { return r.subset_decider == r.hyperplane_decider; },
              "subset search and hyperplane test agree");

    check_all(report, "independence.binomial", rows, n,
              [](const VectorSet& s, const Row& r) {
                  if (r.rank != s.size()) return true;
                  for (int k = 0; k <= s.size(); ++k) {
                      if (r.dist[static_cast<std::size_t>(k)] != exact::binomial(s.size(), k) * exact::pow2(-s.size())) return false;
                  }
                  return true;
              },
              "independent sets cut as Binomial(|S|, 1/2)");

    {
        auto& claim = report.add("types.gl-orbits", true, "invariants separate GL(n,2) orbits on sets of size <= 5");
        const auto orbit = gl_orbit_ids(n);
        std::map<LinearType, int> by_type;
        std::map<int, LinearType> by_orbit;
        for (std::uint32_t s = 0; s < sets; ++s) {
            const VectorSet set(n, s);
            if (set.size() > 5) continue;
            const auto t = linear_type(set);
            auto [a, fresh_a] = by_type.try_emplace(t, orbit[s]);
            auto [b, fresh_b] = by_orbit.try_emplace(orbit[s], t);
            if (a->second != orbit[s] || !(b->second == t)) {
                claim.passed = false;
                if (claim.witnesses.size() < 3) claim.witnesses.push_back(set.str());
            }
        }
        claim.values["orbits"] = std::to_string(by_orbit.size());
    }

    {
        // Representatives inside Z_2^5 so every form fits.
        const std::vector<std::pair<std::string, std::vector<std::uint32_t>>> forms = {
            {"schur-triple", {1, 2, 3}}, {"square", {1, 2, 4, 7}}, {"c5", {1, 2, 4, 8, 15}},
            {"k4-minus", {1, 2, 4, 3, 5}}, {"fano", {1, 2, 3, 4, 5, 6, 7}}};
        for (const Rational& p : {exact::tau(), Rational(3, 8), Rational(1, 2)}) {
            const Rational bound = -(p.pow(3)) / (Rational(1) - p.pow(3));
            auto& claim = report.add("skew.forms@" + p.str(), true, "λ1 >= -p^3/(1-p^3) on the odd-free forms, strict for the square and the Fano set");
            for (const auto& [name, vs] : forms) {
                const auto value = eval_lambda1_oldc_skew(VectorSet::from_vectors(5, vs), p);
                claim.value(name, value);
                const bool strict = name == "square" || name == "fano";
                if (strict ? value <= bound : value < bound) {
                    claim.passed = false;
                    claim.witnesses.push_back(name);
                }
            }
            claim.value("bound", bound);
        }
    }

    {
        ClaimResult consistency = open_claim("lift.consistency", "hyperplane law of the lift equals the cut law, all subgraphs of K_5");
        ClaimResult forests = open_claim("lift.forests-independent", "G is a forest iff its lift is linearly independent");
        ClaimResult odd = open_claim("lift.odd-cycles", "G has an odd cycle iff its lift has an odd dependency");
        const std::uint32_t graphs = 1U << graph::Graph::edge_count_for(5);
        for (std::uint32_t mask = 0; mask < graphs; ++mask) {
            const auto g = graph::Graph::from_mask(5, mask);
            const auto lifted = lift_graph(g);
            if (!(hyperplane_cut_distribution(lifted) == cutstats::cut_distribution_bruteforce(g))) {
                consistency.passed = false;
                if (consistency.witnesses.size() < 3) consistency.witnesses.push_back(g.str());
            }
            const bool forest = static_cast<int>(g.size()) == g.vertex_count() - g.component_count();
            if (forest != (gf2_rank(lifted.vectors()) == lifted.size())) {
                forests.passed = false;
                if (forests.witnesses.size() < 3) forests.witnesses.push_back(g.str());
            }
            if (graph::has_odd_cycle(g) != has_odd_dependency_subset(lifted)) {
                odd.passed = false;
                if (odd.witnesses.size() < 3) odd.witnesses.push_back(g.str());
            }
        }
        report.claims.push_back(std::move(consistency));
        report.claims.push_back(std::move(forests));
        report.claims.push_back(std::move(odd));
    }

    if (n >= 3) {
        std::vector<VectorSet> umvirate;
        const VectorSet triple = VectorSet::from_vectors(n, {1, 2, 3});
        for (std::uint32_t s = 0; s < sets; ++s) {
            if ((s & triple.mask()) == triple.mask()) umvirate.emplace_back(n, s);
        }
        const Rational mu(static_cast<long>(umvirate.size()), static_cast<long>(sets));
        report.add("families.schur-umvirate", is_odd_ld_intersecting(umvirate) && mu == Rational(1, 8),
                   "all sets containing a fixed Schur triple: intersecting, measure 1/8")
            .value("measure", mu);
    }

    {
        const auto search = max_agreeing_family_bruteforce(2);
        auto& claim = report.add("families.n2-max-agreeing", search.max_measure == Rational(1, 8), "exhaustive over all families on Z_2^2");
        claim.value("measure", search.max_measure);
        claim.values["families"] = std::to_string(search.families_checked);
        claim.values["maximum_families"] = std::to_string(search.maximum_families);
    }
    return report;
}

}  // namespace occ::schur
