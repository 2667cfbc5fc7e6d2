// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero if
// any criterion fails. argv[1], when given, is the path of the occ binary.

#include "occ/cutstats/cutstats.hpp"
#include "occ/families/cayley.hpp"
#include "occ/families/family.hpp"
#include "occ/graph/graph.hpp"
#include "occ/hypercube/cube.hpp"
#include "occ/schur/oldc.hpp"
#include "occ/spectra/spectrum.hpp"
#include "occ/spectra/verify.hpp"
#include "occ/util/random.hpp"

#include "oracles.hpp"

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using occ::exact::Rational;
using occ::graph::Graph;
namespace named = occ::graph::named;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            if (passed) detail = what;
            passed = false;
        }
    }
};

std::string occ_binary;

std::string failing(const occ::Report& r) {
    const auto* f = r.first_failure();
    return f ? r.suite + ": " + f->id + " " + f->detail : "";
}

Rational at(const std::vector<Rational>& q, std::size_t k) { return k < q.size() ? q[k] : Rational(0); }

Rational lambda1_oracle(const std::vector<Rational>& q, std::size_t size) {
    const Rational f = at(q, 0) - Rational(5, 7) * at(q, 1) - Rational(1, 7) * at(q, 2) + Rational(3, 28) * at(q, 3);
    return size % 2 ? -f : f;
}

bool is_forest(const Graph& g) { return static_cast<int>(g.size()) == g.vertex_count() - g.component_count(); }

std::set<occ::graph::EdgeBits> canonical_set(std::initializer_list<Graph> graphs, int n) {
    std::set<occ::graph::EdgeBits> out;
    for (const auto& g : graphs) out.insert(occ::graph::canonical_form(occ::graph::pad(g, n)));
    return out;
}

// Every triangle junta on K_4, built from the definition.
std::set<std::vector<std::uint32_t>> junta_oracle() {
    std::set<std::vector<std::uint32_t>> out;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            for (int c = b + 1; c < 4; ++c) {
                const auto t = static_cast<std::uint32_t>(Graph(4, {{a, b}, {a, c}, {b, c}}).mask());
                for (std::uint32_t s = 0; s < 64; ++s) {
                    if ((s & t) != s) continue;
                    std::vector<std::uint32_t> members;
                    for (std::uint32_t g = 0; g < 64; ++g)
                        if ((g & t) == s) members.push_back(g);
                    out.insert(members);
                }
            }
    return out;
}

Outcome table_reproduction() {
    Outcome o;
    const std::vector<std::vector<Rational>> expected = {
        {1, 0, 0, 0, 0},
        {Rational(1, 2), Rational(1, 2), 0, 0, 0},
        {Rational(1, 4), Rational(1, 2), Rational(1, 4), 0, 0},
        {Rational(1, 4), 0, Rational(3, 4), 0, 0},
        {Rational(1, 16), Rational(1, 4), Rational(3, 8), Rational(1, 4), Rational(1, 16)},
        {Rational(1, 8), 0, Rational(1, 4), Rational(1, 2), Rational(1, 8)},
    };
    std::vector<std::vector<Rational>> rows;
    if (!occ_binary.empty()) {
        const std::string cmd = occ_binary + " cutstat --builtin --format csv";
        FILE* pipe = popen(cmd.c_str(), "r");
        o.require(pipe != nullptr, "cannot run " + cmd);
        if (!pipe) return o;
        std::string out;
        char buf[512];
        while (std::fgets(buf, sizeof buf, pipe)) out += buf;
        o.require(pclose(pipe) == 0, "cutstat --builtin exited nonzero");
        std::istringstream in(out);
        std::string line;
        std::getline(in, line);  // header
        while (std::getline(in, line)) {
            std::istringstream fields(line);
            std::string cell;
            std::vector<Rational> row;
            for (int col = 0; std::getline(fields, cell, ','); ++col)
                if (col >= 2) row.push_back(Rational::parse(cell));
            rows.push_back(row);
        }
        o.detail = "via occ cutstat --builtin";
    } else {
        for (const auto& r : occ::cutstats::builtin_table()) {
            std::vector<Rational> row;
            for (std::size_t k = 0; k < 5; ++k) row.push_back(r.dist[k]);
            rows.push_back(row);
        }
        o.detail = "via library table";
    }
    o.require(rows.size() == expected.size(), "expected 6 rows");
    int entries = 0;
    for (std::size_t i = 0; i < std::min(rows.size(), expected.size()); ++i) {
        o.require(rows[i].size() == 5, "row width");
        for (std::size_t k = 0; k < std::min<std::size_t>(rows[i].size(), 5); ++k) {
            o.require(rows[i][k] == expected[i][k], "entry mismatch in row " + std::to_string(i));
            ++entries;
        }
    }
    o.require(entries == 30, "expected 30 entries");
    if (o.passed) o.detail = std::to_string(entries) + " entries " + o.detail;
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    const auto graphs = occ::graph::enumerate_unlabeled(7);
    for (const auto& g : graphs) {
        o.require(occ::cutstats::cut_distribution_blocks(g) == occ::cutstats::cut_distribution_bruteforce(g), g.str());
    }
    occ::Rng rng(2024);
    for (int i = 0; i < 500; ++i) {
        const auto g = rng.graph(12);
        o.require(occ::cutstats::cut_distribution_blocks(g) == occ::cutstats::cut_distribution_bruteforce(g), g.str());
    }
    if (o.passed) o.detail = std::to_string(graphs.size()) + " classes + 500 random 12-vertex graphs";
    return o;
}

Outcome uniform_lambda1() {
    Outcome o;
    const auto report = occ::spectra::verify_uniform_claims(7, 1);
    o.require(report.ok(), failing(report));
    const Rational lo(-1, 7);
    const auto named_tight = canonical_set({named::edge(), named::path(2), named::two_disjoint_edges(), named::triangle(), named::k4_minus()}, 7);
    std::size_t tight = 0;
    for (const auto& g : occ::graph::enumerate_unlabeled(7)) {
        const auto q = oracle::cut_law(g.n(), oracle::edges_of(g.n(), g.mask()));
        const Rational lambda = lambda1_oracle(q, g.size());
        o.require(lambda == occ::spectra::eval_lambda1_uniform(g), "library disagrees with oracle on " + g.str());
        const bool expect_tight = named_tight.count(occ::graph::canonical_form(g)) > 0 || (g.size() == 4 && is_forest(g));
        if (expect_tight) {
            ++tight;
            o.require(lambda == lo, "not tight: " + g.str());
        } else if (!g.empty()) {
            o.require(lambda >= lo + Rational(1, 56), "gap below 1/56: " + g.str());
        }
    }
    o.require(occ::spectra::uniform_r(5) == Rational(-41, 448), "r(5)");
    o.require(occ::spectra::uniform_r(6) == Rational(-23, 448), "r(6)");
    o.require(occ::spectra::uniform_r(7) == Rational(-13, 512), "r(7)");
    if (o.passed) o.detail = std::to_string(tight) + " tight classes, gap >= 1/56 elsewhere";
    return o;
}

Outcome combined_spectrum() {
    Outcome o;
    const Rational lo(-1, 7);
    const auto tight_expected = canonical_set({named::edge(), named::path(2), named::triangle(), named::two_disjoint_edges()}, 7);
    std::set<occ::graph::EdgeBits> tight;
    for (const auto& g : occ::graph::enumerate_unlabeled(7)) {
        if (g.empty()) continue;
        const Rational lambda = occ::spectra::eval_lambda1_uniform(g) +
                                Rational(16, 17) * Rational(1, 56) * occ::spectra::eval_lambda2_uniform(g);
        o.require(lambda == occ::spectra::eval_lambda_combined(g), "combination mismatch on " + g.str());
        if (lambda == lo) {
            tight.insert(occ::graph::canonical_form(g));
        } else {
            o.require(lambda >= lo + Rational(1, 952), "gap below 1/952: " + g.str());
        }
    }
    o.require(tight == tight_expected, "tight set differs");
    o.require(occ::spectra::eval_lambda_combined(named::path(4)) == lo + Rational(1, 952), "4-forest value");
    o.require(occ::spectra::eval_lambda_combined(named::k4_minus()) == lo + Rational(1, 476), "K4- value");
    if (o.passed) o.detail = "tight on 4 classes, gap >= 1/952";
    return o;
}

Outcome hoffman_machinery() {
    Outcome o;
    o.require(occ::spectra::hoffman_bound(Rational(-1, 7)).nu == Rational(1, 8), "nu(-1/7)");
    for (const Rational& p : {Rational(1, 4), Rational(1, 3), Rational(3, 8), Rational(1, 2)}) {
        const Rational lm = -p.pow(3) / (Rational(1) - p.pow(3));
        o.require(occ::spectra::hoffman_bound(lm).nu == p.pow(3), "nu at p = " + p.str());
    }
    // Walsh coefficients at p = 1/2 as direct character sums.
    const auto t = static_cast<std::uint32_t>(named::triangle(4).mask());
    std::vector<std::uint32_t> members;
    for (std::uint32_t g = 0; g < 64; ++g)
        if ((g & t) == t) members.push_back(g);
    Rational form;
    for (std::uint32_t r = 0; r < 64; ++r) {
        Rational hat;
        for (auto s : members) hat += Rational(std::popcount(r & s) % 2 ? -1 : 1, 64);
        form += occ::spectra::eval_lambda_combined(Graph::from_mask(4, r)) * hat * hat;
    }
    const Rational mu(static_cast<long>(members.size()), 64);
    o.require(form == Rational(0), "umvirate form " + form.str());
    o.require(mu == Rational(1, 8), "umvirate measure");
    const auto check = occ::families::hoffman_check(occ::families::Family(4, members));
    o.require(check.form == form && check.mu == mu && check.ok, "library Hoffman check");
    if (o.passed) o.detail = "nu exact at 5 points; umvirate form 0, mu 1/8";
    return o;
}

Outcome cayley_exact() {
    Outcome o;
    const auto result = occ::families::cayley_independence_number(4);
    o.require(result.exact && result.vertices == 64, "search incomplete");
    o.require(result.alpha == 8, "alpha = " + std::to_string(result.alpha));
    std::set<std::vector<std::uint32_t>> found;
    for (const auto& f : result.maximum_sets) {
        found.insert(f.members());
        const auto m = f.members();
        for (auto g : m)
            for (auto h : m) {
                const auto agree = oracle::edges_of(4, 63U & ~(g ^ h));
                o.require(!oracle::two_colourable(4, agree), "maximum set is not agreeing");
            }
    }
    o.require(found == junta_oracle(), "maximum sets differ from the triangle juntas");
    if (o.passed) o.detail = "alpha 8, " + std::to_string(found.size()) + " maximum sets, " + std::to_string(result.nodes) + " nodes";
    return o;
}

Outcome skew_certificates() {
    Outcome o;
    const auto good = occ::spectra::verify_skew_cases(occ::exact::tau(), Rational(1, 2), 1);
    o.require(good.ok(), good.first_failure() ? "failed: " + good.first_failure()->spec.id : "");
    for (const auto& c : good.cases) o.require(c.spec.identity || c.certificate.has_value(), "no certificate: " + c.spec.id);
    const auto below = occ::spectra::verify_skew_cases(Rational(6, 25), occ::exact::tau(), 1);
    const auto* forest = below.find("odd.forest3");
    o.require(forest && !forest->passed, "3-forest inequality did not fail below 31/125");
    const auto c = occ::spectra::skew_coefficients(Rational(1, 2));
    o.require(c.c1 == Rational(-5, 7) && c.c2 == Rational(-1, 7) && c.c3 == Rational(3, 28), "coefficients at 1/2");
    const auto half = occ::spectra::solve_coefficients(Rational(1, 2));
    o.require(half.lower == Rational(3, 7) && half.upper == Rational(3, 7), "coincident bound at 1/2");
    const auto mid = occ::spectra::solve_coefficients(Rational(3, 8));
    o.require(mid.lower < mid.upper, "strict gap at 3/8");
    if (o.passed) o.detail = std::to_string(good.certificate_count()) + " certificates; 3-forest fails on [6/25, 31/125]";
    return o;
}

Outcome small_p() {
    Outcome o;
    const auto report = occ::spectra::verify_smallp(100);
    o.require(report.ok(), failing(report));
    const auto g = occ::spectra::smallp_g();
    o.require(g(Rational(0)) == Rational(1) && g(Rational(1, 4)).is_zero(), "g endpoints");
    for (const char* id : {"g.decreasing", "smallp.samples@1/8", "smallp.samples@1/5", "smallp.samples@31/125"}) {
        bool present = false;
        for (const auto& c : report.claims) present |= c.id == id && c.passed;
        o.require(present, std::string("missing claim ") + id);
    }
    if (o.passed) o.detail = std::to_string(report.claims.size()) + " claims";
    return o;
}

Outcome tensor_operators() {
    using namespace occ::hypercube;
    Outcome o;
    const Rational p(1, 3), a = p / (Rational(1) - p);
    // One-edge factor: a walk that flips an absent edge in with probability
    // p/(1-p) and always flips a present edge out.
    const Rational m[2][2] = {{Rational(1) - a, a}, {Rational(1), Rational(0)}};
    int bipartite = 0;
    for (std::uint32_t b = 0; b < 8; ++b) {
        const Graph bg = Graph::from_mask(3, b);
        if (!occ::graph::is_bipartite(bg)) continue;
        ++bipartite;
        const TensorOperator op(bg, p);
        const std::uint32_t active = 7U & ~b;
        std::vector<std::vector<Rational>> dense(8, std::vector<Rational>(8));
        for (std::uint32_t g = 0; g < 8; ++g)
            for (std::uint32_t h = 0; h < 8; ++h) {
                Rational e(1);
                for (int bit = 0; bit < 3; ++bit) {
                    const int x = (g >> bit) & 1U, y = (h >> bit) & 1U;
                    e *= (active >> bit) & 1U ? m[x][y] : Rational(x == y ? 1 : 0);
                }
                dense[g][h] = e;
                o.require(op.entry(g, h) == e, "entry mismatch");
                if (g & h & active) o.require(e.is_zero(), "zero pattern");
            }
        for (std::uint32_t g = 0; g < 8; ++g) {
            const auto chi = FunctionOnCube::character(3, p, g);
            const Rational lambda = (-a).pow(std::popcount(g & active));
            for (std::uint32_t x = 0; x < 8; ++x) {
                Surd acc(Rational(0), chi.radicand());
                for (std::uint32_t y = 0; y < 8; ++y) acc += dense[x][y] * chi[y];
                o.require(acc == lambda * chi[x], "eigenvalue law at G = " + std::to_string(g));
            }
            o.require(op.eigenvalue(g) == lambda, "library eigenvalue");
            o.require(apply_MB(chi, op) == lambda * chi, "library apply_MB");
        }
    }
    if (o.passed) o.detail = std::to_string(bipartite) + " bipartite B, all 64 (G, H) pairs each";
    return o;
}

Outcome schur_suite() {
    using namespace occ::schur;
    Outcome o;
    const auto report = verify_oldc_claims(4, 1);
    o.require(report.ok(), failing(report));
    std::size_t sets = 0;
    Rational lowest(1);
    for (std::uint32_t mask = 0; mask < (1U << 15); ++mask, ++sets) {
        const VectorSet s(4, mask);
        std::vector<long> counts(static_cast<std::size_t>(s.size()) + 1);
        for (std::uint32_t w = 0; w < 16; ++w) {
            int hits = 0;
            for (auto v : s.vectors()) hits += std::popcount(v & w) % 2;
            ++counts[static_cast<std::size_t>(hits)];
        }
        std::vector<Rational> q;
        for (long c : counts) q.emplace_back(c, 16);
        const Rational lambda = lambda1_oracle(q, static_cast<std::size_t>(s.size()));
        o.require(lambda == eval_lambda1_oldc(s), "library disagrees on " + s.str());
        lowest = std::min(lowest, lambda);
    }
    o.require(lowest == Rational(-1, 7), "minimum " + lowest.str());
    const auto fano = hyperplane_cut_distribution(VectorSet::universe(3));
    o.require(fano.generating_function() == occ::exact::Polynomial({Rational(1, 8), 0, 0, 0, Rational(7, 8)}), "Fano Q_S");
    for (int n = 1; n <= 5; ++n)
        for (std::uint64_t mask = 0; mask < (1ULL << Graph::edge_count_for(n)); ++mask) {
            const auto g = Graph::from_mask(n, mask);
            const auto s = lift_graph(g);
            const auto q = oracle::cut_law(n, oracle::edges_of(n, mask));
            const auto d = hyperplane_cut_distribution(s);
            for (std::size_t k = 0; k < q.size(); ++k) o.require(d[k] == q[k], "lift law on " + g.str());
        }
    o.require(max_agreeing_family_bruteforce(2).max_measure == Rational(1, 8), "n = 2 search");
    if (o.passed) o.detail = std::to_string(sets) + " sets, " + std::to_string(report.claims.size()) + " claims";
    return o;
}

Outcome compression() {
    using namespace occ::families;
    Outcome o;
    occ::Rng rng(11);
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
        const Family f = random_agreeing_family(4, rng, i % 2 == 1);
        const Family up = monotonize(f);
        o.require(up.size() == f.size(), "cardinality changed");
        const auto m = up.members();
        for (auto g : m)
            for (int e = 0; e < 6; ++e) o.require(up.contains(g | (1U << e)), "not an up-set");
        for (auto g : m)
            for (auto h : m) o.require(!oracle::two_colourable(4, oracle::edges_of(4, g & h)), "not odd-cycle-intersecting");
        ++checked;
    }
    if (o.passed) o.detail = std::to_string(checked) + " families";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) occ_binary = argv[1];
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"table reproduction", table_reproduction},
        {"block formula equals brute force", oracle_equivalence},
        {"uniform lambda1 tight set and gap", uniform_lambda1},
        {"combined spectrum", combined_spectrum},
        {"Hoffman machinery", hoffman_machinery},
        {"Cayley graph on K4", cayley_exact},
        {"skew certificates", skew_certificates},
        {"small-p suite", small_p},
        {"tensor operators on K3", tensor_operators},
        {"Schur suite", schur_suite},
        {"compression of agreeing families", compression},
    };
    const std::vector<double> limits_s = {1, 60, 60, 60, 60, 300, 600, 600, 60, 600, 600};
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.passed = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > limits_s[i]) o.require(false, "over time limit");
        failures += o.passed ? 0 : 1;
        std::printf("%s %2zu %-36s %8.2fs  %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
