#include "occ/cutstats/cutstats.hpp"

#include "occ/graph/blocks.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace occ::cutstats {

CutDistribution::CutDistribution(std::vector<Rational> q) : q_(std::move(q)) {
    if (q_.empty()) throw std::invalid_argument("CutDistribution: empty");
}

CutDistribution CutDistribution::from_generating_function(const exact::Polynomial& poly, std::size_t edges) {
    std::vector<Rational> q(edges + 1);
    for (std::size_t k = 0; k <= edges; ++k) q[k] = poly.coefficient(k);
    if (poly.degree() > static_cast<int>(edges)) throw std::logic_error("CutDistribution: degree exceeds edge count");
    return CutDistribution(std::move(q));
}

exact::Polynomial CutDistribution::generating_function() const { return exact::Polynomial(q_); }

Rational CutDistribution::mean() const {
    Rational m;
    for (std::size_t k = 1; k < q_.size(); ++k) m += q_[k] * Rational(static_cast<long>(k));
    return m;
}

Rational CutDistribution::total() const {
    Rational t;
    for (const auto& x : q_) t += x;
    return t;
}

namespace {

struct Compact {
    int v = 0;
    std::vector<std::uint64_t> adj;  // over relabelled non-isolated vertices
};

Compact compact(const Graph& g) {
    const Graph s = graph::strip_isolated(g);
    Compact c;
    c.v = s.vertex_count();
    c.adj = s.adjacency();
    c.adj.resize(static_cast<std::size_t>(c.v));
    return c;
}

// Visits every colouring with vertex 0 fixed red, in Gray-code order.
// Counts are doubled back to 2^v outcomes by symmetry.
std::vector<std::uint64_t> cut_size_counts(const Compact& c, std::size_t edges) {
    std::vector<std::uint64_t> counts(edges + 1, 0);
    if (c.v == 0) {
        counts[0] = 1;
        return counts;
    }
    if (c.v > kMaxBruteForceVertices) throw std::invalid_argument("cut_distribution_bruteforce: too many vertices");
    std::uint64_t side = 0;
    long cut = 0;
    counts[0] = 1;
    const std::uint64_t steps = std::uint64_t{1} << (c.v - 1);
    for (std::uint64_t i = 1; i < steps; ++i) {
        const int v = std::countr_zero(i) + 1;
        const std::uint64_t bit = std::uint64_t{1} << v;
        const bool was_blue = side & bit;
        const int same = std::popcount(c.adj[v] & (was_blue ? side : ~side));
        const int other = std::popcount(c.adj[v]) - same;
        cut += same - other;
        side ^= bit;
        ++counts[static_cast<std::size_t>(cut)];
    }
    return counts;
}

}  // namespace

CutDistribution cut_distribution_bruteforce(const Graph& g) {
    const Compact c = compact(g);
    const auto counts = cut_size_counts(c, g.size());
    const Rational weight = c.v == 0 ? Rational(1) : exact::pow2(1 - c.v);
    std::vector<Rational> q(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k)
        q[k] = Rational(mpz_class(static_cast<unsigned long>(counts[k])), mpz_class(1)) * weight;
    return CutDistribution(std::move(q));
}

CutDistribution cut_distribution_blocks(const Graph& g) {
    const auto dec = graph::block_decomposition(g);
    exact::Polynomial q = exact::Polynomial({Rational(1, 2), Rational(1, 2)}).pow(static_cast<unsigned>(dec.m()));
    for (const auto& block : dec.blocks) q *= cut_distribution_bruteforce(block).generating_function();
    return CutDistribution::from_generating_function(q, g.size());
}

Rational cut_probability(const Graph& g, const std::function<bool(const Graph&)>& pred) {
    const std::uint64_t support = g.support();
    const int v = std::popcount(support);
    if (v > kMaxBruteForceVertices) throw std::invalid_argument("cut_probability: too many vertices");
    std::vector<int> vertices;
    for (int u = 0; u < g.n(); ++u)
        if ((support >> u) & 1U) vertices.push_back(u);
    const auto edges = g.edges();
    unsigned long hits = 0;
    const std::uint64_t total = std::uint64_t{1} << v;
    for (std::uint64_t colouring = 0; colouring < total; ++colouring) {
        std::uint64_t side = 0;
        for (int k = 0; k < v; ++k)
            if ((colouring >> k) & 1U) side |= std::uint64_t{1} << vertices[k];
        Graph cut(g.n());
        for (auto [a, b] : edges)
            if (((side >> a) ^ (side >> b)) & 1U) cut.set_edge(a, b);
        if (pred(cut)) ++hits;
    }
    return Rational(mpz_class(hits), mpz_class(1)) * exact::pow2(-v);
}

Rational q_iso(const Graph& g, const Graph& r) {
    if (!graph::is_bipartite(r)) throw std::invalid_argument("q_iso: R must be bipartite");
    const Graph target = graph::strip_isolated(r);
    const std::size_t size = r.size();
    const int verts = r.vertex_count();
    return cut_probability(g, [&](const Graph& cut) {
        if (cut.size() != size || cut.vertex_count() != verts) return false;
        return graph::isomorphic(graph::strip_isolated(cut), target);
    });
}

LemmaReport check_cut_lemmas(const Graph& g) {
    LemmaReport report;
    report.graph = g.str();
    const auto dist = cut_distribution_bruteforce(g);
    const auto fail = [&](const std::string& what) {
        report.ok = false;
        report.failures.push_back(what);
    };
    const int v = g.vertex_count();
    const int components = g.component_count();
    if (dist[0] != exact::pow2(components - v)) fail("q0 != 2^(N - v(G))");
    const int m = graph::block_decomposition(g).m();
    if (dist[1] != Rational(m) * dist[0]) fail("q1 != m q0");
    bool odd_degree = false;
    for (int u = 0; u < g.n(); ++u) odd_degree = odd_degree || (g.degree(u) % 2 == 1);
    const Rational half(1, 2);
    for (std::size_t k = 0; k <= dist.edges(); ++k) {
        if (odd_degree && dist[k] > half) fail("q" + std::to_string(k) + " > 1/2 with an odd-degree vertex");
        if (k % 2 == 1 && dist[k] > half) fail("q" + std::to_string(k) + " > 1/2 for odd k");
    }
    if (dist[2] > Rational(3, 4)) fail("q2 > 3/4");
    return report;
}

std::vector<TableRow> builtin_table() {
    namespace named = graph::named;
    std::vector<TableRow> rows;
    const auto add = [&](std::string name, Graph g) {
        rows.push_back({std::move(name), g, cut_distribution_bruteforce(g)});
    };
    add("∅", named::empty(1));
    add("−", named::edge());
    add("∧", named::path(2));
    add("△", named::triangle());
    add("F₄", named::path(4));
    add("K₄⁻", named::k4_minus());
    return rows;
}

}  // namespace occ::cutstats
