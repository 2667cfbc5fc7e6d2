#include "occ/graph/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace occ::graph {

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("Graph: vertex count out of range");
    bits_.resize(edge_count_for(n));
}

Graph::Graph(int n, EdgeBits bits) : Graph(n) {
    if (bits.size() != bits_.size()) throw std::invalid_argument("Graph: bit vector has wrong length");
    bits_ = std::move(bits);
}

Graph::Graph(int n, std::initializer_list<Edge> edges) : Graph(n) {
    for (auto [i, j] : edges) set_edge(i, j);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [i, j] : edges) set_edge(i, j);
}

Graph Graph::complete(int n) {
    Graph g(n);
    g.bits_.set();
    return g;
}

Graph Graph::from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    if (g.bits_.size() > 64) throw std::invalid_argument("Graph::from_mask: more than 64 edges");
    for (std::size_t e = 0; e < g.bits_.size(); ++e) g.bits_[e] = (mask >> e) & 1U;
    if (g.bits_.size() < 64 && (mask >> g.bits_.size()) != 0) throw std::invalid_argument("Graph::from_mask: stray bits");
    return g;
}

std::size_t Graph::edge_index(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= n || i == j) throw std::out_of_range("Graph: bad edge");
    return static_cast<std::size_t>(i) * n - static_cast<std::size_t>(i) * (i + 1) / 2 + (j - i - 1);
}

Edge Graph::edge_at(int n, std::size_t index) {
    int i = 0;
    std::size_t row = static_cast<std::size_t>(n - 1);
    while (index >= row) {
        index -= row;
        ++i;
        --row;
    }
    return {i, i + 1 + static_cast<int>(index)};
}

std::uint64_t Graph::mask() const {
    if (bits_.size() > 64) throw std::logic_error("Graph::mask: more than 64 edges");
    std::uint64_t m = 0;
    for (auto e = bits_.find_first(); e != EdgeBits::npos; e = bits_.find_next(e)) m |= std::uint64_t{1} << e;
    return m;
}

bool Graph::has_edge(int i, int j) const { return bits_[edge_index(n_, i, j)]; }

void Graph::set_edge(int i, int j, bool present) { bits_[edge_index(n_, i, j)] = present; }

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(size());
    for (auto e = bits_.find_first(); e != EdgeBits::npos; e = bits_.find_next(e)) out.push_back(edge_at(n_, e));
    return out;
}

std::vector<std::uint64_t> Graph::adjacency() const {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n_), 0);
    std::size_t e = 0;
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j, ++e) {
            if (!bits_[e]) continue;
            adj[i] |= std::uint64_t{1} << j;
            adj[j] |= std::uint64_t{1} << i;
        }
    }
    return adj;
}

std::uint64_t Graph::support() const {
    std::uint64_t s = 0;
    const auto adj = adjacency();
    for (int v = 0; v < n_; ++v)
        if (adj[v]) s |= std::uint64_t{1} << v;
    return s;
}

int Graph::vertex_count() const { return std::popcount(support()); }

int Graph::component_count() const {
    const auto adj = adjacency();
    std::uint64_t unseen = support();
    int components = 0;
    while (unseen) {
        ++components;
        std::uint64_t frontier = unseen & (~unseen + 1);
        std::uint64_t seen = frontier;
        while (frontier) {
            const int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            const std::uint64_t fresh = adj[v] & ~seen;
            seen |= fresh;
            frontier |= fresh;
        }
        unseen &= ~seen;
    }
    return components;
}

int Graph::degree(int v) const { return std::popcount(adjacency()[v]); }

bool Graph::subgraph_of(const Graph& other) const {
    require_same_order(other);
    return bits_.is_subset_of(other.bits_);
}

void Graph::require_same_order(const Graph& other) const {
    if (n_ != other.n_) throw std::invalid_argument("Graph: vertex counts differ");
}

Graph& Graph::operator^=(const Graph& rhs) {
    require_same_order(rhs);
    bits_ ^= rhs.bits_;
    return *this;
}

Graph& Graph::operator&=(const Graph& rhs) {
    require_same_order(rhs);
    bits_ &= rhs.bits_;
    return *this;
}

Graph& Graph::operator|=(const Graph& rhs) {
    require_same_order(rhs);
    bits_ |= rhs.bits_;
    return *this;
}

std::string Graph::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto [i, j] : edges()) {
        if (!first) os << ",";
        first = false;
        if (n_ <= 10) {
            os << i << j;
        } else {
            os << i << "-" << j;
        }
    }
    os << "}";
    return os.str();
}

Graph symmetric_difference(const Graph& g, const Graph& h) { return g ^ h; }

Graph complement(const Graph& g) { return Graph(g.n(), ~g.bits()); }

bool is_bipartite(const Graph& g) {
    const auto adj = g.adjacency();
    std::vector<int> color(static_cast<std::size_t>(g.n()), -1);
    std::vector<int> queue;
    for (int s = 0; s < g.n(); ++s) {
        if (color[s] != -1 || adj[s] == 0) continue;
        color[s] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            for (std::uint64_t nb = adj[v]; nb; nb &= nb - 1) {
                const int u = std::countr_zero(nb);
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                } else if (color[u] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool contains_triangle(const Graph& g) {
    const auto adj = g.adjacency();
    for (int i = 0; i < g.n(); ++i) {
        for (std::uint64_t nb = adj[i] & ~((std::uint64_t{2} << i) - 1); nb; nb &= nb - 1) {
            const int j = std::countr_zero(nb);
            if (adj[i] & adj[j]) return true;
        }
    }
    return false;
}

Graph permute(const Graph& g, const std::vector<int>& sigma) {
    if (static_cast<int>(sigma.size()) != g.n()) throw std::invalid_argument("permute: wrong permutation length");
    Graph out(g.n());
    for (auto [i, j] : g.edges()) out.set_edge(sigma[i], sigma[j]);
    return out;
}

Graph strip_isolated(const Graph& g) {
    std::vector<int> label(static_cast<std::size_t>(g.n()), -1);
    const std::uint64_t s = g.support();
    int next = 0;
    for (int v = 0; v < g.n(); ++v)
        if ((s >> v) & 1U) label[v] = next++;
    Graph out(std::max(next, 1));
    for (auto [i, j] : g.edges()) out.set_edge(label[i], label[j]);
    return out;
}

Graph pad(const Graph& g, int n) {
    if (n < g.n()) throw std::invalid_argument("pad: target smaller than graph");
    Graph out(n);
    for (auto [i, j] : g.edges()) out.set_edge(i, j);
    return out;
}

namespace {

constexpr int kMaxCanonical = 8;

// Key whose numeric order matches lexicographic order of the bit vector
// read from index 0: edge e sits at bit (E - 1 - e).
std::uint32_t canonical_key(const Graph& g) {
    const int n = g.n();
    if (n > kMaxCanonical) throw std::invalid_argument("canonical_form: n too large for permutation scan");
    const auto adj = g.adjacency();
    const int total = static_cast<int>(Graph::edge_count_for(n));
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::uint32_t best = ~std::uint32_t{0};
    do {
        // Pair (i, j) of the relabeled graph reads the old pair (sigma[i], sigma[j]).
        std::uint32_t key = 0;
        int pos = total;
        bool worse = false;
        for (int i = 0; i < n && !worse; ++i) {
            const std::uint64_t row = adj[sigma[i]];
            for (int j = i + 1; j < n; ++j) {
                --pos;
                if ((row >> sigma[j]) & 1U) {
                    key |= std::uint32_t{1} << pos;
                    if ((key >> pos) > (best >> pos)) {
                        worse = true;
                        break;
                    }
                }
            }
        }
        if (!worse && key < best) best = key;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return best;
}

EdgeBits key_to_bits(int n, std::uint32_t key) {
    const std::size_t total = Graph::edge_count_for(n);
    EdgeBits bits(total);
    for (std::size_t e = 0; e < total; ++e) bits[e] = (key >> (total - 1 - e)) & 1U;
    return bits;
}

}  // namespace

EdgeBits canonical_form(const Graph& g) { return key_to_bits(g.n(), canonical_key(g)); }

Graph canonical_graph(const Graph& g) { return Graph(g.n(), canonical_form(g)); }

bool isomorphic(const Graph& g, const Graph& h) {
    if (g.size() != h.size() || g.vertex_count() != h.vertex_count()) return false;
    const int n = std::max(g.n(), h.n());
    return canonical_key(pad(g, n)) == canonical_key(pad(h, n));
}

std::string bits_hex(const EdgeBits& bits) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    for (std::size_t start = 0; start < bits.size(); start += 4) {
        int nibble = 0;
        for (std::size_t k = 0; k < 4; ++k) {
            nibble <<= 1;
            if (start + k < bits.size() && bits[start + k]) nibble |= 1;
        }
        out.push_back(digits[nibble]);
    }
    return out.empty() ? "0" : out;
}

std::vector<Graph> enumerate_unlabeled(int max_vertices) {
    if (max_vertices < 1 || max_vertices > kMaxCanonical - 1)
        throw std::invalid_argument("enumerate_unlabeled: max_vertices must be in [1, 7]");
    // Classes of graphs on k vertices, isolated vertices allowed, grown one
    // vertex at a time. A graph on k vertices with isolated vertices stands
    // for the same graph on fewer non-isolated vertices.
    std::set<std::uint32_t> level{0};
    for (int k = 2; k <= max_vertices; ++k) {
        std::set<std::uint32_t> next;
        const std::size_t old_total = Graph::edge_count_for(k - 1);
        for (std::uint32_t key : level) {
            Graph base(k);
            for (std::size_t e = 0; e < old_total; ++e) {
                if ((key >> (old_total - 1 - e)) & 1U) {
                    auto [i, j] = Graph::edge_at(k - 1, e);
                    base.set_edge(i, j);
                }
            }
            for (std::uint32_t nb = 0; nb < (1U << (k - 1)); ++nb) {
                Graph g = base;
                for (int v = 0; v < k - 1; ++v)
                    if ((nb >> v) & 1U) g.set_edge(v, k - 1);
                next.insert(canonical_key(g));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (std::uint32_t key : level) out.emplace_back(max_vertices, key_to_bits(max_vertices, key));
    std::stable_sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) { return a.size() < b.size(); });
    return out;
}

namespace named {

namespace {
int order(int requested, int needed) { return requested > 0 ? std::max(requested, needed) : needed; }
}  // namespace

Graph empty(int n) { return Graph(n); }

Graph edge(int n) { return Graph(order(n, 2), {{0, 1}}); }

Graph path(int edges, int n) {
    Graph g(order(n, edges + 1));
    for (int v = 0; v < edges; ++v) g.set_edge(v, v + 1);
    return g;
}

Graph cycle(int length, int n) {
    Graph g = path(length - 1, order(n, length));
    g.set_edge(0, length - 1);
    return g;
}

Graph complete(int k, int n) {
    Graph g(order(n, k));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.set_edge(i, j);
    return g;
}

Graph k4_minus(int n) {
    Graph g = complete(4, n);
    g.set_edge(2, 3, false);
    return g;
}

Graph two_disjoint_edges(int n) { return Graph(order(n, 4), {{0, 1}, {2, 3}}); }

Graph star(int leaves, int n) {
    Graph g(order(n, leaves + 1));
    for (int v = 1; v <= leaves; ++v) g.set_edge(0, v);
    return g;
}

Graph triangle(int n) { return complete(3, n); }

Graph bowtie_bridge(int n) {
    return Graph(order(n, 6), {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}

}  // namespace named

}  // namespace occ::graph
