#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace occ::graph {

using Edge = std::pair<int, int>;
using EdgeBits = boost::dynamic_bitset<std::uint64_t>;

/// Labeled subgraph of K_n, n <= 64. Edge (i, j) with i < j lives at bit
///   i*n - i*(i+1)/2 + (j - i - 1),
/// which is its position in the lexicographic list of pairs.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() : Graph(1) {}
    explicit Graph(int n);
    Graph(int n, EdgeBits bits);
    Graph(int n, std::initializer_list<Edge> edges);
    Graph(int n, const std::vector<Edge>& edges);

    static Graph complete(int n);
    /// Low bit = edge index 0. Needs n(n-1)/2 <= 64.
    static Graph from_mask(int n, std::uint64_t mask);

    static std::size_t edge_count_for(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }
    static std::size_t edge_index(int n, int i, int j);
    static Edge edge_at(int n, std::size_t index);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] const EdgeBits& bits() const { return bits_; }
    [[nodiscard]] std::uint64_t mask() const;
    [[nodiscard]] std::size_t size() const { return bits_.count(); }
    [[nodiscard]] bool empty() const { return bits_.none(); }

    [[nodiscard]] bool has_edge(int i, int j) const;
    void set_edge(int i, int j, bool present = true);
    [[nodiscard]] std::vector<Edge> edges() const;

    /// adjacency()[v] has bit u set iff uv is an edge.
    [[nodiscard]] std::vector<std::uint64_t> adjacency() const;
    [[nodiscard]] std::uint64_t support() const;
    /// Number of non-isolated vertices.
    [[nodiscard]] int vertex_count() const;
    /// Connected components among non-isolated vertices.
    [[nodiscard]] int component_count() const;
    [[nodiscard]] int degree(int v) const;

    [[nodiscard]] bool subgraph_of(const Graph& other) const;

    Graph& operator^=(const Graph& rhs);
    Graph& operator&=(const Graph& rhs);
    Graph& operator|=(const Graph& rhs);
    friend Graph operator^(Graph a, const Graph& b) { return a ^= b; }
    friend Graph operator&(Graph a, const Graph& b) { return a &= b; }
    friend Graph operator|(Graph a, const Graph& b) { return a |= b; }
    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

    /// "{01,02,12}" style edge list.
    [[nodiscard]] std::string str() const;

private:
    void require_same_order(const Graph& other) const;
    int n_;
    EdgeBits bits_;
};

/// G ⊕ H.
Graph symmetric_difference(const Graph& g, const Graph& h);
Graph complement(const Graph& g);

bool is_bipartite(const Graph& g);
inline bool has_odd_cycle(const Graph& g) { return !is_bipartite(g); }
bool contains_triangle(const Graph& g);

/// Relabel: vertex v of g becomes sigma[v].
Graph permute(const Graph& g, const std::vector<int>& sigma);
/// Drop isolated vertices, keeping the relative order of the rest.
Graph strip_isolated(const Graph& g);
/// Same edges on a larger vertex set.
Graph pad(const Graph& g, int n);

/// Lexicographically least edge bit vector over all relabelings, reading
/// bit 0 first. n <= 8.
EdgeBits canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);
bool isomorphic(const Graph& g, const Graph& h);
/// Hex digest of a canonical form, bit 0 first.
std::string bits_hex(const EdgeBits& bits);

/// One representative per isomorphism class of graphs without isolated
/// vertices on at most max_vertices vertices, padded to max_vertices
/// vertices, sorted by edge count and then canonical form.
std::vector<Graph> enumerate_unlabeled(int max_vertices);

namespace named {
Graph empty(int n = 1);
Graph edge(int n = 0);
Graph path(int edges, int n = 0);          // path with `edges` edges
Graph cycle(int length, int n = 0);
Graph complete(int k, int n = 0);
Graph k4_minus(int n = 0);
Graph two_disjoint_edges(int n = 0);
Graph star(int leaves, int n = 0);
Graph triangle(int n = 0);
/// Two triangles joined by a bridge.
Graph bowtie_bridge(int n = 0);
}  // namespace named

}  // namespace occ::graph
