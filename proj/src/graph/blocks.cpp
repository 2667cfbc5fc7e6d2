#include "occ/graph/blocks.hpp"

#include <algorithm>
#include <bit>

namespace occ::graph {

Graph BlockDecomposition::bridgeless_part(int n) const {
    Graph h(n);
    for (const auto& b : blocks) h |= b;
    return h;
}

namespace {

struct Walker {
    const Graph& g;
    std::vector<std::uint64_t> adj;
    std::vector<int> disc;
    std::vector<int> low;
    std::vector<Edge> stack;
    BlockDecomposition out;
    int clock = 0;

    explicit Walker(const Graph& graph)
        : g(graph), adj(graph.adjacency()), disc(graph.n(), -1), low(graph.n(), 0) {}

    void pop_component(const Edge& until) {
        Graph block(g.n());
        int count = 0;
        while (true) {
            const Edge e = stack.back();
            stack.pop_back();
            block.set_edge(e.first, e.second);
            ++count;
            if (e == until) break;
        }
        if (count == 1) {
            auto [a, b] = until;
            out.bridges.emplace_back(std::min(a, b), std::max(a, b));
        } else {
            out.blocks.push_back(std::move(block));
        }
    }

    void visit(int v, int parent) {
        disc[v] = low[v] = clock++;
        for (std::uint64_t nb = adj[v]; nb; nb &= nb - 1) {
            const int u = std::countr_zero(nb);
            if (u == parent) continue;
            if (disc[u] == -1) {
                stack.emplace_back(v, u);
                visit(u, v);
                low[v] = std::min(low[v], low[u]);
                if (low[u] >= disc[v]) pop_component({v, u});
            } else if (disc[u] < disc[v]) {
                stack.emplace_back(v, u);
                low[v] = std::min(low[v], disc[u]);
            }
        }
    }
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
    Walker w(g);
    for (int v = 0; v < g.n(); ++v)
        if (w.disc[v] == -1 && w.adj[v]) w.visit(v, -1);
    std::sort(w.out.bridges.begin(), w.out.bridges.end());
    return std::move(w.out);
}

}  // namespace occ::graph
