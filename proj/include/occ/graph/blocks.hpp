#pragma once

#include "occ/graph/graph.hpp"

#include <vector>

namespace occ::graph {

/// Edges split into bridges and biconnected blocks with at least three
/// edges. Blocks keep the vertex labels of the input.
struct BlockDecomposition {
    std::vector<Edge> bridges;
    std::vector<Graph> blocks;
    [[nodiscard]] int m() const { return static_cast<int>(bridges.size()); }
    /// Union of the blocks: the graph left after deleting every bridge.
    [[nodiscard]] Graph bridgeless_part(int n) const;
};

BlockDecomposition block_decomposition(const Graph& g);

}  // namespace occ::graph
