#pragma once

#include "occ/graph/graph.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace occ::graph {

class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
    [[nodiscard]] std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// graph6 for 1 <= n <= 62. An optional ">>graph6<<" prefix is accepted.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

}  // namespace occ::graph
