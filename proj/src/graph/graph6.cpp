#include "occ/graph/graph6.hpp"

namespace occ::graph {

namespace {
constexpr std::string_view kPrefix = ">>graph6<<";
}

// Body bits follow the upper triangle column by column:
// (0,1), (0,2), (1,2), (0,3), ... six to a byte, high bit first.
Graph parse_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.starts_with(kPrefix)) {
        text.remove_prefix(kPrefix.size());
        base = kPrefix.size();
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw Graph6Error("graph6: empty input", base);
    const int head = static_cast<unsigned char>(text[0]);
    if (head == 126) throw Graph6Error("graph6: n > 62 is not supported", base);
    if (head < 63 || head > 126) throw Graph6Error("graph6: bad header byte", base);
    const int n = head - 63;
    if (n == 0) throw Graph6Error("graph6: graph with no vertices", base);
    const std::size_t nbits = Graph::edge_count_for(n);
    const std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() != 1 + nbytes)
        throw Graph6Error("graph6: expected " + std::to_string(1 + nbytes) + " bytes, got " + std::to_string(text.size()),
                          base + std::min(text.size(), 1 + nbytes));
    Graph g(n);
    std::size_t k = 0;
    for (std::size_t b = 0; b < nbytes; ++b) {
        const int c = static_cast<unsigned char>(text[1 + b]);
        if (c < 63 || c > 126) throw Graph6Error("graph6: byte out of range", base + 1 + b);
        const int v = c - 63;
        for (int bit = 5; bit >= 0; --bit, ++k) {
            const bool set = (v >> bit) & 1;
            if (k >= nbits) {
                if (set) throw Graph6Error("graph6: nonzero padding", base + 1 + b);
                continue;
            }
            if (!set) continue;
            // Column j holds pairs (0,j) .. (j-1,j) starting at j(j-1)/2.
            int j = 1;
            while (static_cast<std::size_t>(j) * (j + 1) / 2 <= k) ++j;
            const int i = static_cast<int>(k - static_cast<std::size_t>(j) * (j - 1) / 2);
            g.set_edge(i, j);
        }
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    const int n = g.n();
    if (n > 62) throw std::invalid_argument("write_graph6: n > 62 is not supported");
    std::string out(1, static_cast<char>(n + 63));
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

}  // namespace occ::graph
