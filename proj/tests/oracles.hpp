#pragma once

// Small, deliberately naive reference implementations used as test oracles.

#include "occ/exact/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using occ::exact::Rational;
using EdgeList = std::vector<std::pair<int, int>>;

// Law of the number of cut edges over all 2^n colourings of n vertices.
inline std::vector<Rational> cut_law(int n, const EdgeList& edges) {
    std::vector<long> counts(edges.size() + 1);
    for (std::uint32_t c = 0; c < (1U << n); ++c) {
        int cut = 0;
        for (auto [i, j] : edges) cut += ((c >> i) ^ (c >> j)) & 1U;
        ++counts[cut];
    }
    std::vector<Rational> q;
    for (long k : counts) q.emplace_back(k, 1L << n);
    return q;
}

inline bool two_colourable(int n, const EdgeList& edges) {
    std::vector<int> colour(n, -1);
    for (int s = 0; s < n; ++s) {
        if (colour[s] >= 0) continue;
        colour[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [a, b] : edges) {
                int u = a == v ? b : b == v ? a : -1;
                if (u < 0) continue;
                if (colour[u] < 0) {
                    colour[u] = 1 - colour[v];
                    stack.push_back(u);
                } else if (colour[u] == colour[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline bool has_triangle(int n, const EdgeList& edges) {
    auto adj = [&](int a, int b) {
        for (auto [i, j] : edges)
            if ((i == a && j == b) || (i == b && j == a)) return true;
        return false;
    };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (adj(a, b) && adj(a, c) && adj(b, c)) return true;
    return false;
}

// Edge list of a mask in lexicographic edge order on K_n.
inline EdgeList edges_of(int n, std::uint64_t mask) {
    EdgeList out;
    int e = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++e)
            if ((mask >> e) & 1U) out.emplace_back(i, j);
    return out;
}

}  // namespace oracle
