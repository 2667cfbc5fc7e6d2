#include "occ/util/random.hpp"

#include <algorithm>
#include <numeric>

namespace occ {

graph::Graph Rng::graph(int n) {
    graph::Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin()) g.set_edge(i, j);
    return g;
}

std::vector<int> Rng::permutation(int n) {
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), engine_);
    return sigma;
}

exact::Rational Rng::rational(long range) { return exact::Rational(uniform(-range, range), uniform(1, range)); }

exact::Rational Rng::unit_interval(long max_den) {
    const long den = uniform(2, max_den);
    return exact::Rational(uniform(1, den - 1), den);
}

}  // namespace occ
