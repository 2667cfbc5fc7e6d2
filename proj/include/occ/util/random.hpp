#pragma once

#include "occ/exact/rational.hpp"
#include "occ/graph/graph.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace occ {

/// Seeded source shared by property tests and sampling campaigns.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::mt19937_64& engine() { return engine_; }
    std::uint64_t bits() { return engine_(); }
    /// Uniform in [lo, hi].
    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
    bool coin() { return (engine_() & 1U) != 0; }

    /// G(n, 1/2).
    graph::Graph graph(int n);
    /// Uniform permutation of 0..n-1.
    std::vector<int> permutation(int n);
    /// num/den with |num| <= range and 1 <= den <= range.
    exact::Rational rational(long range);
    /// Strictly inside (0, 1), denominator at most max_den.
    exact::Rational unit_interval(long max_den);

private:
    std::mt19937_64 engine_;
};

}  // namespace occ
