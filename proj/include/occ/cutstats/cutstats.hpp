#pragma once

#include "occ/exact/polynomial.hpp"
#include "occ/graph/graph.hpp"

#include <functional>
#include <string>
#include <vector>

namespace occ::cutstats {

using exact::Rational;
using graph::Graph;

/// Law of the number of edges cut by a uniform random red/blue colouring
/// of the non-isolated vertices. q[k] = Pr[k edges cut], k = 0..|G|.
class CutDistribution {
public:
    CutDistribution() : q_{Rational(1)} {}
    explicit CutDistribution(std::vector<Rational> q);
    static CutDistribution from_generating_function(const exact::Polynomial& poly, std::size_t edges);

    [[nodiscard]] const std::vector<Rational>& q() const { return q_; }
    /// q_k, zero past the end.
    [[nodiscard]] Rational operator[](std::size_t k) const { return k < q_.size() ? q_[k] : Rational(0); }
    [[nodiscard]] std::size_t edges() const { return q_.size() - 1; }
    [[nodiscard]] exact::Polynomial generating_function() const;
    [[nodiscard]] Rational mean() const;
    [[nodiscard]] Rational total() const;

    friend bool operator==(const CutDistribution&, const CutDistribution&) = default;

private:
    std::vector<Rational> q_;
};

constexpr int kMaxBruteForceVertices = 24;

CutDistribution cut_distribution_bruteforce(const Graph& g);
/// (1/2 + X/2)^m times the brute-force law of each biconnected block.
CutDistribution cut_distribution_blocks(const Graph& g);

/// Pr over colourings that the cut subgraph G ∩ B satisfies pred. The cut
/// is passed on the vertex set of g.
Rational cut_probability(const Graph& g, const std::function<bool(const Graph&)>& pred);

/// Pr[(G ∩ B) ≅ R] with isolated vertices ignored on both sides.
/// Throws std::invalid_argument if R is not bipartite.
Rational q_iso(const Graph& g, const Graph& r);

struct LemmaReport {
    std::string graph;
    bool ok = true;
    std::vector<std::string> failures;
};

/// The five exact cut facts: q0 = 2^(N - v), q1 = m q0, q_k <= 1/2 with an
/// odd-degree vertex, q_k <= 1/2 for odd k, q2 <= 3/4.
LemmaReport check_cut_lemmas(const Graph& g);

struct TableRow {
    std::string name;
    Graph graph;
    CutDistribution dist;
};

/// Rows ∅, −, ∧, △, F4, K4⁻ with q0..q4, as in the classical table.
std::vector<TableRow> builtin_table();

}  // namespace occ::cutstats
