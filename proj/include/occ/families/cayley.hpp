#pragma once

#include "occ/families/family.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace occ::families {

/// Generators of Γ on subgraphs of K_n: the masks of B̄ for every bipartite
/// B ⊆ K_n. Independent sets of Γ are exactly the odd-cycle-agreeing families.
std::vector<std::uint32_t> cayley_generators(int n);

struct CayleyOptions {
    int workers = 1;
    /// Shuffle the vertex order with this seed before searching.
    std::optional<std::uint64_t> shuffle_seed;
};

struct CayleyResult {
    int n = 0;
    std::size_t vertices = 0;
    std::size_t degree = 0;
    /// False in bound mode (n = 5): only the bounds below are established.
    bool exact = false;
    std::size_t alpha = 0;
    std::vector<Family> maximum_sets;
    long nodes = 0;
    std::size_t lower_bound = 0;  ///< from a verified triangle junta
    std::size_t upper_bound = 0;  ///< from the combined-spectrum Hoffman bound
    Rational spectral_nu;
    Rational spectral_lambda_min;
};

/// n = 4: exact branch and bound with a greedy clique-cover bound, listing
/// every maximum independent set. n = 5: bound mode. Other n throw.
CayleyResult cayley_independence_number(int n, const CayleyOptions& options = {});

struct HoffmanCheck {
    Rational mu;    ///< μ_{1/2}(F)
    Rational form;  ///< Σ_R λ_R f̂(R)² with the combined spectrum
    Rational nu;    ///< -λ_min/(1-λ_min)
    bool agreeing = false;
    /// form = 0 and μ ≤ ν whenever F is agreeing; the rearranged inequality
    /// μ² + λ_min(μ - μ²) ≤ form always.
    bool ok = false;
};

HoffmanCheck hoffman_check(const Family& f);

}  // namespace occ::families
