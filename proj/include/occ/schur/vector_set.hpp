#pragma once

#include "occ/cutstats/cutstats.hpp"
#include "occ/graph/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace occ::schur {

using exact::Rational;

/// A set of nonzero vectors of Z_2^n, n <= 5. Vector v (an integer in
/// [1, 2^n)) is stored at bit v-1 of the mask, so 0 can never be a member.
class VectorSet {
public:
    static constexpr int kMaxDimension = 5;

    explicit VectorSet(int n);
    VectorSet(int n, std::uint32_t mask);
    static VectorSet from_vectors(int n, const std::vector<std::uint32_t>& vectors);
    /// All 2^n - 1 nonzero vectors.
    static VectorSet universe(int n);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] std::uint32_t mask() const { return mask_; }
    [[nodiscard]] int size() const;
    [[nodiscard]] bool empty() const { return mask_ == 0; }
    [[nodiscard]] bool contains(std::uint32_t v) const { return v != 0 && ((mask_ >> (v - 1)) & 1U); }
    void insert(std::uint32_t v);
    void erase(std::uint32_t v);
    [[nodiscard]] std::vector<std::uint32_t> vectors() const;
    [[nodiscard]] std::uint32_t sum() const;

    /// "{1,3,6}" with vectors in hex, ascending.
    [[nodiscard]] std::string str() const;

    VectorSet& operator&=(const VectorSet& rhs);
    VectorSet& operator|=(const VectorSet& rhs);
    VectorSet& operator^=(const VectorSet& rhs);
    friend VectorSet operator&(VectorSet a, const VectorSet& b) { return a &= b; }
    friend VectorSet operator|(VectorSet a, const VectorSet& b) { return a |= b; }
    friend VectorSet operator^(VectorSet a, const VectorSet& b) { return a ^= b; }
    friend bool operator==(const VectorSet&, const VectorSet&) = default;

private:
    void require_same(const VectorSet& other) const;
    int n_;
    std::uint32_t mask_ = 0;
};

VectorSet complement(const VectorSet& s);

/// Rank over GF(2) of a list of vectors.
int gf2_rank(const std::vector<std::uint32_t>& vectors);

struct RankDecomposition {
    int rank = 0;
    VectorSet independent;  ///< I(S): members outside the span of the rest
    VectorSet dependent;    ///< J(S) = S \ I(S)
    int m = 0;              ///< |I(S)|
};

RankDecomposition rank_decompose(const VectorSet& s);

/// Law of |S ∩ A_w| for uniform w, A_w = {v : <v,w> = 1}.
cutstats::CutDistribution hyperplane_cut_distribution(const VectorSet& s);

/// Lifts edge ij of a graph on at most 5 vertices to e_i + e_j in Z_2^n.
VectorSet lift_graph(const graph::Graph& g);

}  // namespace occ::schur
