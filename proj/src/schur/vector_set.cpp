#include "occ/schur/vector_set.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace occ::schur {

namespace {

std::uint32_t universe_mask(int n) { return n == 0 ? 0U : static_cast<std::uint32_t>((std::uint64_t{1} << ((1U << n) - 1)) - 1); }

}  // namespace

VectorSet::VectorSet(int n) : n_(n) {
    if (n < 1 || n > kMaxDimension) throw std::invalid_argument("VectorSet: n must be in [1, 5]");
}

VectorSet::VectorSet(int n, std::uint32_t mask) : VectorSet(n) {
    if (mask & ~universe_mask(n)) throw std::invalid_argument("VectorSet: mask outside Z_2^n \\ {0}");
    mask_ = mask;
}

VectorSet VectorSet::from_vectors(int n, const std::vector<std::uint32_t>& vectors) {
    VectorSet s(n);
    for (auto v : vectors) s.insert(v);
    return s;
}

VectorSet VectorSet::universe(int n) { return VectorSet(n, universe_mask(n)); }

int VectorSet::size() const { return std::popcount(mask_); }

void VectorSet::insert(std::uint32_t v) {
    if (v == 0) throw std::invalid_argument("VectorSet: the zero vector is never a member");
    if (v >= (1U << n_)) throw std::invalid_argument("VectorSet: vector outside Z_2^n");
    mask_ |= 1U << (v - 1);
}

void VectorSet::erase(std::uint32_t v) {
    if (v != 0 && v < (1U << n_)) mask_ &= ~(1U << (v - 1));
}

std::vector<std::uint32_t> VectorSet::vectors() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = mask_; m; m &= m - 1) out.push_back(static_cast<std::uint32_t>(std::countr_zero(m)) + 1);
    return out;
}

std::uint32_t VectorSet::sum() const {
    std::uint32_t acc = 0;
    for (auto v : vectors()) acc ^= v;
    return acc;
}

std::string VectorSet::str() const {
    std::ostringstream os;
    os << '{' << std::hex;
    bool first = true;
    for (auto v : vectors()) {
        os << (first ? "" : ",") << v;
        first = false;
    }
    os << '}';
    return os.str();
}

void VectorSet::require_same(const VectorSet& other) const {
    if (n_ != other.n_) throw std::invalid_argument("VectorSet: dimensions differ");
}

VectorSet& VectorSet::operator&=(const VectorSet& rhs) {
    require_same(rhs);
    mask_ &= rhs.mask_;
    return *this;
}

VectorSet& VectorSet::operator|=(const VectorSet& rhs) {
    require_same(rhs);
    mask_ |= rhs.mask_;
    return *this;
}

VectorSet& VectorSet::operator^=(const VectorSet& rhs) {
    require_same(rhs);
    mask_ ^= rhs.mask_;
    return *this;
}

VectorSet complement(const VectorSet& s) { return VectorSet(s.n(), universe_mask(s.n()) & ~s.mask()); }

int gf2_rank(const std::vector<std::uint32_t>& vectors) {
    std::uint32_t basis[32] = {};
    int rank = 0;
    for (auto v : vectors) {
        for (int bit = 31; bit >= 0 && v; --bit) {
            if (!((v >> bit) & 1U)) continue;
            if (!basis[bit]) {
                basis[bit] = v;
                ++rank;
                v = 0;
            } else {
                v ^= basis[bit];
            }
        }
    }
    return rank;
}

RankDecomposition rank_decompose(const VectorSet& s) {
    RankDecomposition out{0, VectorSet(s.n()), VectorSet(s.n()), 0};
    const auto vs = s.vectors();
    out.rank = gf2_rank(vs);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        std::vector<std::uint32_t> rest;
        for (std::size_t j = 0; j < vs.size(); ++j) {
            if (j != i) rest.push_back(vs[j]);
        }
        if (gf2_rank(rest) < out.rank) {
            out.independent.insert(vs[i]);
        } else {
            out.dependent.insert(vs[i]);
        }
    }
    out.m = out.independent.size();
    return out;
}

cutstats::CutDistribution hyperplane_cut_distribution(const VectorSet& s) {
    const auto vs = s.vectors();
    std::vector<long> counts(vs.size() + 1);
    const std::uint32_t points = 1U << s.n();
    for (std::uint32_t w = 0; w < points; ++w) {
        int k = 0;
        for (auto v : vs) k += std::popcount(v & w) & 1;
        ++counts[k];
    }
    std::vector<Rational> q(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k) q[k] = Rational(counts[k], static_cast<long>(points));
    return cutstats::CutDistribution(std::move(q));
}

VectorSet lift_graph(const graph::Graph& g) {
    if (g.n() > VectorSet::kMaxDimension) throw std::invalid_argument("lift_graph: at most 5 vertices");
    VectorSet s(std::max(g.n(), 1));
    for (const auto& [i, j] : g.edges()) s.insert((1U << i) | (1U << j));
    return s;
}

}  // namespace occ::schur
