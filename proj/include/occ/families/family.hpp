#pragma once

#include "occ/exact/rational.hpp"
#include "occ/graph/graph.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace occ {
class Rng;
}

namespace occ::families {

using exact::Rational;
using graph::Graph;

/// A family of subgraphs of K_n, n <= 5, stored as a membership bitmap over
/// edge masks.
class Family {
public:
    static constexpr int kMaxVertices = 5;
    using Bits = boost::dynamic_bitset<std::uint64_t>;

    explicit Family(int n);
    Family(int n, Bits members);
    Family(int n, const std::vector<std::uint32_t>& members);

    static Family full(int n);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int edge_count() const { return static_cast<int>(Graph::edge_count_for(n_)); }
    [[nodiscard]] std::size_t universe_size() const { return members_.size(); }
    [[nodiscard]] const Bits& bits() const { return members_; }

    [[nodiscard]] bool contains(std::uint32_t g) const { return g < members_.size() && members_[g]; }
    [[nodiscard]] bool contains(const Graph& g) const;
    void insert(std::uint32_t g) { members_.set(g); }
    void insert(const Graph& g);
    void erase(std::uint32_t g) { members_.reset(g); }

    [[nodiscard]] std::size_t size() const { return members_.count(); }
    [[nodiscard]] bool empty() const { return members_.none(); }
    [[nodiscard]] std::vector<std::uint32_t> members() const;
    [[nodiscard]] Graph graph(std::uint32_t g) const { return Graph::from_mask(n_, g); }

    /// Σ_{A∈F} |A|.
    [[nodiscard]] long potential() const;
    [[nodiscard]] bool is_up_set() const;

    friend bool operator==(const Family& a, const Family& b) { return a.n_ == b.n_ && a.members_ == b.members_; }
    friend bool operator<(const Family& a, const Family& b) { return a.members() < b.members(); }

private:
    int n_;
    Bits members_;
};

enum class Witness { Triangle, OddCycle };

/// witness(G ∩ H) for all G, H in F.
bool is_intersecting(const Family& f, Witness witness);
/// witness(complement(G ⊕ H)) for all G, H in F.
bool is_agreeing(const Family& f, Witness witness);

/// μ_p(F) = Σ p^|G| (1-p)^(E-|G|).
Rational measure(const Family& f, const Rational& p);

/// {G : G ∩ T = S}. Throws if T is not a triangle or S ⊄ T.
Family make_junta(int n, const Graph& t, const Graph& s);
/// All triangle juntas on K_n: every triangle with each of its 8 prescriptions.
std::vector<Family> triangle_juntas(int n);

/// The e-monotonization C_e.
Family compress(const Family& f, std::size_t edge);

/// Repeats compress over all edges until F is an up-set. When `potentials`
/// is given it receives Σ|A| after every step that changed F.
Family monotonize(const Family& f, std::vector<long>* potentials = nullptr);

/// Random odd-cycle-agreeing family: greedy over a random order, each
/// admissible graph kept with probability 1/2 unless `maximal`.
Family random_agreeing_family(int n, Rng& rng, bool maximal = false);
Family random_family(int n, Rng& rng);

/// "n=4;edges=01,02,03,12,13,23;bits=<hex>"; the hex digits list the
/// membership bits four at a time, first bit in the high position.
std::string to_hex(const Family& f);
Family from_hex(std::string_view text);

}  // namespace occ::families
