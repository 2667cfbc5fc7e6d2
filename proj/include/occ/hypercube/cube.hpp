#pragma once

#include "occ/exact/rational.hpp"
#include "occ/graph/graph.hpp"
#include "occ/hypercube/surd.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace occ {
class Rng;
}

namespace occ::hypercube {

using graph::Graph;

/// A function on {0,1}^n_bits under the product measure μ_p. Index bit e is
/// edge e in the lexicographic edge order, so a subgraph of K_n is its mask.
class FunctionOnCube {
public:
    static constexpr int kMaxBits = 20;

    FunctionOnCube(int n_bits, const Rational& p);
    FunctionOnCube(int n_bits, const Rational& p, const std::vector<Rational>& values);

    static FunctionOnCube constant(int n_bits, const Rational& p, const Rational& c);
    static FunctionOnCube indicator(int n_bits, const Rational& p, const std::function<bool(std::uint32_t)>& member);
    /// Skewed character χ_R(S) = Π_{e∈R} χ_e(S).
    static FunctionOnCube character(int n_bits, const Rational& p, std::uint32_t r);

    [[nodiscard]] int n_bits() const { return n_bits_; }
    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] const Rational& p() const { return p_; }
    /// p(1-p), the radicand of every value.
    [[nodiscard]] Rational radicand() const { return p_ * (Rational(1) - p_); }

    [[nodiscard]] const Surd& operator[](std::size_t s) const { return values_.at(s); }
    Surd& operator[](std::size_t s) { return values_.at(s); }
    [[nodiscard]] const std::vector<Surd>& values() const { return values_; }

    /// μ_p of the single point s.
    [[nodiscard]] Rational weight(std::uint32_t s) const;

    FunctionOnCube& operator+=(const FunctionOnCube& rhs);
    FunctionOnCube& operator*=(const Rational& c);
    friend FunctionOnCube operator+(FunctionOnCube a, const FunctionOnCube& b) { return a += b; }
    friend FunctionOnCube operator*(const Rational& c, FunctionOnCube a) { return a *= c; }
    friend bool operator==(const FunctionOnCube& a, const FunctionOnCube& b) {
        return a.n_bits_ == b.n_bits_ && a.p_ == b.p_ && a.values_ == b.values_;
    }

private:
    void require_compatible(const FunctionOnCube& other) const;
    int n_bits_;
    Rational p_;
    std::vector<Surd> values_;
};

/// E_μp[f g].
Surd inner_product(const FunctionOnCube& f, const FunctionOnCube& g);
Surd expectation(const FunctionOnCube& f);

/// f̂(R) = ⟨f, χ_R⟩, returned as a function of R.
FunctionOnCube walsh_transform(const FunctionOnCube& f);
/// f(S) = Σ_R f̂(R) χ_R(S).
FunctionOnCube inverse_walsh_transform(const FunctionOnCube& coefficients);

/// (f*g)(x) = E_y f(y) g(x ⊕ y); requires p = 1/2.
FunctionOnCube convolution(const FunctionOnCube& f, const FunctionOnCube& g);

/// (A_B f)(G) = f(G ⊕ B̄); requires p = 1/2 and B bipartite.
FunctionOnCube apply_AB(const FunctionOnCube& f, const Graph& b);
/// Average of A_B over the 2^n vertex bipartitions; requires p = 1/2, n <= 5.
FunctionOnCube apply_AB_averaged(const FunctionOnCube& f, int n);

/// Tensor operator M_B: factor M on edges of B̄, identity on edges of B.
class TensorOperator {
public:
    static constexpr int kMaxBits = 12;

    TensorOperator(Graph b, const Rational& p);

    [[nodiscard]] const Graph& b() const { return b_; }
    [[nodiscard]] const Rational& p() const { return p_; }
    [[nodiscard]] int n_bits() const { return static_cast<int>(Graph::edge_count_for(b_.n())); }
    /// Edges of B̄ as a mask.
    [[nodiscard]] std::uint32_t active_mask() const { return active_; }
    /// M[x][y].
    [[nodiscard]] const Rational& factor(int x, int y) const { return m_[x][y]; }
    /// (M_B)_{G,H}.
    [[nodiscard]] Rational entry(std::uint32_t g, std::uint32_t h) const;
    /// (-p/(1-p))^{|G ∩ B̄|}.
    [[nodiscard]] Rational eigenvalue(std::uint32_t g) const;

private:
    Graph b_;
    Rational p_;
    std::uint32_t active_ = 0;
    Rational m_[2][2];
};

FunctionOnCube apply_MB(const FunctionOnCube& f, const TensorOperator& op);
/// N_B = M_Bᵀ.
FunctionOnCube apply_MBT(const FunctionOnCube& f, const TensorOperator& op);

/// Σ_R λ_R f̂(R)². Throws std::invalid_argument if some R has no eigenvalue
/// or if f̂(R) ≠ 0 and the sum leaves the rationals.
Rational quadratic_form(const FunctionOnCube& f, const std::map<std::uint32_t, Rational>& spectrum_values);
Rational quadratic_form(const FunctionOnCube& f, const std::function<Rational(std::uint32_t)>& spectrum_values);

/// One step of the walk G ↦ G ⊕_p B̄ whose transition matrix is M_B.
std::uint32_t walk_step(std::uint32_t g, const TensorOperator& op, Rng& rng);
/// Monte Carlo estimate of (M_B f)(G); f must be rational-valued.
double estimate_MB(const FunctionOnCube& f, const TensorOperator& op, std::uint32_t g, int samples, Rng& rng);

}  // namespace occ::hypercube
