#include "occ/hypercube/cube.hpp"

#include "occ/util/random.hpp"

#include <bit>
#include <random>
#include <stdexcept>

namespace occ::hypercube {

namespace {

void require_half(const Rational& p, const char* what) {
    if (p != Rational(1, 2)) throw std::invalid_argument(std::string(what) + ": requires p = 1/2");
}

// Applies the 2x2 matrix t to coordinate pairs along every bit in `mask`.
void butterfly(std::vector<Surd>& v, std::uint32_t mask, const Surd t[2][2]) {
    const std::size_t size = v.size();
    for (std::uint32_t bit = 1; bit < size; bit <<= 1U) {
        if ((mask & bit) == 0) continue;
        for (std::size_t s = 0; s < size; ++s) {
            if (s & bit) continue;
            const Surd f0 = v[s];
            const Surd f1 = v[s | bit];
            v[s] = t[0][0] * f0 + t[0][1] * f1;
            v[s | bit] = t[1][0] * f0 + t[1][1] * f1;
        }
    }
}

}  // namespace

FunctionOnCube::FunctionOnCube(int n_bits, const Rational& p) : n_bits_(n_bits), p_(p) {
    if (n_bits < 0 || n_bits > kMaxBits) throw std::invalid_argument("FunctionOnCube: n_bits out of range");
    if (p.sign() <= 0 || p >= Rational(1)) throw std::invalid_argument("FunctionOnCube: p must lie in (0, 1)");
    values_.assign(std::size_t{1} << n_bits, Surd(Rational(0), radicand()));
}

FunctionOnCube::FunctionOnCube(int n_bits, const Rational& p, const std::vector<Rational>& values)
    : FunctionOnCube(n_bits, p) {
    if (values.size() != values_.size()) throw std::invalid_argument("FunctionOnCube: expected 2^n_bits values");
    const Rational d = radicand();
    for (std::size_t s = 0; s < values.size(); ++s) values_[s] = Surd(values[s], d);
}

FunctionOnCube FunctionOnCube::constant(int n_bits, const Rational& p, const Rational& c) {
    FunctionOnCube f(n_bits, p);
    for (auto& v : f.values_) v = Surd(c, f.radicand());
    return f;
}

FunctionOnCube FunctionOnCube::indicator(int n_bits, const Rational& p, const std::function<bool(std::uint32_t)>& member) {
    FunctionOnCube f(n_bits, p);
    for (std::uint32_t s = 0; s < f.size(); ++s) {
        if (member(s)) f.values_[s] = Surd(Rational(1), f.radicand());
    }
    return f;
}

FunctionOnCube FunctionOnCube::character(int n_bits, const Rational& p, std::uint32_t r) {
    FunctionOnCube f(n_bits, p);
    const Rational d = f.radicand();
    const Surd root = Surd::root(d);
    const Surd absent = root * (Rational(1) - p).inverse();
    const Surd present = root * (-p.inverse());
    for (std::uint32_t s = 0; s < f.size(); ++s) {
        Surd v(Rational(1), d);
        for (int e = 0; e < n_bits; ++e) {
            if (!((r >> e) & 1U)) continue;
            v *= ((s >> e) & 1U) ? present : absent;
        }
        f.values_[s] = v;
    }
    return f;
}

Rational FunctionOnCube::weight(std::uint32_t s) const {
    const int k = std::popcount(s);
    return p_.pow(k) * (Rational(1) - p_).pow(n_bits_ - k);
}

void FunctionOnCube::require_compatible(const FunctionOnCube& other) const {
    if (n_bits_ != other.n_bits_ || p_ != other.p_) throw std::invalid_argument("FunctionOnCube: incompatible operands");
}

FunctionOnCube& FunctionOnCube::operator+=(const FunctionOnCube& rhs) {
    require_compatible(rhs);
    for (std::size_t s = 0; s < values_.size(); ++s) values_[s] += rhs.values_[s];
    return *this;
}

FunctionOnCube& FunctionOnCube::operator*=(const Rational& c) {
    for (auto& v : values_) v *= c;
    return *this;
}

Surd inner_product(const FunctionOnCube& f, const FunctionOnCube& g) {
    if (f.n_bits() != g.n_bits() || f.p() != g.p()) throw std::invalid_argument("inner_product: incompatible operands");
    std::vector<Rational> by_size(static_cast<std::size_t>(f.n_bits()) + 1);
    for (int k = 0; k <= f.n_bits(); ++k) by_size[k] = f.p().pow(k) * (Rational(1) - f.p()).pow(f.n_bits() - k);
    Surd acc(Rational(0), f.radicand());
    for (std::uint32_t s = 0; s < f.size(); ++s) {
        if (f[s].is_zero() || g[s].is_zero()) continue;
        acc += by_size[std::popcount(s)] * (f[s] * g[s]);
    }
    return acc;
}

Surd expectation(const FunctionOnCube& f) {
    return inner_product(f, FunctionOnCube::constant(f.n_bits(), f.p(), Rational(1)));
}

FunctionOnCube walsh_transform(const FunctionOnCube& f) {
    const Rational& p = f.p();
    const Rational d = f.radicand();
    const Surd root = Surd::root(d);
    const Surd t[2][2] = {{Surd(Rational(1) - p, d), Surd(p, d)}, {root, -root}};
    FunctionOnCube out = f;
    std::vector<Surd> v = f.values();
    butterfly(v, (1U << f.n_bits()) - 1U, t);
    for (std::size_t s = 0; s < v.size(); ++s) out[s] = v[s];
    return out;
}

FunctionOnCube inverse_walsh_transform(const FunctionOnCube& coefficients) {
    const Rational& p = coefficients.p();
    const Rational d = coefficients.radicand();
    const Surd root = Surd::root(d);
    const Surd one(Rational(1), d);
    const Surd t[2][2] = {{one, root * (Rational(1) - p).inverse()}, {one, root * (-p.inverse())}};
    FunctionOnCube out = coefficients;
    std::vector<Surd> v = coefficients.values();
    butterfly(v, (1U << coefficients.n_bits()) - 1U, t);
    for (std::size_t s = 0; s < v.size(); ++s) out[s] = v[s];
    return out;
}

FunctionOnCube convolution(const FunctionOnCube& f, const FunctionOnCube& g) {
    require_half(f.p(), "convolution");
    if (f.n_bits() != g.n_bits() || f.p() != g.p()) throw std::invalid_argument("convolution: incompatible operands");
    FunctionOnCube out(f.n_bits(), f.p());
    const Rational scale = exact::pow2(-f.n_bits());
    for (std::uint32_t x = 0; x < f.size(); ++x) {
        Surd acc(Rational(0), f.radicand());
        for (std::uint32_t y = 0; y < f.size(); ++y) acc += f[y] * g[x ^ y];
        out[x] = acc * scale;
    }
    return out;
}

FunctionOnCube apply_AB(const FunctionOnCube& f, const Graph& b) {
    require_half(f.p(), "apply_AB");
    if (!graph::is_bipartite(b)) throw std::invalid_argument("apply_AB: B is not bipartite");
    if (static_cast<int>(Graph::edge_count_for(b.n())) != f.n_bits()) {
        throw std::invalid_argument("apply_AB: B does not live on the cube's edge set");
    }
    const auto flip = static_cast<std::uint32_t>(graph::complement(b).mask());
    FunctionOnCube out(f.n_bits(), f.p());
    for (std::uint32_t s = 0; s < f.size(); ++s) out[s] = f[s ^ flip];
    return out;
}

FunctionOnCube apply_AB_averaged(const FunctionOnCube& f, int n) {
    require_half(f.p(), "apply_AB_averaged");
    if (n < 1 || n > 5) throw std::invalid_argument("apply_AB_averaged: n must be in [1, 5]");
    if (static_cast<int>(Graph::edge_count_for(n)) != f.n_bits()) {
        throw std::invalid_argument("apply_AB_averaged: cube is not the edge set of K_n");
    }
    FunctionOnCube out(f.n_bits(), f.p());
    const std::uint32_t all = (1U << f.n_bits()) - 1U;
    for (std::uint32_t side = 0; side < (1U << n); ++side) {
        std::uint32_t cut = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (((side >> i) ^ (side >> j)) & 1U) cut |= 1U << Graph::edge_index(n, i, j);
            }
        }
        const std::uint32_t flip = all & ~cut;
        for (std::uint32_t s = 0; s < f.size(); ++s) out[s] += f[s ^ flip];
    }
    return exact::pow2(-n) * out;
}

TensorOperator::TensorOperator(Graph b, const Rational& p) : b_(std::move(b)), p_(p) {
    if (!graph::is_bipartite(b_)) throw std::invalid_argument("TensorOperator: B is not bipartite");
    if (p.sign() <= 0 || p > Rational(1, 2)) throw std::invalid_argument("TensorOperator: p must lie in (0, 1/2]");
    if (n_bits() > kMaxBits) throw std::invalid_argument("TensorOperator: at most 12 edges");
    const Rational q = Rational(1) - p;
    m_[0][0] = (Rational(1) - Rational(2) * p) / q;
    m_[0][1] = p / q;
    m_[1][0] = Rational(1);
    m_[1][1] = Rational(0);
    if (!m_[1][1].is_zero()) throw std::logic_error("TensorOperator: M_{1,1} must vanish");
    active_ = static_cast<std::uint32_t>(graph::complement(b_).mask());
}

Rational TensorOperator::entry(std::uint32_t g, std::uint32_t h) const {
    Rational acc(1);
    for (int e = 0; e < n_bits(); ++e) {
        const int x = (g >> e) & 1U;
        const int y = (h >> e) & 1U;
        if ((active_ >> e) & 1U) {
            acc *= m_[x][y];
        } else if (x != y) {
            return Rational(0);
        }
        if (acc.is_zero()) return acc;
    }
    return acc;
}

Rational TensorOperator::eigenvalue(std::uint32_t g) const {
    return (-p_ / (Rational(1) - p_)).pow(std::popcount(g & active_));
}

namespace {

FunctionOnCube apply_tensor(const FunctionOnCube& f, const TensorOperator& op, bool transpose) {
    if (f.n_bits() != op.n_bits() || f.p() != op.p()) throw std::invalid_argument("apply_MB: operator and function differ");
    const Rational d = f.radicand();
    Surd t[2][2];
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) t[x][y] = Surd(transpose ? op.factor(y, x) : op.factor(x, y), d);
    }
    FunctionOnCube out = f;
    std::vector<Surd> v = f.values();
    butterfly(v, op.active_mask(), t);
    for (std::size_t s = 0; s < v.size(); ++s) out[s] = v[s];
    return out;
}

}  // namespace

FunctionOnCube apply_MB(const FunctionOnCube& f, const TensorOperator& op) { return apply_tensor(f, op, false); }

FunctionOnCube apply_MBT(const FunctionOnCube& f, const TensorOperator& op) { return apply_tensor(f, op, true); }

Rational quadratic_form(const FunctionOnCube& f, const std::function<Rational(std::uint32_t)>& spectrum_values) {
    const FunctionOnCube hat = walsh_transform(f);
    Surd acc(Rational(0), f.radicand());
    for (std::uint32_t r = 0; r < hat.size(); ++r) {
        if (hat[r].is_zero()) continue;
        acc += spectrum_values(r) * (hat[r] * hat[r]);
    }
    return acc.to_rational();
}

Rational quadratic_form(const FunctionOnCube& f, const std::map<std::uint32_t, Rational>& spectrum_values) {
    if (spectrum_values.size() < f.size()) {
        for (std::uint32_t r = 0; r < f.size(); ++r) {
            if (!spectrum_values.contains(r)) {
                throw std::invalid_argument("quadratic_form: missing eigenvalue for index " + std::to_string(r));
            }
        }
    }
    return quadratic_form(f, [&](std::uint32_t r) { return spectrum_values.at(r); });
}

std::uint32_t walk_step(std::uint32_t g, const TensorOperator& op, Rng& rng) {
    const double add = op.factor(0, 1).approx();
    std::bernoulli_distribution coin(add);
    for (int e = 0; e < op.n_bits(); ++e) {
        const std::uint32_t bit = 1U << e;
        if (!(op.active_mask() & bit)) continue;
        if (g & bit) {
            g &= ~bit;
        } else if (coin(rng.engine())) {
            g |= bit;
        }
    }
    return g;
}

double estimate_MB(const FunctionOnCube& f, const TensorOperator& op, std::uint32_t g, int samples, Rng& rng) {
    if (samples <= 0) throw std::invalid_argument("estimate_MB: samples must be positive");
    double acc = 0;
    for (int i = 0; i < samples; ++i) acc += f[walk_step(g, op, rng)].to_rational().approx();
    return acc / samples;
}

}  // namespace occ::hypercube
