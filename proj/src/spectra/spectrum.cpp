#include "occ/spectra/spectrum.hpp"

#include <stdexcept>

namespace occ::spectra {

namespace {

bool is_forest(const Graph& g) { return static_cast<int>(g.size()) == g.vertex_count() - g.component_count(); }

bool is_four_cycle(const Graph& g) {
    if (g.size() != 4 || g.vertex_count() != 4) return false;
    for (int v = 0; v < g.n(); ++v) {
        const int d = g.degree(v);
        if (d != 0 && d != 2) return false;
    }
    return true;
}

// The eight 4-edge forests without isolated vertices.
std::vector<Graph> four_forest_types() {
    return {
        Graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}),  // path
        Graph(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}),  // star
        Graph(8, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}),  // fork
        Graph(8, {{0, 1}, {1, 2}, {2, 3}, {4, 5}}),
        Graph(8, {{0, 1}, {0, 2}, {0, 3}, {4, 5}}),
        Graph(8, {{0, 1}, {1, 2}, {3, 4}, {4, 5}}),
        Graph(8, {{0, 1}, {1, 2}, {3, 4}, {5, 6}}),
        Graph(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}),
    };
}

}  // namespace

GraphStats graph_stats(const Graph& g) {
    GraphStats s;
    s.dist = cutstats::cut_distribution_bruteforce(g);
    s.edges = g.size();
    if (g.size() >= 4) {
        s.q_forest4 = cutstats::cut_probability(g, [](const Graph& cut) { return cut.size() == 4 && is_forest(cut); });
        s.q_c4 = cutstats::cut_probability(g, is_four_cycle);
    }
    return s;
}

Rational q_forest4_by_types(const Graph& g) {
    Rational total;
    for (const auto& f : four_forest_types()) total += cutstats::q_iso(g, f);
    return total;
}

std::string kind_name(Kind kind) {
    switch (kind) {
        case Kind::Lambda1Uniform: return "uniform-lambda1";
        case Kind::Lambda2Uniform: return "uniform-lambda2";
        case Kind::CombinedUniform: return "uniform-combined";
        case Kind::Lambda1Skew: return "skew-lambda1";
        case Kind::Lambda2Skew: return "skew-lambda2";
        case Kind::CombinedSkew: return "skew-combined";
        case Kind::SmallP: return "smallp";
        case Kind::Custom: return "custom";
    }
    return "custom";
}

Rational Spectrum::eval(const GraphStats& stats) const {
    Rational inner;
    for (const auto& [name, coeff] : coefficients) {
        Rational v;
        if (name.size() == 2 && name[0] == 'q' && name[1] >= '0' && name[1] <= '9') {
            v = stats.dist[static_cast<std::size_t>(name[1] - '0')];
        } else if (name == "qF4") {
            v = stats.q_forest4;
        } else if (name == "qC4") {
            v = stats.q_c4;
        } else if (name == "one") {
            v = Rational(1);
        } else if (name == "size") {
            v = Rational(static_cast<long>(stats.edges));
        } else if (name == "size2") {
            v = exact::binomial(static_cast<long>(stats.edges), 2);
        } else {
            throw std::invalid_argument("Spectrum: unknown statistic '" + name + "'");
        }
        inner += coeff * v;
    }
    return sign_base.pow(static_cast<int>(stats.edges)) * inner;
}

Spectrum Spectrum::combine(const Rational& alpha, const Spectrum& other, const Rational& beta) const {
    if (sign_base != other.sign_base) throw std::invalid_argument("Spectrum::combine: sign bases differ");
    Spectrum out;
    out.sign_base = sign_base;
    out.p = p;
    for (const auto& [k, v] : coefficients) out.coefficients[k] += alpha * v;
    for (const auto& [k, v] : other.coefficients) out.coefficients[k] += beta * v;
    return out;
}

Spectrum lambda1_uniform() {
    Spectrum s;
    s.kind = Kind::Lambda1Uniform;
    s.coefficients = {{"q0", Rational(1)}, {"q1", Rational(-5, 7)}, {"q2", Rational(-1, 7)}, {"q3", Rational(3, 28)}};
    s.p = Rational(1, 2);
    return s;
}

Spectrum lambda2_uniform() {
    Spectrum s;
    s.kind = Kind::Lambda2Uniform;
    s.coefficients = {{"qF4", Rational(1)}, {"qC4", Rational(-1)}};
    s.p = Rational(1, 2);
    return s;
}

Spectrum combined_uniform() {
    Spectrum s = lambda1_uniform().combine(Rational(1), lambda2_uniform(), Rational(16, 17) * gamma_prime_uniform());
    s.kind = Kind::CombinedUniform;
    return s;
}

namespace {
void require_p(const Rational& p) {
    if (p.sign() <= 0 || p > Rational(1, 2)) throw std::domain_error("skew spectrum: p must lie in (0, 1/2]");
}
Rational skew_base(const Rational& p) { return -p / (Rational(1) - p); }
}  // namespace

SkewCoefficients skew_coefficients(const Rational& p) {
    require_p(p);
    const auto& sym = symbolic_coefficients();
    return {sym.c1(p), sym.c2(p), sym.c3(p)};
}

const SymbolicCoefficients& symbolic_coefficients() {
    static const SymbolicCoefficients sym = [] {
        using exact::Polynomial;
        const RationalFunction p = RationalFunction::x();
        const RationalFunction one(Rational(1));
        const RationalFunction s = p * p + p + one;
        const auto k = [](long v) { return RationalFunction(Rational(v)); };
        SymbolicCoefficients c;
        c.c1 = (p * p - p - one) / s;
        c.c2 = (p * p - k(3) * p + one) / s;
        c.c3 = (k(5) * p * p - k(27) * p + k(45) - k(28) / p + k(6) / (p * p)) / (k(4) * s);
        c.lambda_min = -(p.pow(3) / (one - p.pow(3)));
        c.ratio = p / (one - p);
        return c;
    }();
    return sym;
}

Spectrum lambda1_skew(const Rational& p) {
    const auto c = skew_coefficients(p);
    Spectrum s;
    s.kind = Kind::Lambda1Skew;
    s.coefficients = {{"q0", Rational(1)}, {"q1", c.c1}, {"q2", c.c2}, {"q3", c.c3}};
    s.sign_base = skew_base(p);
    s.p = p;
    return s;
}

Spectrum lambda2_skew(const Rational& p) {
    require_p(p);
    Spectrum s = lambda2_uniform();
    s.kind = Kind::Lambda2Skew;
    s.sign_base = skew_base(p);
    s.p = p;
    return s;
}

Spectrum combined_skew(const Rational& p, const Rational& gamma_prime) {
    Spectrum s = lambda1_skew(p).combine(Rational(1), lambda2_skew(p), Rational(16, 17) * gamma_prime);
    s.kind = Kind::CombinedSkew;
    s.p = p;
    return s;
}

Spectrum smallp_spectrum(const Rational& p) {
    if (p.sign() <= 0 || p > exact::tau()) throw std::domain_error("smallp spectrum: p must lie in (0, 31/125]");
    const Rational s = p * p + p + Rational(1);
    Spectrum out;
    out.kind = Kind::SmallP;
    out.coefficients = {{"one", Rational(1)}, {"size", -(Rational(1) + p) / s}, {"size2", s.inverse()}};
    out.sign_base = skew_base(p);
    out.p = p;
    return out;
}

Rational eval_lambda1_uniform(const Graph& g) { return lambda1_uniform().eval(g); }
Rational eval_lambda2_uniform(const Graph& g) { return lambda2_uniform().eval(g); }
Rational eval_lambda_combined(const Graph& g) { return combined_uniform().eval(g); }

Rational eval_lambda1_skew(const Graph& g, const Rational& p, bool allow_any_p) {
    if (!allow_any_p && (p < exact::tau() || p > Rational(1, 2)))
        throw std::domain_error("eval_lambda1_skew: p outside the validated range [31/125, 1/2]");
    return lambda1_skew(p).eval(g);
}

Rational eval_lambda_smallp(long size, const Rational& p) {
    if (size < 0) throw std::invalid_argument("eval_lambda_smallp: negative size");
    GraphStats stats;
    stats.edges = static_cast<std::size_t>(size);
    return smallp_spectrum(p).eval(stats);
}

BoundReport hoffman_bound(const Rational& lambda_min, std::optional<Rational> gap) {
    if (!(lambda_min > Rational(-1) && lambda_min.sign() < 0))
        throw std::domain_error("hoffman_bound: lambda_min must lie in (-1, 0)");
    BoundReport r;
    r.lambda_min = lambda_min;
    r.nu = -lambda_min / (Rational(1) - lambda_min);
    r.tight_set_description = "graphs G with lambda_G = " + lambda_min.str();
    if (gap) {
        if (gap->sign() <= 0) throw std::domain_error("hoffman_bound: gap must be positive");
        r.gap = gap;
        r.stability = r.nu / ((Rational(1) - r.nu) * *gap);
    }
    return r;
}

CoefficientSolution solve_coefficients(const Rational& p) {
    if (p.sign() <= 0 || p >= Rational(1)) throw std::domain_error("solve_coefficients: p must lie in (0, 1)");
    const Rational one(1);
    const Rational r = p / (one - p);
    const Rational t = -(p.pow(3)) / (one - p.pow(3));
    CoefficientSolution s;
    s.p = p;
    // Edge: -r (1/2 + c1/2) = t.
    s.c1 = Rational(-2) * t / r - one;
    // 2-path: r^2 (1/4 + c1/2 + c2/4) = t.
    s.c2 = Rational(4) * t / r.pow(2) - one - Rational(2) * s.c1;
    // Triangle: -r^3 (1/4 + 3 c2 / 4) = t must then hold by itself.
    s.triangle_consistent = -r.pow(3) * (Rational(1, 4) + Rational(3, 4) * s.c2) == t;
    // 4-forest: r^4 (1 + 4c1 + 6c2 + (4c3 + c4)) / 16 >= t.
    s.lower = Rational(16) * t / r.pow(4) - one - Rational(4) * s.c1 - Rational(6) * s.c2;
    // K4⁻ with law (1/8, 0, 1/4, 1/2, 1/8): -r^5 (1/8 + c2/4 + c3/2 + c4/8) >= t.
    s.upper = Rational(-8) * t / r.pow(5) - one - Rational(2) * s.c2;
    return s;
}

}  // namespace occ::spectra
