#pragma once

#include "occ/cutstats/cutstats.hpp"
#include "occ/exact/rational_function.hpp"

#include <map>
#include <optional>
#include <string>

namespace occ::spectra {

using exact::Rational;
using exact::RationalFunction;
using graph::Graph;

/// Everything a spectrum value may depend on.
struct GraphStats {
    cutstats::CutDistribution dist;
    std::size_t edges = 0;
    Rational q_forest4;  ///< Pr[cut is a forest with 4 edges]
    Rational q_c4;       ///< Pr[cut is a 4-cycle]
};

GraphStats graph_stats(const Graph& g);

/// Pr[cut ≅ F] summed over every 4-edge forest type F, via q_iso. Slower
/// than graph_stats; used to cross-check it.
Rational q_forest4_by_types(const Graph& g);

enum class Kind {
    Lambda1Uniform,
    Lambda2Uniform,
    CombinedUniform,
    Lambda1Skew,
    Lambda2Skew,
    CombinedSkew,
    SmallP,
    Custom,
};

std::string kind_name(Kind kind);

/// λ_G = base^|G| · Σ coefficient[s] · s(G). Statistic names: "q0".."q4",
/// "qF4", "qC4", "one" (constant 1), "size" (|G|) and "size2" (C(|G|,2)).
struct Spectrum {
    Kind kind = Kind::Custom;
    std::map<std::string, Rational> coefficients;
    Rational sign_base{-1};
    std::optional<Rational> p;

    [[nodiscard]] Rational eval(const GraphStats& stats) const;
    [[nodiscard]] Rational eval(const Graph& g) const { return eval(graph_stats(g)); }

    /// Linear combination; both spectra must share the sign base.
    [[nodiscard]] Spectrum combine(const Rational& alpha, const Spectrum& other, const Rational& beta) const;
};

Spectrum lambda1_uniform();
Spectrum lambda2_uniform();
/// Λ1 + (16/17)(1/56) Λ2.
Spectrum combined_uniform();
Spectrum lambda1_skew(const Rational& p);
Spectrum lambda2_skew(const Rational& p);
Spectrum combined_skew(const Rational& p, const Rational& gamma_prime);
Spectrum smallp_spectrum(const Rational& p);

/// γ' for the uniform spectrum and the combined gap γ = γ'/17.
inline Rational gamma_prime_uniform() { return Rational(1, 56); }
inline Rational gamma_combined_uniform() { return Rational(1, 952); }

Rational eval_lambda1_uniform(const Graph& g);
Rational eval_lambda2_uniform(const Graph& g);
Rational eval_lambda_combined(const Graph& g);

struct SkewCoefficients {
    Rational c1, c2, c3;
};

/// Throws std::domain_error unless 0 < p <= 1/2.
SkewCoefficients skew_coefficients(const Rational& p);

/// The same coefficients as functions of p.
struct SymbolicCoefficients {
    RationalFunction c1, c2, c3;
    RationalFunction lambda_min;  ///< -p^3/(1-p^3)
    RationalFunction ratio;       ///< p/(1-p)
};
const SymbolicCoefficients& symbolic_coefficients();

/// Throws std::domain_error for p outside [31/125, 1/2] unless
/// allow_any_p is set (any 0 < p <= 1/2 is then accepted).
Rational eval_lambda1_skew(const Graph& g, const Rational& p, bool allow_any_p = false);

/// Size-only spectrum; needs 0 < p <= 31/125.
Rational eval_lambda_smallp(long size, const Rational& p);

struct BoundReport {
    Rational nu;
    Rational lambda_min;
    std::optional<Rational> gap;
    /// ν / ((1 - ν) γ) when a gap is supplied.
    std::optional<Rational> stability;
    std::string tight_set_description;
};

/// ν = -λ_min / (1 - λ_min). Throws std::domain_error unless -1 < λ_min < 0.
BoundReport hoffman_bound(const Rational& lambda_min, std::optional<Rational> gap = std::nullopt);

struct CoefficientSolution {
    Rational p;
    Rational c1, c2;
    /// Bounds on 4c3 + c4 forced by 4-forests (lower) and K4⁻ (upper).
    Rational lower, upper;
    bool triangle_consistent = false;
    [[nodiscard]] bool feasible() const { return lower <= upper; }
};

/// Solves λ_∅ = 1 and λ = -p^3/(1-p^3) on the edge and the 2-path. Accepts
/// any 0 < p < 1.
CoefficientSolution solve_coefficients(const Rational& p);

}  // namespace occ::spectra
