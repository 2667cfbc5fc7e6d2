#pragma once

#include "occ/exact/sturm.hpp"
#include "occ/spectra/spectrum.hpp"
#include "occ/util/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace occ::spectra {

/// r(m) = 2^-m (1 - 5m/7 - C(m,2)/7 + 3 C(m,3)/28), the q0 coefficient of
/// the even-size uniform bound.
Rational uniform_r(int m);

/// Exhaustive checks over all graphs on at most max_vertices vertices, plus
/// the constants of the case analysis.
Report verify_uniform_claims(int max_vertices = 7, int workers = 1);

/// λ^(1)_G(p) for a graph with the given cut law, as a function of p.
RationalFunction lambda1_symbolic(const cutstats::CutDistribution& dist);

/// d0(m), d2(m), d3(m) as functions of p.
RationalFunction d0(int m);
RationalFunction d2(int m);
RationalFunction d3(int m);

/// One inequality (expression > 0) or identity (expression == 0) of the
/// skew case analysis.
struct SkewCase {
    std::string id;
    std::string description;
    RationalFunction expression;
    bool identity = false;
    /// The inequality degenerates to equality at p = 1/2.
    bool equality_at_half = false;
};

std::vector<SkewCase> skew_cases();

struct SkewCaseResult {
    SkewCase spec;
    bool passed = false;
    std::optional<exact::SignCertificate> certificate;
};

struct SkewVerification {
    Rational lo, hi;
    std::vector<SkewCaseResult> cases;

    [[nodiscard]] bool ok() const { return first_failure() == nullptr; }
    [[nodiscard]] const SkewCaseResult* first_failure() const;
    [[nodiscard]] const SkewCaseResult* find(const std::string& id) const;
    [[nodiscard]] std::size_t certificate_count() const;
    [[nodiscard]] Report report() const;
};

/// Certifies every case on [lo, hi]. Any 0 < lo < hi <= 1/2 is accepted;
/// the validated range is [31/125, 1/2]. All cases are evaluated and the
/// first failure is reported.
SkewVerification verify_skew_cases(const Rational& lo, const Rational& hi, int workers = 1);

/// g(p) = 1 - p^2 (6 - 4p + p^2) / (1 - p)^4.
RationalFunction smallp_g();
/// Bracket of the size-only spectrum: λ_k = (-p/(1-p))^k B_k / (1 + p + p^2).
exact::Polynomial smallp_bracket(long k);

Report verify_smallp(long max_size = 100);

}  // namespace occ::spectra
