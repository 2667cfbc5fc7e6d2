#pragma once

#include "occ/exact/polynomial.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace occ::exact {

/// P / gcd(P, P'), made monic.
Polynomial square_free_part(const Polynomial& p);

/// Sturm sequence of the square-free part of p: P0, P0', then negated
/// remainders down to a nonzero constant.
std::vector<Polynomial> sturm_chain(const Polynomial& p);

/// Sign changes along the chain at x, zeros skipped.
int sign_variations(const std::vector<Polynomial>& chain, const Rational& x);

/// Distinct real roots in (a, b]. Exact even when a or b is a root,
/// since vanishing chain entries are skipped.
int count_roots(const Polynomial& p, const Rational& a, const Rational& b);
int count_roots(const std::vector<Polynomial>& chain, const Rational& a, const Rational& b);

struct SignCertificate {
    std::string label;
    Polynomial polynomial;
    Rational lo;
    Rational hi;
    /// Endpoints after pulling root endpoints inward by 2^-k.
    Rational lo_eff;
    Rational hi_eff;
    int lo_shift = 0;  ///< k, or 0 when lo was not a root
    int hi_shift = 0;
    int chain_length = 0;
    /// Distinct roots in the open interval (lo, hi).
    int interior_roots = 0;
    Rational witness;
    int witness_sign = 0;
    bool passed = false;
    /// Set on failure: a subinterval (l, r] holding exactly one root.
    std::optional<std::pair<Rational, Rational>> root_bracket;
    bool sign_change = false;

    /// +1 / -1 for a passing certificate, 0 otherwise.
    [[nodiscard]] int certified_sign() const { return passed ? witness_sign : 0; }
};

/// Certifies that p has constant sign on the open interval (a, b) and
/// on any closed endpoint that is not a root. Throws std::invalid_argument
/// unless a < b and a <= witness <= b, and std::runtime_error when an
/// endpoint root cannot be cleared with k <= 64.
SignCertificate certify_sign(const Polynomial& p, const Rational& a, const Rational& b, const Rational& witness,
                             std::string label = {});

nlohmann::json to_json(const SignCertificate& cert);

}  // namespace occ::exact
