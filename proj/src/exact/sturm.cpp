#include "occ/exact/sturm.hpp"

#include <stdexcept>

namespace occ::exact {

Polynomial square_free_part(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("square_free_part: zero polynomial");
    if (p.degree() == 0) return Polynomial::constant(1);
    const Polynomial g = gcd(p, p.derivative());
    return Polynomial::divmod(p, g).first.monic();
}

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("sturm_chain: zero polynomial");
    std::vector<Polynomial> chain;
    chain.push_back(square_free_part(p));
    if (chain.back().degree() == 0) return chain;
    chain.push_back(chain.back().derivative());
    while (chain.back().degree() > 0) {
        auto rem = Polynomial::divmod(chain[chain.size() - 2], chain.back()).second;
        if (rem.is_zero()) break;
        chain.push_back(-rem);
    }
    return chain;
}

int sign_variations(const std::vector<Polynomial>& chain, const Rational& x) {
    int variations = 0;
    int last = 0;
    for (const auto& q : chain) {
        const int s = q(x).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

int count_roots(const std::vector<Polynomial>& chain, const Rational& a, const Rational& b) {
    if (!(a < b)) throw std::invalid_argument("count_roots: need a < b");
    return sign_variations(chain, a) - sign_variations(chain, b);
}

int count_roots(const Polynomial& p, const Rational& a, const Rational& b) {
    return count_roots(sturm_chain(p), a, b);
}

namespace {

constexpr int kMaxShift = 64;

// Smallest k >= 1 with the shifted point inside the interval half, not a
// root, and no root between it and the original endpoint.
int clear_endpoint(const std::vector<Polynomial>& chain, const Rational& a, const Rational& b, bool at_lo,
                   Rational& moved) {
    const Rational half_width = (b - a) / Rational(2);
    for (int k = 1; k <= kMaxShift; ++k) {
        const Rational step = pow2(-k);
        if (step > half_width) continue;
        const Rational x = at_lo ? a + step : b - step;
        if (chain.front()(x).is_zero()) continue;
        const int sliver = at_lo ? count_roots(chain, a, x) : count_roots(chain, x, b) - 1;
        if (sliver == 0) {
            moved = x;
            return k;
        }
    }
    throw std::runtime_error("certify_sign: endpoint root cannot be cleared within 2^-64");
}

}  // namespace

SignCertificate certify_sign(const Polynomial& p, const Rational& a, const Rational& b, const Rational& witness,
                             std::string label) {
    if (!(a < b)) throw std::invalid_argument("certify_sign: need a < b");
    if (witness < a || witness > b) throw std::invalid_argument("certify_sign: witness outside interval");
    const auto chain = sturm_chain(p);
    SignCertificate cert;
    cert.label = std::move(label);
    cert.polynomial = p;
    cert.lo = a;
    cert.hi = b;
    cert.lo_eff = a;
    cert.hi_eff = b;
    cert.chain_length = static_cast<int>(chain.size());
    cert.witness = witness;
    cert.witness_sign = p(witness).sign();

    const bool lo_root = chain.front()(a).is_zero();
    const bool hi_root = chain.front()(b).is_zero();
    if (lo_root) cert.lo_shift = clear_endpoint(chain, a, b, true, cert.lo_eff);
    if (hi_root) cert.hi_shift = clear_endpoint(chain, a, b, false, cert.hi_eff);

    cert.interior_roots = count_roots(chain, a, b) - (hi_root ? 1 : 0);
    cert.passed = cert.interior_roots == 0 && cert.witness_sign != 0;
    if (cert.interior_roots == 0) return cert;

    // Narrow down to one interior root.
    Rational l = a;
    Rational r = hi_root ? cert.hi_eff : b;
    const Rational target_width = (b - a) / Rational(1 << 20);
    while (true) {
        const int here = count_roots(chain, l, r);
        if (here == 1 && r - l <= target_width) break;
        const Rational mid = (l + r) / Rational(2);
        if (count_roots(chain, l, mid) > 0) {
            r = mid;
        } else {
            l = mid;
        }
    }
    cert.root_bracket = std::make_pair(l, r);
    // A root sitting on r is compared against a clear point just past it.
    Rational right = r;
    if (p(r).is_zero()) {
        Rational step = r - l;
        while (count_roots(chain, r, r + step) != 0 || p(r + step).is_zero()) step /= Rational(2);
        right = r + step;
    }
    cert.sign_change = p(l).sign() * p(right).sign() < 0;
    return cert;
}

nlohmann::json to_json(const SignCertificate& cert) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : cert.polynomial.coefficients()) coeffs.push_back(c.fraction_str());
    nlohmann::json j{
        {"label", cert.label},
        {"coefficients", coeffs},
        {"degree", cert.polynomial.degree()},
        {"interval", {cert.lo.fraction_str(), cert.hi.fraction_str()}},
        {"effective_interval", {cert.lo_eff.fraction_str(), cert.hi_eff.fraction_str()}},
        {"endpoint_shifts", {cert.lo_shift, cert.hi_shift}},
        {"chain_length", cert.chain_length},
        {"root_count", cert.interior_roots},
        {"witness", cert.witness.fraction_str()},
        {"sign", cert.witness_sign},
        {"status", cert.passed ? "pass" : "fail"},
    };
    if (cert.root_bracket) {
        j["root_bracket"] = {cert.root_bracket->first.fraction_str(), cert.root_bracket->second.fraction_str()};
        j["sign_change"] = cert.sign_change;
    }
    return j;
}

}  // namespace occ::exact
