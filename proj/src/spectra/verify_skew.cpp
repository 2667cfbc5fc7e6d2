#include "occ/spectra/verify.hpp"
#include "occ/util/parallel.hpp"

#include <stdexcept>

namespace occ::spectra {

using exact::Polynomial;

namespace {

RationalFunction k(long num, long den = 1) { return RationalFunction(Rational(num, den)); }

}  // namespace

RationalFunction lambda1_symbolic(const cutstats::CutDistribution& dist) {
    const auto& c = symbolic_coefficients();
    RationalFunction inner = k(1) * RationalFunction(dist[0]) + c.c1 * RationalFunction(dist[1]) +
                             c.c2 * RationalFunction(dist[2]) + c.c3 * RationalFunction(dist[3]);
    return (-c.ratio).pow(static_cast<int>(dist.edges())) * inner;
}

RationalFunction d0(int m) {
    const auto& c = symbolic_coefficients();
    return RationalFunction(exact::pow2(-m)) *
           (k(1) + RationalFunction(Rational(m)) * c.c1 + RationalFunction(exact::binomial(m, 2)) * c.c2 +
            RationalFunction(exact::binomial(m, 3)) * c.c3);
}

RationalFunction d2(int m) {
    const auto& c = symbolic_coefficients();
    return RationalFunction(exact::pow2(-m)) * (c.c2 + RationalFunction(Rational(m)) * c.c3);
}

RationalFunction d3(int m) { return RationalFunction(exact::pow2(-m)) * symbolic_coefficients().c3; }

std::vector<SkewCase> skew_cases() {
    namespace named = graph::named;
    const auto& c = symbolic_coefficients();
    const RationalFunction& r = c.ratio;
    const RationalFunction& t = c.lambda_min;
    const auto lam = [](const Graph& g) { return lambda1_symbolic(cutstats::cut_distribution_bruteforce(g)); };
    std::vector<SkewCase> cases;
    const auto ineq = [&](std::string id, std::string what, RationalFunction e, bool at_half = false) {
        cases.push_back({std::move(id), std::move(what), std::move(e), false, at_half});
    };
    const auto ident = [&](std::string id, std::string what, RationalFunction e) {
        cases.push_back({std::move(id), std::move(what), std::move(e), true, false});
    };

    ineq("coeff.c1-negative", "c1 < 0", -c.c1);
    ineq("coeff.c3-positive", "c3 > 0", c.c3);
    ineq("coeff.one-plus-c1", "1 + c1 > 0", k(1) + c.c1);
    ineq("coeff.one-plus-2c1", "1 + 2 c1 < 0, so 1 + m c1 < 0 for m >= 2", -(k(1) + k(2) * c.c1));

    ident("identity.empty", "lambda(empty) = 1", lam(named::empty(1)) - k(1));
    ident("identity.edge", "lambda(edge) = -p^3/(1-p^3)", lam(named::edge()) - t);
    ident("identity.path2", "lambda(2-path) = -p^3/(1-p^3)", lam(named::path(2)) - t);
    ident("identity.two-edges", "lambda(two disjoint edges) = -p^3/(1-p^3)", lam(named::two_disjoint_edges()) - t);
    ident("identity.triangle", "lambda(triangle) = -p^3/(1-p^3)", lam(named::triangle()) - t);

    // Odd |G|.
    ineq("odd.forest3", "3-forest: lambda > -p^3/(1-p^3)", lam(named::path(3)) - t);
    const RationalFunction half_c3 = k(1, 2) * c.c3;
    const RationalFunction c2_term = k(3, 4) * c.c2;
    ineq("odd.m2.c2-branch", "m >= 2, |G| >= 5: -r^5 (3/4 c2 + c3/2) > lambda_min", -r.pow(5) * (c2_term + half_c3) - t);
    ineq("odd.m2.zero-branch", "m >= 2, |G| >= 5: -r^5 (c3/2) > lambda_min", -r.pow(5) * half_c3 - t);
    const RationalFunction q0_m1 = k(1, 4) * (k(1) + c.c1);
    ineq("odd.m1.c2-branch", "m = 1, |G| >= 5: -r^5 ((1+c1)/4 + 3/4 c2 + c3/2) > lambda_min",
         -r.pow(5) * (q0_m1 + c2_term + half_c3) - t);
    ineq("odd.m1.zero-branch", "m = 1, |G| >= 5: -r^5 ((1+c1)/4 + c3/2) > lambda_min",
         -r.pow(5) * (q0_m1 + half_c3) - t);
    ineq("odd.c5", "C5: lambda > -p^3/(1-p^3)", lam(named::cycle(5)) - t);
    ineq("odd.k4minus", "K4-: lambda > -p^3/(1-p^3), equality at p = 1/2", lam(named::k4_minus()) - t, true);
    ineq("odd.m0.c2-branch", "m = 0, q0 <= 1/16: -r^7 (1/16 + 3/4 c2 + c3/2) > lambda_min",
         -r.pow(7) * (k(1, 16) + c2_term + half_c3) - t);
    ineq("odd.m0.zero-branch", "m = 0, q0 <= 1/16: -r^7 (1/16 + c3/2) > lambda_min",
         -r.pow(7) * (k(1, 16) + half_c3) - t);

    // Even |G|.
    ineq("even.c2-plus-2c3", "c2 + 2 c3 > 0", c.c2 + k(2) * c.c3);
    ineq("even.c1-plus-7c3", "c1 + 7 c3 > 0", c.c1 + k(7) * c.c3);
    ineq("even.d0-10", "d0(10) > 0", d0(10));
    ineq("even.forest4", "4-forest: lambda > -p^3/(1-p^3), equality at p = 1/2", lam(named::path(4)) - t, true);
    ineq("even.forest6", "6-forest: lambda > -p^3/(1-p^3)", lam(named::path(6)) - t);
    ineq("even.forest8", "8-forest: lambda > -p^3/(1-p^3)", lam(named::path(8)) - t);
    ineq("even.nonforest.zero", "non-forest, both minima zero: 0 > lambda_min", -t);
    for (int m = 0; m < 10; ++m) {
        const std::string tag = "even.nonforest.m" + std::to_string(m);
        const RationalFunction a = k(1, 4) * d0(m);
        const RationalFunction b = k(3, 4) * d2(m);
        const std::string where = "non-forest, m = " + std::to_string(m) + ": r^2 (";
        ineq(tag + ".d0", where + "d0/4) > lambda_min", r.pow(2) * a - t);
        ineq(tag + ".d2", where + "3/4 d2) > lambda_min", r.pow(2) * b - t);
        ineq(tag + ".d0-d2", where + "d0/4 + 3/4 d2) > lambda_min", r.pow(2) * (a + b) - t);
    }
    return cases;
}

const SkewCaseResult* SkewVerification::first_failure() const {
    for (const auto& c : cases)
        if (!c.passed) return &c;
    return nullptr;
}

const SkewCaseResult* SkewVerification::find(const std::string& id) const {
    for (const auto& c : cases)
        if (c.spec.id == id) return &c;
    return nullptr;
}

std::size_t SkewVerification::certificate_count() const {
    std::size_t n = 0;
    for (const auto& c : cases)
        if (c.certificate) ++n;
    return n;
}

Report SkewVerification::report() const {
    Report r;
    r.suite = "skew";
    for (const auto& c : cases) {
        auto& claim = r.add(c.spec.id, c.passed, c.spec.description);
        claim.values["expression"] = c.spec.expression.str();
        claim.values["interval"] = "[" + lo.fraction_str() + ", " + hi.fraction_str() + "]";
        if (c.certificate) {
            claim.certificates.push_back(exact::to_json(*c.certificate));
            if (c.certificate->root_bracket)
                claim.witnesses.push_back("root in (" + c.certificate->root_bracket->first.fraction_str() + ", " +
                                          c.certificate->root_bracket->second.fraction_str() + "]");
        }
    }
    return r;
}

namespace {

SkewCaseResult run_case(const SkewCase& spec, const Rational& lo, const Rational& hi, const Rational& witness) {
    SkewCaseResult out{spec, false, std::nullopt};
    if (spec.identity) {
        out.passed = spec.expression.is_zero();
        return out;
    }
    if (spec.expression.is_zero()) return out;
    auto cert = exact::certify_sign(spec.expression.sign_polynomial(), lo, hi, witness, spec.id);
    const bool lo_root = cert.lo_shift != 0;
    const bool hi_root = cert.hi_shift != 0;
    const bool endpoint_ok = !lo_root && (!hi_root || (spec.equality_at_half && hi == Rational(1, 2)));
    out.passed = cert.passed && cert.witness_sign > 0 && endpoint_ok;
    out.certificate = std::move(cert);
    return out;
}

}  // namespace

SkewVerification verify_skew_cases(const Rational& lo, const Rational& hi, int workers) {
    if (!(lo.sign() > 0 && lo < hi && hi <= Rational(1, 2)))
        throw std::domain_error("verify_skew_cases: need 0 < lo < hi <= 1/2");
    const Rational three_eighths(3, 8);
    const Rational witness = (lo <= three_eighths && three_eighths <= hi) ? three_eighths : (lo + hi) / Rational(2);
    const auto cases = skew_cases();
    SkewVerification v;
    v.lo = lo;
    v.hi = hi;
    v.cases = parallel_map<SkewCaseResult>(cases.size(), workers,
                                           [&](std::size_t i) { return run_case(cases[i], lo, hi, witness); });
    return v;
}

RationalFunction smallp_g() {
    const RationalFunction p = RationalFunction::x();
    return k(1) - p * p * (k(6) - k(4) * p + p * p) / (k(1) - p).pow(4);
}

Polynomial smallp_bracket(long size) {
    // (1 + p + p^2) - (1 + p) k + C(k, 2)
    const Rational kk(size);
    return Polynomial({Rational(1) - kk + exact::binomial(size, 2), Rational(1) - kk, Rational(1)});
}

Report verify_smallp(long max_size) {
    Report report;
    report.suite = "smallp";
    const Rational zero(0);
    const Rational quarter(1, 4);
    const Rational& tau = exact::tau();
    const RationalFunction g = smallp_g();

    report.add("g.at-zero", g(zero) == Rational(1)).value("g(0)", g(zero));
    report.add("g.at-quarter", g(quarter).is_zero()).value("g(1/4)", g(quarter));
    report.add("g.at-tau", g(tau).sign() > 0).value("g(31/125)", g(tau));

    {
        // sign g' = sign(N' D - N D'), which must be negative on (0, 1/4].
        const Polynomial& n = g.numerator();
        const Polynomial& d = g.denominator();
        const Polynomial slope = -(n.derivative() * d - n * d.derivative());
        auto cert = exact::certify_sign(slope, zero, quarter, Rational(1, 8), "g.decreasing");
        const bool ok = cert.passed && cert.witness_sign > 0 && cert.hi_shift == 0;
        auto& c = report.add("g.decreasing", ok, "g' < 0 on (0, 1/4]; g'(0) = 0 is allowed");
        c.certificates.push_back(exact::to_json(cert));
    }
    {
        auto cert = exact::certify_sign(g.sign_polynomial(), zero, tau, Rational(1, 8), "g.positive");
        auto& c = report.add("g.positive", cert.passed && cert.witness_sign > 0 && cert.lo_shift == 0 && cert.hi_shift == 0,
                             "g > 0 on [0, 31/125]");
        c.certificates.push_back(exact::to_json(cert));
    }

    // Symbolic identities of the size-only spectrum.
    const auto& sym = symbolic_coefficients();
    const RationalFunction p = RationalFunction::x();
    const RationalFunction s = p * p + p + k(1);
    const auto lambda_k = [&](long size) {
        return (-sym.ratio).pow(static_cast<int>(size)) * RationalFunction(smallp_bracket(size)) / s;
    };
    report.add("smallp.lambda0", lambda_k(0) == k(1));
    report.add("smallp.lambda123", lambda_k(1) == sym.lambda_min && lambda_k(2) == sym.lambda_min &&
                                       lambda_k(3) == sym.lambda_min);
    report.add("smallp.lambda5-formula",
               lambda_k(5) == -sym.ratio.pow(5) * (k(6) - k(4) * p + p * p) / s);

    const auto certify_positive = [&](const Polynomial& poly, const std::string& label) {
        return exact::certify_sign(poly, zero, tau, Rational(1, 8), label);
    };
    const auto good = [](const exact::SignCertificate& c) {
        return c.passed && c.witness_sign > 0 && c.lo_shift == 0 && c.hi_shift == 0;
    };
    {
        auto cert = certify_positive(smallp_bracket(5), "smallp.lambda5-negative");
        auto& c = report.add("smallp.lambda5-negative", good(cert), "B_5 > 0 on [0, 31/125], so lambda_5 < 0");
        c.certificates.push_back(exact::to_json(cert));
    }
    {
        bool ok = true;
        auto& c = report.add("smallp.even-nonnegative", true, "B_k > 0 on [0, 31/125] for even 4 <= k <= " +
                                                                  std::to_string(max_size));
        for (long size = 4; size <= max_size; size += 2) {
            auto cert = certify_positive(smallp_bracket(size), "B_" + std::to_string(size));
            if (!good(cert)) {
                ok = false;
                c.witnesses.push_back("k = " + std::to_string(size));
            }
            c.certificates.push_back(exact::to_json(cert));
        }
        c.passed = ok;
    }
    {
        bool ok = true;
        auto& c = report.add("smallp.odd-decreasing", true,
                             "B_k > 0 and (1-p)^2 B_k - p^2 B_(k+2) > 0 on [0, 31/125] for odd 5 <= k < " +
                                 std::to_string(max_size));
        const Polynomial one_minus_p_sq = Polynomial({Rational(1), Rational(-1)}).pow(2);
        const Polynomial p_sq = Polynomial::monomial(Rational(1), 2);
        for (long size = 5; size < max_size; size += 2) {
            auto pos = certify_positive(smallp_bracket(size), "B_" + std::to_string(size));
            auto dec = certify_positive(one_minus_p_sq * smallp_bracket(size) - p_sq * smallp_bracket(size + 2),
                                        "decrease_" + std::to_string(size));
            if (!good(pos) || !good(dec)) {
                ok = false;
                c.witnesses.push_back("k = " + std::to_string(size));
            }
            c.certificates.push_back(exact::to_json(pos));
            c.certificates.push_back(exact::to_json(dec));
        }
        c.passed = ok;
    }
    for (const Rational& sample : {Rational(1, 8), Rational(1, 5), tau}) {
        std::vector<Rational> lam(static_cast<std::size_t>(max_size) + 3);
        for (long size = 0; size < static_cast<long>(lam.size()); ++size) lam[size] = eval_lambda_smallp(size, sample);
        const Rational t = -sample.pow(3) / (Rational(1) - sample.pow(3));
        bool ok = lam[0] == Rational(1) && lam[1] == t && lam[2] == t && lam[3] == t && lam[5].sign() < 0;
        for (long size = 4; size <= max_size; ++size) {
            if (size % 2 == 0) ok = ok && lam[size].sign() >= 0;
            if (size % 2 == 1 && size >= 5) ok = ok && lam[size + 2].abs() < lam[size].abs();
            ok = ok && lam[size] >= lam[5];
        }
        auto& c = report.add("smallp.samples@" + sample.str(), ok, "bullets for |G| <= " + std::to_string(max_size));
        c.value("lambda5", lam[5]).value("lambda4", lam[4]);
    }
    return report;
}

}  // namespace occ::spectra
