#pragma once

#include "occ/schur/vector_set.hpp"
#include "occ/spectra/spectrum.hpp"
#include "occ/util/report.hpp"

#include <string>
#include <vector>

namespace occ::schur {

/// Linear-isomorphism invariants. For sets of at most five vectors they
/// separate the GL(n,2) orbits.
struct LinearType {
    int size = 0;
    int rank = 0;
    int m = 0;
    /// profile[k] = number of k-subsets summing to zero.
    std::vector<int> profile;
    friend auto operator<=>(const LinearType&, const LinearType&) = default;
};

LinearType linear_type(const VectorSet& s);

/// "empty", "singleton", "pair", "schur-triple", "independent-3",
/// "independent-4", "square" ({a,b,c,a+b+c}), "triple-plus-one",
/// "k4-minus" ({x,y,z,x+y,x+z}), "c5" ({x,y,z,w,x+y+z+w}), "fano"
/// (all seven vectors of a 3-space), or "other".
std::string type_name(const VectorSet& s);

/// Orbit id of every subset of Z_2^n \ {0} under GL(n,2), n <= 4, by
/// union-find over transvection and swap generators.
std::vector<int> gl_orbit_ids(int n);

/// Hyperplane statistics in the shape used by the graph spectra: q_forest4
/// is Pr[S ∩ A_w is an independent 4-set], q_c4 is Pr[S ∩ A_w is a square].
spectra::GraphStats set_stats(const VectorSet& s);

Rational eval_lambda1_oldc(const VectorSet& s);
Rational eval_lambda2_oldc(const VectorSet& s);
/// q_0 - 5/7 q_1 - 1/7 q_2 + 3/28 q_3, so λ1 = (-1)^|S| f(S).
Rational oldc_f(const VectorSet& s);
Rational eval_lambda1_oldc_skew(const VectorSet& s, const Rational& p);

/// Odd-size subset of distinct vectors summing to zero, by subset-sum DP.
bool has_odd_dependency_subset(const VectorSet& s);
/// No w with S ⊆ A_w.
bool has_odd_dependency_hyperplane(const VectorSet& s);
bool has_odd_dependency(const VectorSet& s);

bool is_odd_ld_intersecting(const std::vector<VectorSet>& family);
bool is_odd_ld_agreeing(const std::vector<VectorSet>& family);

struct FamilySearch {
    int n = 0;
    std::size_t subsets = 0;
    std::size_t families_checked = 0;
    std::size_t max_size = 0;
    Rational max_measure;
    std::size_t maximum_families = 0;
};

/// Exhausts every family of subsets of Z_2^n \ {0} (n <= 2).
FamilySearch max_agreeing_family_bruteforce(int n);

/// Exhaustive checks over all subsets of Z_2^n \ {0} (n <= 4), plus the lift
/// and small-family checks.
Report verify_oldc_claims(int n, int workers = 1);

}  // namespace occ::schur
