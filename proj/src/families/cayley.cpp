#include "occ/families/cayley.hpp"

#include "occ/hypercube/cube.hpp"
#include "occ/spectra/spectrum.hpp"
#include "occ/util/parallel.hpp"
#include "occ/util/random.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace occ::families {

namespace {

// Combined eigenvalue of every subgraph of K_n, indexed by mask.
const std::vector<Rational>& combined_spectrum(int n) {
    static std::vector<Rational> tables[Family::kMaxVertices + 1];
    static std::once_flag flags[Family::kMaxVertices + 1];
    std::call_once(flags[n], [n] {
        auto& t = tables[n];
        t.resize(std::size_t{1} << Graph::edge_count_for(n));
        for (std::uint32_t r = 0; r < t.size(); ++r) t[r] = spectra::eval_lambda_combined(Graph::from_mask(n, r));
    });
    return tables[n];
}

struct Branch {
    std::size_t best = 0;
    std::vector<std::vector<int>> sets;
    long nodes = 0;
};

class Search {
public:
    explicit Search(std::vector<std::uint64_t> adj) : adj_(std::move(adj)) {}

    Branch run_from(int v) const {
        Branch out;
        std::vector<int> current{v};
        std::uint64_t later = v == 63 ? 0 : ~std::uint64_t{0} << (v + 1);
        if (adj_.size() < 64) later &= (std::uint64_t{1} << adj_.size()) - 1;
        expand(current, later & ~adj_[v], out);
        return out;
    }

private:
    int cover_bound(std::uint64_t p) const {
        int cliques = 0;
        while (p) {
            const int v = std::countr_zero(p);
            std::uint64_t clique = std::uint64_t{1} << v;
            std::uint64_t cand = p & adj_[v];
            while (cand) {
                const int u = std::countr_zero(cand);
                clique |= std::uint64_t{1} << u;
                cand &= adj_[u];
            }
            p &= ~clique;
            ++cliques;
        }
        return cliques;
    }

    void expand(std::vector<int>& current, std::uint64_t p, Branch& out) const {
        ++out.nodes;
        if (p == 0) {
            if (current.size() > out.best) {
                out.best = current.size();
                out.sets.clear();
            }
            if (current.size() == out.best) out.sets.push_back(current);
            return;
        }
        if (current.size() + static_cast<std::size_t>(cover_bound(p)) < out.best) return;
        const int v = std::countr_zero(p);
        const std::uint64_t bit = std::uint64_t{1} << v;
        current.push_back(v);
        expand(current, p & ~adj_[v] & ~bit, out);
        current.pop_back();
        expand(current, p & ~bit, out);
    }

    std::vector<std::uint64_t> adj_;
};

void spectral_bounds(int n, CayleyResult& result) {
    const auto& lambda = combined_spectrum(n);
    Rational lambda_min = lambda.size() > 1 ? lambda[1] : Rational(0);
    for (std::size_t r = 1; r < lambda.size(); ++r) lambda_min = std::min(lambda_min, lambda[r]);
    result.spectral_lambda_min = lambda_min;
    result.spectral_nu = spectra::hoffman_bound(lambda_min).nu;
    const Rational cap = result.spectral_nu * Rational(static_cast<long>(result.vertices));
    result.upper_bound = static_cast<std::size_t>(mpz_class(cap.numerator() / cap.denominator()).get_ui());
    for (const auto& junta : triangle_juntas(n)) {
        if (is_agreeing(junta, Witness::OddCycle)) result.lower_bound = std::max(result.lower_bound, junta.size());
    }
}

}  // namespace

std::vector<std::uint32_t> cayley_generators(int n) {
    if (n < 1 || n > Family::kMaxVertices) throw std::invalid_argument("cayley_generators: n must be in [1, 5]");
    const auto all = static_cast<std::uint32_t>((std::size_t{1} << Graph::edge_count_for(n)) - 1);
    std::vector<std::uint32_t> gens;
    for (std::uint32_t b = 0; b <= all; ++b) {
        if (graph::is_bipartite(Graph::from_mask(n, b))) gens.push_back(all & ~b);
    }
    std::sort(gens.begin(), gens.end());
    return gens;
}

CayleyResult cayley_independence_number(int n, const CayleyOptions& options) {
    if (n != 4 && n != 5) throw std::invalid_argument("cayley_independence_number: n must be 4 (exact) or 5 (bounds)");
    CayleyResult result;
    result.n = n;
    result.vertices = std::size_t{1} << Graph::edge_count_for(n);
    const auto gens = cayley_generators(n);
    result.degree = gens.size();
    spectral_bounds(n, result);
    if (n == 5) return result;

    // Position k in the search holds vertex order[k].
    std::vector<int> order(result.vertices);
    std::iota(order.begin(), order.end(), 0);
    if (options.shuffle_seed) {
        Rng rng(*options.shuffle_seed);
        std::shuffle(order.begin(), order.end(), rng.engine());
    }
    // Γ is regular, so ordering by degree leaves this order as it is.
    std::vector<int> position(result.vertices);
    for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = static_cast<int>(k);
    std::vector<std::uint64_t> adj(result.vertices);
    for (std::size_t k = 0; k < order.size(); ++k) {
        for (auto g : gens) adj[k] |= std::uint64_t{1} << position[static_cast<std::uint32_t>(order[k]) ^ g];
    }

    const Search search(adj);
    const auto branches = parallel_map<Branch>(result.vertices, options.workers,
                                               [&](std::size_t v) { return search.run_from(static_cast<int>(v)); });
    for (const auto& b : branches) {
        result.nodes += b.nodes;
        result.alpha = std::max(result.alpha, b.best);
    }
    for (const auto& b : branches) {
        if (b.best != result.alpha) continue;
        for (const auto& set : b.sets) {
            Family f(n);
            for (int k : set) f.insert(static_cast<std::uint32_t>(order[k]));
            result.maximum_sets.push_back(std::move(f));
        }
    }
    std::sort(result.maximum_sets.begin(), result.maximum_sets.end());
    result.exact = true;
    return result;
}

HoffmanCheck hoffman_check(const Family& f) {
    const auto& lambda = combined_spectrum(f.n());
    const Rational half(1, 2);
    const auto cube = hypercube::FunctionOnCube::indicator(f.edge_count(), half, [&](std::uint32_t g) { return f.contains(g); });
    HoffmanCheck out;
    out.mu = measure(f, half);
    out.form = hypercube::quadratic_form(cube, [&](std::uint32_t r) { return lambda[r]; });
    Rational lambda_min = lambda.size() > 1 ? lambda[1] : Rational(0);
    for (std::size_t r = 1; r < lambda.size(); ++r) lambda_min = std::min(lambda_min, lambda[r]);
    out.nu = spectra::hoffman_bound(lambda_min).nu;
    out.agreeing = is_agreeing(f, Witness::OddCycle);
    const Rational floor_value = out.mu * out.mu + lambda_min * (out.mu - out.mu * out.mu);
    out.ok = out.form >= floor_value && (!out.agreeing || (out.form.is_zero() && out.mu <= out.nu));
    return out;
}

}  // namespace occ::families
