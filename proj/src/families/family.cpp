#include "occ/families/family.hpp"

#include "occ/util/random.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace occ::families {

namespace {

void require_order(int n) {
    if (n < 1 || n > Family::kMaxVertices) throw std::invalid_argument("Family: n must be in [1, 5]");
}

std::size_t universe_for(int n) { return std::size_t{1} << Graph::edge_count_for(n); }

// witness(G) for every mask on K_n.
const std::vector<char>& witness_table(int n, Witness witness) {
    static std::vector<char> tables[2][Family::kMaxVertices + 1];
    static std::once_flag flags[2][Family::kMaxVertices + 1];
    const int w = witness == Witness::Triangle ? 0 : 1;
    std::call_once(flags[w][n], [&] {
        auto& t = tables[w][n];
        t.resize(universe_for(n));
        for (std::uint32_t g = 0; g < t.size(); ++g) {
            const Graph graph = Graph::from_mask(n, g);
            t[g] = w == 0 ? graph::contains_triangle(graph) : graph::has_odd_cycle(graph);
        }
    });
    return tables[w][n];
}

}  // namespace

Family::Family(int n) : n_(n) {
    require_order(n);
    members_.resize(universe_for(n));
}

Family::Family(int n, Bits members) : n_(n), members_(std::move(members)) {
    require_order(n);
    if (members_.size() != universe_for(n)) throw std::invalid_argument("Family: bitmap has the wrong length");
}

Family::Family(int n, const std::vector<std::uint32_t>& members) : Family(n) {
    for (auto g : members) {
        if (g >= members_.size()) throw std::invalid_argument("Family: member outside K_n");
        members_.set(g);
    }
}

Family Family::full(int n) {
    Family f(n);
    f.members_.set();
    return f;
}

bool Family::contains(const Graph& g) const {
    if (g.n() != n_) throw std::invalid_argument("Family: graph on the wrong vertex set");
    return contains(static_cast<std::uint32_t>(g.mask()));
}

void Family::insert(const Graph& g) {
    if (g.n() != n_) throw std::invalid_argument("Family: graph on the wrong vertex set");
    insert(static_cast<std::uint32_t>(g.mask()));
}

std::vector<std::uint32_t> Family::members() const {
    std::vector<std::uint32_t> out;
    out.reserve(size());
    for (auto i = members_.find_first(); i != Bits::npos; i = members_.find_next(i)) out.push_back(static_cast<std::uint32_t>(i));
    return out;
}

long Family::potential() const {
    long total = 0;
    for (auto g : members()) total += std::popcount(g);
    return total;
}

bool Family::is_up_set() const {
    const int edges = edge_count();
    for (auto g : members()) {
        for (int e = 0; e < edges; ++e) {
            if (!contains(g | (1U << e))) return false;
        }
    }
    return true;
}

bool is_intersecting(const Family& f, Witness witness) {
    const auto& table = witness_table(f.n(), witness);
    const auto m = f.members();
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i; j < m.size(); ++j) {
            if (!table[m[i] & m[j]]) return false;
        }
    }
    return true;
}

bool is_agreeing(const Family& f, Witness witness) {
    const auto& table = witness_table(f.n(), witness);
    const auto all = static_cast<std::uint32_t>(f.universe_size() - 1);
    const auto m = f.members();
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i; j < m.size(); ++j) {
            if (!table[all & ~(m[i] ^ m[j])]) return false;
        }
    }
    return true;
}

Rational measure(const Family& f, const Rational& p) {
    const int edges = f.edge_count();
    std::vector<long> by_size(static_cast<std::size_t>(edges) + 1);
    for (auto g : f.members()) ++by_size[std::popcount(g)];
    Rational total;
    for (int k = 0; k <= edges; ++k) {
        if (by_size[k] != 0) total += Rational(by_size[k]) * p.pow(k) * (Rational(1) - p).pow(edges - k);
    }
    return total;
}

Family make_junta(int n, const Graph& t, const Graph& s) {
    if (t.n() != n || s.n() != n) throw std::invalid_argument("make_junta: graphs must live on K_n");
    if (t.size() != 3 || !graph::contains_triangle(t)) throw std::invalid_argument("make_junta: T is not a triangle");
    if (!s.subgraph_of(t)) throw std::invalid_argument("make_junta: S is not a subgraph of T");
    const auto tm = static_cast<std::uint32_t>(t.mask());
    const auto sm = static_cast<std::uint32_t>(s.mask());
    Family f(n);
    for (std::uint32_t g = 0; g < f.universe_size(); ++g) {
        if ((g & tm) == sm) f.insert(g);
    }
    return f;
}

std::vector<Family> triangle_juntas(int n) {
    std::vector<Family> out;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                const Graph t(n, {{a, b}, {a, c}, {b, c}});
                const auto tm = static_cast<std::uint32_t>(t.mask());
                for (std::uint32_t s = tm;; s = (s - 1) & tm) {
                    out.push_back(make_junta(n, t, Graph::from_mask(n, s)));
                    if (s == 0) break;
                }
            }
        }
    }
    return out;
}

Family compress(const Family& f, std::size_t edge) {
    if (edge >= static_cast<std::size_t>(f.edge_count())) throw std::invalid_argument("compress: edge out of range");
    const std::uint32_t bit = 1U << edge;
    Family out = f;
    for (auto a : f.members()) {
        if (!(a & bit) && !f.contains(a | bit)) {
            out.erase(a);
            out.insert(a | bit);
        }
    }
    return out;
}

Family monotonize(const Family& f, std::vector<long>* potentials) {
    Family current = f;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int e = 0; e < current.edge_count(); ++e) {
            Family next = compress(current, static_cast<std::size_t>(e));
            if (next == current) continue;
            current = std::move(next);
            changed = true;
            if (potentials) potentials->push_back(current.potential());
        }
    }
    return current;
}

Family random_agreeing_family(int n, Rng& rng, bool maximal) {
    Family f(n);
    const auto& odd = witness_table(n, Witness::OddCycle);
    const auto all = static_cast<std::uint32_t>(f.universe_size() - 1);
    std::vector<int> order = rng.permutation(static_cast<int>(f.universe_size()));
    std::vector<std::uint32_t> chosen;
    for (int v : order) {
        const auto g = static_cast<std::uint32_t>(v);
        const bool fits = std::all_of(chosen.begin(), chosen.end(), [&](std::uint32_t h) { return odd[all & ~(g ^ h)] != 0; });
        if (!fits) continue;
        if (!maximal && !rng.coin()) continue;
        chosen.push_back(g);
        f.insert(g);
    }
    return f;
}

Family random_family(int n, Rng& rng) {
    Family f(n);
    for (std::uint32_t g = 0; g < f.universe_size(); ++g) {
        if (rng.coin()) f.insert(g);
    }
    return f;
}

std::string to_hex(const Family& f) {
    std::ostringstream os;
    os << "n=" << f.n() << ";edges=";
    for (int e = 0; e < f.edge_count(); ++e) {
        const auto [i, j] = Graph::edge_at(f.n(), static_cast<std::size_t>(e));
        os << (e ? "," : "") << i << j;
    }
    os << ";bits=";
    for (std::size_t start = 0; start < f.universe_size(); start += 4) {
        int nibble = 0;
        for (std::size_t k = 0; k < 4; ++k) {
            nibble <<= 1;
            if (start + k < f.universe_size() && f.bits()[start + k]) nibble |= 1;
        }
        os << "0123456789abcdef"[nibble];
    }
    return os.str();
}

Family from_hex(std::string_view text) {
    auto fail = [&](const std::string& why) { return std::invalid_argument("from_hex: " + why); };
    if (!text.starts_with("n=") || text.size() < 3) throw fail("missing n= header");
    const int n = text[2] - '0';
    if (n < 1 || n > Family::kMaxVertices) throw fail("n out of range");
    Family probe(n);
    std::string expected = to_hex(probe);
    const auto cut = expected.find("bits=") + 5;
    if (text.substr(0, cut) != std::string_view(expected).substr(0, cut)) throw fail("edge-order header mismatch");
    const std::string_view hex = text.substr(cut);
    if (hex.size() != (probe.universe_size() + 3) / 4) throw fail("bitmap has the wrong length");
    Family f(n);
    for (std::size_t d = 0; d < hex.size(); ++d) {
        const char c = hex[d];
        int nibble;
        if (c >= '0' && c <= '9') {
            nibble = c - '0';
        } else if (c >= 'a' && c <= 'f') {
            nibble = c - 'a' + 10;
        } else {
            throw fail(std::string("bad hex digit '") + c + "'");
        }
        for (std::size_t k = 0; k < 4; ++k) {
            if (!(nibble & (8 >> k))) continue;
            if (4 * d + k >= f.universe_size()) throw fail("nonzero padding bits");
            f.insert(static_cast<std::uint32_t>(4 * d + k));
        }
    }
    return f;
}

}  // namespace occ::families
