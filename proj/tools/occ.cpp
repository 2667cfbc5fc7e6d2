// occ: command-line driver for the verification suites.

#include "occ/cutstats/cutstats.hpp"
#include "occ/families/cayley.hpp"
#include "occ/families/verify.hpp"
#include "occ/graph/graph6.hpp"
#include "occ/hypercube/verify.hpp"
#include "occ/schur/oldc.hpp"
#include "occ/spectra/spectrum.hpp"
#include "occ/spectra/verify.hpp"
#include "occ/util/parallel.hpp"
#include "occ/util/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace {

using occ::exact::Rational;
using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

enum class Format { Text, Csv, Json };

struct Global {
    std::string out;
    std::uint64_t seed = 1;
    int workers = 0;
    Format format = Format::Text;
    std::string command_line;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& text, const char* flag) {
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void write_json_file(const Global& g, const json& j) {
    if (g.out.empty()) return;
    std::ofstream f(g.out);
    if (!f) throw std::runtime_error("cannot write " + g.out);
    f << j.dump(2) << '\n';
}

json campaign_json(const Global& g, const occ::Report& report, double seconds) {
    json j = occ::to_json(report);
    j["command"] = g.command_line;
    j["seed"] = g.seed;
    j["version"] = kVersion;
    j["runtime_ms"] = static_cast<long>(seconds * 1000);
    return j;
}

int emit_report(const Global& g, const occ::Report& report, double seconds) {
    const json j = campaign_json(g, report, seconds);
    write_json_file(g, j);
    switch (g.format) {
    case Format::Json:
        std::cout << j.dump(2) << '\n';
        break;
    case Format::Csv:
        std::cout << "id,status,values\n";
        for (const auto& c : report.claims) {
            std::string values;
            for (const auto& [k, v] : c.values) values += (values.empty() ? "" : ";") + k + "=" + v;
            std::cout << csv_escape(c.id) << ',' << (c.passed ? "pass" : "fail") << ',' << csv_escape(values) << '\n';
        }
        break;
    case Format::Text:
        for (const auto& c : report.claims) {
            std::cout << (c.passed ? "PASS " : "FAIL ") << c.id;
            for (const auto& [k, v] : c.values) std::cout << ' ' << k << '=' << v;
            for (const auto& w : c.witnesses) std::cout << " [" << w << ']';
            std::cout << '\n';
        }
        std::cout << report.suite << ": " << (report.ok() ? "PASS" : "FAIL") << " (" << report.claims.size() << " claims)\n";
        break;
    }
    if (const auto* bad = report.first_failure()) {
        std::cerr << "first failing claim: " << bad->id << '\n';
        return 1;
    }
    return 0;
}

// cutstat

struct Row {
    std::string name;
    std::string graph6;
    occ::cutstats::CutDistribution dist;
};

int emit_rows(const Global& g, const std::vector<Row>& rows, std::size_t columns) {
    json arr = json::array();
    for (const auto& r : rows) {
        json q = json::array();
        for (std::size_t k = 0; k < columns; ++k) q.push_back(r.dist[k].fraction_str());
        arr.push_back({{"name", r.name}, {"graph6", r.graph6}, {"q", q}});
    }
    write_json_file(g, json{{"command", g.command_line}, {"version", kVersion}, {"rows", arr}});
    if (g.format == Format::Json) {
        std::cout << arr.dump(2) << '\n';
        return 0;
    }
    const char sep = g.format == Format::Csv ? ',' : '\t';
    std::cout << "graph" << sep << "graph6";
    for (std::size_t k = 0; k < columns; ++k) std::cout << sep << 'q' << k;
    std::cout << '\n';
    for (const auto& r : rows) {
        std::cout << r.name << sep << r.graph6;
        for (std::size_t k = 0; k < columns; ++k) std::cout << sep << r.dist[k];
        std::cout << '\n';
    }
    return 0;
}

int cmd_cutstat(const Global& g, bool builtin, const std::string& input) {
    std::vector<Row> rows;
    if (builtin) {
        for (const auto& r : occ::cutstats::builtin_table()) rows.push_back({r.name, occ::graph::write_graph6(r.graph), r.dist});
        return emit_rows(g, rows, 5);
    }
    std::ifstream file;
    if (!input.empty() && input != "-") {
        file.open(input);
        if (!file) throw UsageError("cannot open " + input);
    }
    std::istream& in = file.is_open() ? static_cast<std::istream&>(file) : std::cin;
    std::string line;
    int line_no = 0;
    int errors = 0;
    std::size_t columns = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            const auto graph = occ::graph::parse_graph6(line);
            auto dist = occ::cutstats::cut_distribution_blocks(graph);
            columns = std::max(columns, dist.q().size());
            rows.push_back({graph.str(), line, std::move(dist)});
        } catch (const occ::graph::Graph6Error& e) {
            ++errors;
            std::cerr << "line " << line_no << ": " << e.what() << '\n';
        }
    }
    emit_rows(g, rows, columns);
    return errors == 0 ? 0 : 1;
}

// families

int cmd_max_independent(const Global& g, int n, bool shuffle) {
    occ::families::CayleyOptions options;
    options.workers = g.workers;
    if (shuffle) options.shuffle_seed = g.seed;
    const auto r = occ::families::cayley_independence_number(n, options);
    json sets = json::array();
    for (const auto& f : r.maximum_sets) sets.push_back(occ::families::to_hex(f));
    json j{{"command", g.command_line}, {"version", kVersion}, {"n", n}, {"vertices", r.vertices}, {"degree", r.degree},
           {"exact", r.exact}, {"lower_bound", r.lower_bound}, {"upper_bound", r.upper_bound},
           {"spectral_nu", r.spectral_nu.fraction_str()}, {"spectral_lambda_min", r.spectral_lambda_min.fraction_str()}};
    if (r.exact) {
        j["alpha"] = r.alpha;
        j["maximum_sets"] = sets;
        j["nodes"] = r.nodes;
    }
    write_json_file(g, j);
    if (g.format == Format::Json) {
        std::cout << j.dump(2) << '\n';
    } else if (g.format == Format::Csv) {
        std::cout << "n,vertices,degree,exact,alpha,lower_bound,upper_bound,maximum_sets\n"
                  << n << ',' << r.vertices << ',' << r.degree << ',' << r.exact << ',' << (r.exact ? std::to_string(r.alpha) : "")
                  << ',' << r.lower_bound << ',' << r.upper_bound << ',' << r.maximum_sets.size() << '\n';
    } else {
        std::cout << "n = " << n << ": " << r.vertices << " vertices, degree " << r.degree << '\n';
        if (r.exact) {
            std::cout << "alpha = " << r.alpha << " (" << r.nodes << " search nodes)\n";
            std::cout << "maximum independent sets: " << r.maximum_sets.size() << '\n';
            for (const auto& s : sets) std::cout << "  " << s.get<std::string>() << '\n';
        } else {
            std::cout << "bounds: " << r.lower_bound << " <= alpha <= " << r.upper_bound << " (spectral nu = " << r.spectral_nu << ")\n";
        }
    }
    return 0;
}

// schur

std::vector<std::uint32_t> parse_vectors(const std::string& text) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(item, &used, 16);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(static_cast<std::uint32_t>(v));
        } catch (const std::exception&) {
            throw UsageError("--set: '" + item + "' is not a hex vector");
        }
    }
    return out;
}

int cmd_schur(const Global& g, int n, const std::string& set_text) {
    occ::schur::VectorSet s(n);
    try {
        s = occ::schur::VectorSet::from_vectors(n, parse_vectors(set_text));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto d = occ::schur::rank_decompose(s);
    const auto dist = occ::schur::hyperplane_cut_distribution(s);
    json q = json::array();
    for (const auto& x : dist.q()) q.push_back(x.fraction_str());
    const json j{{"command", g.command_line}, {"version", kVersion}, {"set", s.str()}, {"type", occ::schur::type_name(s)},
                 {"rank", d.rank}, {"I", d.independent.str()}, {"J", d.dependent.str()}, {"m", d.m}, {"q", q},
                 {"odd_dependency", occ::schur::has_odd_dependency(s)},
                 {"lambda1", occ::schur::eval_lambda1_oldc(s).fraction_str()},
                 {"lambda2", occ::schur::eval_lambda2_oldc(s).fraction_str()}};
    write_json_file(g, j);
    if (g.format == Format::Json) {
        std::cout << j.dump(2) << '\n';
    } else if (g.format == Format::Csv) {
        std::cout << "set,type,rank,m,lambda1,lambda2\n"
                  << csv_escape(s.str()) << ',' << j["type"].get<std::string>() << ',' << d.rank << ',' << d.m << ','
                  << j["lambda1"].get<std::string>() << ',' << j["lambda2"].get<std::string>() << '\n';
    } else {
        std::cout << "S = " << s.str() << " (" << j["type"].get<std::string>() << ")\n"
                  << "rank " << d.rank << ", I = " << d.independent.str() << ", J = " << d.dependent.str() << ", m = " << d.m << '\n'
                  << "Q_S(X) = " << dist.generating_function().str() << '\n'
                  << "odd dependency: " << (j["odd_dependency"].get<bool>() ? "yes" : "no") << '\n'
                  << "lambda1 = " << occ::schur::eval_lambda1_oldc(s) << ", lambda2 = " << occ::schur::eval_lambda2_oldc(s) << '\n';
    }
    return 0;
}

// hoffman

int cmd_hoffman(const Global& g, const std::string& lambda_text, const std::string& p_text, const std::string& gap_text) {
    if (lambda_text.empty() == p_text.empty()) throw UsageError("hoffman: give exactly one of --lambda-min and --p");
    Rational lambda_min;
    if (!p_text.empty()) {
        const Rational p = parse_rational(p_text, "--p");
        if (p.sign() <= 0 || p >= Rational(1)) throw UsageError("--p must lie in (0, 1)");
        lambda_min = -p.pow(3) / (Rational(1) - p.pow(3));
    } else {
        lambda_min = parse_rational(lambda_text, "--lambda-min");
    }
    std::optional<Rational> gap;
    if (!gap_text.empty()) gap = parse_rational(gap_text, "--gap");
    occ::spectra::BoundReport b;
    try {
        b = occ::spectra::hoffman_bound(lambda_min, gap);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    json j{{"command", g.command_line}, {"version", kVersion}, {"lambda_min", b.lambda_min.fraction_str()}, {"nu", b.nu.fraction_str()}};
    if (b.gap) j["gap"] = b.gap->fraction_str();
    if (b.stability) j["stability"] = b.stability->fraction_str();
    write_json_file(g, j);
    if (g.format == Format::Json) {
        std::cout << j.dump(2) << '\n';
    } else if (g.format == Format::Csv) {
        std::cout << "lambda_min,nu\n" << b.lambda_min << ',' << b.nu << '\n';
    } else {
        std::cout << "lambda_min = " << b.lambda_min << "\nnu = -lambda_min/(1 - lambda_min) = " << b.nu << '\n';
        if (b.stability) std::cout << "stability constant = " << *b.stability << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of spectral bounds for odd-cycle-agreeing graph families"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kVersion);

    Global g;
    for (int i = 0; i < argc; ++i) g.command_line += (i ? " " : "") + std::string(argv[i]);
    g.workers = occ::default_workers();
    std::map<std::string, Format> formats{{"text", Format::Text}, {"csv", Format::Csv}, {"json", Format::Json}};
    app.add_option("--out", g.out, "Write a JSON report to this path");
    app.add_option("--seed", g.seed, "Seed for randomized checks")->capture_default_str();
    app.add_option("--workers", g.workers, "Worker threads (default: OCC_WORKERS or hardware concurrency)")->check(CLI::PositiveNumber);
    app.add_option("--format", g.format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    auto* cutstat = app.add_subcommand("cutstat", "Cut distributions of graph6 input or the built-in table");
    bool builtin = false;
    std::string input;
    cutstat->add_flag("--builtin", builtin, "Print the classical table");
    cutstat->add_option("--input", input, "graph6 file, one graph per line (default: stdin)");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    std::string plo = "31/125", phi = "1/2";
    int max_vertices = 7, schur_n = 4, samples = 1000;
    long max_size = 100;
    verify->add_option("suite", suite, "uniform | skew | smallp | schur | families | hypercube")
        ->required()
        ->check(CLI::IsMember({"uniform", "skew", "smallp", "schur", "families", "hypercube"}));
    verify->add_option("--plo", plo, "Skew interval lower end")->capture_default_str();
    verify->add_option("--phi", phi, "Skew interval upper end")->capture_default_str();
    verify->add_option("--max-vertices", max_vertices, "Uniform suite enumeration size")->check(CLI::Range(1, 7))->capture_default_str();
    verify->add_option("--max-size", max_size, "Small-p suite largest |G|")->check(CLI::Range(1L, 1000L))->capture_default_str();
    verify->add_option("--n", schur_n, "Schur suite dimension")->check(CLI::Range(1, 4))->capture_default_str();
    verify->add_option("--samples", samples, "Families suite random families")->check(CLI::Range(1, 100000))->capture_default_str();

    auto* families = app.add_subcommand("families", "Families of subgraphs of K_n");
    families->require_subcommand(1);
    families->fallthrough();
    auto* mis = families->add_subcommand("max-independent", "Independence number of the Cayley graph Γ");
    int mis_n = 4;
    bool shuffle = false;
    mis->add_option("--n", mis_n, "4 (exact) or 5 (bounds)")->check(CLI::IsMember({4, 5}))->capture_default_str();
    mis->add_flag("--shuffle", shuffle, "Search in an order shuffled by --seed");

    auto* schur = app.add_subcommand("schur", "Analyse a set of nonzero vectors of Z_2^n");
    int set_n = 4;
    std::string set_text;
    schur->add_option("--n", set_n, "Dimension")->check(CLI::Range(1, 5))->capture_default_str();
    schur->add_option("--set", set_text, "Comma-separated hex vectors, e.g. 1,2,3")->required();

    auto* hoffman = app.add_subcommand("hoffman", "Hoffman bound nu = -lambda_min/(1 - lambda_min)");
    std::string lambda_text, p_text, gap_text;
    hoffman->add_option("--lambda-min", lambda_text, "Smallest eigenvalue");
    hoffman->add_option("--p", p_text, "Use lambda_min = -p^3/(1-p^3)");
    hoffman->add_option("--gap", gap_text, "Spectral gap for the stability constant");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const auto start = std::chrono::steady_clock::now();
        auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
        if (*cutstat) return cmd_cutstat(g, builtin, input);
        if (*mis) return cmd_max_independent(g, mis_n, shuffle);
        if (*schur) return cmd_schur(g, set_n, set_text);
        if (*hoffman) return cmd_hoffman(g, lambda_text, p_text, gap_text);
        if (*verify) {
            occ::Report report;
            if (suite == "uniform") {
                report = occ::spectra::verify_uniform_claims(max_vertices, g.workers);
            } else if (suite == "skew") {
                const Rational lo = parse_rational(plo, "--plo");
                const Rational hi = parse_rational(phi, "--phi");
                if (!(lo.sign() > 0 && lo < hi && hi <= Rational(1, 2))) throw UsageError("skew: need 0 < plo < phi <= 1/2");
                const auto v = occ::spectra::verify_skew_cases(lo, hi, g.workers);
                report = v.report();
                auto& summary = report.add("certificates", v.ok(), "Sturm certificates issued on the interval");
                summary.values["count"] = std::to_string(v.certificate_count());
            } else if (suite == "smallp") {
                report = occ::spectra::verify_smallp(max_size);
            } else if (suite == "schur") {
                report = occ::schur::verify_oldc_claims(schur_n, g.workers);
            } else if (suite == "families") {
                report = occ::families::verify_families(g.seed, samples, g.workers);
            } else {
                report = occ::hypercube::verify_tensor_operators(g.seed);
            }
            return emit_report(g, report, elapsed());
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
