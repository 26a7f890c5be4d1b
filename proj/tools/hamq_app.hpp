#pragma once

// Command dispatch for the hamq CLI. Kept in a header so the test suite can
// drive it in-process with captured streams.

#include "hamq/bounds.hpp"
#include "hamq/colouring.hpp"
#include "hamq/json.hpp"
#include "hamq/krawtchouk.hpp"
#include "hamq/products.hpp"
#include "hamq/spectra.hpp"
#include "hamq/table.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace hamq::cli {

enum ExitCode : int { kOk = 0, kCertificationFailed = 1, kUsage = 2 };

inline constexpr std::uint64_t kDefaultSeed = 20240601;
inline constexpr std::int64_t kTableCap = 64;

enum class Format { table, csv, json };

namespace detail {

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string sci(double v) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(3) << v;
    return os.str();
}

inline void print_fields(std::ostream& out, Format fmt, const std::vector<std::pair<std::string, std::string>>& kv) {
    if (fmt == Format::csv) {
        out << "field,value\n";
        for (const auto& [k, v] : kv) out << k << ',' << v << '\n';
        return;
    }
    std::size_t w = 0;
    for (const auto& [k, v] : kv) w = std::max(w, k.size());
    for (const auto& [k, v] : kv) out << std::left << std::setw(static_cast<int>(w)) << k << "  " << v << '\n';
}

inline std::string verdict_text(const ChiQVerdict& v) {
    switch (v.kind) {
        case VerdictKind::exact: return "exact " + v.upper->str();
        case VerdictKind::interval: return "interval [" + v.lower_int().str() + ", " + v.upper->str() + "]";
        case VerdictKind::lower_only: return "lower bound " + v.lower_int().str();
    }
    return "?";
}

inline std::string verdict_text(const ProductVerdict& v) {
    switch (v.kind) {
        case VerdictKind::exact: return "exact " + v.upper->str();
        case VerdictKind::interval: return "interval [" + hamq::ceil(v.lower).str() + ", " + v.upper->str() + "]";
        case VerdictKind::lower_only: return "lower bound " + hamq::ceil(v.lower).str();
    }
    return "?";
}

inline std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

inline int cmd_kraw(std::ostream& out, Format fmt, std::int64_t n, std::int64_t q, std::int64_t l, std::int64_t x) {
    const ExactInt v = kraw_eval(KrawtchoukParams{n, q, l}, x);
    switch (fmt) {
        case Format::table: out << v.str() << '\n'; break;
        case Format::csv: out << "n,q,l,x,value\n" << n << ',' << q << ',' << l << ',' << x << ',' << v.str() << '\n'; break;
        case Format::json:
            out << json{{"command", "kraw"}, {"n", n}, {"q", q}, {"l", l}, {"x", x}, {"value", v.str()}}.dump(2) << '\n';
            break;
    }
    return kOk;
}

inline int cmd_table(std::ostream& out, Format fmt, std::int64_t n) {
    if (n < 1 || n > kTableCap) {
        throw std::invalid_argument("table: n must be in [1, " + std::to_string(kTableCap) + "]");
    }
    const auto rows = eigenvalue_table(n);
    switch (fmt) {
        case Format::table: out << format_table(n, rows); break;
        case Format::csv:
            out << 'r';
            for (std::int64_t l = 0; l <= n; ++l) out << ",l=" << l;
            out << '\n';
            for (std::size_t r = 0; r < rows.size(); ++r) {
                out << r;
                for (const auto& v : rows[r]) out << ',' << v.str();
                out << '\n';
            }
            break;
        case Format::json: {
            json j{{"command", "table"}, {"n", n}, {"rows", json::array()}};
            for (const auto& row : rows) {
                json jr = json::array();
                for (const auto& v : row) jr.push_back(v.str());
                j["rows"].push_back(jr);
            }
            out << j.dump(2) << '\n';
            break;
        }
    }
    return kOk;
}

inline int cmd_bounds(std::ostream& out, Format fmt, std::int64_t n, std::int64_t l) {
    const HammingGraphSpec spec{n, l};
    const auto rep = bound_report(spec);
    const auto verdict = chi_q_verdict(spec);
    if (fmt == Format::json) {
        out << json{{"command", "bounds"}, {"report", rep}, {"verdict", verdict}}.dump(2) << '\n';
        return kOk;
    }
    std::vector<std::pair<std::string, std::string>> kv{
        {"n", std::to_string(n)},
        {"l", std::to_string(l)},
        {"vertex_count", rep.vertex_count.str()},
        {"degree", rep.degree.str()},
        {"edge_count", rep.edge_count.str()},
        {"lambda_1", rep.lambda_1.str()},
        {"lambda_n", rep.lambda_n.str()},
        {"theta_1", rep.theta_1.str()},
        {"delta_1", rep.delta_1.str()},
        {"delta_n", rep.delta_n.str()},
        {"n_plus", rep.n_plus.str()},
        {"n_minus", rep.n_minus.str()},
        {"s_plus", rep.s_plus.str()},
        {"s_minus", rep.s_minus.str()},
    };
    for (const auto& t : rep.terms) kv.emplace_back("term_" + t.name, t.value ? to_string(*t.value) : "n/a");
    kv.emplace_back("classical_lower", to_string(rep.classical_lower));
    kv.emplace_back("quantum_lower", rep.quantum_lower ? to_string(*rep.quantum_lower) : "n/a");
    kv.emplace_back("verdict", verdict_text(verdict));
    kv.emplace_back("provenance", fmt == Format::csv ? "\"" + verdict.provenance + "\"" : verdict.provenance);
    print_fields(out, fmt, kv);
    return kOk;
}

struct CertifyArgs {
    std::string family;
    std::int64_t n = 0;
    std::optional<std::int64_t> l;
    std::string strategy = "auto";
    std::optional<double> tol;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t samples = 16;
    std::uint64_t random_pairs = 256;
};

inline int cmd_certify(std::ostream& out, Format fmt, const CertifyArgs& a) {
    const auto family = colouring_family_from_string(a.family);
    const auto params = ColouringParams::make(family, a.n, a.l);
    EdgeCheckOptions opts;
    opts.seed = a.seed;
    opts.random_pairs = a.random_pairs;
    if (a.strategy == "auto") {
        opts.strategy = (a.n <= 8) ? PairStrategy::exhaustive : PairStrategy::translation;
    } else {
        opts.strategy = pair_strategy_from_string(a.strategy);
    }
    const auto cert = certify_colouring(family, a.n, params.l, a.tol, opts, a.samples);
    std::optional<ExactInt> colours;
    if (cert.passed()) colours = chi_q_upper_from_colouring(cert);

    switch (fmt) {
        case Format::json:
            out << json{{"command", "certify"},
                        {"params", params},
                        {"complete_system", cert.complete_system()},
                        {"edge_orthogonality", cert.edges()},
                        {"passed", cert.passed()},
                        {"colours", colours ? json(colours->str()) : json(nullptr)},
                        {"colours_provenance", "number of projectors per vertex of a certified colouring"}}
                       .dump(2)
                << '\n';
            break;
        case Format::csv:
            out << "check,family,n,l,d,strategy,tolerance,hermitian,idempotent,mutual_orthogonality,completeness,"
                   "edge_orthogonality,edge_scalar_max,vertices_checked,pairs_checked,passed\n";
            for (const auto* r : {&cert.complete_system(), &cert.edges()}) {
                out << r->check << ',' << to_string(family) << ',' << params.n << ',' << params.l << ',' << params.d
                    << ',' << r->strategy << ',' << sci(r->tolerance) << ',' << sci(r->hermitian) << ','
                    << sci(r->idempotent) << ',' << sci(r->mutual_orthogonality) << ',' << sci(r->completeness) << ','
                    << sci(r->edge_orthogonality) << ',' << r->edge_scalar_max << ',' << r->vertices_checked << ','
                    << r->pairs_checked << ',' << (r->passed ? "true" : "false") << '\n';
            }
            break;
        case Format::table: {
            const auto& c = cert.complete_system();
            const auto& e = cert.edges();
            print_fields(out, fmt,
                         {{"family", to_string(family)},
                          {"n", std::to_string(params.n)},
                          {"l", std::to_string(params.l)},
                          {"d", std::to_string(params.d)},
                          {"strategy", e.strategy},
                          {"tolerance", sci(e.tolerance)},
                          {"hermitian", sci(c.hermitian)},
                          {"idempotent", sci(c.idempotent)},
                          {"mutual_orthogonality", sci(c.mutual_orthogonality)},
                          {"completeness", sci(c.completeness)},
                          {"edge_orthogonality", sci(e.edge_orthogonality)},
                          {"edge_scalar_max", std::to_string(e.edge_scalar_max)},
                          {"vertices_checked", std::to_string(c.vertices_checked)},
                          {"edges_checked", std::to_string(e.pairs_checked)},
                          {"result", cert.passed() ? "pass" : "FAIL"},
                          {"colours", colours ? colours->str() : "n/a"}});
            break;
        }
    }
    return cert.passed() ? kOk : kCertificationFailed;
}

inline int cmd_product(std::ostream& out, Format fmt, std::int64_t n1, std::int64_t l1, std::int64_t n2,
                       std::int64_t l2) {
    const HammingGraphSpec a{n1, l1};
    const HammingGraphSpec b{n2, l2};
    const auto pg = product_spectrum(spectrum_closed_form(a), spectrum_closed_form(b));
    const auto v = product_chi_q(a, b);
    if (fmt == Format::json) {
        out << json{{"command", "product"}, {"product", pg}, {"verdict", v}}.dump(2) << '\n';
        return kOk;
    }
    print_fields(out, fmt,
                 {{"left", "H(" + std::to_string(n1) + "," + std::to_string(l1) + ")"},
                  {"right", "H(" + std::to_string(n2) + "," + std::to_string(l2) + ")"},
                  {"vertex_count", pg.total_multiplicity().str()},
                  {"distinct_eigenvalues", std::to_string(pg.spectrum.size())},
                  {"lambda_max", pg.lambda_max.str()},
                  {"lambda_min", pg.lambda_min.str()},
                  {"left_ratio", to_string(v.left_ratio)},
                  {"right_ratio", to_string(v.right_ratio)},
                  {"verdict", verdict_text(v)},
                  {"tags", join(v.tags, fmt == Format::csv ? ";" : " ")},
                  {"provenance", fmt == Format::csv ? "\"" + v.provenance + "\"" : v.provenance}});
    return kOk;
}

}  // namespace detail

/// Runs the CLI; args excludes the program name. Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Krawtchouk spectra, spectral bounds and quantum colourings of binary Hamming graphs", "hamq"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "table";
    std::uint64_t seed = kDefaultSeed;
    std::optional<double> tol;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
    app.add_option("--seed", seed, "Seed for randomized strategies");
    app.add_option("--tol", tol, "Absolute residual tolerance (default 1e-9*d)")->check(CLI::PositiveNumber);

    std::int64_t n = 0, q = 2, l = 0, x = 0;
    auto* kraw = app.add_subcommand("kraw", "Evaluate K_l^{n,q}(x)");
    kraw->add_option("--n", n, "Length")->required();
    kraw->add_option("--q", q, "Alphabet size");
    kraw->add_option("--l", l, "Degree")->required();
    kraw->add_option("--x", x, "Argument")->required();

    std::int64_t table_n = 0;
    auto* table = app.add_subcommand("table", "Eigenvalue table rho_l^n(r) for all r, l");
    table->add_option("--n", table_n, "Length")->required();

    std::int64_t bn = 0, bl = 0;
    auto* bounds = app.add_subcommand("bounds", "Spectral bounds and chi_q verdict for H(n,l)");
    bounds->add_option("--n", bn, "Length")->required();
    bounds->add_option("--l", bl, "Distance")->required();

    detail::CertifyArgs ca;
    std::int64_t cert_l = 0;
    auto* certify = app.add_subcommand("certify", "Certify a projector colouring");
    certify->add_option("--family", ca.family, "hadamard | 4t-1 | half-plus")
        ->required()
        ->check(CLI::IsMember({"hadamard", "4t-1", "family-4t-minus-1", "half-plus"}));
    certify->add_option("--n", ca.n, "Length")->required();
    auto* cert_l_opt = certify->add_option("--l", cert_l, "Distance (required for half-plus)");
    certify->add_option("--strategy", ca.strategy, "Edge enumeration")
        ->check(CLI::IsMember({"auto", "translation", "random", "exhaustive"}));
    certify->add_option("--samples", ca.samples, "Random vertices for the complete-system check");
    certify->add_option("--pairs", ca.random_pairs, "Edges for the random strategy");

    std::vector<std::int64_t> prod;
    auto* product = app.add_subcommand("product", "Tensor product H(n1,l1) x H(n2,l2)");
    product->add_option("specs", prod, "n1 l1 n2 l2")->required()->expected(4);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kUsage;
    }

    const Format fmt = format == "csv" ? Format::csv : (format == "json" ? Format::json : Format::table);
    try {
        if (*kraw) return detail::cmd_kraw(out, fmt, n, q, l, x);
        if (*table) return detail::cmd_table(out, fmt, table_n);
        if (*bounds) return detail::cmd_bounds(out, fmt, bn, bl);
        if (*certify) {
            if (cert_l_opt->count() > 0) ca.l = cert_l;
            ca.seed = seed;
            ca.tol = tol;
            return detail::cmd_certify(out, fmt, ca);
        }
        if (*product) return detail::cmd_product(out, fmt, prod[0], prod[1], prod[2], prod[3]);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace hamq::cli
