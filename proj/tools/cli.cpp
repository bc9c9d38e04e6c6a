#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "qbracket/asymptotics.hpp"
#include "qbracket/chowla_selberg.hpp"
#include "qbracket/complex_io.hpp"
#include "qbracket/errors.hpp"
#include "qbracket/modular.hpp"
#include "qbracket/qseries.hpp"
#include "qbracket/transformations.hpp"

namespace qbracket::cli {
namespace {

using nlohmann::json;

struct Options {
    long a = 0;
    long k = 1;
    long D = -4;
    std::string t;
    std::string z;
    std::string parts;
    std::string truncation = "fixed";
    int n_max = 25;
    std::string golden;

    // raw config flags
    int order = 0;
    double tol = 0;
    double y_floor = 0;
    std::string format;
    std::string output;
};

struct Flags {
    CLI::Option* a = nullptr;
    CLI::Option* k = nullptr;
    CLI::Option* t = nullptr;
    CLI::Option* z = nullptr;
    CLI::Option* order = nullptr;
    CLI::Option* tol = nullptr;
    CLI::Option* y_floor = nullptr;
    CLI::Option* format = nullptr;
    CLI::Option* output = nullptr;
};

// What a command produced: the rendered text and whether it passed.
struct Outcome {
    std::string text;
    bool pass = true;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "text") return Format::text;
    throw UsageError("unknown format '" + s + "' (expected json, csv or text)");
}

RunConfig resolve_config(const Options& o, const Flags& f) {
    RunConfig cfg;
    if (const char* path = std::getenv("QBRACKET_CONFIG"); path && *path) {
        std::ifstream in(path);
        if (!in) throw UsageError(std::string("cannot read QBRACKET_CONFIG file ") + path);
        json j;
        try {
            j = json::parse(in);
        } catch (const json::exception& e) {
            throw UsageError(std::string("malformed QBRACKET_CONFIG: ") + e.what());
        }
        if (j.contains("order")) cfg.order = j.at("order").get<int>();
        if (j.contains("tol")) cfg.tol = j.at("tol").get<double>();
        if (j.contains("y_floor")) cfg.y_floor = j.at("y_floor").get<double>();
        if (j.contains("format")) cfg.format = parse_format(j.at("format").get<std::string>());
        if (j.contains("output")) cfg.output_path = j.at("output").get<std::string>();
    }
    if (f.order->count()) cfg.order = o.order;
    if (f.tol->count()) cfg.tol = o.tol;
    if (f.y_floor->count()) cfg.y_floor = o.y_floor;
    if (f.format->count()) cfg.format = parse_format(o.format);
    if (f.output->count()) cfg.output_path = o.output;
    if (cfg.order && *cfg.order < 1) throw UsageError("order must be at least 1");
    if (!(cfg.tol > 0)) throw UsageError("tol must be positive");
    if (!(cfg.y_floor > 0)) throw UsageError("y-floor must be positive");
    return cfg;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        if (!cur.empty()) out.push_back(cur);
    }
    return out;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    for (const auto& item : split(s, ',')) {
        std::size_t used = 0;
        const int v = std::stoi(item, &used);
        if (used != item.size()) throw UsageError("not an integer: " + item);
        out.push_back(v);
    }
    return out;
}

std::vector<double> parse_reals(const std::string& s) {
    std::vector<double> out;
    for (const auto& item : split(s, ',')) out.push_back(parse_complex(item).real());
    return out;
}

std::vector<Complex> parse_points(const std::string& s) {
    std::vector<Complex> out;
    for (const auto& item : split(s, ',')) out.push_back(parse_complex(item));
    return out;
}

int int_t(const Options& o, int fallback) {
    if (o.t.empty()) return fallback;
    const auto v = parse_ints(o.t);
    if (v.size() != 1) throw UsageError("--t takes a single integer here");
    if (v[0] < 1) throw UsageError("t must be a positive integer");
    return v[0];
}

std::size_t order_or(const RunConfig& cfg, int fallback) {
    return static_cast<std::size_t>(cfg.order.value_or(fallback));
}

std::vector<Complex> points_or(const Options& o, std::vector<Complex> fallback) {
    return o.z.empty() ? fallback : parse_points(o.z);
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw UsageError(msg);
}

// ---- rendering ------------------------------------------------------------

std::string render(const VerificationReport& r, Format f) {
    if (f == Format::json) return to_json(r).dump(2) + "\n";
    return to_text(r);
}

std::string render(const std::vector<TransformReport>& rs, Format f) {
    if (f == Format::json) {
        if (rs.size() == 1) return to_json(rs.front()).dump(2) + "\n";
        json arr = json::array();
        bool pass = true;
        for (const auto& r : rs) {
            arr.push_back(to_json(r));
            pass = pass && r.pass;
        }
        return json{{"reports", arr}, {"pass", pass}}.dump(2) + "\n";
    }
    if (f == Format::csv) {
        std::string out = "identity,z,lhs,rhs,residual\n";
        for (const auto& r : rs) {
            for (const auto& p : r.points) {
                out += r.identity + "," + format_complex(p.z, 17) + "," + format_complex(p.lhs, 17) + "," +
                       format_complex(p.rhs, 17) + "," + format_real(p.residual, 6) + "\n";
            }
        }
        return out;
    }
    std::string out;
    for (const auto& r : rs) out += to_text(r);
    return out;
}

bool all_pass(const std::vector<TransformReport>& rs) {
    return std::all_of(rs.begin(), rs.end(), [](const auto& r) { return r.pass; });
}

// ---- verify ---------------------------------------------------------------

Outcome cmd_verify(const std::string& suite, const Options& o, const Flags& f, const RunConfig& cfg) {
    const Format fmt = cfg.format.value_or(Format::json);
    if (suite == "theorem1") {
        require(f.a->count() > 0, "theorem1 needs --a");
        const auto r = verify_theorem1(o.a, int_t(o, 1), order_or(cfg, 50));
        return {render(r, fmt), r.pass};
    }
    if (suite == "hanji") {
        const auto r = verify_hanji(o.k, int_t(o, 1), order_or(cfg, 16));
        return {render(r, fmt), r.pass};
    }
    if (suite == "nekrasov-okounkov") {
        const auto r = verify_nekrasov_okounkov(order_or(cfg, 20));
        return {render(r, fmt), r.pass};
    }
    if (suite == "s2k") {
        require(o.k >= 1, "k must be a positive integer");
        const auto r = verify_S2k_bracket(static_cast<int>(o.k), order_or(cfg, 40));
        return {render(r, fmt), r.pass};
    }
    if (suite == "theorem3") {
        require(o.k >= 1, "k must be a positive integer");
        const int k = static_cast<int>(o.k), t = int_t(o, 1);
        const auto pts = points_or(o, default_grid());
        std::vector<TransformReport> rs{verify_theorem3_shift(k, t, pts, cfg.tol),
                                        verify_theorem3_inversion(k, t, pts, cfg.tol)};
        return {render(rs, fmt), all_pass(rs)};
    }
    if (suite == "corollary4") {
        require(o.k >= 1, "k must be a positive integer");
        const int k = static_cast<int>(o.k);
        auto grid = default_grid();
        grid.insert(grid.begin(), Complex(0, 2));
        const auto pts = points_or(o, grid);
        std::vector<TransformReport> rs{verify_corollary4_shift(k, pts, cfg.tol),
                                        verify_corollary4_inversion(k, pts, cfg.tol)};
        return {render(rs, fmt), all_pass(rs)};
    }
    if (suite == "berndt") {
        require(o.k >= 1, "k must be a positive integer");
        std::vector<TransformReport> rs{verify_berndt(static_cast<int>(o.k), points_or(o, default_grid()), cfg.tol)};
        return {render(rs, fmt), all_pass(rs)};
    }
    if (suite == "theorem2") {
        const int t = int_t(o, 1);
        const int k = f.k->count() ? static_cast<int>(o.k) : 2;
        require(k >= 2, "theorem2 needs k >= 2 for the negative-weight form");
        const std::vector<Complex> lap_pts = points_or(o, {{0.3, 1.0}, {0.1, 0.8}, {-0.2, 1.5}});
        std::vector<TransformReport> rs;
        if (t == 1) {
            rs.push_back(verify_maass_E0_inversion(points_or(o, {{1.0 / 3, 1.0}, {0.2, 0.9}}), cfg.tol));
            rs.push_back(verify_maass_E_neg_inversion(k, points_or(o, {{0.2, 2.0 / 3}}), cfg.tol));
        }
        // finite differences carry O(h^2) error, hence the fixed looser tolerances
        rs.push_back(verify_maass_E0_laplacian(t, lap_pts, 1e-4));
        rs.push_back(verify_maass_E_neg_laplacian(k, t, points_or(o, {{0.0, 1.0}}), 1e-3));
        rs.push_back(verify_maass_periodicity(k, t, lap_pts, cfg.tol));
        return {render(rs, fmt), all_pass(rs)};
    }
    if (suite == "theorem6-cocycle") {
        const long a = f.a->count() ? o.a : -1;
        std::vector<TransformReport> rs{
            verify_cocycle(a, points_or(o, {{0, 1}, {1, 1}, {0, 0.5}, {1.0 / 3, 2.0 / 3}}), std::max(cfg.tol, 1e-6))};
        return {render(rs, fmt), all_pass(rs)};
    }
    throw UsageError("unknown suite '" + suite + "'");
}

// ---- eval -----------------------------------------------------------------

std::string render_values(const std::string& target, const std::vector<Complex>& zs,
                          const std::vector<Complex>& values, Format fmt) {
    if (fmt == Format::json) {
        json arr = json::array();
        for (std::size_t i = 0; i < zs.size(); ++i) {
            arr.push_back({{"z", format_complex(zs[i], 17)}, {"value", format_complex(values[i], 17)}});
        }
        return json{{"target", target}, {"values", arr}}.dump(2) + "\n";
    }
    std::string out = fmt == Format::csv ? "z,value\n" : "";
    for (std::size_t i = 0; i < zs.size(); ++i) {
        if (fmt == Format::csv) out += format_complex(zs[i]) + ",";
        out += format_complex(values[i]) + "\n";
    }
    return out;
}

Outcome cmd_eval(const std::string& target, const Options& o, const Flags& f, const RunConfig& cfg) {
    const Format fmt = cfg.format.value_or(Format::text);
    if (target == "fhook") {
        require(f.a->count() > 0, "fhook needs --a");
        const Partition p(parse_ints(o.parts));
        const Rational v = f_hook(p, o.a, int_t(o, 1));
        if (fmt == Format::json) {
            return {json{{"partition", p.to_string()}, {"a", o.a}, {"t", int_t(o, 1)}, {"value", to_string(v)}}.dump(2) +
                    "\n"};
        }
        return {to_string(v) + "\n"};
    }
    if (target == "qbracket-coeffs") {
        require(f.a->count() > 0, "qbracket-coeffs needs --a");
        const QSeries s = hook_bracket(o.a, int_t(o, 1), order_or(cfg, 20));
        if (fmt == Format::json) return {to_json(s).dump(2) + "\n"};
        std::string out = fmt == Format::csv ? "n,coeff\n" : "";
        for (std::size_t n = 0; n <= s.order(); ++n) {
            out += std::to_string(n) + (fmt == Format::csv ? "," : " ") + to_string(s[n]) + "\n";
        }
        return {out};
    }
    if (target == "omega") {
        const DiscriminantData d = discriminant_data(o.D);
        if (fmt == Format::json) return {to_json(d).dump(2) + "\n"};
        return {format_real(d.omega) + "\n"};
    }

    require(!o.z.empty(), target + " needs --z");
    const auto zs = parse_points(o.z);
    std::function<Complex(Complex)> fn;
    const int k = static_cast<int>(o.k);
    const double yf = cfg.y_floor;
    if (target == "eichler") {
        require(f.a->count() > 0, "eichler needs --a");
        fn = [&](Complex z) { return eichler_value(o.a, z, yf); };
    } else if (target == "eta") {
        fn = [&](Complex z) { return eta_value(z, yf); };
    } else if (target == "maass-e0") {
        const int t = int_t(o, 1);
        fn = [&, t](Complex z) { return Complex(maass_E0(t, z, yf)); };
    } else if (target == "maass-eneg") {
        const int t = int_t(o, 1);
        fn = [&, t](Complex z) { return maass_E_neg(k, t, z, yf); };
    } else if (target == "psi") {
        fn = [&](Complex z) { return psi_value(k, z); };
    } else if (target == "hstar") {
        fn = [&](Complex z) { return h_star_value(k, z, yf); };
    } else {
        throw UsageError("unknown eval target '" + target + "'");
    }
    std::vector<Complex> values;
    for (Complex z : zs) values.push_back(fn(z));
    return {render_values(target, zs, values, fmt)};
}

// ---- table ----------------------------------------------------------------

Outcome cmd_table(const std::string& kind, const Options& o, const Flags& f, const RunConfig& cfg) {
    const Format fmt = cfg.format.value_or(Format::csv);
    if (kind == "asymptotic") {
        require(f.k->count() > 0, "asymptotic table needs --k");
        require(o.k >= 3 && o.k % 2 == 1, "k must be an odd integer >= 3");
        const auto ts = o.t.empty() ? std::vector<double>{2, 1.5, 1, 0.5, 0.1} : parse_reals(o.t);
        TruncationRule rule;
        if (o.truncation == "optimal") {
            rule = TruncationRule::optimal();
        } else if (o.truncation == "fixed") {
            rule = TruncationRule::fixed_at(o.n_max);
        } else {
            throw UsageError("truncation must be fixed or optimal");
        }
        const auto rows = asymptotic_table(static_cast<int>(o.k), ts, rule);
        if (fmt == Format::json) return {to_json(rows).dump(2) + "\n"};
        if (fmt == Format::csv) return {to_csv(rows)};
        std::ostringstream os;
        char buf[160];
        std::snprintf(buf, sizeof buf, "%-8s %-22s %-22s %-14s\n", "t", "G^_k(t)", "G~_k(t)", "ratio");
        os << buf;
        for (const auto& r : rows) {
            std::snprintf(buf, sizeof buf, "%-8g %-22.10f %-22.10f %-14.10f\n", r.t, r.g_hat, r.g_tilde, r.ratio);
            os << buf;
        }
        return {os.str()};
    }
    if (kind == "theorem1-coeffs") {
        require(f.a->count() > 0, "theorem1-coeffs needs --a");
        const int t = int_t(o, 1);
        const std::size_t order = order_or(cfg, 20);
        const QSeries lhs = hook_bracket(o.a, t, order);
        const QSeries rhs = theorem1_rhs(o.a, t, order);
        bool pass = lhs == rhs;
        if (fmt == Format::json) {
            json rows = json::array();
            for (std::size_t n = 0; n <= order; ++n) {
                rows.push_back({{"n", n}, {"bracket", to_string(lhs[n])}, {"expected", to_string(rhs[n])}});
            }
            return {json{{"a", o.a}, {"t", t}, {"rows", rows}, {"match", pass}}.dump(2) + "\n", pass};
        }
        std::string out = "n,bracket,expected\n";
        for (std::size_t n = 0; n <= order; ++n) {
            out += std::to_string(n) + "," + to_string(lhs[n]) + "," + to_string(rhs[n]) + "\n";
        }
        return {out, pass};
    }
    throw UsageError("unknown table kind '" + kind + "'");
}

// ---- a1 -------------------------------------------------------------------

Outcome cmd_a1(const Options& o, const RunConfig& cfg) {
    const Format fmt = cfg.format.value_or(Format::json);
    const auto ts = o.t.empty() ? std::vector<double>{0.1} : parse_reals(o.t);
    std::vector<A1Comparison> rows;
    for (double t : ts) rows.push_back(a1_expansion(t));
    if (fmt == Format::json) {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(to_json(r));
        return {json{{"identity", "weight-one-expansion"}, {"asserted", false}, {"rows", arr}}.dump(2) + "\n"};
    }
    std::string out = "t,bernoulli_value,oracle_value,classical_value,bernoulli_discrepancy,classical_discrepancy\n";
    for (const auto& r : rows) {
        out += format_real(r.t) + "," + format_real(r.bernoulli_value, 15) + "," + format_real(r.oracle_value, 15) + "," +
               format_real(r.classical_value, 15) + "," + format_real(r.bernoulli_discrepancy, 6) + "," +
               format_real(r.classical_discrepancy, 6) + "\n";
    }
    return {out};
}

// ---- plumbing -------------------------------------------------------------

void add_common(CLI::App* sub, Options& o, Flags& f) {
    f.a = sub->add_option("--a", o.a, "hook exponent a");
    f.k = sub->add_option("--k", o.k, "weight parameter k");
    f.t = sub->add_option("--t", o.t, "t (integer), or a comma list of reals for tables");
    f.z = sub->add_option("--z", o.z, "point(s) in the upper half-plane, e.g. 0.25+1.5i or 2i,1+i");
    sub->add_option("--parts", o.parts, "partition parts, e.g. 4,3,1");
    sub->add_option("--D", o.D, "negative fundamental discriminant");
    sub->add_option("--truncation", o.truncation, "fixed or optimal")->check(CLI::IsMember({"fixed", "optimal"}));
    sub->add_option("--n-max", o.n_max, "last term kept by the fixed truncation rule");
    f.order = sub->add_option("--order", o.order, "truncation order in q");
    f.tol = sub->add_option("--tol", o.tol, "residual tolerance");
    f.y_floor = sub->add_option("--y-floor", o.y_floor, "smallest Im z accepted for q-series evaluation");
    f.format = sub->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    f.output = sub->add_option("--output", o.output, "write the report to this file");
    sub->add_option("--golden", o.golden, "compare the output with this stored file");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact and numerical checks for hook-length q-brackets", "qbracket"};
    app.require_subcommand(1);

    Options o;
    std::string target;
    // each subcommand has its own option set; only the parsed one is used
    std::vector<Flags> flags(4);

    auto* verify = app.add_subcommand("verify", "run an identity check");
    verify->add_option("suite", target, "suite")
        ->required()
        ->check(CLI::IsMember({"theorem1", "hanji", "nekrasov-okounkov", "s2k", "theorem3", "corollary4", "berndt",
                               "theorem2", "theorem6-cocycle"}));
    add_common(verify, o, flags[0]);

    auto* eval = app.add_subcommand("eval", "evaluate a function");
    eval->add_option("target", target, "target")
        ->required()
        ->check(CLI::IsMember(
            {"fhook", "qbracket-coeffs", "eichler", "eta", "maass-e0", "maass-eneg", "psi", "hstar", "omega"}));
    add_common(eval, o, flags[1]);

    auto* table = app.add_subcommand("table", "print a table");
    table->add_option("kind", target, "kind")->required()->check(CLI::IsMember({"asymptotic", "theorem1-coeffs"}));
    add_common(table, o, flags[2]);

    auto* a1 = app.add_subcommand("a1", "compare the weight-one expansion with the divisor sum");
    add_common(a1, o, flags[3]);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        const std::size_t idx = verify->parsed() ? 0 : eval->parsed() ? 1 : table->parsed() ? 2 : 3;
        const RunConfig cfg = resolve_config(o, flags[idx]);
        Outcome result;
        if (idx == 0) result = cmd_verify(target, o, flags[0], cfg);
        if (idx == 1) result = cmd_eval(target, o, flags[1], cfg);
        if (idx == 2) result = cmd_table(target, o, flags[2], cfg);
        if (idx == 3) result = cmd_a1(o, cfg);
        if (cfg.output_path) {
            std::ofstream(*cfg.output_path) << result.text;
        } else {
            out << result.text;
        }
        if (!o.golden.empty()) {
            if (read_file(o.golden) != result.text) {
                err << "output differs from golden file " << o.golden << "\n";
                return kExitFail;
            }
        }
        return result.pass ? kExitPass : kExitFail;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace qbracket::cli
