#include "minlen/cli.hpp"

#include "minlen/errors.hpp"
#include "minlen/hydrogen.hpp"
#include "minlen/minlength.hpp"
#include "minlen/perturbation.hpp"
#include "minlen/specfun.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

namespace minlen::cli {

namespace {

using hydrogen::SLevel;
using minlength::LambShiftDataset;
using minlength::PhysicalConstants;
using perturbation::DeformationParams;

/// Raised for semantically invalid command lines that CLI11 accepts.
class UsageError : public Error {
public:
    using Error::Error;
};

struct GlobalOptions {
    std::string format = "csv";
    int precision = 12;
    std::string constants_path;
    std::string dataset_path;

    bool json() const { return format == "json"; }
    std::string num(double v) const { return format_number(v, precision); }

    PhysicalConstants constants() const {
        return constants_path.empty() ? PhysicalConstants{}
                                      : minlength::load_constants(constants_path);
    }
    LambShiftDataset dataset() const {
        return dataset_path.empty() ? LambShiftDataset::bundled()
                                    : minlength::load_dataset(dataset_path);
    }
};

/// A flat record rendered either as one CSV line or one JSON object. Values
/// are stored pre-rendered; `quoted` marks JSON strings.
struct Record {
    std::vector<std::pair<std::string, std::string>> fields;
    std::vector<bool> quoted;

    void add(std::string key, std::string value, bool is_string = false) {
        fields.emplace_back(std::move(key), std::move(value));
        quoted.push_back(is_string);
    }
};

std::string json_escape(const std::string& s) {
    std::string out;
    for (const char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out;
}

std::string render_json(const Record& r) {
    std::string out = "{";
    for (std::size_t i = 0; i < r.fields.size(); ++i) {
        if (i != 0) {
            out += ", ";
        }
        out += '"' + json_escape(r.fields[i].first) + "\": ";
        out += r.quoted[i] ? '"' + json_escape(r.fields[i].second) + '"' : r.fields[i].second;
    }
    return out + "}";
}

void emit(std::ostream& out, const GlobalOptions& g, const std::vector<Record>& records,
          bool as_array) {
    if (g.json()) {
        if (as_array) {
            out << "[";
            for (std::size_t i = 0; i < records.size(); ++i) {
                out << (i == 0 ? "\n  " : ",\n  ") << render_json(records[i]);
            }
            out << (records.empty() ? "]\n" : "\n]\n");
        } else {
            out << render_json(records.front()) << "\n";
        }
        return;
    }
    if (records.empty()) {
        return;
    }
    for (std::size_t i = 0; i < records.front().fields.size(); ++i) {
        out << (i == 0 ? "" : ",") << records.front().fields[i].first;
    }
    out << "\n";
    for (const auto& r : records) {
        for (std::size_t i = 0; i < r.fields.size(); ++i) {
            out << (i == 0 ? "" : ",") << r.fields[i].second;
        }
        out << "\n";
    }
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

// Accepts plain decimals and simple fractions such as "1/3".
double parse_real(const std::string& text) {
    const auto slash = text.find('/');
    const auto parse = [&text](std::string_view s) {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
            throw UsageError("'" + text + "' is not a number");
        }
        return v;
    };
    if (slash == std::string::npos) {
        return parse(text);
    }
    const std::string_view view = text;
    const double den = parse(view.substr(slash + 1));
    if (den == 0.0) {
        throw UsageError("'" + text + "' divides by zero");
    }
    return parse(view.substr(0, slash)) / den;
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        values.push_back(parse_real(item));
    }
    if (values.empty()) {
        throw UsageError("empty list '" + text + "'");
    }
    return values;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    int lo = 0;
    int hi = 0;
    const auto parse = [&text](std::string_view s) {
        int v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
            throw UsageError("bad level range '" + text + "'; expected N or A..B");
        }
        return v;
    };
    const std::string_view view = text;
    if (dots == std::string::npos) {
        lo = hi = parse(view);
    } else {
        lo = parse(view.substr(0, dots));
        hi = parse(view.substr(dots + 2));
    }
    if (lo < 1 || hi > hydrogen::kMaxPrincipal || lo > hi) {
        throw UsageError("level range '" + text + "' must satisfy 1 <= A <= B <= 20");
    }
    return {lo, hi};
}

struct CorrectionArgs {
    int n = 0;
    std::optional<double> eta;
    std::optional<double> xi;
    std::optional<double> beta_t;
    std::optional<double> beta_prime_t;
};

int cmd_correction(const CorrectionArgs& a, const GlobalOptions& g, std::ostream& out,
                   std::ostream& err) {
    const bool eta_style = a.eta || a.xi;
    const bool beta_style = a.beta_t || a.beta_prime_t;
    if (eta_style && beta_style) {
        throw UsageError("give either --eta/--xi or --beta-t/--beta-prime-t, not both");
    }
    if (!eta_style && !beta_style) {
        throw UsageError("give --eta and --xi, or --beta-t and --beta-prime-t");
    }
    std::optional<DeformationParams> params;
    if (eta_style) {
        if (!(a.eta && a.xi)) {
            throw UsageError("--eta and --xi must be given together");
        }
        params = minlength::EtaXi(*a.eta, *a.xi).to_params();
    } else {
        if (!(a.beta_t && a.beta_prime_t)) {
            throw UsageError("--beta-t and --beta-prime-t must be given together");
        }
        params = DeformationParams(*a.beta_t, *a.beta_prime_t);
    }
    const SLevel level(a.n);
    const auto b = perturbation::correction_ns(level, *params);
    if (b.outside_linear_regime) {
        err << "warning: zeta = " << g.num(params->zeta(level))
            << " is outside the linear regime (zeta < 1e-2)\n";
    }
    const PhysicalConstants constants = g.constants();
    Record r;
    r.add("n", std::to_string(a.n));
    r.add("beta_t", g.num(params->beta_t()));
    r.add("beta_prime_t", g.num(params->beta_prime_t()));
    r.add("p4_term", g.num(b.p4_term));
    r.add("anticommutator_term", g.num(b.anticommutator_term));
    r.add("softcore_term", g.num(b.softcore_term));
    r.add("log_term", g.num(b.log_term));
    r.add("total", g.num(b.total));
    r.add("total_khz", g.num(minlength::ceu_to_khz(b.total, constants)));
    emit(out, g, {r}, false);
    return kSuccess;
}

int cmd_sweep(int points, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
    if (points < 2) {
        throw UsageError("--points must be at least 2");
    }
    const auto data = g.dataset();
    const auto rows = minlength::sweep(data, g.constants(), points);
    if (!rows.empty() && rows.front().vacuous) {
        err << "warning: theory exceeds experiment (discrepancy "
            << g.num(minlength::discrepancy(data).khz.value)
            << " kHz); the bound is vacuous\n";
    }
    std::vector<Record> records;
    records.reserve(rows.size());
    for (const auto& row : rows) {
        Record r;
        r.add("eta", g.num(row.eta));
        r.add("xi", g.num(row.xi));
        r.add("delta_x_min_m", g.num(row.delta_x_min_m));
        records.push_back(std::move(r));
    }
    emit(out, g, records, true);
    return kSuccess;
}

struct OracleArgs {
    std::string levels = "1..5";
    std::string betas = "1e-8,1e-6";
    std::string etas = "1/3,1/2,1";
    double tol = 1e-4;
};

// Agreement demanded of the printed closed form; reported, never gating.
constexpr double kPrintedFormulaTol = 1e-10;

int cmd_oracle_check(const OracleArgs& a, const GlobalOptions& g, std::ostream& out,
                     std::ostream& err) {
    if (!(a.tol > 0.0)) {
        throw UsageError("--tol must be positive");
    }
    const auto [lo, hi] = parse_range(a.levels);
    const auto betas = parse_list(a.betas);
    const auto etas = parse_list(a.etas);
    std::vector<Record> records;
    bool all_pass = true;
    double worst = 0.0;
    for (int n = lo; n <= hi; ++n) {
        const SLevel level(n);
        for (const double beta : betas) {
            for (const double eta : etas) {
                if (!(eta >= minlength::kEtaMin && eta <= minlength::kEtaMax)) {
                    throw UsageError("eta values must lie in [1/3, 1]");
                }
                if (!(beta >= 0.0)) {
                    throw UsageError("beta values must be non-negative");
                }
                const DeformationParams params(beta, beta * (1.0 - eta) / eta);
                const double closed = perturbation::correction_ns(level, params).total;
                const double oracle = perturbation::correction_oracle(level, params);
                const double abs_dev = std::abs(closed - oracle);
                const double rel_dev = oracle == 0.0 ? abs_dev : abs_dev / std::abs(oracle);
                const bool pass = rel_dev <= a.tol;
                all_pass = all_pass && pass;
                worst = std::max(worst, rel_dev);

                Record r;
                r.add("kind", "oracle", true);
                r.add("n", std::to_string(n));
                r.add("beta_t", g.num(beta));
                r.add("eta", g.num(eta));
                r.add("closed", g.num(closed));
                r.add("reference", g.num(oracle));
                r.add("rel_dev", g.num(rel_dev));
                r.add("abs_dev", g.num(abs_dev));
                r.add("gating", "true");
                r.add("pass", bool_text(pass));
                records.push_back(std::move(r));

                const double printed = perturbation::correction_printed_formula(level, params);
                const double p_abs = std::abs(printed - closed);
                Record p;
                p.add("kind", "printed_formula", true);
                p.add("n", std::to_string(n));
                p.add("beta_t", g.num(beta));
                p.add("eta", g.num(eta));
                p.add("closed", g.num(closed));
                p.add("reference", g.num(printed));
                p.add("rel_dev", g.num(closed == 0.0 ? p_abs : p_abs / std::abs(closed)));
                p.add("abs_dev", g.num(p_abs));
                p.add("gating", "false");
                p.add("pass", bool_text(p_abs <= kPrintedFormulaTol));
                records.push_back(std::move(p));
            }
        }
    }
    emit(out, g, records, true);
    err << (all_pass ? "oracle-check: all cells pass" : "oracle-check: FAILED")
        << " (worst relative deviation " << format_number(worst, 3) << ", tolerance "
        << format_number(a.tol, 3) << ")\n";
    return all_pass ? kSuccess : kCheckFailed;
}

int cmd_specfun(const std::string& function, int order, double x, const GlobalOptions& g,
                std::ostream& out) {
    double value = 0.0;
    if (function == "bessel-y") {
        value = specfun::bessel_y(order, x);
    } else if (function == "struve-h") {
        value = specfun::struve_h(order, x);
    } else if (function == "y0-deriv") {
        value = specfun::bessel_y0_derivative(order, x);
    } else {
        throw UsageError("unknown function '" + function +
                         "'; expected bessel-y, struve-h or y0-deriv");
    }
    Record r;
    r.add("function", function, true);
    r.add("order", std::to_string(order));
    r.add("x", g.num(x));
    r.add("value", g.num(value));
    emit(out, g, {r}, false);
    return kSuccess;
}

}  // namespace

std::string format_number(double value, int precision) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    if (value == 0.0) {
        return "0";  // also folds -0
    }
    char buf[64];
    const auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, precision);
    return {buf, ec == std::errc() ? ptr : buf};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimal-length corrections to hydrogen ns levels and Lamb-shift bounds",
                 "minlen"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--precision", g.precision, "Significant digits in numeric output")
        ->check(CLI::Range(6, 17));
    app.add_option("--constants", g.constants_path, "Physical-constants key-value file");
    app.add_option("--dataset", g.dataset_path, "Lamb-shift dataset key-value file");

    CorrectionArgs corr;
    auto* correction = app.add_subcommand("correction", "First-order shift of an ns level");
    correction->add_option("--n", corr.n, "Principal quantum number")->required();
    correction->add_option("--eta", corr.eta, "Mixing parameter beta/(beta+beta')");
    correction->add_option("--xi", corr.xi, "Minimal length in Bohr radii");
    correction->add_option("--beta-t", corr.beta_t, "Dimensionless beta");
    correction->add_option("--beta-prime-t", corr.beta_prime_t, "Dimensionless beta'");

    int points = 1000;
    auto* sweep = app.add_subcommand("sweep", "Minimal-length bound over the eta domain");
    sweep->add_option("--points", points, "Number of eta grid points");

    OracleArgs oracle;
    auto* check = app.add_subcommand("oracle-check", "Closed forms against quadrature");
    check->add_option("--n", oracle.levels, "Level range, N or A..B");
    check->add_option("--beta", oracle.betas, "Comma-separated beta_t values");
    check->add_option("--eta", oracle.etas, "Comma-separated eta values (fractions allowed)");
    check->add_option("--tol", oracle.tol, "Relative tolerance per cell");

    std::string function;
    int order = 0;
    double x = 0.0;
    auto* sf = app.add_subcommand("specfun", "Evaluate a special function");
    sf->add_option("function", function, "bessel-y, struve-h or y0-deriv")->required();
    sf->add_option("--order", order, "Integer order")->required();
    sf->add_option("--x", x, "Argument")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        minlength::check_eta_domain();
        if (*correction) {
            return cmd_correction(corr, g, out, err);
        }
        if (*sweep) {
            return cmd_sweep(points, g, out, err);
        }
        if (*check) {
            return cmd_oracle_check(oracle, g, out, err);
        }
        return cmd_specfun(function, order, x, g, out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const UnsupportedError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    }
}

}  // namespace minlen::cli
