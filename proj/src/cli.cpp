#include "tconv/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tconv/bessel_basis.hpp"
#include "tconv/boros_moll.hpp"
#include "tconv/quadrature.hpp"
#include "tconv/rational.hpp"
#include "tconv/record.hpp"
#include "tconv/student.hpp"
#include "tconv/verify.hpp"

namespace tconv::cli {
namespace {

using nlohmann::json;

constexpr const char* kEnvBudget = "STUDENT_QUARTIC_MAX_EVALS";

/// Reads the evaluation-budget override from the environment.  Returns the
/// budget when set and valid; empty optional when unset; throws
/// std::invalid_argument when set to anything but a positive integer.
std::optional<std::size_t> env_budget_override() {
    const char* raw = std::getenv(kEnvBudget);
    if (raw == nullptr) return std::nullopt;
    const std::string text(raw);
    const bool all_digits =
        !text.empty() && std::all_of(text.begin(), text.end(), [](unsigned char c) {
            return std::isdigit(c) != 0;
        });
    if (!all_digits) {
        throw std::invalid_argument(std::string(kEnvBudget) +
                                    " must be a positive integer, got \"" + text + "\"");
    }
    errno = 0;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(text.c_str(), &end, 10);
    if (errno != 0 || value == 0) {
        throw std::invalid_argument(std::string(kEnvBudget) +
                                    " must be a positive integer, got \"" + text + "\"");
    }
    return static_cast<std::size_t>(value);
}

QuadratureConfig make_config() {
    QuadratureConfig cfg;
    if (auto budget = env_budget_override()) cfg.max_evaluations = *budget;
    return cfg;
}

std::optional<double> parse_decimal(const std::string& text) {
    try {
        std::size_t consumed = 0;
        const double value = std::stod(text, &consumed);
        if (consumed != text.size() || !std::isfinite(value)) return std::nullopt;
        return value;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::string sci(double v) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(3) << v;
    return os.str();
}

void emit_json(const json& j, std::ostream& out) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------- quartic --

int quartic_command(unsigned long m, const std::string& a_text, bool verify,
                    const std::string& format, std::ostream& out, std::ostream& err) {
    std::optional<QuarticIntegralSpec> spec;
    if (auto exact = parse_rational(a_text)) {
        spec.emplace(static_cast<unsigned>(m), *exact);
    } else if (auto approx = parse_decimal(a_text)) {
        spec.emplace(static_cast<unsigned>(m), *approx);
    } else {
        err << "error: --a expects a rational \"P/Q\", an integer, or a decimal; got \""
            << a_text << "\"\n";
        return kExitUsageError;
    }

    const double closed = closed_form_value(*spec);

    OutputRecord rec;
    rec.command = "quartic";
    rec.inputs["m"] = m;
    if (spec->a_exact) {
        rec.inputs["a"] = spec->a_exact->to_string();
    } else {
        rec.inputs["a"] = spec->a;
    }
    rec.outputs["value"] = closed;

    std::optional<QuadratureResult> oracle;
    if (verify) {
        const QuadratureConfig cfg = make_config();
        const QuarticIntegralSpec local = *spec;
        oracle = integrate_half_line(
            [&local](double x) { return quartic_integrand(local, x); }, cfg);
        const double diff = closed - oracle->value;
        const double limit = std::max(1e-10, 1e-10 * std::abs(closed));
        const bool pass = oracle->converged && std::abs(diff) <= limit;
        rec.outputs["quadrature_value"] = oracle->value;
        rec.outputs["difference"] = diff;
        rec.outputs["quadrature_error_estimate"] = oracle->error_estimate;
        rec.outputs["quadrature_evaluations"] = oracle->evaluations;
        rec.outputs["quadrature_converged"] = oracle->converged;
        rec.checks.push_back({"quadrature_agreement", pass,
                              "|closed - quadrature| = " + sci(std::abs(diff)) +
                                  ", limit " + sci(limit)});
    }

    if (format == "json") {
        emit_json(rec.to_json(), out);
    } else {
        out << "value," << rec.outputs["value"].dump() << '\n';
        if (verify) {
            out << "quadrature_value," << rec.outputs["quadrature_value"].dump() << '\n';
            out << "difference," << rec.outputs["difference"].dump() << '\n';
            out << "quadrature_error_estimate,"
                << rec.outputs["quadrature_error_estimate"].dump() << '\n';
            out << "quadrature_evaluations," << oracle->evaluations << '\n';
            out << "quadrature_converged," << (oracle->converged ? "true" : "false")
                << '\n';
        }
    }
    return rec.all_checks_pass() ? kExitSuccess : kExitCheckFailure;
}

// ----------------------------------------------------- moll-d / moll-poly --

int moll_d_command(unsigned long m, const std::string& format, std::ostream& out) {
    const MollCoefficientTable table = d_classical(static_cast<unsigned>(m));
    if (format == "json") {
        OutputRecord rec;
        rec.command = "moll-d";
        rec.inputs["m"] = m;
        json d = json::array();
        for (const auto& v : table.d) d.push_back(v.to_string());
        rec.outputs["d"] = d;
        emit_json(rec.to_json(), out);
    } else {
        for (std::size_t j = 0; j < table.d.size(); ++j) {
            out << j << ',' << table.d[j].to_string() << '\n';
        }
    }
    return kExitSuccess;
}

int moll_poly_command(unsigned long m, const std::string& format, std::ostream& out) {
    const RationalPolynomial poly = moll_polynomial(static_cast<unsigned>(m));
    if (format == "json") {
        OutputRecord rec;
        rec.command = "moll-poly";
        rec.inputs["m"] = m;
        json coeffs = json::array();
        for (int j = 0; j <= poly.degree(); ++j) coeffs.push_back(poly.coeff(j).to_string());
        rec.outputs["coefficients"] = coeffs;
        emit_json(rec.to_json(), out);
    } else {
        for (int j = 0; j <= poly.degree(); ++j) {
            out << j << ',' << poly.coeff(j).to_string() << '\n';
        }
    }
    return kExitSuccess;
}

// ------------------------------------------------------------------- beta --

int beta_command(unsigned long n, unsigned long m, const std::string& a_text,
                 const std::string& check_mode, const std::string& format,
                 std::ostream& out, std::ostream& err) {
    const auto a = parse_rational(a_text);
    if (!a) {
        err << "error: --a expects an exact rational \"P/Q\" or integer; decimal input"
               " is rejected to avoid silent precision loss (got \""
            << a_text << "\")\n";
        return kExitUsageError;
    }

    const auto nn = static_cast<unsigned>(n);
    const auto mm = static_cast<unsigned>(m);
    const BetaTable table = beta_general(nn, mm, *a);

    std::vector<OutputRecord::CheckEntry> checks;
    if (check_mode == "all") {
        BigRational sum;
        for (unsigned k = table.k_min(); k <= table.k_max(); ++k) sum += table.at(k);
        checks.push_back({"normalization", sum == BigRational(1),
                          "sum of coefficients = " + sum.to_string()});
        const BigRational least = table.min_coefficient();
        checks.push_back({"nonnegativity", !(least.sign() < 0),
                          "least coefficient = " + least.to_string()});
    }
    if (check_mode == "all" || check_mode == "recursion") {
        if (nn >= 1 && mm >= 1) {
            checks.push_back({"recursion", check_recursion(nn, mm, *a), ""});
        } else if (check_mode == "recursion") {
            // Surface the precondition instead of silently skipping.
            check_recursion(nn, mm, *a);
        }
    }
    if (check_mode == "all" || check_mode == "symmetry") {
        const BetaTable mirrored = beta_general(mm, nn, BigRational(1) - *a);
        checks.push_back({"symmetry", apply_symmetry(table) == mirrored, ""});
    }

    if (format == "json") {
        json j;
        j["n"] = n;
        j["m"] = m;
        j["a"] = a->to_string();
        json b = json::object();
        for (unsigned k = table.k_min(); k <= table.k_max(); ++k) {
            b[std::to_string(k)] = table.at(k).to_string();
        }
        j["beta"] = b;
        json c = json::object();
        for (const auto& chk : checks) c[chk.name] = chk.pass;
        j["checks"] = c;
        emit_json(j, out);
    } else {
        for (unsigned k = table.k_min(); k <= table.k_max(); ++k) {
            out << k << ',' << table.at(k).to_string() << '\n';
        }
    }

    const bool all_pass = std::all_of(checks.begin(), checks.end(),
                                      [](const auto& c) { return c.pass; });
    return all_pass ? kExitSuccess : kExitCheckFailure;
}

// ------------------------------------------------------------- basis-poly --

int basis_poly_command(unsigned long k, const std::string& format, std::ostream& out) {
    const BasisPolynomial bp = basis_poly(static_cast<unsigned>(k));
    if (format == "json") {
        OutputRecord rec;
        rec.command = "basis-poly";
        rec.inputs["k"] = k;
        json coeffs = json::array();
        for (int j = 0; j <= bp.poly.degree(); ++j) {
            coeffs.push_back(bp.poly.coeff(j).to_string());
        }
        rec.outputs["coefficients"] = coeffs;
        emit_json(rec.to_json(), out);
    } else {
        for (int j = 0; j <= bp.poly.degree(); ++j) {
            out << j << ',' << bp.poly.coeff(j).to_string() << '\n';
        }
    }
    return kExitSuccess;
}

// ----------------------------------------------------------------- verify --

void print_report(const SuiteReport& report, std::ostream& out) {
    std::size_t passed = 0;
    for (const auto& c : report.cases) {
        if (c.pass) ++passed;
        out << (c.pass ? "[ ok ] " : "[FAIL] ") << c.name << "  measured="
            << sci(c.measured) << "  limit=" << sci(c.limit);
        if (!c.detail.empty()) out << "  (" << c.detail << ')';
        out << '\n';
    }
    out << "suite " << report.suite << ": " << passed << '/' << report.cases.size()
        << " cases passed\n";
}

int verify_command(const std::string& suite, std::optional<double> tol, std::ostream& out) {
    const QuadratureConfig cfg = make_config();
    std::vector<SuiteReport> reports;
    if (suite == "quartic" || suite == "all") reports.push_back(run_quartic_suite(cfg, tol));
    if (suite == "conv" || suite == "all") reports.push_back(run_conv_suite(cfg, tol));
    if (suite == "fourier" || suite == "all") reports.push_back(run_fourier_suite(cfg, tol));

    bool all_pass = true;
    std::size_t total = 0;
    std::size_t passed = 0;
    for (const auto& rep : reports) {
        print_report(rep, out);
        all_pass = all_pass && rep.all_pass();
        total += rep.cases.size();
        passed += std::count_if(rep.cases.begin(), rep.cases.end(),
                                [](const auto& c) { return c.pass; });
    }
    if (reports.size() > 1) {
        out << "all suites: " << passed << '/' << total << " cases passed\n";
    }
    return all_pass ? kExitSuccess : kExitCheckFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact convolution coefficients for Student t-densities and the "
                 "closed-form quartic integral, with numerical verification"};
    app.name("tconv");
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    // quartic -------------------------------------------------------------
    unsigned long quartic_m = 0;
    std::string quartic_a;
    bool quartic_verify = false;
    std::string quartic_format = "json";
    auto* quartic = app.add_subcommand(
        "quartic", "Evaluate the quartic integral via its closed form (a > -1)");
    quartic->add_option("--m", quartic_m, "Exponent parameter m (integrand power m+1)")
        ->required();
    quartic->add_option("--a", quartic_a, "Parameter a as \"P/Q\", integer, or decimal")
        ->required();
    quartic->add_flag("--verify", quartic_verify,
                      "Also integrate numerically and report the difference");
    quartic->add_option("--format", quartic_format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    // moll-d --------------------------------------------------------------
    unsigned long molld_m = 0;
    std::string molld_format = "json";
    auto* molld = app.add_subcommand("moll-d", "Print the exact coefficient table d_{j,m}");
    molld->add_option("--m", molld_m, "Polynomial order m")->required();
    molld->add_option("--format", molld_format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    // moll-poly -----------------------------------------------------------
    unsigned long mollp_m = 0;
    std::string mollp_format = "json";
    auto* mollp = app.add_subcommand(
        "moll-poly", "Print the degree-m polynomial from the closed form (ascending coefficients)");
    mollp->add_option("--m", mollp_m, "Polynomial order m")->required();
    mollp->add_option("--format", mollp_format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    // beta ----------------------------------------------------------------
    unsigned long beta_n = 0;
    unsigned long beta_m = 0;
    std::string beta_a;
    std::string beta_check = "all";
    std::string beta_format = "json";
    auto* beta = app.add_subcommand(
        "beta", "Exact convolution coefficients for orders (n, m) and scale a in (0,1)");
    beta->add_option("--n", beta_n, "First order n")->required();
    beta->add_option("--m", beta_m, "Second order m")->required();
    beta->add_option("--a", beta_a, "Scale a as exact rational \"P/Q\" (0 < a < 1)")
        ->required();
    beta->add_option("--check", beta_check, "Identity checks to run")
        ->check(CLI::IsMember({"all", "recursion", "symmetry", "none"}))
        ->capture_default_str();
    beta->add_option("--format", beta_format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    // basis-poly ----------------------------------------------------------
    unsigned long basis_k = 0;
    std::string basis_format = "json";
    auto* basis = app.add_subcommand(
        "basis-poly", "Print the exact coefficients of the basis polynomial of order k");
    basis->add_option("k", basis_k, "Order k")->required();
    basis->add_option("--format", basis_format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    // verify --------------------------------------------------------------
    std::string verify_suite = "all";
    double verify_tol = 0.0;
    auto* verify = app.add_subcommand(
        "verify", "Run the numerical verification suites and print a per-case report");
    verify->add_option("--suite", verify_suite, "Which suite to run")
        ->check(CLI::IsMember({"quartic", "conv", "fourier", "all"}))
        ->capture_default_str();
    auto* tol_opt = verify->add_option("--tol", verify_tol,
                                       "Override the per-case tolerance (default: per-suite)")
                        ->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));

        if (quartic->parsed()) {
            return quartic_command(quartic_m, quartic_a, quartic_verify, quartic_format,
                                   out, err);
        }
        if (molld->parsed()) return moll_d_command(molld_m, molld_format, out);
        if (mollp->parsed()) return moll_poly_command(mollp_m, mollp_format, out);
        if (beta->parsed()) {
            return beta_command(beta_n, beta_m, beta_a, beta_check, beta_format, out, err);
        }
        if (basis->parsed()) return basis_poly_command(basis_k, basis_format, out);
        if (verify->parsed()) {
            std::optional<double> tol;
            if (tol_opt->count() > 0) tol = verify_tol;
            return verify_command(verify_suite, tol, out);
        }
        err << "error: no subcommand given\n" << app.help();
        return kExitUsageError;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitSuccess : kExitUsageError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsageError;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsageError;
    }
}

}  // namespace tconv::cli
