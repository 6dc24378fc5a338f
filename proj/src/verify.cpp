#include "tconv/verify.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "tconv/bessel_basis.hpp"
#include "tconv/boros_moll.hpp"
#include "tconv/student.hpp"

namespace tconv {

namespace {

CheckCase make_case(std::string name, double measured, double limit,
                    std::string detail = {}, bool oracle_converged = true) {
    CheckCase c;
    c.name = std::move(name);
    c.measured = measured;
    c.limit = limit;
    // A non-converged oracle is not a valid referee, however small the
    // observed difference happens to be.
    c.pass = measured <= limit && oracle_converged;
    c.detail = std::move(detail);
    if (!oracle_converged) c.detail += " [oracle not converged]";
    return c;
}

std::string format_pair(double got, double want) {
    std::ostringstream os;
    os.precision(15);
    os << "got " << got << ", want " << want;
    return os.str();
}

}  // namespace

SuiteReport run_quartic_suite(const QuadratureConfig& cfg,
                              std::optional<double> tol) {
    SuiteReport report{"quartic", {}};

    {
        const QuadratureResult r =
            integrate_half_line([](double x) { return std::exp(-x); }, cfg);
        report.cases.push_back(make_case("calibration exp(-x)",
                                         std::abs(r.value - 1.0),
                                         tol.value_or(1e-12),
                                         format_pair(r.value, 1.0), r.converged));
    }

    const double a_grid[] = {-0.9, -0.5, 0.0, 0.5, 1.0, 3.0, 10.0};
    for (unsigned m = 0; m <= 10; ++m) {
        for (const double a : a_grid) {
            const QuarticIntegralSpec spec(m, a);
            const double closed = closed_form_value(spec);
            const QuadratureResult r = integrate_half_line(
                [&spec](double x) { return quartic_integrand(spec, x); }, cfg);
            const double limit =
                tol ? *tol : std::max(1e-10, 1e-10 * std::abs(closed));
            std::ostringstream name;
            name << "quartic m=" << m << " a=" << a;
            report.cases.push_back(make_case(name.str(),
                                             std::abs(r.value - closed), limit,
                                             format_pair(r.value, closed),
                                             r.converged));
        }
    }
    return report;
}

SuiteReport run_conv_suite(const QuadratureConfig& cfg,
                           std::optional<double> tol) {
    SuiteReport report{"conv", {}};

    const std::pair<unsigned, unsigned> orders[] = {
        {0, 0}, {1, 0}, {1, 1}, {2, 1}, {3, 3}};
    const BigRational a_grid[] = {BigRational(1, 3), BigRational(1, 2)};
    const double x_grid[] = {0.0, 0.7, 2.5};

    for (const auto& [n, m] : orders) {
        for (const BigRational& a : a_grid) {
            const BetaTable beta = beta_general(n, m, a);
            for (const double x : x_grid) {
                double rhs = 0.0;
                for (const auto& [k, bk] : beta.coefficients())
                    rhs += bk.to_double() * StudentDensity(k).density_value(x);
                const QuadratureResult lhs =
                    convolution_lhs(n, m, a.to_double(), x, cfg);
                std::ostringstream name;
                name << "conv n=" << n << " m=" << m << " a=" << a << " x=" << x;
                report.cases.push_back(make_case(name.str(),
                                                 std::abs(lhs.value - rhs),
                                                 tol.value_or(1e-8),
                                                 format_pair(lhs.value, rhs),
                                                 lhs.converged));
            }
        }
    }
    return report;
}

SuiteReport run_fourier_suite(const QuadratureConfig& cfg,
                              std::optional<double> tol) {
    SuiteReport report{"fourier", {}};

    const double t_grid[] = {0.25, 1.0, 3.0};
    for (unsigned k = 0; k <= 4; ++k) {
        const RationalPolynomial qk = basis_poly(k).poly;
        for (const double t : t_grid) {
            const double reference = std::exp(-t) * qk.eval_double(t);
            const QuadratureResult r = cosine_transform(k, t, cfg);
            std::ostringstream name;
            name << "fourier k=" << k << " t=" << t;
            report.cases.push_back(make_case(name.str(),
                                             std::abs(r.value - reference),
                                             tol.value_or(1e-9),
                                             format_pair(r.value, reference),
                                             r.converged));
        }
    }
    return report;
}

}  // namespace tconv
