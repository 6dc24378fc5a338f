#include "tconv/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "tconv/student.hpp"

namespace tconv {

namespace {

// 7-point Gauss / 15-point Kronrod pair on (-1, 1); QUADPACK abscissae and
// weights.  Even indices of xgk are the Gauss nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEstimate {
    double value = 0.0;
    double error = 0.0;
};

// One Gauss-Kronrod application on [a, b] with the QUADPACK error estimate.
PanelEstimate gauss_kronrod_15(const Integrand& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center);
    double result_gauss = fc * kWg[3];
    double result_kronrod = fc * kWgk[7];
    double result_abs = std::abs(result_kronrod);
    double fv1[7], fv2[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        if (j % 2 == 1) result_gauss += kWg[j / 2] * (f1 + f2);
        result_kronrod += kWgk[j] * (f1 + f2);
        result_abs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    }
    const double mean = 0.5 * result_kronrod;
    double result_asc = kWgk[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j)
        result_asc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));

    result_abs *= half;
    result_asc *= half;
    double err = std::abs((result_kronrod - result_gauss) * half);
    if (result_asc != 0.0 && err != 0.0)
        err = result_asc * std::min(1.0, std::pow(200.0 * err / result_asc, 1.5));
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double tiny = std::numeric_limits<double>::min();
    if (result_abs > tiny / (50.0 * eps))
        err = std::max(50.0 * eps * result_abs, err);

    return {result_kronrod * half, err};
}

struct Panel {
    double a, b;
    double value, error;
    bool splittable;
};

struct WorstFirst {
    bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

constexpr int kEvalsPerPanel = 15;

// Adaptive bisection over an initial partition of a finite interval.
QuadratureResult integrate_adaptive(const Integrand& f,
                                    const std::vector<double>& breakpoints,
                                    const QuadratureConfig& cfg) {
    if (!(cfg.abs_tol > 0.0) || !(cfg.rel_tol > 0.0))
        throw std::invalid_argument("quadrature tolerances must be positive");

    const auto initial_cost =
        static_cast<std::int64_t>(breakpoints.size() - 1) * kEvalsPerPanel;
    if (cfg.max_evaluations < initial_cost)
        throw std::invalid_argument("quadrature evaluation budget too small");

    std::priority_queue<Panel, std::vector<Panel>, WorstFirst> queue;
    std::vector<Panel> frozen;  // panels too narrow to bisect further
    std::int64_t evaluations = 0;
    double total_value = 0.0;
    double total_error = 0.0;

    const auto push_panel = [&](double a, double b) {
        const PanelEstimate e = gauss_kronrod_15(f, a, b);
        evaluations += kEvalsPerPanel;
        total_value += e.value;
        total_error += e.error;
        const double width_floor =
            4.0 * std::numeric_limits<double>::epsilon() *
            std::max({std::abs(a), std::abs(b), 1.0});
        const Panel p{a, b, e.value, e.error, (b - a) > width_floor};
        if (p.splittable)
            queue.push(p);
        else
            frozen.push_back(p);
    };

    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
        push_panel(breakpoints[i], breakpoints[i + 1]);

    const auto tolerance = [&] {
        return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total_value));
    };

    while (total_error > tolerance() && !queue.empty() &&
           evaluations + 2 * kEvalsPerPanel <= cfg.max_evaluations) {
        const Panel worst = queue.top();
        queue.pop();
        total_value -= worst.value;
        total_error -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        push_panel(worst.a, mid);
        push_panel(mid, worst.b);
    }

    // Deterministic final sum: panels in left-to-right order.
    while (!queue.empty()) {
        frozen.push_back(queue.top());
        queue.pop();
    }
    std::sort(frozen.begin(), frozen.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    double value = 0.0;
    double error = 0.0;
    for (const Panel& p : frozen) {
        value += p.value;
        error += p.error;
    }

    QuadratureResult result;
    result.value = value;
    result.error_estimate = error;
    result.evaluations = evaluations;
    result.converged =
        error <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value));
    return result;
}

}  // namespace

QuadratureResult integrate_half_line(const Integrand& f,
                                     const QuadratureConfig& cfg) {
    // x = t/(1-t); the Kronrod nodes are interior, so t = 1 (x = inf) is
    // never evaluated.
    const auto mapped = [&f](double t) {
        const double u = 1.0 - t;
        return f(t / u) / (u * u);
    };
    // Breakpoint at the image of x = 1: quartic integrands near a = -1 peak
    // there.
    return integrate_adaptive(mapped, {0.0, 0.5, 1.0}, cfg);
}

QuadratureResult integrate_real_line(const Integrand& f,
                                     const QuadratureConfig& cfg) {
    QuadratureConfig half_cfg = cfg;
    half_cfg.max_evaluations = cfg.max_evaluations / 2;
    const QuadratureResult pos = integrate_half_line(f, half_cfg);
    const QuadratureResult neg =
        integrate_half_line([&f](double x) { return f(-x); }, half_cfg);
    QuadratureResult result;
    result.value = pos.value + neg.value;
    result.error_estimate = pos.error_estimate + neg.error_estimate;
    result.evaluations = pos.evaluations + neg.evaluations;
    result.converged = pos.converged && neg.converged;
    return result;
}

QuadratureResult convolution_lhs(unsigned n, unsigned m, double a, double x,
                                 const QuadratureConfig& cfg) {
    if (!(a > 0.0 && a < 1.0))
        throw std::domain_error("convolution_lhs: scale a must satisfy 0 < a < 1");
    const StudentDensity fn(n);
    const StudentDensity fm(m);
    const double b = 1.0 - a;
    const auto integrand = [&, a, b, x](double y) {
        return fn.density_value(y / a) / a * fm.density_value((x - y) / b) / b;
    };
    return integrate_real_line(integrand, cfg);
}

QuadratureResult cosine_transform(unsigned m, double t,
                                  const QuadratureConfig& cfg) {
    if (!(t > 0.0))
        throw std::domain_error("cosine_transform: require t > 0");

    double factor = 2.0;  // evenness: real line = 2 * [0, inf)
    Integrand integrand;
    if (m == 0) {
        // The mapped Cauchy integrand oscillates with constant amplitude at
        // the endpoint, so integrate cos(t x) f''-style by parts twice:
        // f''(x) = -2(m+1) A [1 - (2m+3) x^2] / (1+x^2)^(m+3) with vanishing
        // boundary terms gives
        //   F(t) = (4 A (m+1) / t^2) *
        //          integral_0^inf cos(t x) [1 - (2m+3) x^2] / (1+x^2)^(m+3) dx.
        const double norm = StudentDensity(m).normalizer().to_double();
        factor = 4.0 * norm * (m + 1.0) / (t * t);
        const double c = 2.0 * m + 3.0;
        const double p = m + 3.0;
        integrand = [t, c, p](double x) {
            const double x2 = x * x;
            return std::cos(t * x) * (1.0 - c * x2) / std::pow(1.0 + x2, p);
        };
    } else {
        // For m >= 1 the mapped integrand decays like (1-u)^{2m}, so the
        // direct form is stable and free of the parts form's cancellation.
        const StudentDensity f(m);
        integrand = [f, t](double x) { return std::cos(t * x) * f.density_value(x); };
    }

    // The result gets scaled by `factor`, so solve the inner integral to a
    // tolerance tightened by the same amount; relative tolerance is
    // scale-invariant.
    QuadratureConfig inner = cfg;
    inner.abs_tol = cfg.abs_tol / std::max(1.0, std::abs(factor));
    QuadratureResult raw = integrate_half_line(integrand, inner);
    raw.value *= factor;
    raw.error_estimate *= std::abs(factor);
    raw.converged = raw.error_estimate <=
                    std::max(cfg.abs_tol, cfg.rel_tol * std::abs(raw.value));
    return raw;
}

}  // namespace tconv
