#ifndef TCONV_QUADRATURE_HPP
#define TCONV_QUADRATURE_HPP

#include <cstdint>
#include <functional>

namespace tconv {

struct QuadratureConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    std::int64_t max_evaluations = 1'000'000;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;  // absolute
    bool converged = false;
    std::int64_t evaluations = 0;
};

using Integrand = std::function<double(double)>;

/// Integral of f over [0, inf).  The half-line is mapped to [0,1) by
/// x = t/(1-t) (Jacobian 1/(1-t)^2), then adaptively subdivided with an
/// embedded 7/15-point Gauss-Kronrod pair, worst panel first.  The initial
/// panels split at the image of x = 1 so that integrands peaked near 1 are
/// bisected there immediately.  On budget exhaustion the best estimate is
/// returned with converged = false.
QuadratureResult integrate_half_line(const Integrand& f,
                                     const QuadratureConfig& cfg = {});

/// Integral of f over the real line: split at 0, two half-line passes,
/// values summed and error estimates added.
QuadratureResult integrate_real_line(const Integrand& f,
                                     const QuadratureConfig& cfg = {});

/// Left side of the convolution identity at x:
/// integral over y of (1/a) f_{n+1/2}(y/a) * (1/(1-a)) f_{m+1/2}((x-y)/(1-a)).
/// Requires 0 < a < 1.
QuadratureResult convolution_lhs(unsigned n, unsigned m, double a, double x,
                                 const QuadratureConfig& cfg = {});

/// Cosine transform of the Student density: integral over the real line of
/// cos(t x) f_{m+1/2}(x), for t > 0.  Quadratures the twice
/// integrated-by-parts form -(2/t^2) * integral of cos(t x) f''(x) over
/// [0, inf) — same value, boundary terms vanish — whose mapped integrand
/// decays at the endpoint for every m, so the tail oscillations of the raw
/// m = 0 integrand never reach the panel queue.
QuadratureResult cosine_transform(unsigned m, double t,
                                  const QuadratureConfig& cfg = {});

}  // namespace tconv

#endif  // TCONV_QUADRATURE_HPP
