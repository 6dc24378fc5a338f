#ifndef TCONV_VERIFY_HPP
#define TCONV_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "tconv/quadrature.hpp"

namespace tconv {

struct CheckCase {
    std::string name;
    bool pass = false;
    double measured = 0.0;  // absolute deviation
    double limit = 0.0;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckCase> cases;

    bool all_pass() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
};

// Oracle suites.  Each case compares an adaptive quadrature value against
// the exact-to-float reference and records the absolute deviation.  A
// tolerance override replaces the per-suite default limit.

/// Closed form vs quadrature for the quartic integral, m = 0..10 over a in
/// {-0.9, -0.5, 0, 0.5, 1, 3, 10}; limit max(1e-10, 1e-10 |value|).  Also
/// includes the exp(-x) calibration integral at 1e-12.
SuiteReport run_quartic_suite(const QuadratureConfig& cfg = {},
                              std::optional<double> tol = std::nullopt);

/// Numeric convolution vs the exact beta mixture for
/// (n,m) in {(0,0),(1,0),(1,1),(2,1),(3,3)}, a in {1/3, 1/2},
/// x in {0, 0.7, 2.5}; limit 1e-8.
SuiteReport run_conv_suite(const QuadratureConfig& cfg = {},
                           std::optional<double> tol = std::nullopt);

/// Numeric cosine transform of f_{k+1/2} vs exp(-t) q_k(t) for k = 0..4,
/// t in {0.25, 1, 3}; limit 1e-9.
SuiteReport run_fourier_suite(const QuadratureConfig& cfg = {},
                              std::optional<double> tol = std::nullopt);

}  // namespace tconv

#endif  // TCONV_VERIFY_HPP
