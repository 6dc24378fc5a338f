// Acceptance gate: runs the seven headline checks end to end at their pinned
// tolerances and prints exactly one PASS/FAIL line per criterion.  Exit code
// is the number of failed criteria.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "tconv/bessel_basis.hpp"
#include "tconv/boros_moll.hpp"
#include "tconv/quadrature.hpp"
#include "tconv/rational.hpp"
#include "tconv/student.hpp"
#include "tconv/verify.hpp"

namespace {

using tconv::BigRational;

struct Criterion {
    std::string label;
    bool (*check)(std::string& detail);
};

// 1. The two d-coefficient formulas agree bit-exactly for m <= 30.
bool criterion_d_tables(std::string& detail) {
    for (unsigned m = 0; m <= 30; ++m) {
        const auto classical = tconv::d_classical(m);
        const auto derived = tconv::d_derived(m);
        for (unsigned j = 0; j <= m; ++j) {
            if (!(classical.d[j] == derived.d[j])) {
                detail = "mismatch at m=" + std::to_string(m) + " j=" + std::to_string(j);
                return false;
            }
        }
    }
    detail = "31 tables bit-exact";
    return true;
}

// 2. Closed form vs adaptive quadrature on the m x a grid.
bool criterion_quartic_oracle(std::string& detail) {
    const tconv::SuiteReport report = tconv::run_quartic_suite({}, {});
    std::size_t n = 0;
    for (const auto& c : report.cases) {
        if (!c.pass) {
            detail = "first failure: " + c.name;
            return false;
        }
        ++n;
    }
    detail = std::to_string(n) + " cases within max(1e-10, 1e-10*|value|)";
    return true;
}

// 3. Numeric convolution vs the exact mixture.
bool criterion_convolution(std::string& detail) {
    const tconv::SuiteReport report = tconv::run_conv_suite({}, {});
    for (const auto& c : report.cases) {
        if (!c.pass) {
            detail = "first failure: " + c.name;
            return false;
        }
    }
    detail = std::to_string(report.cases.size()) + " cases within 1e-8";
    return true;
}

// 4. Equal-orders closed formula vs the basis engine (m <= 15), and its
// a = 1/2 specialization (m <= 30), all exact.
bool criterion_cross_formulas(std::string& detail) {
    const BigRational a_grid[] = {BigRational(1, 4), BigRational(1, 2), BigRational(3, 4)};
    for (unsigned m = 0; m <= 15; ++m) {
        for (const auto& a : a_grid) {
            const tconv::BetaTable table = tconv::beta_general(m, m, a);
            for (unsigned i = 0; i <= m; ++i) {
                if (!(table.at(m + i) == tconv::beta_equal_orders(m, i, a))) {
                    detail = "engine vs formula at m=" + std::to_string(m) +
                             " i=" + std::to_string(i) + " a=" + a.to_string();
                    return false;
                }
            }
        }
    }
    const BigRational half(1, 2);
    for (unsigned m = 0; m <= 30; ++m) {
        for (unsigned i = 0; i <= m; ++i) {
            if (!(tconv::beta_equal_orders(m, i, half) == tconv::beta_half(m, i))) {
                detail = "half-scale specialization at m=" + std::to_string(m) +
                         " i=" + std::to_string(i);
                return false;
            }
        }
    }
    detail = "exact through m=15 (general scale) and m=30 (a=1/2)";
    return true;
}

// 5. Recursion and symmetry, exact on their grids.
bool criterion_recursion_symmetry(std::string& detail) {
    const BigRational rec_grid[] = {BigRational(1, 10), BigRational(1, 3),
                                    BigRational(1, 2), BigRational(7, 10)};
    for (unsigned n = 1; n <= 12; ++n) {
        for (unsigned m = 1; m <= 12; ++m) {
            for (const auto& a : rec_grid) {
                if (!tconv::check_recursion(n, m, a)) {
                    detail = "recursion fails at n=" + std::to_string(n) +
                             " m=" + std::to_string(m) + " a=" + a.to_string();
                    return false;
                }
            }
        }
    }
    const BigRational sym_grid[] = {BigRational(1, 5), BigRational(2, 5)};
    for (unsigned n = 0; n <= 12; ++n) {
        for (unsigned m = 0; m <= 12; ++m) {
            for (const auto& a : sym_grid) {
                const tconv::BetaTable lhs = tconv::apply_symmetry(tconv::beta_general(n, m, a));
                const tconv::BetaTable rhs = tconv::beta_general(m, n, BigRational(1) - a);
                if (!(lhs == rhs)) {
                    detail = "symmetry fails at n=" + std::to_string(n) +
                             " m=" + std::to_string(m) + " a=" + a.to_string();
                    return false;
                }
            }
        }
    }
    detail = "recursion (n,m <= 12, 4 scales) and symmetry (n,m <= 12, 2 scales) exact";
    return true;
}

// 6. Nonnegativity and exact normalization across n+m <= 30, a = k/10.
bool criterion_nonnegativity(std::string& detail) {
    std::size_t tables = 0;
    for (unsigned n = 0; n <= 30; ++n) {
        for (unsigned m = 0; n + m <= 30; ++m) {
            for (long k = 1; k <= 9; ++k) {
                const BigRational a(k, 10);
                const tconv::BetaTable table = tconv::beta_table_via_basis(n, m, a);
                BigRational sum;
                for (const auto& [idx, v] : table.coefficients()) {
                    if (v.sign() < 0) {
                        detail = "negative coefficient at n=" + std::to_string(n) +
                                 " m=" + std::to_string(m) + " a=" + a.to_string() +
                                 " k=" + std::to_string(idx);
                        return false;
                    }
                    sum += v;
                }
                if (!(sum == BigRational(1))) {
                    detail = "normalization fails at n=" + std::to_string(n) +
                             " m=" + std::to_string(m) + " a=" + a.to_string();
                    return false;
                }
                ++tables;
            }
        }
    }
    detail = std::to_string(tables) + " tables nonnegative with exact unit sum";
    return true;
}

// 7. Characteristic-function fact via the numeric Fourier oracle.
bool criterion_fourier(std::string& detail) {
    const tconv::SuiteReport report = tconv::run_fourier_suite({}, {});
    for (const auto& c : report.cases) {
        if (!c.pass) {
            detail = "first failure: " + c.name;
            return false;
        }
    }
    detail = std::to_string(report.cases.size()) + " cases within 1e-9";
    return true;
}

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"1. exact d-table equivalence (classical vs pochhammer form, m <= 30)",
         criterion_d_tables},
        {"2. quartic closed form vs quadrature (m <= 10, 7 parameter values)",
         criterion_quartic_oracle},
        {"3. convolution identity, numeric vs exact mixture (5 order pairs)",
         criterion_convolution},
        {"4. coefficient cross-validation (equal orders and a = 1/2)",
         criterion_cross_formulas},
        {"5. recursion and symmetry identities, exact",
         criterion_recursion_symmetry},
        {"6. nonnegativity and unit sum (n+m <= 30, a = k/10)",
         criterion_nonnegativity},
        {"7. characteristic-function fact via Fourier integral (k <= 4)",
         criterion_fourier},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        std::printf("[%s] %s  (%s; %.2fs)\n", ok ? "PASS" : "FAIL",
                    criterion.label.c_str(), detail.c_str(), seconds);
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures;
}
