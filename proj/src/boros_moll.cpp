#include "tconv/boros_moll.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tconv {

MollCoefficientTable d_classical(unsigned m) {
    MollCoefficientTable table{m, std::vector<BigRational>(m + 1)};
    const BigInt scale = pow(BigInt(2), 2 * m);
    for (unsigned j = 0; j <= m; ++j) {
        BigInt sum(0);
        for (unsigned i = j; i <= m; ++i) {
            sum += pow(BigInt(2), i) * binomial(2 * m - 2 * i, static_cast<long>(m - i)) *
                   binomial(m + i, static_cast<long>(m)) *
                   binomial(i, static_cast<long>(j));
        }
        table.d[j] = BigRational(sum, scale);
    }
    return table;
}

MollCoefficientTable d_derived(unsigned m) {
    MollCoefficientTable table{m, std::vector<BigRational>(m + 1)};
    const BigInt f2m = factorial(2 * m);
    const BigRational front = pochhammer_half(m) / BigRational(BigInt(f2m * f2m));
    const BigRational half_offset(2 * static_cast<long>(m) + 1, 2);  // m + 1/2
    for (unsigned j = 0; j <= m; ++j) {
        BigRational sum;
        for (unsigned i = j; i <= m; ++i) {
            const BigRational term =
                BigRational(factorial(2 * m - 2 * i) * factorial(2 * m + 2 * i) *
                                binomial(m, static_cast<long>(i)) *
                                binomial(i, static_cast<long>(j)),
                            factorial(m - i) * pow(BigInt(2), i)) /
                pochhammer(half_offset, i);
            sum += term;
        }
        table.d[j] = front * sum;
    }
    return table;
}

RationalPolynomial moll_polynomial(unsigned m) {
    return RationalPolynomial(d_classical(m).d);
}

double closed_form_value(const QuarticIntegralSpec& spec) {
    const bool out_of_domain =
        spec.a_exact ? (*spec.a_exact <= BigRational(-1)) : (spec.a <= -1.0);
    if (out_of_domain)
        throw std::domain_error("quartic integral requires a > -1");

    const RationalPolynomial pm = moll_polynomial(spec.m);
    const double pm_value =
        spec.a_exact ? pm(*spec.a_exact).to_double() : pm.eval_double(spec.a);

    const double base = 2.0 * (spec.a + 1.0);
    double denom = std::sqrt(base);
    for (unsigned i = 0; i < spec.m; ++i) denom *= base;
    return std::numbers::pi / 2.0 * pm_value / denom;
}

double quartic_integrand(const QuarticIntegralSpec& spec, double x) {
    const double x2 = x * x;
    return std::pow(x2 * x2 + 2.0 * spec.a * x2 + 1.0, -(spec.m + 1.0));
}

}  // namespace tconv
