#ifndef TCONV_BOROS_MOLL_HPP
#define TCONV_BOROS_MOLL_HPP

#include <optional>
#include <vector>

#include "tconv/polynomial.hpp"
#include "tconv/rational.hpp"

namespace tconv {

/// Coefficients d_{j,m} of the degree-m polynomial P_m(a) appearing in the
/// closed form of the quartic integral; all entries are positive.
struct MollCoefficientTable {
    unsigned m = 0;
    std::vector<BigRational> d;  // index j = 0..m
};

/// Classical double-binomial formula:
/// d_{j,m} = 2^{-2m} sum_{i=j}^{m} 2^i C(2m-2i, m-i) C(m+i, m) C(i, j).
MollCoefficientTable d_classical(unsigned m);

/// Pochhammer form:
/// d_{j,m} = (1/2)_m / ((2m)!)^2
///   * sum_{i=j}^{m} (2m-2i)!(2m+2i)! / ((m+1/2)_i (m-i)! 2^i) C(m,i) C(i,j).
/// Independent of d_classical; the two tables agreeing exactly is one of the
/// verification targets.
MollCoefficientTable d_derived(unsigned m);

/// P_m(a) = sum_j d_{j,m} a^j, coefficients from d_classical.
RationalPolynomial moll_polynomial(unsigned m);

/// Parameters of the integral over [0, inf) of (x^4 + 2ax^2 + 1)^{-(m+1)},
/// convergent for a > -1.  The parameter is kept exact when it arrives as a
/// rational; floating a goes through the double-precision path.
struct QuarticIntegralSpec {
    unsigned m = 0;
    double a = 0.0;
    std::optional<BigRational> a_exact;

    QuarticIntegralSpec(unsigned m_, const BigRational& a_)
        : m(m_), a(a_.to_double()), a_exact(a_) {}
    QuarticIntegralSpec(unsigned m_, double a_) : m(m_), a(a_) {}
};

/// (pi/2) P_m(a) / [2(a+1)]^{m+1/2}.  P_m(a) is evaluated exactly when the
/// spec carries a rational parameter, then converted; the half-integer power
/// is [2(a+1)]^m * sqrt(2(a+1)) in floating point.
/// Throws std::domain_error for a <= -1, where the integral diverges.
double closed_form_value(const QuarticIntegralSpec& spec);

/// (x^4 + 2ax^2 + 1)^{-(m+1)}; positive denominator for all real x when
/// a > -1.
double quartic_integrand(const QuarticIntegralSpec& spec, double x);

}  // namespace tconv

#endif  // TCONV_BOROS_MOLL_HPP
