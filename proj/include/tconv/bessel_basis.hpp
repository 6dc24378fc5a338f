#ifndef TCONV_BESSEL_BASIS_HPP
#define TCONV_BESSEL_BASIS_HPP

#include <vector>

#include "tconv/polynomial.hpp"
#include "tconv/rational.hpp"

namespace tconv {

// Degree-k polynomial q_k with q_k(0) = 1 such that the characteristic
// function of the Student t-density with parameter k + 1/2 equals
// exp(-|t|) q_k(|t|); a normalized reverse-Bessel-type polynomial.
struct BasisPolynomial {
    unsigned order = 0;
    RationalPolynomial poly;
};

/// q_k with exact coefficients (2k-j)! k! 2^j / ((2k)! (k-j)! j!).
BasisPolynomial basis_poly(unsigned k);

/// Coefficients (c_0, ..., c_kmax) with p = sum c_k q_k, found by
/// back-substitution from the top degree; unique since deg q_k = k.
/// Throws std::invalid_argument if deg(p) > k_max.
std::vector<BigRational> decompose_in_basis(const RationalPolynomial& p,
                                            unsigned k_max);

/// sum c_k q_k; inverse of decompose_in_basis.
RationalPolynomial recombine_from_basis(const std::vector<BigRational>& coeffs);

}  // namespace tconv

#endif  // TCONV_BESSEL_BASIS_HPP
