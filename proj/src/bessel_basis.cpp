#include "tconv/bessel_basis.hpp"

#include <stdexcept>

namespace tconv {

BasisPolynomial basis_poly(unsigned k) {
    std::vector<BigRational> c(k + 1);
    // (2k-j)! k! 2^j / ((2k)! (k-j)! j!); j = 0 gives 1, so q_k(0) = 1.
    const BigInt kf = factorial(k);
    const BigInt kf2 = factorial(2 * k);
    for (unsigned j = 0; j <= k; ++j) {
        BigInt num = factorial(2 * k - j) * kf * pow(BigInt(2), j);
        BigInt den = kf2 * factorial(k - j) * factorial(j);
        c[j] = BigRational(num, den);
    }
    return BasisPolynomial{k, RationalPolynomial(std::move(c))};
}

std::vector<BigRational> decompose_in_basis(const RationalPolynomial& p,
                                            unsigned k_max) {
    if (p.degree() > static_cast<int>(k_max))
        throw std::invalid_argument("decompose_in_basis: degree exceeds k_max");

    std::vector<BigRational> coeffs(k_max + 1);
    RationalPolynomial residual = p;
    for (unsigned k = k_max + 1; k-- > 0;) {
        if (residual.degree() < static_cast<int>(k)) continue;
        BasisPolynomial qk = basis_poly(k);
        BigRational ck = residual.coeff(k) / qk.poly.leading_coefficient();
        residual -= ck * qk.poly;
        coeffs[k] = std::move(ck);
    }
    // deg q_k = k makes the elimination triangular: the residual is empty
    // once every degree has been cleared.
    if (!residual.is_zero())
        throw std::logic_error("decompose_in_basis: nonzero residual");
    return coeffs;
}

RationalPolynomial recombine_from_basis(const std::vector<BigRational>& coeffs) {
    RationalPolynomial acc;
    for (unsigned k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        acc += coeffs[k] * basis_poly(k).poly;
    }
    return acc;
}

}  // namespace tconv
