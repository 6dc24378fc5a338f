#ifndef TCONV_STUDENT_HPP
#define TCONV_STUDENT_HPP

#include <map>
#include <stdexcept>
#include <utility>

#include "tconv/rational.hpp"

namespace tconv {

/// Exact value r * pi^e with rational r and e in {-1, 0, 1}.
class PiScaledRational {
public:
    PiScaledRational() = default;
    PiScaledRational(BigRational r, int pi_exponent)
        : r_(std::move(r)), e_(pi_exponent) {
        if (e_ < -1 || e_ > 1)
            throw std::domain_error("PiScaledRational: pi exponent out of range");
    }

    const BigRational& rational_part() const { return r_; }
    int pi_exponent() const { return e_; }

    friend PiScaledRational operator*(const PiScaledRational& a,
                                      const PiScaledRational& b) {
        return PiScaledRational(a.r_ * b.r_, a.e_ + b.e_);
    }
    friend bool operator==(const PiScaledRational& a, const PiScaledRational& b) {
        if (a.r_.is_zero() && b.r_.is_zero()) return true;
        return a.r_ == b.r_ && a.e_ == b.e_;
    }

    double to_double() const;

private:
    BigRational r_;
    int e_ = 0;
};

/// Student t-density f_nu(x) = A_nu / (1+x^2)^(nu + 1/2) with nu = m + 1/2,
/// i.e. 2m+1 degrees of freedom; m = 0 is the standard Cauchy density.
class StudentDensity {
public:
    explicit StudentDensity(unsigned m);

    unsigned m() const { return m_; }

    /// A_{m+1/2} = 4^m (m!)^2 / (pi (2m)!), a rational multiple of 1/pi.
    const PiScaledRational& normalizer() const { return normalizer_; }

    /// A_{m+1/2} / (1+x^2)^(m+1), in floating point.
    double density_value(double x) const;

private:
    unsigned m_;
    PiScaledRational normalizer_;
};

/// Coefficients beta_k^{(n,m)}(a), k = min(n,m) .. n+m, expressing the
/// convolution of two complementarily scaled Student densities as a finite
/// mixture of Student densities.  Construction enforces 0 < a < 1, the index
/// range, and the exact normalization sum beta_k = 1; nonnegativity is the
/// claim the verification suites test, not a construction precondition.
class BetaTable {
public:
    BetaTable(unsigned n, unsigned m, BigRational a,
              std::map<unsigned, BigRational> coefficients);

    unsigned n() const { return n_; }
    unsigned m() const { return m_; }
    const BigRational& a() const { return a_; }
    unsigned k_min() const { return n_ < m_ ? n_ : m_; }
    unsigned k_max() const { return n_ + m_; }

    const std::map<unsigned, BigRational>& coefficients() const { return coeffs_; }
    const BigRational& at(unsigned k) const;

    /// Smallest stored coefficient; negative means the nonnegativity claim
    /// failed.
    const BigRational& min_coefficient() const;

    friend bool operator==(const BetaTable& x, const BetaTable& y) {
        return x.n_ == y.n_ && x.m_ == y.m_ && x.a_ == y.a_ && x.coeffs_ == y.coeffs_;
    }

private:
    unsigned n_, m_;
    BigRational a_;
    std::map<unsigned, BigRational> coeffs_;
};

/// beta table for arbitrary (n, m) via the characteristic-function basis
/// change: decompose q_n(a t) q_m((1-a) t) in the q_k basis.  Exact; indices
/// below min(n,m) must come out zero and are dropped after assertion.
/// Throws std::domain_error unless 0 < a < 1.
BetaTable beta_general(unsigned n, unsigned m, const BigRational& a);

/// Same computation with no memoization; beta_general is a transparent memo
/// over this.
BetaTable beta_table_via_basis(unsigned n, unsigned m, const BigRational& a);

/// Closed form for equal orders:
/// beta_{m+i}^{(m,m)}(a) = (4a(1-a))^i (m!/(2m)!)^2 2^{-2m}
///   * (2m-2i)!(2m+2i)! / ((m-i)!(m+i)!)
///   * sum_j C(2m+1, 2j) C(m-j, i) (2a-1)^{2j}.
BigRational beta_equal_orders(unsigned m, unsigned i, const BigRational& a);

/// Specialization at a = 1/2:
/// beta_{m+i}^{(m,m)}(1/2) = (m!/(2m)!)^2 2^{-2m}
///   * (2m-2i)!(2m+2i)! / ((m-i)!(m+i)!) * C(m, i).
BigRational beta_half(unsigned m, unsigned i);

/// beta_k^{(n,m)}(a) = beta_k^{(m,n)}(1-a): relabels without recomputation.
BetaTable apply_symmetry(const BetaTable& t);

/// Checks beta_{k+1}^{(n,m)}(a) / (2k+1) =
///   a^2/(2n-1) beta_k^{(n-1,m)}(a) + (1-a)^2/(2m-1) beta_k^{(n,m-1)}(a)
/// exactly for every k, out-of-range entries read as zero.  Requires
/// n, m >= 1 and 0 < a < 1.
bool check_recursion(unsigned n, unsigned m, const BigRational& a);

}  // namespace tconv

#endif  // TCONV_STUDENT_HPP
