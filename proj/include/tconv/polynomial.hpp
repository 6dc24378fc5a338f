#ifndef TCONV_POLYNOMIAL_HPP
#define TCONV_POLYNOMIAL_HPP

#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tconv/rational.hpp"

namespace tconv {

/// Dense univariate polynomial over BigRational.  coefficient index =
/// degree; trailing zeros are trimmed, the zero polynomial stores nothing.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    RationalPolynomial(std::initializer_list<BigRational> coeffs)
        : coeffs_(coeffs) {
        trim();
    }
    explicit RationalPolynomial(std::vector<BigRational> coeffs)
        : coeffs_(std::move(coeffs)) {
        trim();
    }

    static RationalPolynomial zero() { return {}; }
    static RationalPolynomial constant(const BigRational& c) { return {{c}}; }

    bool is_zero() const { return coeffs_.empty(); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<BigRational>& coefficients() const { return coeffs_; }

    /// Coefficient of x^j; zero beyond the degree.
    const BigRational& coeff(std::size_t j) const {
        static const BigRational kZero;
        return j < coeffs_.size() ? coeffs_[j] : kZero;
    }

    const BigRational& leading_coefficient() const {
        if (is_zero())
            throw std::logic_error("leading_coefficient of zero polynomial");
        return coeffs_.back();
    }

    /// Exact Horner evaluation.
    BigRational operator()(const BigRational& x) const {
        BigRational acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    /// Horner in double, for the floating-parameter paths.
    double eval_double(double x) const {
        double acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + it->to_double();
        return acc;
    }

    RationalPolynomial& operator+=(const RationalPolynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
        trim();
        return *this;
    }
    RationalPolynomial& operator-=(const RationalPolynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
        trim();
        return *this;
    }

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) {
        return a += b;
    }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) {
        return a -= b;
    }

    friend RationalPolynomial operator*(const RationalPolynomial& a,
                                        const RationalPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigRational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return RationalPolynomial(std::move(c));
    }

    RationalPolynomial& operator*=(const RationalPolynomial& o) {
        return *this = *this * o;
    }

    /// c * p(x).
    friend RationalPolynomial operator*(const BigRational& c, RationalPolynomial p) {
        if (c.is_zero()) return {};
        for (auto& cj : p.coeffs_) cj *= c;
        return p;
    }

    /// p(c * x): coefficient j picks up c^j.
    RationalPolynomial scale_argument(const BigRational& c) const {
        if (c.is_zero())
            return is_zero() ? zero() : constant(coeffs_[0]);
        std::vector<BigRational> out(coeffs_.size());
        BigRational cj = BigRational::one();
        for (std::size_t j = 0; j < coeffs_.size(); ++j, cj *= c)
            out[j] = coeffs_[j] * cj;
        return RationalPolynomial(std::move(out));
    }

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const RationalPolynomial& a, const RationalPolynomial& b) {
        return !(a == b);
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<BigRational> coeffs_;
};

}  // namespace tconv

#endif  // TCONV_POLYNOMIAL_HPP
