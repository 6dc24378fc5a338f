#ifndef TCONV_RATIONAL_HPP
#define TCONV_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tconv {

using BigInt = mpz_class;

// Largest argument accepted by factorial/binomial unless the caller
// overrides it.  Guards against runaway CLI input, not against any
// mathematical limit.
inline constexpr unsigned long kArgumentCap = 10'000;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.  All arithmetic is exact.
class BigRational {
public:
    BigRational() : q_(0) {}
    BigRational(long n) : q_(n) {}            // NOLINT(google-explicit-constructor)
    BigRational(int n) : q_(n) {}             // NOLINT(google-explicit-constructor)
    BigRational(unsigned long n) : q_(n) {}   // NOLINT(google-explicit-constructor)
    BigRational(unsigned n) : q_(n) {}        // NOLINT(google-explicit-constructor)
    explicit BigRational(const BigInt& n) : q_(n) {}

    BigRational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("BigRational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}

    static BigRational zero() { return BigRational(); }
    static BigRational one() { return BigRational(1); }

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    BigRational operator-() const { return BigRational(mpq_class(-q_)); }

    BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
    BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
    BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
    BigRational& operator/=(const BigRational& o) {
        if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
    }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return !(a == b); }
    friend bool operator<(const BigRational& a, const BigRational& b) {
        return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) < 0;
    }
    friend bool operator>(const BigRational& a, const BigRational& b) { return b < a; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return !(b < a); }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return !(a < b); }

    double to_double() const { return q_.get_d(); }

    /// "p/q" in lowest terms, plain "p" when the denominator is 1.
    std::string to_string() const { return q_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const BigRational& r) {
        return os << r.q_;
    }

    const mpq_class& raw() const { return q_; }

private:
    explicit BigRational(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_;  // gmp keeps canonical form through arithmetic
};

/// Integer power with exact result; negative exponents invert (base must be
/// nonzero in that case).
inline BigRational pow(const BigRational& base, long exponent) {
    if (exponent == 0) return BigRational::one();
    const unsigned long e =
        exponent > 0 ? static_cast<unsigned long>(exponent)
                     : static_cast<unsigned long>(-(exponent + 1)) + 1;
    if (exponent < 0 && base.is_zero())
        throw std::domain_error("pow: zero base with negative exponent");
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), e);
    return exponent > 0 ? BigRational(num, den) : BigRational(den, num);
}

inline BigInt pow(const BigInt& base, unsigned long exponent) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

inline BigRational abs(const BigRational& r) { return r.sign() < 0 ? -r : r; }

/// n! as an exact integer.  Arguments above `cap` are rejected as runaway
/// input.
inline BigInt factorial(unsigned long n, unsigned long cap = kArgumentCap) {
    if (n > cap) throw std::domain_error("factorial: argument exceeds cap");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// C(n, k); zero when k is negative or exceeds n.
inline BigInt binomial(unsigned long n, long k, unsigned long cap = kArgumentCap) {
    if (n > cap) throw std::domain_error("binomial: argument exceeds cap");
    if (k < 0 || static_cast<unsigned long>(k) > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

/// Rising factorial x(x+1)...(x+i-1); empty product for i = 0.
inline BigRational pochhammer(const BigRational& x, unsigned long i) {
    BigRational r = BigRational::one();
    BigRational f = x;
    for (unsigned long j = 0; j < i; ++j, f += 1) r *= f;
    return r;
}

/// (1/2)_m = (1/2)(3/2)...((2m-1)/2), computed as the odd double factorial
/// over 2^m.
inline BigRational pochhammer_half(unsigned long m) {
    BigInt odds(1);
    for (unsigned long j = 1; j <= m; ++j) odds *= 2 * j - 1;
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, m);
    return BigRational(odds, den);
}

/// Parses "p/q" or a plain integer (optional sign).  Decimal notation is
/// rejected; exact inputs never pass through floating point.
inline std::optional<BigRational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    const auto slash = text.find('/');
    const auto is_int = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    try {
        if (slash == std::string_view::npos) {
            if (!is_int(text)) return std::nullopt;
            return BigRational(BigInt(std::string(text)));
        }
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) return std::nullopt;
        BigInt d{std::string(den)};
        if (d == 0) return std::nullopt;
        return BigRational(BigInt(std::string(num)), d);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

}  // namespace tconv

#endif  // TCONV_RATIONAL_HPP
