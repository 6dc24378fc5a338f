#include "tconv/student.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include "tconv/bessel_basis.hpp"

namespace tconv {

double PiScaledRational::to_double() const {
    double v = r_.to_double();
    if (e_ == 1) v *= std::numbers::pi;
    if (e_ == -1) v /= std::numbers::pi;
    return v;
}

StudentDensity::StudentDensity(unsigned m) : m_(m) {
    const BigInt mf = factorial(m);
    normalizer_ = PiScaledRational(
        BigRational(pow(BigInt(4), m) * mf * mf, factorial(2 * m)), -1);
}

double StudentDensity::density_value(double x) const {
    return normalizer_.to_double() / std::pow(1.0 + x * x, m_ + 1.0);
}

BetaTable::BetaTable(unsigned n, unsigned m, BigRational a,
                     std::map<unsigned, BigRational> coefficients)
    : n_(n), m_(m), a_(std::move(a)), coeffs_(std::move(coefficients)) {
    if (a_ <= 0 || a_ >= 1)
        throw std::domain_error("BetaTable: scale a must satisfy 0 < a < 1");
    BigRational sum;
    for (const auto& [k, v] : coeffs_) {
        if (k < k_min() || k > k_max())
            throw std::logic_error("BetaTable: index outside [min(n,m), n+m]");
        sum += v;
    }
    if (sum != BigRational::one())
        throw std::logic_error("BetaTable: coefficients do not sum to 1");
}

const BigRational& BetaTable::at(unsigned k) const {
    static const BigRational kZero;
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? kZero : it->second;
}

const BigRational& BetaTable::min_coefficient() const {
    const BigRational* best = nullptr;
    for (const auto& [k, v] : coeffs_)
        if (best == nullptr || v < *best) best = &v;
    if (best == nullptr) throw std::logic_error("BetaTable: empty table");
    return *best;
}

BetaTable beta_table_via_basis(unsigned n, unsigned m, const BigRational& a) {
    if (a <= 0 || a >= 1)
        throw std::domain_error("beta: scale a must satisfy 0 < a < 1");

    // Fourier side: the convolution's characteristic function is
    // exp(-|t|) q_n(a|t|) q_m((1-a)|t|), so the mixture weights are the
    // q-basis coordinates of q_n(a t) q_m((1-a) t).
    const RationalPolynomial product =
        basis_poly(n).poly.scale_argument(a) *
        basis_poly(m).poly.scale_argument(BigRational(1) - a);
    const std::vector<BigRational> c = decompose_in_basis(product, n + m);

    const unsigned k_min = n < m ? n : m;
    std::map<unsigned, BigRational> table;
    for (unsigned k = 0; k < c.size(); ++k) {
        if (k < k_min) {
            if (!c[k].is_zero())
                throw std::logic_error("beta: nonzero coefficient below min(n,m)");
            continue;
        }
        table.emplace(k, c[k]);
    }
    return BetaTable(n, m, a, std::move(table));
}

namespace {

// Per-run memo; recursion and symmetry sweeps hit the same (n, m, a) keys
// many times.  Reads and insert-if-absent are serialized; the table values
// are immutable once stored.
class BetaCache {
public:
    BetaTable get(unsigned n, unsigned m, const BigRational& a) {
        const std::string key =
            std::to_string(n) + "," + std::to_string(m) + "," + a.to_string();
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second;
        }
        BetaTable t = beta_table_via_basis(n, m, a);
        std::lock_guard<std::mutex> lock(mu_);
        return map_.try_emplace(key, std::move(t)).first->second;
    }

private:
    std::mutex mu_;
    std::map<std::string, BetaTable> map_;
};

BetaCache& cache() {
    static BetaCache c;
    return c;
}

}  // namespace

BetaTable beta_general(unsigned n, unsigned m, const BigRational& a) {
    if (a <= 0 || a >= 1)
        throw std::domain_error("beta: scale a must satisfy 0 < a < 1");
    return cache().get(n, m, a);
}

BigRational beta_equal_orders(unsigned m, unsigned i, const BigRational& a) {
    if (i > m) throw std::out_of_range("beta_equal_orders: require 0 <= i <= m");
    if (a <= 0 || a >= 1)
        throw std::domain_error("beta: scale a must satisfy 0 < a < 1");

    const BigRational ratio(factorial(m), factorial(2 * m));
    BigRational front = pow(BigRational(4) * a * (BigRational(1) - a),
                            static_cast<long>(i)) *
                        ratio * ratio * BigRational(BigInt(1), pow(BigInt(2), 2 * m)) *
                        BigRational(factorial(2 * m - 2 * i) * factorial(2 * m + 2 * i),
                                    factorial(m - i) * factorial(m + i));
    const BigRational shifted = BigRational(2) * a - BigRational(1);
    BigRational sum;
    for (unsigned j = 0; j <= m - i; ++j)
        sum += BigRational(BigInt(binomial(2 * m + 1, 2 * j) *
                                  binomial(m - j, static_cast<long>(i)))) *
               pow(shifted, 2 * static_cast<long>(j));
    return front * sum;
}

BigRational beta_half(unsigned m, unsigned i) {
    if (i > m) throw std::out_of_range("beta_half: require 0 <= i <= m");
    const BigRational ratio(factorial(m), factorial(2 * m));
    return ratio * ratio * BigRational(BigInt(1), pow(BigInt(2), 2 * m)) *
           BigRational(factorial(2 * m - 2 * i) * factorial(2 * m + 2 * i),
                       factorial(m - i) * factorial(m + i)) *
           BigRational(binomial(m, static_cast<long>(i)));
}

BetaTable apply_symmetry(const BetaTable& t) {
    return BetaTable(t.m(), t.n(), BigRational(1) - t.a(), t.coefficients());
}

bool check_recursion(unsigned n, unsigned m, const BigRational& a) {
    if (n < 1 || m < 1)
        throw std::invalid_argument("check_recursion: require n, m >= 1");
    const BetaTable full = beta_general(n, m, a);
    const BetaTable left = beta_general(n - 1, m, a);
    const BetaTable right = beta_general(n, m - 1, a);

    const BigRational ca = a * a / BigRational(2 * n - 1);
    const BigRational cb =
        (BigRational(1) - a) * (BigRational(1) - a) / BigRational(2 * m - 1);
    for (unsigned k = 0; k <= n + m; ++k) {
        const BigRational lhs = full.at(k + 1) / BigRational(2 * k + 1);
        const BigRational rhs = ca * left.at(k) + cb * right.at(k);
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace tconv
