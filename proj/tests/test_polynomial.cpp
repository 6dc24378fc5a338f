#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "tconv/polynomial.hpp"

using tconv::BigRational;
using tconv::RationalPolynomial;

namespace {

RationalPolynomial random_poly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(-1, max_degree);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    const int d = deg(rng);
    std::vector<BigRational> coeffs;
    for (int j = 0; j <= d; ++j) coeffs.emplace_back(num(rng), den(rng));
    return RationalPolynomial(std::move(coeffs));
}

}  // namespace

TEST_CASE("degree, trimming, and the zero polynomial") {
    CHECK(RationalPolynomial().degree() == -1);
    CHECK((RationalPolynomial{{BigRational(0), BigRational(0)}}.degree() == -1));
    CHECK((RationalPolynomial{{BigRational(3)}}.degree() == 0));
    CHECK((RationalPolynomial{{BigRational(1), BigRational(0)}}.degree() == 0));
    const RationalPolynomial p{{BigRational(1), BigRational(2), BigRational(0)}};
    CHECK(p.degree() == 1);
    CHECK(p.coeff(0) == BigRational(1));
    CHECK(p.coeff(1) == BigRational(2));
    CHECK(p.coeff(5) == BigRational(0));
    CHECK(p.leading_coefficient() == BigRational(2));
    CHECK_THROWS_AS(RationalPolynomial().leading_coefficient(), std::logic_error);
}

TEST_CASE("exact Horner evaluation") {
    // 3/2 + a evaluated at a = 2 gives 7/2.
    const RationalPolynomial p1{{BigRational(3, 2), BigRational(1)}};
    CHECK(p1(BigRational(2)) == BigRational(7, 2));
    CHECK(p1(BigRational(0)) == BigRational(3, 2));
    CHECK(p1.eval_double(2.0) == doctest::Approx(3.5).epsilon(1e-15));

    // (1 + x/2)^2 = 1 + x + x^2/4.
    const RationalPolynomial q{{BigRational(1), BigRational(1, 2)}};
    const RationalPolynomial sq = q * q;
    CHECK((sq == RationalPolynomial{{BigRational(1), BigRational(1), BigRational(1, 4)}}));
    CHECK(sq(BigRational(-2)) == BigRational(0));
}

TEST_CASE("scale_argument substitutes c*x exactly") {
    const RationalPolynomial p{{BigRational(1), BigRational(1), BigRational(1, 3)}};
    const RationalPolynomial scaled = p.scale_argument(BigRational(1, 2));
    CHECK((scaled ==
           RationalPolynomial{{BigRational(1), BigRational(1, 2), BigRational(1, 12)}}));
    // p(c*x) at x equals p at c*x, pointwise.
    for (long x = -3; x <= 3; ++x) {
        CHECK(scaled(BigRational(x)) == p(BigRational(x, 2)));
    }
    // Scaling by zero keeps only the constant term.
    CHECK(p.scale_argument(BigRational(0)) ==
          RationalPolynomial::constant(BigRational(1)));
}

TEST_CASE("randomized ring axioms and evaluation homomorphism") {
    std::mt19937 rng(20260823);
    std::uniform_int_distribution<long> point_num(-5, 5);
    std::uniform_int_distribution<long> point_den(1, 5);
    for (int trial = 0; trial < 120; ++trial) {
        const RationalPolynomial a = random_poly(rng, 8);
        const RationalPolynomial b = random_poly(rng, 8);
        const RationalPolynomial c = random_poly(rng, 8);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == RationalPolynomial::zero());

        const BigRational x(point_num(rng), point_den(rng));
        CHECK((a + b)(x) == a(x) + b(x));
        CHECK((a * b)(x) == a(x) * b(x));
    }
}

TEST_CASE("degree bookkeeping under multiplication and cancellation") {
    const RationalPolynomial x{{BigRational(0), BigRational(1)}};
    RationalPolynomial p = RationalPolynomial::constant(BigRational(1));
    for (int d = 1; d <= 20; ++d) {
        p = p * x;
        CHECK(p.degree() == d);
    }
    // (x + 1) - x has degree 0; (x) - (x) collapses to the zero polynomial.
    const RationalPolynomial xp1{{BigRational(1), BigRational(1)}};
    CHECK((xp1 - x).degree() == 0);
    CHECK((x - x).is_zero());
    CHECK((x - x).degree() == -1);
}

TEST_CASE("scalar multiplication") {
    const RationalPolynomial p{{BigRational(2), BigRational(4)}};
    CHECK((BigRational(1, 2) * p ==
           RationalPolynomial{{BigRational(1), BigRational(2)}}));
    CHECK((BigRational(0) * p).is_zero());
}
