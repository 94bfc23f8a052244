#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ecc/errors.hpp"
#include "ecc/polynomial.hpp"
#include "helpers.hpp"

using namespace ecc;
using ecc::testing::near;

TEST_CASE("construction, trimming and printing") {
    const IntPolynomial p{3669, -108, -161, 0, 1};
    CHECK(p.degree() == 4);
    CHECK(p.to_string() == "x^4 - 161*x^2 - 108*x + 3669");

    const IntPolynomial trimmed{1, 2, 0, 0};
    CHECK(trimmed.degree() == 1);

    CHECK(IntPolynomial{}.is_zero());
    CHECK(IntPolynomial{}.to_string() == "0");
    CHECK(IntPolynomial::monomial(1).to_string() == "x");
}

TEST_CASE("arithmetic is exact") {
    const IntPolynomial a{1, 1};      // x + 1
    const IntPolynomial b{-1, 1};     // x - 1
    CHECK(a * b == IntPolynomial{-1, 0, 1});
    CHECK(a + b == IntPolynomial{0, 2});
    CHECK(a - b == IntPolynomial{2});
    CHECK((a * mpz_class(3)) == IntPolynomial{3, 3});

    // coefficients beyond machine range stay exact
    IntPolynomial big = IntPolynomial::monomial(0, mpz_class("123456789123456789"));
    const IntPolynomial sq = big * big;
    CHECK(sq.coeff(0) == mpz_class("15241578780673678515622620750190521"));

    CHECK(a.eval_exact(mpz_class(41)) == 42);
    CHECK(near(a.eval(0.5), 1.5, 1e-15));
}

TEST_CASE("trailing zero coefficients strip off") {
    const IntPolynomial p{0, 0, 1681, 0, -107, 0, 1};  // x^2 (x^4 - 107 x^2 + 1681)
    CHECK(p.trailing_zero_coeffs() == 2);
    CHECK(p.shifted_down(2) == IntPolynomial{1681, 0, -107, 0, 1});
    CHECK_THROWS_AS(p.shifted_down(3), Error);
}

TEST_CASE("largest root of simple polynomials") {
    CHECK(near(largest_root(IntPolynomial{-4, 0, 1}), 2.0, 1e-11));

    // x^4 - 107 x^2 + 1681 -> sqrt((107 + sqrt(4725))/2)
    const double expected = std::sqrt((107.0 + std::sqrt(4725.0)) / 2.0);
    CHECK(near(largest_root(IntPolynomial{1681, 0, -107, 0, 1}), expected, 1e-10));

    // two positive roots on either side of a local max
    const double x1 = largest_root(IntPolynomial{3669, -108, -161, 0, 1});
    CHECK(x1 > 11.0);
    CHECK(x1 < 13.0);
}

TEST_CASE("largest root failure modes") {
    CHECK_THROWS_AS(largest_root(IntPolynomial{5}), NoRootInBracket);
    CHECK_THROWS_AS(largest_root(IntPolynomial{1, 0, 1}), NoRootInBracket);   // x^2 + 1
    CHECK_THROWS_AS(largest_root(IntPolynomial{2, 3, 1}), NoRootInBracket);   // roots -1, -2
}

TEST_CASE("root_in_bracket") {
    const IntPolynomial p{-4, 0, 1};
    CHECK(near(root_in_bracket(p, 0.0, 3.0), 2.0, 1e-11));
    CHECK(near(root_in_bracket(p, -3.0, 0.0), -2.0, 1e-11));
    CHECK_THROWS_AS(root_in_bracket(p, 3.0, 4.0), NoRootInBracket);
}
