#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace ecc {

/// Univariate polynomial with exact integer coefficients, stored in
/// ascending degree order. Arithmetic is exact (GMP), roots are only
/// extracted at the very end.
class IntPolynomial {
public:
    IntPolynomial() = default;  // zero polynomial
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial monomial(int degree, const mpz_class& coeff = 1);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const mpz_class& coeff(int k) const;  // zero beyond the degree
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    double eval(double x) const;
    mpz_class eval_exact(const mpz_class& x) const;

    // Strips a factor x^k; requires the k lowest coefficients to vanish.
    IntPolynomial shifted_down(int k) const;
    int trailing_zero_coeffs() const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const mpz_class& c) const;
    bool operator==(const IntPolynomial& o) const = default;

    std::string to_string() const;  // e.g. "x^4 - 107*x^2 + 1681"

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

/// Largest real root in [0, 1 + Cauchy bound], located by scanning for
/// the rightmost sign change and bisecting to ~1e-12 relative error.
double largest_root(const IntPolynomial& p);

/// Root inside a caller-supplied bracket with p(lo) and p(hi) of opposite
/// sign.
double root_in_bracket(const IntPolynomial& p, double lo, double hi);

}  // namespace ecc
