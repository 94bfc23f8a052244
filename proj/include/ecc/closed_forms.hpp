#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ecc/polynomial.hpp"

namespace ecc {

struct ClosedEigenvalue {
    double value = 0.0;
    int multiplicity = 1;
    std::string source;  // formula tag, e.g. "sqrt((alpha+sqrt(beta))/2)"
};

/// Spectrum assembled from closed-form expressions; entries are sorted
/// descending and multiplicities sum to the graph order.
struct ClosedSpectrum {
    int order = 0;
    std::vector<ClosedEigenvalue> entries;

    std::vector<double> values() const;  // expanded, descending
};

// Star K_{1,n-1}: {n-2 +- sqrt(n^2-3n+3), -2 with multiplicity n-2}.
ClosedSpectrum star_spectrum(int n);

// Double star T_{n,3}^{a,b}: +-sqrt((alpha +- sqrt(beta))/2) and n-4
// zeros, with alpha = 9ab+13a+13b+17, beta = alpha^2 - 64(a+1)(b+1).
ClosedSpectrum double_star_spectrum(int n, int a, int b);

// Second-largest eigenvalue of the diameter-3 tree T_{n,3}^{a,n-4-a}.
double xi2_diam3(std::int64_t n, std::int64_t a);

// xi2(T_{n,3}^{0,n-4}) < sqrt(2); evaluates the closed form.
bool xi2_sqrt2_bound(std::int64_t n);

// Second-largest eigenvalue of the 4x4 corner submatrix of a tree with
// diameter d: (sqrt(d^2 + 4(d-1)^2) - d)/2. Exceeds sqrt(2) for d >= 4.
double xi2_floor_d_ge_4(std::int64_t d);

// E-energy of T_{n,3}^{0,n-4}: 2*sqrt(13n-35+8*sqrt(n-3)).
double energy_T_n3(std::int64_t n);

// T_{n,5}^{a,b}: alpha = 16(a+b)+75, beta = 256(a+b)^2+800(a+b)-1024ab+3125.
ClosedSpectrum t5_spectrum(int n, int a, int b);
double t5_energy(int n, int a, int b);  // 2*sqrt(16n-21+sqrt(1600n-7100+1024ab))

// T_{n,6}^{a,b,a}: {3 +- sqrt(25a+32b+68), +-5*sqrt(a+2) - 3, zeros}.
ClosedSpectrum t6_aba_spectrum(int n, int a, int b);
double t6_aba_energy(int n, int a, int b);  // 2(sqrt(32n-39a-156)+5*sqrt(a+2))

// T_{n,6}^{a,b,a+1}: the nonzero eigenvalues are the roots of
// x^4 - (50a+32b+161)x^2 - (192b+108)x + 625a^2+3125a+800ab+1712b+3669.
IntPolynomial t6_ab_a1_polynomial(int n, int a, int b);

struct BracketCertificate {
    double p_at_low = 0.0;    // p(5*sqrt(a)-3), expected > 0
    double p_at_inner = 0.0;  // p(1+sqrt(32n-39a-156)), expected < 0
    double p_at_outer = 0.0;  // p(3+sqrt(32n-39a-156)), expected > 0

    bool holds() const { return p_at_low > 0.0 && p_at_inner < 0.0 && p_at_outer > 0.0; }
};
BracketCertificate t6_ab_a1_brackets(int n, int a, int b);

// The two positive roots (x1 >= x2) of t6_ab_a1_polynomial and the
// resulting energy 2(x1+x2).
std::pair<double, double> t6_ab_a1_positive_roots(int n, int a, int b);
double t6_ab_a1_energy(int n, int a, int b);

// T_{n,7}^{a,b}: alpha = 25(a+b)+203, beta = 625(a+b)^2+2450(a+b)-2500ab+17493.
ClosedSpectrum t7_spectrum(int n, int a, int b);
double t7_energy(int n, int a, int b);  // 2*sqrt(25n+3+sqrt(7700n-37884+2500ab))

// Gamma(d) = d(d-1)(7d-5)/24 and Theta(d) = d(d-1)(7d-2)/24, exact;
// throws NonIntegerResult when 24 does not divide the product.
std::int64_t gamma_d(std::int64_t d);
std::int64_t theta_d(std::int64_t d);

// Quartic whose largest root is xi1(T_{n,d}^{a,b}) for odd d >= 5:
// x^4 - (2*Gamma(d) + ((d+3)/2)^2 (a+b) + d^2) x^2
//     + (Gamma(d) + ((d+3)/2)^2 a)(Gamma(d) + ((d+3)/2)^2 b).
IntPolynomial xi1_odd_quartic(int d, std::int64_t a, std::int64_t b);

// Quartic whose largest root is xi1(T_{n,d}^{a,b,c}) for even d >= 6;
// the off-diagonal degree-0 part makes the x coefficient nonzero.
IntPolynomial xi1_even_quartic(int d, std::int64_t a, std::int64_t b, std::int64_t c);

// Strict sandwich sqrt(13n-37) < xi1(T_{n,3}^{0,n-4}) < sqrt(13n-36).
std::pair<double, double> xi1_bounds_T_n3(std::int64_t n);

// Minimum E-spectral radius over all trees on n vertices.
double min_gen_bound(int n);

/// One suspected-misprint adjudication: both candidate closed forms are
/// evaluated against direct eigensolves of the relevant trees and the
/// one agreeing within 1e-8 on every instance wins.
struct TypoVerdict {
    std::string id;
    std::string printed_form;
    std::string corrected_form;
    int instances = 0;
    double printed_max_dev = 0.0;
    double corrected_max_dev = 0.0;
    std::string winner;  // "corrected" or "printed"
    bool decisive = false;
};

std::vector<TypoVerdict> adjudicate_typos();

}  // namespace ecc
