#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ecc/matrix.hpp"

namespace ecc {

/// Eigenvalues of a symmetric matrix, sorted descending, together with
/// the tolerance used to classify an eigenvalue as zero.
struct Spectrum {
    std::vector<double> values;
    double zero_tol = 0.0;

    int size() const { return static_cast<int>(values.size()); }
};

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;

    bool operator==(const Inertia&) const = default;
};

/// All eigenvalues of a dense symmetric matrix (row-major, n*n), via
/// Householder reduction to tridiagonal form and implicit-shift QL.
/// zero_tol of the result is 1e-8 * n * scale; pass the max absolute
/// entry as scale.
Spectrum sym_eigenvalues_dense(std::vector<double> a, int n, double scale);

Spectrum sym_eigenvalues(const IntSymMatrix& m);

Inertia inertia_of(const Spectrum& s);

// Sum of absolute eigenvalues.
double ecc_energy(const Spectrum& s);

// k-th largest eigenvalue, 1-based.
double xi_k(const Spectrum& s, int k);

// Cauchy interlacing between m and its principal submatrix on idx,
// checked with 1e-8 slack.
bool check_interlacing(const IntSymMatrix& m, std::span<const int> idx);

// Groups near-equal eigenvalues (absolute gap <= gap) for report output.
std::vector<std::pair<double, int>> group_multiplicities(const Spectrum& s, double gap = 1e-7);

}  // namespace ecc
