#include "ecc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ecc/errors.hpp"
#include "ecc/graph.hpp"

namespace ecc {

namespace {

constexpr int kMaxSweeps = 64;

// Householder reduction of a symmetric matrix (row-major, destroyed) to
// tridiagonal form: d receives the diagonal, e the subdiagonal in
// e[1..n-1].
void tridiagonalize(std::vector<double>& a, int n, std::vector<double>& d, std::vector<double>& e) {
    for (int i = n - 1; i >= 1; --i) {
        const int l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double scale = 0.0;
            for (int k = 0; k <= l; ++k) scale += std::fabs(a[i * n + k]);
            if (scale == 0.0) {
                e[i] = a[i * n + l];
            } else {
                for (int k = 0; k <= l; ++k) {
                    a[i * n + k] /= scale;
                    h += a[i * n + k] * a[i * n + k];
                }
                double f = a[i * n + l];
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                a[i * n + l] = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += a[j * n + k] * a[i * n + k];
                    for (int k = j + 1; k <= l; ++k) g += a[k * n + j] * a[i * n + k];
                    e[j] = g / h;
                    f += e[j] * a[i * n + j];
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = a[i * n + j];
                    e[j] = g = e[j] - hh * f;
                    for (int k = 0; k <= j; ++k)
                        a[j * n + k] -= (f * e[k] + g * a[i * n + k]);
                }
            }
        } else {
            e[i] = a[i * n + l];
        }
    }
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) d[i] = a[i * n + i];
}

// Implicit-shift QL on a symmetric tridiagonal matrix; eigenvalues land
// in d (unordered).
void ql_implicit_shift(std::vector<double>& d, std::vector<double>& e, int n) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == kMaxSweeps)
                    throw NoConvergence("QL iteration cap exceeded at eigenvalue " +
                                        std::to_string(l));
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace

Spectrum sym_eigenvalues_dense(std::vector<double> a, int n, double scale) {
    Spectrum s;
    s.zero_tol = 1e-8 * n * std::max(scale, 1e-300);
    if (n == 1) {
        s.values = {a[0]};
        return s;
    }
    std::vector<double> d(n, 0.0), e(n, 0.0);
    tridiagonalize(a, n, d, e);
    ql_implicit_shift(d, e, n);
    std::sort(d.begin(), d.end(), std::greater<>());
    s.values = std::move(d);
    return s;
}

Spectrum sym_eigenvalues(const IntSymMatrix& m) {
    const int n = m.dim();
    std::vector<double> a(static_cast<size_t>(n) * n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) a[static_cast<size_t>(u) * n + v] = m(u, v);
    return sym_eigenvalues_dense(std::move(a), n, m.max_abs_entry());
}

Inertia inertia_of(const Spectrum& s) {
    Inertia in;
    for (double v : s.values) {
        if (std::fabs(v) <= s.zero_tol)
            ++in.zero;
        else if (v > 0.0)
            ++in.positive;
        else
            ++in.negative;
    }
    return in;
}

double ecc_energy(const Spectrum& s) {
    double sum = 0.0;
    for (double v : s.values) sum += std::fabs(v);
    return sum;
}

double xi_k(const Spectrum& s, int k) {
    if (k < 1 || k > s.size())
        throw RankOutOfRange("rank " + std::to_string(k) + " outside 1.." +
                             std::to_string(s.size()));
    return s.values[k - 1];
}

bool check_interlacing(const IntSymMatrix& m, std::span<const int> idx) {
    const auto full = sym_eigenvalues(m);
    const auto sub = sym_eigenvalues(principal_submatrix(m, idx));
    const int big = full.size();
    const int small = sub.size();
    constexpr double slack = 1e-8;
    for (int i = 1; i <= small; ++i) {
        const double mu = sub.values[i - 1];
        const double upper = full.values[i - 1];
        const double lower = full.values[big - small + i - 1];
        if (mu > upper + slack || mu < lower - slack) return false;
    }
    return true;
}

std::vector<std::pair<double, int>> group_multiplicities(const Spectrum& s, double gap) {
    std::vector<std::pair<double, int>> groups;
    for (double v : s.values) {
        if (!groups.empty() && std::fabs(groups.back().first - v) <= gap)
            ++groups.back().second;
        else
            groups.emplace_back(v, 1);
    }
    return groups;
}

}  // namespace ecc
