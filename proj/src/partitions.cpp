#include "ecc/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <type_traits>

#include "ecc/errors.hpp"
#include "ecc/spectral.hpp"

namespace ecc {

VertexPartition VertexPartition::singletons(int n) {
    VertexPartition pi;
    pi.cells.reserve(n);
    for (int v = 0; v < n; ++v) pi.cells.push_back({v});
    return pi;
}

void VertexPartition::validate(int n) const {
    std::vector<char> seen(n, 0);
    for (const auto& cell : cells) {
        if (cell.empty()) throw InvalidPartition("empty cell");
        for (int v : cell) {
            if (v < 0 || v >= n)
                throw InvalidPartition("vertex " + std::to_string(v) + " out of range");
            if (seen[v]) throw InvalidPartition("vertex " + std::to_string(v) + " in two cells");
            seen[v] = 1;
        }
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) throw InvalidPartition("vertex " + std::to_string(v) + " not covered");
}

QuotientMatrix::QuotientMatrix(std::vector<mpq_class> entries, VertexPartition partition)
    : entries_(std::move(entries)), partition_(std::move(partition)) {}

bool QuotientMatrix::is_integer() const {
    for (const auto& q : entries_)
        if (q.get_den() != 1) return false;
    return true;
}

QuotientMatrix quotient(const IntSymMatrix& m, const VertexPartition& pi) {
    pi.validate(m.dim());
    const int k = pi.cell_count();
    std::vector<mpq_class> q(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            mpz_class block_sum = 0;
            for (int u : pi.cells[i])
                for (int v : pi.cells[j]) block_sum += m(u, v);
            mpq_class value(block_sum, mpz_class(static_cast<long>(pi.cells[i].size())));
            value.canonicalize();
            q[static_cast<size_t>(i) * k + j] = value;
        }
    }
    return QuotientMatrix(std::move(q), pi);
}

bool is_equitable(const IntSymMatrix& m, const VertexPartition& pi) {
    pi.validate(m.dim());
    for (const auto& rows : pi.cells) {
        for (const auto& cols : pi.cells) {
            long long expected = 0;
            bool first = true;
            for (int u : rows) {
                long long row_sum = 0;
                for (int v : cols) row_sum += m(u, v);
                if (first) {
                    expected = row_sum;
                    first = false;
                } else if (row_sum != expected) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

// Faddeev-LeVerrier characteristic polynomial; the division at step k is
// exact for integer input, so the integer path stays in mpz throughout.
template <typename Scalar>
std::vector<Scalar> faddeev_leverrier(const std::vector<Scalar>& a, int n) {
    std::vector<Scalar> coeffs(n + 1);
    coeffs[n] = 1;
    std::vector<Scalar> mk = a;  // M_1 = A
    for (int k = 1; k <= n; ++k) {
        Scalar trace = 0;
        for (int i = 0; i < n; ++i) trace += mk[static_cast<size_t>(i) * n + i];
        Scalar ck = -trace / k;
        if constexpr (std::is_same_v<Scalar, mpz_class>) {
            if (ck * k != -trace)
                throw Error("inexact division in characteristic polynomial");
        }
        coeffs[n - k] = ck;
        if (k == n) break;
        // M_{k+1} = A (M_k + ck I)
        std::vector<Scalar> shifted = mk;
        for (int i = 0; i < n; ++i) shifted[static_cast<size_t>(i) * n + i] += ck;
        std::vector<Scalar> next(static_cast<size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Scalar acc = 0;
                for (int l = 0; l < n; ++l)
                    acc += a[static_cast<size_t>(i) * n + l] * shifted[static_cast<size_t>(l) * n + j];
                next[static_cast<size_t>(i) * n + j] = acc;
            }
        mk = std::move(next);
    }
    return coeffs;
}

}  // namespace

CharPoly char_poly_exact(const QuotientMatrix& q, IntegerMode mode) {
    const int n = q.dim();
    if (q.is_integer()) {
        std::vector<mpz_class> a(static_cast<size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = q(i, j).get_num();
        auto coeffs = faddeev_leverrier<mpz_class>(a, n);
        return {IntPolynomial(std::move(coeffs)), 1};
    }
    if (mode == IntegerMode::Require)
        throw NonIntegerQuotient("quotient matrix has non-integer entries");
    std::vector<mpq_class> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = q(i, j);
    auto rational = faddeev_leverrier<mpq_class>(a, n);
    mpz_class scale = 1;
    for (const auto& c : rational) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> coeffs(rational.size());
    for (size_t i = 0; i < rational.size(); ++i) {
        mpq_class scaled = rational[i] * scale;
        scaled.canonicalize();
        coeffs[i] = scaled.get_num();
    }
    return {IntPolynomial(std::move(coeffs)), scale};
}

std::vector<double> quotient_eigenvalues(const QuotientMatrix& q) {
    const int k = q.dim();
    const auto& cells = q.partition().cells;
    std::vector<double> b(static_cast<size_t>(k) * k);
    double scale = 0.0;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            // block sum / sqrt(|X_i| |X_j|): symmetric similarity of Q
            const double block = q(i, j).get_d() * static_cast<double>(cells[i].size());
            b[static_cast<size_t>(i) * k + j] =
                block / std::sqrt(static_cast<double>(cells[i].size()) *
                                  static_cast<double>(cells[j].size()));
            scale = std::max(scale, std::fabs(b[static_cast<size_t>(i) * k + j]));
        }
    return sym_eigenvalues_dense(std::move(b), k, scale).values;
}

bool spectrum_contained(const QuotientMatrix& q, const IntSymMatrix& m) {
    if (!is_equitable(m, q.partition()))
        throw NotEquitable("containment is only guaranteed for equitable partitions");
    const auto mu = quotient_eigenvalues(q);  // descending
    const auto lambda = sym_eigenvalues(m).values;
    constexpr double tol = 1e-7;
    size_t j = 0;
    for (double v : mu) {
        while (j < lambda.size() && lambda[j] > v + tol) ++j;
        if (j == lambda.size() || std::fabs(lambda[j] - v) > tol) return false;
        ++j;
    }
    return true;
}

VertexPartition canonical_partition(const FamilySpec& family) {
    auto range = [](int lo, int count) {
        std::vector<int> r(count);
        for (int i = 0; i < count; ++i) r[i] = lo + i;
        return r;
    };
    VertexPartition pi;
    if (family.kind == FamilyKind::OddCaterpillar && family.d == 5) {
        // {v0}, {v1}+a-pendants, {v2}, {v3}, {v4}+b-pendants, {v5}
        std::vector<int> left = {1}, right = {4};
        auto ap = range(6, family.a), bp = range(6 + family.a, family.b);
        left.insert(left.end(), ap.begin(), ap.end());
        right.insert(right.end(), bp.begin(), bp.end());
        pi.cells = {{0}, left, {2}, {3}, right, {5}};
    } else if (family.kind == FamilyKind::EvenCaterpillar && family.d == 6 &&
               (family.c == family.a || family.c == family.a + 1)) {
        // {v0}, {v1}+a-pendants, {v2}, {v3}, b-pendants, {v4}, {v5}+c-pendants, {v6}
        std::vector<int> left = {1}, right = {5};
        auto ap = range(7, family.a);
        auto bp = range(7 + family.a, family.b);
        auto cp = range(7 + family.a + family.b, family.c);
        left.insert(left.end(), ap.begin(), ap.end());
        right.insert(right.end(), cp.begin(), cp.end());
        pi.cells = {{0}, left, {2}, {3}};
        if (!bp.empty()) pi.cells.push_back(bp);
        pi.cells.push_back({4});
        pi.cells.push_back(right);
        pi.cells.push_back({6});
    } else if (family.kind == FamilyKind::OddCaterpillar && family.d == 7) {
        // {v0}, {v1}, {v2}+a-pendants, {v3}, {v4}, {v5}+b-pendants, {v6}, {v7}
        std::vector<int> left = {2}, right = {5};
        auto ap = range(8, family.a), bp = range(8 + family.a, family.b);
        left.insert(left.end(), ap.begin(), ap.end());
        right.insert(right.end(), bp.begin(), bp.end());
        pi.cells = {{0}, {1}, left, {3}, {4}, right, {6}, {7}};
    } else {
        throw UnsupportedFamily("no canonical partition for " + family_to_string(family));
    }
    pi.validate(family.n);
    return pi;
}

VertexPartition read_partition(std::istream& in) {
    VertexPartition pi;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<int> cell;
        int v;
        while (ls >> v) cell.push_back(v);
        if (!ls.eof())
            throw ParseError("line " + std::to_string(lineno) + ": expected vertex indices");
        if (!cell.empty()) pi.cells.push_back(std::move(cell));
    }
    if (pi.cells.empty()) throw ParseError("partition file has no cells");
    return pi;
}

VertexPartition read_partition_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_partition(in);
}

}  // namespace ecc
