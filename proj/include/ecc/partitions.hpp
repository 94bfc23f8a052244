#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <vector>

#include "ecc/families.hpp"
#include "ecc/matrix.hpp"
#include "ecc/polynomial.hpp"

namespace ecc {

/// Ordered list of disjoint, nonempty vertex sets covering 0..n-1.
struct VertexPartition {
    std::vector<std::vector<int>> cells;

    static VertexPartition singletons(int n);
    void validate(int n) const;  // throws InvalidPartition
    int cell_count() const { return static_cast<int>(cells.size()); }
};

/// Quotient of a symmetric integer matrix under a vertex partition:
/// q_ij is the average row sum of block (i,j), kept as an exact rational.
class QuotientMatrix {
public:
    QuotientMatrix(std::vector<mpq_class> entries, VertexPartition partition);

    int dim() const { return static_cast<int>(partition_.cells.size()); }
    const mpq_class& operator()(int i, int j) const { return entries_[i * dim() + j]; }
    const VertexPartition& partition() const { return partition_; }
    bool is_integer() const;

private:
    std::vector<mpq_class> entries_;
    VertexPartition partition_;
};

QuotientMatrix quotient(const IntSymMatrix& m, const VertexPartition& pi);

// True iff every block of m has constant row sums (exact comparison).
bool is_equitable(const IntSymMatrix& m, const VertexPartition& pi);

struct CharPoly {
    IntPolynomial poly;  // scale * det(xI - Q)
    mpz_class scale;     // 1 whenever Q is integral
};

enum class IntegerMode { Require, AutoScale };

// det(xI - Q), exact. Integer quotients run over arbitrary-precision
// integers; rational quotients are scaled by the lcm of the coefficient
// denominators (reported in `scale`) unless IntegerMode::Require.
CharPoly char_poly_exact(const QuotientMatrix& q, IntegerMode mode = IntegerMode::AutoScale);

// Eigenvalues of Q via the symmetric similarity D^{1/2} Q D^{-1/2}.
std::vector<double> quotient_eigenvalues(const QuotientMatrix& q);

// Every eigenvalue of Q appears among the eigenvalues of m (within 1e-7,
// with multiplicity). Throws NotEquitable when the partition is not.
bool spectrum_contained(const QuotientMatrix& q, const IntSymMatrix& m);

// The proof partitions for the four diameter-5..7 caterpillar families,
// in the printed cell order.
VertexPartition canonical_partition(const FamilySpec& family);

// One cell per line, space-separated vertex indices; '#' comments.
VertexPartition read_partition(std::istream& in);
VertexPartition read_partition_file(const std::string& path);

}  // namespace ecc
