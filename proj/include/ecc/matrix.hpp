#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ecc/errors.hpp"

namespace ecc {

/// Dense symmetric matrix with small non-negative integer entries and a
/// zero diagonal (distance matrices, eccentricity matrices and their
/// principal submatrices).
class IntSymMatrix {
public:
    explicit IntSymMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0) {
        if (n <= 0) throw IndexOutOfRange("matrix dimension must be positive");
    }

    int dim() const { return n_; }

    int operator()(int u, int v) const { return a_[idx(u, v)]; }

    // Sets both (u,v) and (v,u). The diagonal stays zero.
    void set(int u, int v, int value) {
        if (u == v && value != 0) throw SelfLoop("nonzero diagonal entry");
        if (value < 0) throw Error("negative matrix entry");
        a_[idx(u, v)] = value;
        a_[idx(v, u)] = value;
    }

    int max_abs_entry() const {
        int m = 0;
        for (int v : a_) m = std::max(m, v);
        return m;
    }

    std::int64_t frobenius_norm_sq() const {
        std::int64_t s = 0;
        for (int v : a_) s += static_cast<std::int64_t>(v) * v;
        return s;
    }

    bool row_has_nonzero(int u) const {
        for (int v = 0; v < n_; ++v)
            if (a_[idx(u, v)] != 0) return true;
        return false;
    }

    bool operator==(const IntSymMatrix& other) const = default;

private:
    size_t idx(int u, int v) const {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw IndexOutOfRange("matrix index out of range");
        return static_cast<size_t>(u) * n_ + v;
    }

    int n_;
    std::vector<int> a_;
};

}  // namespace ecc
