#pragma once

#include <cassert>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qh {

using Int = mpz_class;

// Dense matrix of arbitrary-precision integers. Row-major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {
        assert(rows >= 0 && cols >= 0);
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return a_[size_t(r) * cols_ + c];
    }
    const Int& at(int r, int c) const {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return a_[size_t(r) * cols_ + c];
    }

    bool is_zero() const {
        for (const Int& x : a_)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        assert(cols_ == o.rows_);
        IntMatrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Int& x = at(i, k);
                if (x == 0) continue;
                for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
            }
        return r;
    }

    std::vector<Int> apply(const std::vector<Int>& v) const {
        assert(int(v.size()) == cols_);
        std::vector<Int> r(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (at(i, j) != 0) r[i] += at(i, j) * v[j];
        return r;
    }

    std::vector<Int> column(int c) const {
        std::vector<Int> r(rows_);
        for (int i = 0; i < rows_; ++i) r[i] = at(i, c);
        return r;
    }

    // Exact determinant by fraction-free (Bareiss) elimination. Square only.
    Int determinant() const;

    std::string to_string() const;

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

}  // namespace qh
