#include "qh/snf.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qh {

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[a] -= q * row[b]
void row_sub(IntMatrix& m, int a, int b, const Int& q) {
    if (q == 0) return;
    for (int j = 0; j < m.cols(); ++j) m.at(a, j) -= q * m.at(b, j);
}

void col_sub(IntMatrix& m, int a, int b, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < m.rows(); ++i) m.at(i, a) -= q * m.at(i, b);
}

void negate_row(IntMatrix& m, int r) {
    for (int j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

// Quotient rounding toward nearest keeps entries small during reduction.
Int rounded_quotient(const Int& a, const Int& b) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    // fdiv gives 0 <= r < |b| for b > 0, -|b| < r <= 0 for b < 0.
    Int b2 = abs(b);
    if (r * 2 > b2) q += (b > 0 ? 1 : -1);
    return q;
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& M) {
    SNFResult res;
    res.U = IntMatrix::identity(M.rows());
    res.V = IntMatrix::identity(M.cols());
    res.D = M;
    IntMatrix& D = res.D;
    IntMatrix& U = res.U;
    IntMatrix& V = res.V;

    int n = std::min(D.rows(), D.cols());
    int t = 0;
    while (t < n) {
        // minimal-absolute-value nonzero pivot in the trailing block,
        // deterministic tie-break by lowest (row, col)
        int pr = -1, pc = -1;
        Int best;
        for (int i = t; i < D.rows(); ++i)
            for (int j = t; j < D.cols(); ++j) {
                const Int& x = D.at(i, j);
                if (x == 0) continue;
                Int ax = abs(x);
                if (pr < 0 || ax < best) { pr = i; pc = j; best = ax; }
            }
        if (pr < 0) break;  // trailing block is zero
        swap_rows(D, t, pr); swap_rows(U, t, pr);
        swap_cols(D, t, pc); swap_cols(V, t, pc);

        for (;;) {
            // clear column t below the pivot
            bool again = false;
            for (int i = t + 1; i < D.rows(); ++i) {
                if (D.at(i, t) == 0) continue;
                Int q = rounded_quotient(D.at(i, t), D.at(t, t));
                row_sub(D, i, t, q); row_sub(U, i, t, q);
                if (D.at(i, t) != 0) {
                    // remainder is strictly smaller; promote it to pivot
                    swap_rows(D, t, i); swap_rows(U, t, i);
                    again = true;
                }
            }
            if (again) continue;
            // clear row t right of the pivot
            for (int j = t + 1; j < D.cols(); ++j) {
                if (D.at(t, j) == 0) continue;
                Int q = rounded_quotient(D.at(t, j), D.at(t, t));
                col_sub(D, j, t, q); col_sub(V, j, t, q);
                if (D.at(t, j) != 0) {
                    swap_cols(D, t, j); swap_cols(V, t, j);
                    again = true;
                    break;  // column ops may have refilled column t
                }
            }
            if (again) continue;
            // pivot must divide every remaining entry for the divisor chain
            bool fixed = false;
            for (int i = t + 1; i < D.rows() && !fixed; ++i)
                for (int j = t + 1; j < D.cols() && !fixed; ++j)
                    if (D.at(i, j) % D.at(t, t) != 0) {
                        row_sub(D, t, i, Int(-1)); row_sub(U, t, i, Int(-1));
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (D.at(t, t) < 0) { negate_row(D, t); negate_row(U, t); }
        ++t;
    }
    res.rank = t;
    return res;
}

std::optional<std::vector<Int>> solve_integer(const SNFResult& snf, const std::vector<Int>& b) {
    if (int(b.size()) != snf.D.rows()) throw std::invalid_argument("solve_integer: dimension mismatch");
    std::vector<Int> ub = snf.U.apply(b);
    int n = std::min(snf.D.rows(), snf.D.cols());
    std::vector<Int> y(snf.D.cols());
    for (int i = 0; i < snf.D.rows(); ++i) {
        Int d = (i < n) ? snf.D.at(i, i) : Int(0);
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % d != 0) return std::nullopt;
            if (i < n) y[i] = ub[i] / d;
        }
    }
    return snf.V.apply(y);
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& M, const std::vector<Int>& b) {
    return solve_integer(smith_normal_form(M), b);
}

IntMatrix kernel_basis(const IntMatrix& M) {
    SNFResult snf = smith_normal_form(M);
    int k = M.cols() - snf.rank;
    IntMatrix K(M.cols(), k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < M.cols(); ++i) K.at(i, j) = snf.V.at(i, snf.rank + j);
    return K;
}

}  // namespace qh
