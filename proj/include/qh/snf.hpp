#pragma once

#include <optional>
#include <vector>

#include "qh/int_matrix.hpp"

namespace qh {

// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ... , all >= 0.
struct SNFResult {
    IntMatrix U;  // rows x rows
    IntMatrix D;  // rows x cols
    IntMatrix V;  // cols x cols
    int rank = 0; // number of nonzero diagonal entries

    std::vector<Int> diagonal() const {
        std::vector<Int> d;
        int n = std::min(D.rows(), D.cols());
        for (int i = 0; i < n; ++i) d.push_back(D.at(i, i));
        return d;
    }
};

// Deterministic Smith normal form: minimal-absolute-value pivot with
// row/column gcd reduction, ties broken by lowest (row, col).
SNFResult smith_normal_form(const IntMatrix& M);

// Integer solution x of M x = b, if one exists. Uses a precomputed SNF of M.
std::optional<std::vector<Int>> solve_integer(const SNFResult& snf, const std::vector<Int>& b);
std::optional<std::vector<Int>> solve_integer(const IntMatrix& M, const std::vector<Int>& b);

// Columns form a basis of the integer kernel lattice {x : Mx = 0}.
IntMatrix kernel_basis(const IntMatrix& M);

}  // namespace qh
