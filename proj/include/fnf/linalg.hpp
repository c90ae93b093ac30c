#ifndef FNF_LINALG_HPP
#define FNF_LINALG_HPP

#include <vector>

#include "fnf/field.hpp"

namespace fnf {

using FVector = std::vector<FieldElement>;
using FMatrix = std::vector<FVector>;  // row-major, rectangular

struct LinearSolveResult {
    bool consistent = false;
    FVector solution;             // canonical particular solution, free variables = 0
    std::vector<FVector> kernel;  // standard free-variable kernel basis
};

// Exact reduced-row-echelon solve of A x = rhs over Q(t1..tm).
// Pivot order is fixed: columns left to right; within a column the first row
// (top to bottom, among rows not yet used as pivots) with a nonzero entry.
inline LinearSolveResult solve_linear_system(FMatrix A, FVector rhs) {
    const size_t rows = A.size();
    const size_t cols = rows ? A[0].size() : (rhs.empty() ? 0 : 0);
    for (auto& r : A)
        if (r.size() != cols) throw std::invalid_argument("ragged matrix");
    if (rhs.size() != rows) throw std::invalid_argument("rhs size mismatch");

    std::vector<int> pivot_col_of_row;  // row -> column
    size_t prow = 0;
    for (size_t col = 0; col < cols && prow < rows; ++col) {
        size_t sel = prow;
        while (sel < rows && A[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(A[sel], A[prow]);
        std::swap(rhs[sel], rhs[prow]);
        FieldElement inv = FieldElement::one() / A[prow][col];
        for (size_t j = col; j < cols; ++j) A[prow][j] *= inv;
        rhs[prow] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == prow || A[r][col].is_zero()) continue;
            FieldElement f = A[r][col];
            for (size_t j = col; j < cols; ++j) A[r][j] -= f * A[prow][j];
            rhs[r] -= f * rhs[prow];
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        ++prow;
    }

    LinearSolveResult res;
    for (size_t r = prow; r < rows; ++r)
        if (!rhs[r].is_zero()) return res;  // inconsistent
    res.consistent = true;

    std::vector<int> pivot_row_of_col(cols, -1);
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r) pivot_row_of_col[pivot_col_of_row[r]] = static_cast<int>(r);

    res.solution.assign(cols, FieldElement::zero());
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r) res.solution[pivot_col_of_row[r]] = rhs[r];

    for (size_t col = 0; col < cols; ++col) {
        if (pivot_row_of_col[col] >= 0) continue;
        FVector k(cols, FieldElement::zero());
        k[col] = FieldElement::one();
        for (size_t r = 0; r < pivot_col_of_row.size(); ++r) k[pivot_col_of_row[r]] = -A[r][col];
        res.kernel.push_back(std::move(k));
    }
    return res;
}

}  // namespace fnf

#endif  // FNF_LINALG_HPP
