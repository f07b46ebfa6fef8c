// Exact integer matrices and Smith normal form.
//
// Matrices here are tiny (at most 8x8), so the SNF implementation favours
// auditability over asymptotics: smallest-absolute-value pivoting with
// elementary row/column operations mirrored into unimodular factors.
#pragma once

#include "hkcert/ints.hpp"

#include <vector>

namespace hkcert {

using Row = std::vector<Int>;
using Mat = std::vector<Row>;

Mat identity(std::size_t n);
Mat mat_mul(const Mat& a, const Mat& b);
bool mat_equal(const Mat& a, const Mat& b);
Int det(const Mat& m);  // exact, Bareiss elimination

struct SNFResult {
    Mat left;               // unimodular, rows x rows
    std::vector<Int> diag;  // full diagonal of left*input*right, including zeros
    Mat right;              // unimodular, cols x cols
};

// left * m * right is diagonal with non-negative entries, each dividing the
// next.  Deterministic: pivot = smallest nonzero absolute value, first in
// row-major order on ties.
SNFResult smith_normal_form(const Mat& m);

// Nonzero diagonal entries of the SNF (the invariant factors).
std::vector<Int> invariant_factors(const Mat& m);

}  // namespace hkcert
