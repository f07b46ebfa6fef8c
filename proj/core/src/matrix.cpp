#include "hkcert/matrix.hpp"

#include "hkcert/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace hkcert {

Mat identity(std::size_t n) {
    Mat m(n, Row(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    Mat out(n, Row(p, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            Int s = 0;
            for (std::size_t l = 0; l < k; ++l) s += a[i][l] * b[l][j];
            out[i][j] = s;
        }
    return out;
}

bool mat_equal(const Mat& a, const Mat& b) { return a == b; }

// Fraction-free (Bareiss) determinant.
Int det(const Mat& m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    Mat a = m;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

namespace {

struct Snf {
    Mat w;      // work matrix
    Mat left;   // row ops mirrored: left * input * right == w
    Mat right;  // col ops mirrored
    std::size_t rows, cols;

    explicit Snf(const Mat& m)
        : w(m), left(identity(m.size())), cols(m.empty() ? 0 : m[0].size()) {
        rows = m.size();
        right = identity(cols);
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        std::swap(w[a], w[b]);
        std::swap(left[a], left[b]);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (auto& row : w) std::swap(row[a], row[b]);
        for (auto& row : right) std::swap(row[a], row[b]);
    }
    // row[a] -= q * row[b]
    void row_sub(std::size_t a, std::size_t b, const Int& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < cols; ++j) w[a][j] -= q * w[b][j];
        for (std::size_t j = 0; j < rows; ++j) left[a][j] -= q * left[b][j];
    }
    // col[a] -= q * col[b]
    void col_sub(std::size_t a, std::size_t b, const Int& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < rows; ++i) w[i][a] -= q * w[i][b];
        for (std::size_t i = 0; i < cols; ++i) right[i][a] -= q * right[i][b];
    }
    void negate_row(std::size_t a) {
        for (auto& v : w[a]) v = -v;
        for (auto& v : left[a]) v = -v;
    }

    // Smallest nonzero |entry| in the trailing submatrix, row-major on ties.
    bool find_pivot(std::size_t k, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        Int best = 0;
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j) {
                if (w[i][j] == 0) continue;
                Int a = abs(w[i][j]);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    // Clear row k and column k outside (k,k); smallest-pivot refinement
    // strictly decreases |w[k][k]| whenever a remainder survives, so this
    // terminates.
    void eliminate_at(std::size_t k) {
        for (;;) {
            std::size_t pi, pj;
            if (!find_pivot(k, pi, pj)) return;
            swap_rows(k, pi);
            swap_cols(k, pj);
            bool clean = true;
            for (std::size_t i = k + 1; i < rows; ++i) {
                Int q = w[i][k] / w[k][k];
                row_sub(i, k, q);
                if (w[i][k] != 0) clean = false;
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                Int q = w[k][j] / w[k][k];
                col_sub(j, k, q);
                if (w[k][j] != 0) clean = false;
            }
            if (clean) {
                if (w[k][k] < 0) negate_row(k);
                return;
            }
        }
    }
};

}  // namespace

SNFResult smith_normal_form(const Mat& m) {
    for (const auto& row : m)
        if (row.size() != (m.empty() ? 0 : m[0].size()))
            throw HkError(ErrorKind::DomainError, "ragged_matrix", "matrix rows differ in length");
    Snf s(m);
    std::size_t k = 0, lim = std::min(s.rows, s.cols);
    for (; k < lim; ++k) {
        std::size_t pi, pj;
        if (!s.find_pivot(k, pi, pj)) break;
        s.eliminate_at(k);
    }
    // Divisibility chain: if d_i does not divide d_j (i < j), fold column j
    // into column i and re-eliminate; the pivot becomes gcd(d_i, d_j).
    for (std::size_t i = 0; i + 1 < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            if (s.w[j][j] % s.w[i][i] == 0) continue;
            s.col_sub(i, j, Int(-1));  // col_i += col_j
            s.eliminate_at(i);
            for (std::size_t l = i + 1; l < k; ++l) s.eliminate_at(l);
            j = i;  // re-scan this pivot against all later ones
        }
    }
    SNFResult out;
    out.left = std::move(s.left);
    out.right = std::move(s.right);
    out.diag.resize(lim, 0);
    for (std::size_t i = 0; i < lim; ++i) out.diag[i] = s.w[i][i];
    return out;
}

std::vector<Int> invariant_factors(const Mat& m) {
    SNFResult r = smith_normal_form(m);
    std::vector<Int> out;
    for (const Int& v : r.diag)
        if (v != 0) out.push_back(v);
    return out;
}

}  // namespace hkcert
