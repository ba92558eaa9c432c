#include "zpg/linalg.hpp"

#include <algorithm>

#include "zpg/error.hpp"

namespace zpg {

namespace {

// Row echelon form in place; returns pivot columns.  Works for both field
// types through the tiny op set below.
struct FpOps {
    uint64_t p;
    using T = uint64_t;
    bool nz(T a) const { return a % p != 0; }
    T inv(T a) const { return fp_inv(a, p); }
    T mul(T a, T b) const { return fp_mul(a, b, p); }
    T submul(T a, T b, T c) const { return fp_sub(a, fp_mul(b, c, p), p); }  // a - b*c
};

struct QOps {
    using T = Rational;
    bool nz(const T& a) const { return a != 0; }
    T inv(const T& a) const { return 1 / a; }
    T mul(const T& a, const T& b) const { return a * b; }
    T submul(const T& a, const T& b, const T& c) const { return a - b * c; }
};

template <class Ops, class Mat>
std::vector<size_t> echelon(Mat& m, const Ops& ops) {
    std::vector<size_t> pivots;
    size_t rows = m.size();
    if (rows == 0) return pivots;
    size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && !ops.nz(m[pr][c])) ++pr;
        if (pr == rows) continue;
        std::swap(m[r], m[pr]);
        auto piv_inv = ops.inv(m[r][c]);
        for (size_t j = c; j < cols; ++j) m[r][j] = ops.mul(m[r][j], piv_inv);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || !ops.nz(m[i][c])) continue;
            auto factor = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = ops.submul(m[i][j], factor, m[r][j]);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class Ops, class Mat>
Mat column_basis_impl(const Mat& m, const Ops& ops) {
    Mat work = m;
    std::vector<size_t> pivots = echelon(work, ops);
    Mat basis;
    for (size_t c : pivots) {
        typename Mat::value_type col(m.size());
        for (size_t i = 0; i < m.size(); ++i) col[i] = m[i][c];
        basis.push_back(std::move(col));
    }
    return basis;  // stored as rows of `basis`, each one an original column
}

// Solve m x = rhs columns by eliminating the augmented matrix.
template <class Ops, class Mat>
Mat solve_impl(const Mat& m, const Mat& rhs_cols, const Ops& ops, size_t zero_val_hint) {
    (void)zero_val_hint;
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    size_t k = rhs_cols.size();
    Mat aug(rows);
    for (size_t i = 0; i < rows; ++i) {
        aug[i] = m[i];
        aug[i].reserve(cols + k);
        for (size_t t = 0; t < k; ++t) aug[i].push_back(rhs_cols[t][i]);
    }
    std::vector<size_t> pivots = echelon(aug, ops);
    Mat x(k, typename Mat::value_type(cols));
    // paranoid: any pivot inside the rhs block means inconsistency
    for (size_t c : pivots)
        if (c >= cols) throw SemanticError("inconsistent linear system");
    for (size_t t = 0; t < k; ++t)
        for (size_t r = 0; r < pivots.size(); ++r) x[t][pivots[r]] = aug[r][cols + t];
    // residual check: rows below pivot count must have zero rhs
    for (size_t i = pivots.size(); i < rows; ++i)
        for (size_t t = 0; t < k; ++t)
            if (ops.nz(aug[i][cols + t])) throw SemanticError("inconsistent linear system");
    return x;  // x[t] is the solution vector for rhs column t
}

} // namespace

size_t fp_rank(FpMat m, uint64_t p) {
    FpOps ops{p};
    return echelon(m, ops).size();
}

FpMat fp_column_basis(const FpMat& m, uint64_t p) {
    FpOps ops{p};
    return column_basis_impl(m, ops);
}

FpMat fp_kernel(const FpMat& m, uint64_t p) {
    FpOps ops{p};
    FpMat work = m;
    std::vector<size_t> pivots = echelon(work, ops);
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    FpMat basis;
    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<uint64_t> v(cols, 0);
        v[c] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = fp_sub(0, work[r][c], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

FpMat fp_solve(const FpMat& m, const FpMat& rhs_cols, uint64_t p) {
    FpOps ops{p};
    return solve_impl(m, rhs_cols, ops, 0);
}

FpMat fp_mat_mul(const FpMat& a, const FpMat& b, uint64_t p) {
    size_t n = a.size(), mdim = b.empty() ? 0 : b[0].size(), inner = b.size();
    FpMat out(n, std::vector<uint64_t>(mdim, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < inner; ++t) {
            if (a[i][t] == 0) continue;
            for (size_t j = 0; j < mdim; ++j)
                out[i][j] = fp_add(out[i][j], fp_mul(a[i][t], b[t][j], p), p);
        }
    return out;
}

PolyFp fp_charpoly(FpMat m, uint64_t p) {
    size_t n = m.size();
    // Hessenberg reduction by similarity transforms, then the standard
    // recurrence on leading principal minors of (zI - H).
    for (size_t c = 0; c + 2 <= n; ++c) {
        size_t piv = c + 1;
        while (piv < n && m[piv][c] % p == 0) ++piv;
        if (piv == n) continue;
        if (piv != c + 1) {
            std::swap(m[piv], m[c + 1]);
            for (size_t i = 0; i < n; ++i) std::swap(m[i][piv], m[i][c + 1]);
        }
        uint64_t inv = fp_inv(m[c + 1][c], p);
        for (size_t r = c + 2; r < n; ++r) {
            uint64_t factor = fp_mul(m[r][c], inv, p);
            if (factor == 0) continue;
            for (size_t j = 0; j < n; ++j) m[r][j] = fp_sub(m[r][j], fp_mul(factor, m[c + 1][j], p), p);
            for (size_t i = 0; i < n; ++i) m[i][c + 1] = fp_add(m[i][c + 1], fp_mul(factor, m[i][r], p), p);
        }
    }
    // p_0 = 1; p_k(z) = (z - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1..k-1} h_{j+1,j}... )
    std::vector<PolyFp> charpolys(n + 1, PolyFp::one(p));
    for (size_t k = 1; k <= n; ++k) {
        // (z - m[k-1][k-1]) * charpolys[k-1]
        PolyFp zshift(p, {fp_sub(0, m[k - 1][k - 1] % p, p), 1});
        PolyFp acc = polyfp_mul(zshift, charpolys[k - 1]);
        uint64_t subdiag = 1;
        for (size_t i = k - 1; i >= 1; --i) {
            subdiag = fp_mul(subdiag, m[i][i - 1], p);
            if (subdiag == 0) break;
            uint64_t coef = fp_mul(subdiag, m[i - 1][k - 1] % p, p);
            if (coef != 0) {
                PolyFp term = charpolys[i - 1];
                for (auto& x : term.c) x = fp_mul(x, coef, p);
                acc = polyfp_sub(acc, term);
            }
        }
        charpolys[k] = std::move(acc);
    }
    return charpolys[n];
}

size_t q_rank(QMat m) {
    QOps ops;
    return echelon(m, ops).size();
}

QMat q_column_basis(const QMat& m) {
    QOps ops;
    return column_basis_impl(m, ops);
}

QMat q_solve(const QMat& m, const QMat& rhs_cols) {
    QOps ops;
    return solve_impl(m, rhs_cols, ops, 0);
}

std::vector<size_t> q_pivot_rows(const QMat& basis_cols) {
    // Transpose the column list into a matrix whose columns are the basis
    // vectors, then read the pivot rows off an echelon pass on the transpose.
    QMat t = basis_cols;  // rows of t are the basis vectors
    QOps ops;
    std::vector<size_t> pivots = echelon(t, ops);
    return pivots;
}

QMat q_mat_mul(const QMat& a, const QMat& b) {
    size_t n = a.size(), mdim = b.empty() ? 0 : b[0].size(), inner = b.size();
    QMat out(n, std::vector<Rational>(mdim, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < inner; ++t) {
            if (a[i][t] == 0) continue;
            for (size_t j = 0; j < mdim; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

QMat q_inverse(const QMat& m) {
    size_t n = m.size();
    QMat rhs(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) rhs[i][i] = 1;
    QMat sol = q_solve(m, rhs);  // throws on a singular matrix
    // q_solve returns solution vectors per rhs column; reassemble as a matrix
    // with sol columns.
    QMat inv(n, std::vector<Rational>(n, Rational(0)));
    for (size_t t = 0; t < n; ++t)
        for (size_t i = 0; i < n; ++i) inv[i][t] = sol[t][i];
    return inv;
}

} // namespace zpg
