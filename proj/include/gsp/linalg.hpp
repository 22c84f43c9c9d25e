#pragma once

#include <string>
#include <vector>

#include "gsp/errors.hpp"
#include "gsp/gf.hpp"

// Dense exact linear algebra over prime fields: reduced row-echelon forms
// as canonical representatives of row spaces, and the solvers the
// filtration machinery needs. Everything is a free function templated on
// the field, following the convention that vectors are rows and linear
// maps act by v -> v * M on coordinate rows.

namespace gsp {

// In-place reduction to reduced row-echelon form. Returns pivot columns.
template <int P>
std::vector<int> rref_in_place(MatF<P>& m) {
    std::vector<int> pivots;
    const int rows = static_cast<int>(m.rows()), cols = static_cast<int>(m.cols());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (!m(i, c).is_zero()) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        m.row(sel).swap(m.row(r));
        m.row(r) *= m(r, c).inverse();
        for (int i = 0; i < rows; ++i)
            if (i != r && !m(i, c).is_zero()) m.row(i) -= m(i, c) * m.row(r);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Canonical basis of the row space: RREF with zero rows dropped.
template <int P>
MatF<P> row_space(const MatF<P>& m) {
    MatF<P> r = m;
    auto pivots = rref_in_place(r);
    return r.topRows(static_cast<int>(pivots.size()));
}

template <int P>
int rank_of(const MatF<P>& m) {
    MatF<P> r = m;
    return static_cast<int>(rref_in_place(r).size());
}

// Pivot columns of a matrix already in canonical RREF.
template <int P>
std::vector<int> pivots_of_rref(const MatF<P>& m) {
    std::vector<int> p;
    for (int i = 0; i < m.rows(); ++i)
        for (int c = 0; c < m.cols(); ++c)
            if (!m(i, c).is_zero()) {
                p.push_back(c);
                break;
            }
    return p;
}

template <int P>
MatF<P> vstack(const MatF<P>& a, const MatF<P>& b) {
    MatF<P> m(a.rows() + b.rows(), a.cols());
    m.topRows(a.rows()) = a;
    m.bottomRows(b.rows()) = b;
    return m;
}

template <int P>
MatF<P> sum_spaces(const MatF<P>& a, const MatF<P>& b) {
    return row_space<P>(vstack<P>(a, b));
}

// Zassenhaus block trick: rows [A | A], [B | 0]; after elimination the
// right halves of the rows whose left half vanished span A cap B.
template <int P>
MatF<P> intersect_spaces(const MatF<P>& a, const MatF<P>& b) {
    const int n = static_cast<int>(a.cols());
    MatF<P> block(a.rows() + b.rows(), 2 * n);
    block.setZero();
    block.block(0, 0, a.rows(), n) = a;
    block.block(0, n, a.rows(), n) = a;
    block.block(a.rows(), 0, b.rows(), n) = b;
    rref_in_place<P>(block);
    std::vector<int> keep;
    for (int i = 0; i < block.rows(); ++i) {
        bool left_zero = true, right_zero = true;
        for (int c = 0; c < n; ++c) {
            if (!block(i, c).is_zero()) left_zero = false;
            if (!block(i, n + c).is_zero()) right_zero = false;
        }
        if (left_zero && !right_zero) keep.push_back(i);
    }
    MatF<P> out(static_cast<int>(keep.size()), n);
    for (std::size_t i = 0; i < keep.size(); ++i) out.row(static_cast<int>(i)) = block.block(keep[i], n, 1, n);
    return row_space<P>(out);
}

// Reduce a row vector modulo a canonical RREF basis; the result is zero
// exactly when the vector lies in the row space.
template <int P>
RowF<P> reduce_row(RowF<P> v, const MatF<P>& rref_rows) {
    auto pivots = pivots_of_rref<P>(rref_rows);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (!v(pivots[i]).is_zero()) v -= v(pivots[i]) * rref_rows.row(static_cast<int>(i));
    return v;
}

template <int P>
bool row_in_space(const RowF<P>& v, const MatF<P>& rref_rows) {
    RowF<P> r = reduce_row<P>(v, rref_rows);
    for (int c = 0; c < r.cols(); ++c)
        if (!r(c).is_zero()) return false;
    return true;
}

// Solve lambda * rows = v; rows need not be in echelon form but must be
// independent. Throws on inconsistency.
template <int P>
RowF<P> coords_in_rows(const RowF<P>& v, const MatF<P>& rows) {
    const int k = static_cast<int>(rows.rows()), n = static_cast<int>(rows.cols());
    MatF<P> aug(k + 1, n);
    aug.topRows(k) = rows;
    aug.row(k) = v;
    // track the combination while eliminating
    MatF<P> track = MatF<P>::Zero(k + 1, k + 1);
    for (int i = 0; i <= k; ++i) track(i, i) = GF<P>(1);
    int r = 0;
    for (int c = 0; c < n && r < k; ++c) {
        int sel = -1;
        for (int i = r; i < k; ++i)
            if (!aug(i, c).is_zero()) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        aug.row(sel).swap(aug.row(r));
        track.row(sel).swap(track.row(r));
        GF<P> inv = aug(r, c).inverse();
        aug.row(r) *= inv;
        track.row(r) *= inv;
        for (int i = 0; i <= k; ++i)
            if (i != r && !aug(i, c).is_zero()) {
                GF<P> f = aug(i, c);
                aug.row(i) -= f * aug.row(r);
                track.row(i) -= f * track.row(r);
            }
        ++r;
    }
    for (int c = 0; c < n; ++c)
        if (!aug(k, c).is_zero()) throw Error("coords_in_rows: vector not in span");
    RowF<P> lambda(k);
    for (int j = 0; j < k; ++j) lambda(j) = -track(k, j) / track(k, k);
    return lambda;
}

// Columns spanning {x : M x = 0}.
template <int P>
MatF<P> right_null_cols(const MatF<P>& m) {
    MatF<P> r = m;
    auto pivots = rref_in_place<P>(r);
    const int n = static_cast<int>(m.cols());
    std::vector<int> free_cols;
    {
        std::vector<bool> is_pivot(n, false);
        for (int p : pivots) is_pivot[p] = true;
        for (int c = 0; c < n; ++c)
            if (!is_pivot[c]) free_cols.push_back(c);
    }
    MatF<P> out = MatF<P>::Zero(n, static_cast<int>(free_cols.size()));
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        int f = free_cols[j];
        out(f, static_cast<int>(j)) = GF<P>(1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            out(pivots[i], static_cast<int>(j)) = -r(static_cast<int>(i), f);
    }
    return out;
}

// Rows spanning {lambda : lambda M = 0}.
template <int P>
MatF<P> left_null_rows(const MatF<P>& m) {
    return right_null_cols<P>(MatF<P>(m.transpose())).transpose();
}

template <int P>
bool is_invertible(const MatF<P>& m) {
    return m.rows() == m.cols() && rank_of<P>(m) == m.rows();
}

template <int P>
MatF<P> inverse_mat(const MatF<P>& m) {
    const int n = static_cast<int>(m.rows());
    MatF<P> aug(n, 2 * n);
    aug.leftCols(n) = m;
    aug.rightCols(n).setZero();
    for (int i = 0; i < n; ++i) aug(i, n + i) = GF<P>(1);
    auto pivots = rref_in_place<P>(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
        throw Error("inverse_mat: matrix is singular");
    return aug.rightCols(n);
}

template <int P>
std::string mat_bytes(const MatF<P>& m) {
    std::string s;
    s.reserve(static_cast<std::size_t>(m.size()) + 8);
    s += static_cast<char>(m.rows());
    s += static_cast<char>(m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) s += static_cast<char>(m(i, j).value());
    return s;
}

// --- exhaustive enumeration helpers (small sizes only) ---

template <int P>
std::vector<MatF<P>> all_matrices(int rows, int cols) {
    long long total = 1;
    for (int i = 0; i < rows * cols; ++i) total *= P;
    std::vector<MatF<P>> out;
    out.reserve(static_cast<std::size_t>(total));
    for (long long code = 0; code < total; ++code) {
        MatF<P> m(rows, cols);
        long long c = code;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                m(i, j) = GF<P>(static_cast<int>(c % P));
                c /= P;
            }
        out.push_back(std::move(m));
    }
    return out;
}

template <int P>
std::vector<MatF<P>> all_invertible(int n) {
    std::vector<MatF<P>> out;
    for (auto& m : all_matrices<P>(n, n))
        if (is_invertible<P>(m)) out.push_back(std::move(m));
    return out;
}

// All k-dimensional subspaces of F^d as canonical RREF bases, enumerated
// by pivot-column pattern plus free entries.
template <int P>
std::vector<MatF<P>> all_subspaces(int d, int k) {
    std::vector<MatF<P>> out;
    if (k == 0) {
        out.push_back(MatF<P>(0, d));
        return out;
    }
    if (k > d) return out;
    std::vector<int> piv(k);
    // iterate over increasing pivot-column tuples
    for (int i = 0; i < k; ++i) piv[i] = i;
    while (true) {
        // free positions: entries right of each pivot, excluding pivot columns
        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < k; ++i)
            for (int c = piv[i] + 1; c < d; ++c) {
                bool is_piv = false;
                for (int j = 0; j < k; ++j)
                    if (piv[j] == c) is_piv = true;
                if (!is_piv) free_pos.emplace_back(i, c);
            }
        long long total = 1;
        for (std::size_t i = 0; i < free_pos.size(); ++i) total *= P;
        for (long long code = 0; code < total; ++code) {
            MatF<P> m = MatF<P>::Zero(k, d);
            for (int i = 0; i < k; ++i) m(i, piv[i]) = GF<P>(1);
            long long c = code;
            for (auto [row, col] : free_pos) {
                m(row, col) = GF<P>(static_cast<int>(c % P));
                c /= P;
            }
            out.push_back(std::move(m));
        }
        // next pivot combination
        int i = k - 1;
        while (i >= 0 && piv[i] == d - k + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
    return out;
}

}  // namespace gsp
