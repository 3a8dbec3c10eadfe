/**************************************************************************
 * linalg.cpp
 *
 * Copyright 2026 The arcforge authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include "arcforge/linalg.hpp"

#include <stdexcept>

namespace arcforge {

GfMatrix::GfMatrix(FieldPtr f, std::size_t rows, std::size_t cols)
    : field_(std::move(f)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (!field_) throw std::invalid_argument("null field");
}

GfMatrix GfMatrix::identity(FieldPtr f, std::size_t n) {
    GfMatrix m(std::move(f), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

GfMatrix GfMatrix::from_rows(FieldPtr f, const std::vector<std::vector<Fe>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    GfMatrix m(std::move(f), r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Fe> GfMatrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Fe> GfMatrix::col(std::size_t c) const {
    std::vector<Fe> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
    return out;
}

GfMatrix GfMatrix::transposed() const {
    GfMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    t.row_labels = col_labels;
    t.col_labels = row_labels;
    return t;
}

GfMatrix GfMatrix::with_column(const std::vector<Fe>& column) const {
    if (column.size() != rows_) throw std::invalid_argument("column length mismatch");
    GfMatrix m(field_, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
        m(i, cols_) = column[i];
    }
    return m;
}

GfMatrix GfMatrix::with_row(const std::vector<Fe>& r) const {
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    GfMatrix m(field_, rows_ + 1, cols_);
    m.data_ = data_;
    m.data_.resize((rows_ + 1) * cols_);
    for (std::size_t j = 0; j < cols_; ++j) m(rows_, j) = r[j];
    return m;
}

GfMatrix GfMatrix::select_rows(const std::vector<std::size_t>& idx) const {
    GfMatrix m(field_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
    if (!row_labels.empty()) {
        m.row_labels.reserve(idx.size());
        for (std::size_t r : idx) m.row_labels.push_back(row_labels[r]);
    }
    m.col_labels = col_labels;
    return m;
}

Fe det(const GfMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
    const Field& F = *m.field();
    const std::size_t n = m.rows();
    std::vector<Fe> a = m.data();
    auto at = [&](std::size_t r, std::size_t c) -> Fe& { return a[r * n + c]; };
    bool negate = false;
    Fe d = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && at(piv, col) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(at(piv, j), at(col, j));
            negate = !negate;
        }
        const Fe pv = at(col, col);
        d = F.mul(d, pv);
        const Fe pv_inv = F.inv(pv);
        for (std::size_t r = col + 1; r < n; ++r) {
            const Fe factor = F.mul(at(r, col), pv_inv);
            if (factor == 0) continue;
            for (std::size_t j = col; j < n; ++j)
                at(r, j) = F.sub(at(r, j), F.mul(factor, at(col, j)));
        }
    }
    return negate ? F.neg(d) : d;
}

Echelon rref(const GfMatrix& m) {
    const Field& F = *m.field();
    GfMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a(piv, col) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
        const Fe pv_inv = F.inv(a(row, col));
        for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) = F.mul(a(row, j), pv_inv);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col) == 0) continue;
            const Fe factor = a(r, col);
            for (std::size_t j = 0; j < a.cols(); ++j)
                a(r, j) = F.sub(a(r, j), F.mul(factor, a(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const GfMatrix& m) { return rref(m).pivots.size(); }

std::vector<std::vector<Fe>> nullspace(const GfMatrix& m) {
    const Field& F = *m.field();
    const Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;
    std::vector<std::vector<Fe>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Fe> v(m.cols(), 0);
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = F.neg(e.mat(i, f));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Fe>> solve(const GfMatrix& m, const std::vector<Fe>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("dimension mismatch in solve");
    const Echelon e = rref(m.with_column(b));
    // inconsistent iff the augmented column is a pivot
    for (std::size_t p : e.pivots)
        if (p == m.cols()) return std::nullopt;
    std::vector<Fe> x(m.cols(), 0);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.mat(i, m.cols());
    return x;
}

std::vector<std::size_t> weight_one_in_colspace(const GfMatrix& m) {
    const auto left_null = nullspace(m.transposed());
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        bool in_space = true;
        for (const auto& w : left_null) {
            if (w[i] != 0) {
                in_space = false;
                break;
            }
        }
        if (in_space) out.push_back(i);
    }
    return out;
}

GfMatrix mat_mul(const GfMatrix& a, const GfMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in mat_mul");
    if (!(*a.field() == *b.field())) throw std::invalid_argument("mixed fields in mat_mul");
    const Field& F = *a.field();
    GfMatrix c(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Fe aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) = F.add(c(i, j), F.mul(aik, b(k, j)));
        }
    return c;
}

std::vector<Fe> mat_vec(const GfMatrix& m, const std::vector<Fe>& x) {
    if (x.size() != m.cols()) throw std::invalid_argument("dimension mismatch in mat_vec");
    const Field& F = *m.field();
    std::vector<Fe> y(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) y[i] = F.add(y[i], F.mul(m(i, j), x[j]));
    return y;
}

std::vector<Fe> vec_mat(const std::vector<Fe>& x, const GfMatrix& m) {
    if (x.size() != m.rows()) throw std::invalid_argument("dimension mismatch in vec_mat");
    const Field& F = *m.field();
    std::vector<Fe> y(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) y[j] = F.add(y[j], F.mul(x[i], m(i, j)));
    }
    return y;
}

}  // namespace arcforge
