/**************************************************************************
 * linalg.hpp
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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arcforge/field.hpp"

namespace arcforge {

/// Dense exact matrix over GF(q). Row-major storage of element codes.
/// Pivoting is deterministic (first nonzero entry, scanning top-to-bottom,
/// left-to-right), so every derived result is reproducible bit-for-bit.
class GfMatrix {
public:
    GfMatrix(FieldPtr f, std::size_t rows, std::size_t cols);
    static GfMatrix identity(FieldPtr f, std::size_t n);
    static GfMatrix from_rows(FieldPtr f, const std::vector<std::vector<Fe>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    Fe operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Fe& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    std::vector<Fe> row(std::size_t r) const;
    std::vector<Fe> col(std::size_t c) const;
    GfMatrix transposed() const;
    /// Copy with an extra column on the right.
    GfMatrix with_column(const std::vector<Fe>& column) const;
    /// Copy with an extra row at the bottom.
    GfMatrix with_row(const std::vector<Fe>& row) const;
    /// Copy of the selected rows, in the given order (labels carried over).
    GfMatrix select_rows(const std::vector<std::size_t>& idx) const;

    const std::vector<Fe>& data() const { return data_; }

    /// Opaque label strings for report output; empty means unlabeled.
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;

private:
    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<Fe> data_;
};

/// Throws std::invalid_argument on non-square input.
Fe det(const GfMatrix& m);

struct Echelon {
    GfMatrix mat;
    std::vector<std::size_t> pivots;  // pivot column per pivot row, ascending
};

/// Reduced row echelon form.
Echelon rref(const GfMatrix& m);

std::size_t rank(const GfMatrix& m);

/// Nullspace basis in reduced echelon convention: one vector per free
/// column (ascending), with a 1 in that coordinate. Every vector v
/// satisfies M v = 0 exactly.
std::vector<std::vector<Fe>> nullspace(const GfMatrix& m);

/// Particular solution of M x = b with free variables set to zero, or
/// nullopt when the system is inconsistent.
std::optional<std::vector<Fe>> solve(const GfMatrix& m, const std::vector<Fe>& b);

/// Row positions i such that the i-th standard unit vector lies in the
/// column space of M, ascending. Computed from the nullspace of M^T:
/// e_i is in the column space iff every left-null vector vanishes at i.
std::vector<std::size_t> weight_one_in_colspace(const GfMatrix& m);

GfMatrix mat_mul(const GfMatrix& a, const GfMatrix& b);
std::vector<Fe> mat_vec(const GfMatrix& m, const std::vector<Fe>& x);
std::vector<Fe> vec_mat(const std::vector<Fe>& x, const GfMatrix& m);

}  // namespace arcforge
