/**************************************************************************
 * geometry.hpp
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

#include <string>
#include <vector>

#include "arcforge/field.hpp"
#include "arcforge/linalg.hpp"
#include "arcforge/subsets.hpp"

namespace arcforge {

/// Length-k coordinate vector over GF(q).
using VectorK = std::vector<Fe>;

/// Ordered list of vectors in which every k-subset is linearly
/// independent. Subsets of an arc are referenced everywhere by ascending
/// index tuples into the stored order; the chosen vector representatives
/// matter (not just the points), so they are kept exactly as given.
struct Arc {
    FieldPtr field;
    unsigned k = 0;
    std::vector<VectorK> points;

    std::size_t size() const { return points.size(); }
    /// q + k - 1 - |S|, the number of tangent hyperplanes through each
    /// (k-2)-subset.
    long long deficiency() const {
        return static_cast<long long>(field->q()) + k - 1 - static_cast<long long>(points.size());
    }
    /// Vectors at the given indices, in tuple order.
    std::vector<VectorK> at(const IndexTuple& idx) const;
};

struct ArcCheck {
    bool ok = true;
    IndexTuple witness;  // first offending k-tuple in lexicographic order
};

/// Checks that every k-subset has nonzero determinant. Throws on ragged
/// input.
ArcCheck is_arc(const FieldPtr& f, unsigned k, const std::vector<VectorK>& pts);

/// Builds an Arc, validating the arc property unless validate is false.
Arc make_arc(FieldPtr f, unsigned k, std::vector<VectorK> pts, bool validate = true);

/// The normal rational curve: (1, t, .., t^(k-1)) for t in element-code
/// order, then (0, .., 0, 1). Requires k <= q + 1.
Arc nrc(const FieldPtr& f, unsigned k);

/// Canonical representative of the 1-dimensional subspace spanned by v:
/// scaled so the first nonzero coordinate is 1. Throws on the zero vector.
VectorK normalize_point(const Field& F, VectorK v);

/// det of the square matrix with the given rows, in order.
Fe det_rows(const Field& F, const std::vector<const VectorK*>& rows);
Fe det_rows(const Field& F, const std::vector<VectorK>& rows);

/// The dual vector x of an ordered (k-1)-tuple C, satisfying
/// u . x = det(u, C) for every u (u first, then C's rows in the given
/// order). A dependent C yields the zero vector.
VectorK dual_coords(const Field& F, const std::vector<VectorK>& C);

Fe dot(const Field& F, const VectorK& a, const VectorK& b);

/// Quotient representatives: extends D to a basis by appending standard
/// basis vectors in echelon-completion order, expresses each point in that
/// basis and drops the D-coordinates. Throws if a point lies in <D>.
std::vector<VectorK> project(const FieldPtr& f, const std::vector<VectorK>& pts,
                             const std::vector<VectorK>& D);

/// Homogeneous quadratic in three variables through a point set, from the
/// nullspace of the evaluation matrix. Coefficient order:
/// (c00, c11, c22, c01, c02, c12) for
/// c00 x0^2 + c11 x1^2 + c22 x2^2 + c01 x0 x1 + c02 x0 x2 + c12 x1 x2.
struct ConicFit {
    enum class Status { unique, none, not_unique };
    Status status = Status::none;
    std::vector<Fe> form;     // canonical: first nonzero coefficient is 1
    std::size_t solutions_dim = 0;
};

ConicFit conic_fit(const FieldPtr& f, const std::vector<VectorK>& pts);

Fe eval_conic(const Field& F, const std::vector<Fe>& form, const VectorK& pt);

/// Duals of all hyperplanes containing <A> and no other point of S, in
/// deterministic pencil order. |A| = k-2.
std::vector<VectorK> tangent_hyperplanes(const Arc& S, const IndexTuple& A);

/// Change-of-basis matrix (acting on row vectors from the right) sending
/// (1, t, .., t^(k-1)) to ((ct+d)^(k-1), (ct+d)^(k-2)(at+b), .., (at+b)^(k-1)).
/// Requires ad != bc.
GfMatrix mobius_nrc_matrix(const FieldPtr& f, unsigned k, Fe a, Fe b, Fe c, Fe d);

/// k x |S| matrix whose columns are the arc vectors in order.
GfMatrix arc_to_generator_matrix(const Arc& S);

/// True iff every k-subset of columns is invertible.
bool is_mds(const GfMatrix& g);

/// All (q^k - 1)/(q - 1) normalized points, ordered lexicographically by
/// coordinate codes.
std::vector<VectorK> enumerate_points(const FieldPtr& f, unsigned k);

std::string tuple_label(const std::string& name, const IndexTuple& t);

}  // namespace arcforge
