/**************************************************************************
 * geometry.cpp
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

#include "arcforge/geometry.hpp"

#include <stdexcept>

namespace arcforge {

std::vector<VectorK> Arc::at(const IndexTuple& idx) const {
    std::vector<VectorK> out;
    out.reserve(idx.size());
    for (std::size_t i : idx) {
        if (i >= points.size()) throw std::invalid_argument("arc index out of range");
        out.push_back(points[i]);
    }
    return out;
}

Fe det_rows(const Field& F, const std::vector<const VectorK*>& rows) {
    const std::size_t n = rows.size();
    std::vector<Fe> a(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i]->size() != n) throw std::invalid_argument("det_rows: row length mismatch");
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = (*rows[i])[j];
    }
    bool negate = false;
    Fe d = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv * n + col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a[piv * n + j], a[col * n + j]);
            negate = !negate;
        }
        const Fe pv = a[col * n + col];
        d = F.mul(d, pv);
        const Fe pv_inv = F.inv(pv);
        for (std::size_t r = col + 1; r < n; ++r) {
            const Fe factor = F.mul(a[r * n + col], pv_inv);
            if (factor == 0) continue;
            for (std::size_t j = col; j < n; ++j)
                a[r * n + j] = F.sub(a[r * n + j], F.mul(factor, a[col * n + j]));
        }
    }
    return negate ? F.neg(d) : d;
}

Fe det_rows(const Field& F, const std::vector<VectorK>& rows) {
    std::vector<const VectorK*> ptrs;
    ptrs.reserve(rows.size());
    for (const auto& r : rows) ptrs.push_back(&r);
    return det_rows(F, ptrs);
}

ArcCheck is_arc(const FieldPtr& f, unsigned k, const std::vector<VectorK>& pts) {
    for (const auto& v : pts)
        if (v.size() != k) throw std::invalid_argument("vector length != k");
    if (pts.size() < k) return {true, {}};
    std::vector<const VectorK*> rows(k);
    for (const auto& c : combinations(pts.size(), k)) {
        for (std::size_t i = 0; i < k; ++i) rows[i] = &pts[c[i]];
        if (det_rows(*f, rows) == 0) return {false, c};
    }
    return {true, {}};
}

Arc make_arc(FieldPtr f, unsigned k, std::vector<VectorK> pts, bool validate) {
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    if (validate) {
        const ArcCheck c = is_arc(f, k, pts);
        if (!c.ok) {
            std::string msg = "not an arc; offending subset {";
            for (std::size_t i = 0; i < c.witness.size(); ++i)
                msg += (i ? "," : "") + std::to_string(c.witness[i]);
            throw std::invalid_argument(msg + "}");
        }
    }
    return Arc{std::move(f), k, std::move(pts)};
}

Arc nrc(const FieldPtr& f, unsigned k) {
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    if (k > f->q() + 1) throw std::invalid_argument("k > q + 1: the moment curve is not an arc");
    std::vector<VectorK> pts;
    pts.reserve(f->q() + 1);
    for (Fe t : f->elements()) {
        VectorK v(k);
        Fe power = 1;
        for (unsigned i = 0; i < k; ++i) {
            v[i] = power;
            power = f->mul(power, t);
        }
        pts.push_back(std::move(v));
    }
    VectorK last(k, 0);
    last[k - 1] = 1;
    pts.push_back(std::move(last));
    return Arc{f, k, std::move(pts)};
}

VectorK normalize_point(const Field& F, VectorK v) {
    std::size_t lead = v.size();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) {
            lead = i;
            break;
        }
    if (lead == v.size()) throw std::invalid_argument("cannot normalize the zero vector");
    if (v[lead] != 1) {
        const Fe s = F.inv(v[lead]);
        for (auto& c : v) c = F.mul(c, s);
    }
    return v;
}

VectorK dual_coords(const Field& F, const std::vector<VectorK>& C) {
    if (C.empty()) throw std::invalid_argument("dual_coords: empty tuple");
    const std::size_t k = C[0].size();
    if (C.size() != k - 1) throw std::invalid_argument("dual_coords: need k-1 vectors");
    VectorK x(k);
    std::vector<VectorK> minor(k - 1, VectorK(k - 1));
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t r = 0; r < k - 1; ++r) {
            if (C[r].size() != k) throw std::invalid_argument("dual_coords: ragged input");
            std::size_t cc = 0;
            for (std::size_t col = 0; col < k; ++col) {
                if (col == j) continue;
                minor[r][cc++] = C[r][col];
            }
        }
        const Fe m = det_rows(F, minor);
        x[j] = (j % 2 == 0) ? m : F.neg(m);  // cofactor sign along the top row
    }
    return x;
}

Fe dot(const Field& F, const VectorK& a, const VectorK& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Fe s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = F.add(s, F.mul(a[i], b[i]));
    return s;
}

std::vector<VectorK> project(const FieldPtr& fp, const std::vector<VectorK>& pts,
                             const std::vector<VectorK>& D) {
    if (D.empty()) return pts;
    const std::size_t k = D[0].size();
    const std::size_t d = D.size();
    // extend D to a basis: append standard basis vectors, skipping dependents
    std::vector<std::vector<Fe>> basis_rows(D.begin(), D.end());
    for (std::size_t i = 0; i < k && basis_rows.size() < k; ++i) {
        VectorK e(k, 0);
        e[i] = 1;
        basis_rows.push_back(e);
        GfMatrix probe = GfMatrix::from_rows(fp, basis_rows);
        if (rank(probe) < basis_rows.size()) basis_rows.pop_back();
    }
    if (basis_rows.size() < k) throw std::invalid_argument("project: D is linearly dependent");
    // coordinates c with c * B = v, i.e. B^T c = v
    const GfMatrix bt = GfMatrix::from_rows(fp, basis_rows).transposed();
    std::vector<VectorK> out;
    out.reserve(pts.size());
    for (const auto& v : pts) {
        auto c = solve(bt, v);
        if (!c) throw std::logic_error("project: basis solve failed");
        VectorK img(c->begin() + static_cast<std::ptrdiff_t>(d), c->end());
        bool zero = true;
        for (Fe x : img)
            if (x != 0) zero = false;
        if (zero) throw std::invalid_argument("project: point lies in the span of D");
        out.push_back(std::move(img));
    }
    return out;
}

Fe eval_conic(const Field& F, const std::vector<Fe>& form, const VectorK& pt) {
    if (form.size() != 6 || pt.size() != 3) throw std::invalid_argument("eval_conic: bad sizes");
    const Fe x0 = pt[0], x1 = pt[1], x2 = pt[2];
    Fe s = 0;
    s = F.add(s, F.mul(form[0], F.mul(x0, x0)));
    s = F.add(s, F.mul(form[1], F.mul(x1, x1)));
    s = F.add(s, F.mul(form[2], F.mul(x2, x2)));
    s = F.add(s, F.mul(form[3], F.mul(x0, x1)));
    s = F.add(s, F.mul(form[4], F.mul(x0, x2)));
    s = F.add(s, F.mul(form[5], F.mul(x1, x2)));
    return s;
}

ConicFit conic_fit(const FieldPtr& f, const std::vector<VectorK>& pts) {
    const Field& F = *f;
    GfMatrix ev(f, pts.size(), 6);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& p = pts[i];
        if (p.size() != 3) throw std::invalid_argument("conic_fit: need 3-coordinate points");
        ev(i, 0) = F.mul(p[0], p[0]);
        ev(i, 1) = F.mul(p[1], p[1]);
        ev(i, 2) = F.mul(p[2], p[2]);
        ev(i, 3) = F.mul(p[0], p[1]);
        ev(i, 4) = F.mul(p[0], p[2]);
        ev(i, 5) = F.mul(p[1], p[2]);
    }
    const auto basis = nullspace(ev);
    ConicFit out;
    out.solutions_dim = basis.size();
    if (basis.empty()) {
        out.status = ConicFit::Status::none;
        return out;
    }
    out.status = basis.size() == 1 ? ConicFit::Status::unique : ConicFit::Status::not_unique;
    if (basis.size() == 1) out.form = normalize_point(F, basis[0]);
    return out;
}

std::vector<VectorK> tangent_hyperplanes(const Arc& S, const IndexTuple& A) {
    const Field& F = *S.field;
    if (A.size() != S.k - 2) throw std::invalid_argument("tangent_hyperplanes: |A| must be k-2");
    const GfMatrix am = GfMatrix::from_rows(S.field, S.at(A));
    const auto pencil_basis = nullspace(am);
    if (pencil_basis.size() != 2)
        throw std::invalid_argument("tangent_hyperplanes: A does not span a (k-2)-space");
    const VectorK& y1 = pencil_basis[0];
    const VectorK& y2 = pencil_basis[1];
    const IndexTuple aset(A.begin(), A.end());
    std::vector<VectorK> out;
    auto consider = [&](Fe s, Fe r) {
        VectorK h(S.k);
        for (unsigned j = 0; j < S.k; ++j) h[j] = F.add(F.mul(s, y1[j]), F.mul(r, y2[j]));
        for (std::size_t i = 0; i < S.size(); ++i) {
            if (tuple_contains(aset, i)) continue;
            if (dot(F, S.points[i], h) == 0) return;  // meets S outside A
        }
        out.push_back(normalize_point(F, h));
    };
    for (Fe lam : F.elements()) consider(1, lam);
    consider(0, 1);
    return out;
}

GfMatrix mobius_nrc_matrix(const FieldPtr& f, unsigned k, Fe a, Fe b, Fe c, Fe d) {
    const Field& F = *f;
    if (F.sub(F.mul(a, d), F.mul(b, c)) == 0)
        throw std::invalid_argument("mobius_nrc_matrix: ad = bc");
    // column j holds the t-coefficients of (ct+d)^(k-1-j) (at+b)^j
    GfMatrix m(f, k, k);
    std::vector<Fe> ct_d{d, c};  // polynomial d + c t
    std::vector<Fe> at_b{b, a};
    auto poly_mul = [&](const std::vector<Fe>& u, const std::vector<Fe>& v) {
        std::vector<Fe> r(u.size() + v.size() - 1, 0);
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j)
                r[i + j] = F.add(r[i + j], F.mul(u[i], v[j]));
        return r;
    };
    for (unsigned j = 0; j < k; ++j) {
        std::vector<Fe> poly{1};
        for (unsigned s = 0; s < k - 1 - j; ++s) poly = poly_mul(poly, ct_d);
        for (unsigned s = 0; s < j; ++s) poly = poly_mul(poly, at_b);
        for (std::size_t i = 0; i < poly.size() && i < k; ++i) m(i, j) = poly[i];
    }
    return m;
}

GfMatrix arc_to_generator_matrix(const Arc& S) {
    GfMatrix g(S.field, S.k, S.size());
    for (std::size_t j = 0; j < S.size(); ++j)
        for (unsigned i = 0; i < S.k; ++i) g(i, j) = S.points[j][i];
    return g;
}

bool is_mds(const GfMatrix& g) {
    const std::size_t k = g.rows();
    if (g.cols() < k) return false;
    std::vector<VectorK> cols;
    cols.reserve(g.cols());
    for (std::size_t j = 0; j < g.cols(); ++j) cols.push_back(g.col(j));
    return is_arc(g.field(), static_cast<unsigned>(k), cols).ok;
}

std::vector<VectorK> enumerate_points(const FieldPtr& f, unsigned k) {
    const Field& F = *f;
    std::uint64_t total = 0, layer = 1;
    for (unsigned i = 0; i < k; ++i) {
        total += layer;
        layer *= F.q();
    }
    std::vector<VectorK> out;
    out.reserve(total);
    // lead position descending gives ascending lexicographic coordinate order
    for (unsigned lead = k; lead-- > 0;) {
        VectorK v(k, 0);
        v[lead] = 1;
        const unsigned free = k - lead - 1;
        while (true) {
            out.push_back(v);
            // odometer over positions lead+1..k-1, last coordinate fastest
            unsigned i = free;
            bool done = free == 0;
            while (i-- > 0) {
                const std::size_t pos = lead + 1 + i;
                if (v[pos] + 1 < F.q()) {
                    ++v[pos];
                    for (std::size_t j = pos + 1; j < k; ++j) v[j] = 0;
                    break;
                }
                if (i == 0) done = true;
            }
            if (done) break;
        }
    }
    return out;
}

std::string tuple_label(const std::string& name, const IndexTuple& t) {
    std::string s = name + "={";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + "}";
}

}  // namespace arcforge
