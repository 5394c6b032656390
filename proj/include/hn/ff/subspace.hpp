#pragma once

#include <algorithm>
#include <vector>

#include "hn/ff/matrix.hpp"

namespace hn::ff {

// Subspace of GF(p)^n in canonical form: the RREF basis of its row span.
// Equality of canonical bases is equality of subspaces.
struct SubspaceFF {
    int ambient = 0;
    MatrixFF basis; // RREF, basis.rows == dim, basis.cols == ambient

    SubspaceFF() = default;
    SubspaceFF(int ambient_dim, MatrixFF rref_basis) : ambient(ambient_dim), basis(std::move(rref_basis)) {
        if (basis.cols != ambient) throw InvalidInput("subspace basis width mismatch");
    }

    static SubspaceFF zero(FieldPrime f, int n) { return {n, MatrixFF(f, 0, n)}; }
    static SubspaceFF full(FieldPrime f, int n) { return {n, MatrixFF::identity(f, n)}; }
    static SubspaceFF span(const MatrixFF& rows) { return {rows.cols, rref(rows)}; }

    int dim() const { return basis.rows; }
    const FieldPrime& field() const { return basis.field; }

    // Is v in the span?  Reduce by the RREF rows and test for zero.
    bool contains_vector(std::vector<int> v) const {
        if (static_cast<int>(v.size()) != ambient) throw InvalidInput("vector length mismatch");
        reduce_vector(v);
        return std::all_of(v.begin(), v.end(), [](int e) { return e == 0; });
    }

    bool contains(const SubspaceFF& other) const {
        if (other.ambient != ambient) throw InvalidInput("subspace ambient mismatch");
        for (int r = 0; r < other.basis.rows; ++r)
            if (!contains_vector(other.basis.row(r))) return false;
        return true;
    }

    std::vector<int> pivot_columns() const {
        std::vector<int> pivots;
        for (int r = 0; r < basis.rows; ++r)
            for (int c = 0; c < basis.cols; ++c)
                if (basis.at(r, c) != 0) { pivots.push_back(c); break; }
        return pivots;
    }

    // Coordinates of a member vector in the RREF basis: just its values at
    // the pivot columns.
    std::vector<int> coordinates(const std::vector<int>& v) const {
        if (!contains_vector(v)) throw InvalidInput("vector not in subspace");
        std::vector<int> coords;
        for (int c : pivot_columns()) coords.push_back(v[c]);
        return coords;
    }

    friend bool operator==(const SubspaceFF& a, const SubspaceFF& b) {
        return a.ambient == b.ambient && a.basis == b.basis;
    }

private:
    void reduce_vector(std::vector<int>& v) const {
        const FieldPrime& f = basis.field;
        auto pivots = pivot_columns();
        for (int r = 0; r < basis.rows; ++r) {
            int coeff = v[pivots[r]];
            if (coeff == 0) continue;
            for (int c = 0; c < ambient; ++c) v[c] = f.sub(v[c], f.mul(coeff, basis.at(r, c)));
        }
    }
};

// Kernel of m acting on column vectors of length m.cols, canonical.
inline SubspaceFF solve_kernel(const MatrixFF& m) {
    std::vector<int> pivots;
    MatrixFF r = rref(m, &pivots);
    const FieldPrime& f = m.field;
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<int>> gens;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<int> v(m.cols, 0);
        v[c] = 1;
        for (int i = 0; i < r.rows; ++i) v[pivots[i]] = f.neg(r.at(i, c));
        gens.push_back(std::move(v));
    }
    return SubspaceFF::span(MatrixFF::from_rows(f, m.cols, gens));
}

inline SubspaceFF subspace_sum(const SubspaceFF& a, const SubspaceFF& b) {
    if (a.ambient != b.ambient) throw InvalidInput("subspace sum: ambient mismatch");
    return SubspaceFF::span(stack_rows(a.basis, b.basis));
}

// Annihilator {phi : phi . w = 0 for all w in W}, i.e. the kernel of the
// basis matrix.
inline SubspaceFF annihilator(const SubspaceFF& w) { return solve_kernel(w.basis); }

// A + B and A cap B satisfy ann(A cap B) = ann(A) + ann(B), so the
// intersection is computed through two annihilators.
inline SubspaceFF subspace_intersect(const SubspaceFF& a, const SubspaceFF& b) {
    if (a.ambient != b.ambient) throw InvalidInput("subspace intersect: ambient mismatch");
    return annihilator(subspace_sum(annihilator(a), annihilator(b)));
}

// Matrix Q with ker Q = W exactly, mapping GF(p)^n onto GF(p)^(n-dim W).
// Row r of Q reads off coordinate "non-pivot column r" of the input after
// reduction by W's RREF basis.
inline MatrixFF quotient_map(const SubspaceFF& w) {
    const FieldPrime& f = w.field();
    auto pivots = w.pivot_columns();
    std::vector<bool> is_pivot(w.ambient, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < w.ambient; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    MatrixFF q(f, static_cast<int>(free_cols.size()), w.ambient);
    for (size_t r = 0; r < free_cols.size(); ++r) {
        q.at(static_cast<int>(r), free_cols[r]) = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            q.at(static_cast<int>(r), pivots[i]) = f.neg(w.basis.at(static_cast<int>(i), free_cols[r]));
    }
    return q;
}

// Right inverse S of quotient_map(w): columns are the unit vectors at the
// non-pivot positions, so quotient_map(w) * S = identity.
inline MatrixFF quotient_section(const SubspaceFF& w) {
    auto pivots = w.pivot_columns();
    std::vector<bool> is_pivot(w.ambient, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < w.ambient; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    MatrixFF s(w.field(), w.ambient, static_cast<int>(free_cols.size()));
    for (size_t j = 0; j < free_cols.size(); ++j) s.at(free_cols[j], static_cast<int>(j)) = 1;
    return s;
}

// inner expressed in the RREF basis of outer, as a subspace of
// GF(p)^dim(outer); requires inner <= outer.
inline SubspaceFF express_in(const SubspaceFF& outer, const SubspaceFF& inner) {
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < inner.basis.rows; ++r) rows.push_back(outer.coordinates(inner.basis.row(r)));
    return SubspaceFF::span(MatrixFF::from_rows(outer.field(), outer.dim(), rows));
}

// Image of a subspace under a linear map (column-vector convention).
inline SubspaceFF subspace_image(const MatrixFF& map, const SubspaceFF& w) {
    if (map.cols != w.ambient) throw InvalidInput("image: shape mismatch");
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < w.basis.rows; ++r) rows.push_back(mat_apply(map, w.basis.row(r)));
    return SubspaceFF::span(MatrixFF::from_rows(map.field, map.rows, rows));
}

// Preimage {v : map v in W}: the kernel of quotient_map(W) * map.
inline SubspaceFF subspace_preimage(const MatrixFF& map, const SubspaceFF& w) {
    if (map.rows != w.ambient) throw InvalidInput("preimage: shape mismatch");
    return solve_kernel(mat_mul(quotient_map(w), map));
}

inline int default_enumeration_bound(int p) {
    switch (p) {
        case 2: return 5;
        case 3: return 4;
        case 5: return 3;
        default: return 2;
    }
}

// All subspaces of GF(p)^n, each exactly once in canonical form, in the
// fixed canonical order: dimension ascending, then row-major basis entries
// lexicographic.  Hard bound per (n, p); exceeding it is an error rather
// than a silent truncation, since exhaustiveness is what oracles rely on.
inline std::vector<SubspaceFF> enumerate_subspaces(int ambient, FieldPrime f, int bound_override = 0) {
    int bound = bound_override > 0 ? bound_override : default_enumeration_bound(f.p);
    if (ambient > bound)
        throw EnumerationBound("subspace enumeration: dim " + std::to_string(ambient) + " exceeds bound " +
                               std::to_string(bound) + " for p=" + std::to_string(f.p));
    std::vector<SubspaceFF> out;
    std::vector<int> pivots;
    // RREF shapes: choose pivot columns, then fill the free entries.  Each
    // RREF matrix arises exactly once.
    auto emit_for_pivots = [&](int k) {
        // free positions: (row i, col c) with c > pivots[i], c not a pivot
        std::vector<std::pair<int, int>> free_pos;
        std::vector<bool> is_pivot(ambient, false);
        for (int c : pivots) is_pivot[c] = true;
        for (int i = 0; i < k; ++i)
            for (int c = pivots[i] + 1; c < ambient; ++c)
                if (!is_pivot[c]) free_pos.emplace_back(i, c);
        long long total = 1;
        for (size_t i = 0; i < free_pos.size(); ++i) total *= f.p;
        for (long long code = 0; code < total; ++code) {
            MatrixFF m(f, k, ambient);
            for (int i = 0; i < k; ++i) m.at(i, pivots[i]) = 1;
            long long rest = code;
            for (auto [r, c] : free_pos) {
                m.at(r, c) = static_cast<int>(rest % f.p);
                rest /= f.p;
            }
            out.emplace_back(ambient, std::move(m));
        }
    };
    auto rec = [&](auto&& self, int k, int next_col) -> void {
        if (static_cast<int>(pivots.size()) == k) {
            emit_for_pivots(k);
            return;
        }
        for (int c = next_col; c < ambient; ++c) {
            pivots.push_back(c);
            self(self, k, c + 1);
            pivots.pop_back();
        }
    };
    for (int k = 0; k <= ambient; ++k) rec(rec, k, 0);
    std::sort(out.begin(), out.end(), [](const SubspaceFF& x, const SubspaceFF& y) {
        if (x.dim() != y.dim()) return x.dim() < y.dim();
        return x.basis.a < y.basis.a;
    });
    return out;
}

} // namespace hn::ff
