#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "hn/core/instance.hpp"
#include "hn/ff/subspace.hpp"

namespace hn::qv {

struct QuiverShape {
    int vertices = 0;
    std::vector<std::pair<int, int>> arrows; // (src, dst); loops and multi-arrows allowed

    void validate() const {
        if (vertices < 0) throw InvalidInput("quiver: negative vertex count");
        for (auto [s, d] : arrows)
            if (s < 0 || s >= vertices || d < 0 || d >= vertices)
                throw InvalidInput("quiver: arrow endpoint out of range");
    }

    friend bool operator==(const QuiverShape& a, const QuiverShape& b) {
        return a.vertices == b.vertices && a.arrows == b.arrows;
    }
};

// Representation of a quiver over GF(p) with a per-vertex stability weight
// theta.  The forgetful functor is the identity (the category is abelian),
// so every subrepresentation is strict and saturation is trivial.
// rank = total dimension, degree = theta . dims.
struct QuiverRepObject {
    ff::FieldPrime field;
    QuiverShape shape;
    std::vector<int> dims;
    std::vector<ff::MatrixFF> maps; // per arrow: dims[dst] x dims[src]
    std::vector<Int> theta;

    QuiverRepObject() = default;
    QuiverRepObject(ff::FieldPrime f, QuiverShape sh, std::vector<int> ds, std::vector<ff::MatrixFF> ms,
                    std::vector<Int> th)
        : field(f), shape(std::move(sh)), dims(std::move(ds)), maps(std::move(ms)), theta(std::move(th)) {
        shape.validate();
        if (static_cast<int>(dims.size()) != shape.vertices || static_cast<int>(theta.size()) != shape.vertices)
            throw InvalidInput("quiver rep: dims/theta length mismatch");
        for (int d : dims)
            if (d < 0) throw InvalidInput("quiver rep: negative dimension");
        if (maps.size() != shape.arrows.size()) throw InvalidInput("quiver rep: arrow map count mismatch");
        for (size_t a = 0; a < maps.size(); ++a) {
            auto [s, d] = shape.arrows[a];
            if (maps[a].rows != dims[d] || maps[a].cols != dims[s])
                throw InvalidInput("quiver rep: arrow map shape mismatch");
            if (!(maps[a].field == field)) throw InvalidInput("quiver rep: arrow map field mismatch");
        }
    }

    friend bool operator==(const QuiverRepObject& a, const QuiverRepObject& b) {
        return a.field == b.field && a.shape == b.shape && a.dims == b.dims && a.theta == b.theta &&
               a.maps == b.maps;
    }
};

// Subrepresentation: an arrow-stable tuple of subspaces, canonical
// through the per-vertex RREF bases.
struct QuiverSub {
    QuiverRepObject parent;
    std::vector<ff::SubspaceFF> spaces;
    Int rank = 0;
    Int degree = 0;

    friend bool operator==(const QuiverSub& a, const QuiverSub& b) { return a.spaces == b.spaces; }
};

inline bool qv_arrow_stable(const QuiverRepObject& x, const std::vector<ff::SubspaceFF>& spaces) {
    for (size_t a = 0; a < x.maps.size(); ++a) {
        auto [s, d] = x.shape.arrows[a];
        if (!spaces[d].contains(ff::subspace_image(x.maps[a], spaces[s]))) return false;
    }
    return true;
}

inline QuiverSub qv_make_sub(const QuiverRepObject& x, std::vector<ff::SubspaceFF> spaces) {
    if (static_cast<int>(spaces.size()) != x.shape.vertices)
        throw InvalidInput("quiver sub: wrong number of vertex spaces");
    Int rk = 0, deg = 0;
    for (int v = 0; v < x.shape.vertices; ++v) {
        if (spaces[v].ambient != x.dims[v]) throw InvalidInput("quiver sub: vertex ambient mismatch");
        rk = checked_add(rk, spaces[v].dim());
        deg = checked_add(deg, checked_mul(x.theta[v], spaces[v].dim()));
    }
    if (!qv_arrow_stable(x, spaces)) throw InvalidInput("quiver sub: not arrow-stable");
    return QuiverSub{x, std::move(spaces), rk, deg};
}

// Per-vertex linear maps commuting with the arrow maps.
struct QuiverMorphism {
    QuiverRepObject source;
    QuiverRepObject target;
    std::vector<ff::MatrixFF> blocks; // per vertex: dimsY[v] x dimsX[v]
};

inline QuiverMorphism qv_make_morphism(const QuiverRepObject& x, const QuiverRepObject& y,
                                       std::vector<ff::MatrixFF> blocks) {
    if (!(x.shape == y.shape)) throw InvalidInput("quiver morphism: shape mismatch");
    if (static_cast<int>(blocks.size()) != x.shape.vertices)
        throw InvalidInput("quiver morphism: block count mismatch");
    for (int v = 0; v < x.shape.vertices; ++v)
        if (blocks[v].rows != y.dims[v] || blocks[v].cols != x.dims[v])
            throw InvalidInput("quiver morphism: block shape mismatch");
    for (size_t a = 0; a < x.maps.size(); ++a) {
        auto [s, d] = x.shape.arrows[a];
        if (!(ff::mat_mul(blocks[d], x.maps[a]) == ff::mat_mul(y.maps[a], blocks[s])))
            throw InvalidInput("quiver morphism: does not commute with arrow " + std::to_string(a));
    }
    return QuiverMorphism{x, y, std::move(blocks)};
}

struct QuiverInstance {
    using Object = QuiverRepObject;
    using Sub = QuiverSub;
    using Morphism = QuiverMorphism;

    int enumeration_bound = 0;        // per-vertex subspace enumeration bound (0: ff defaults)
    long long product_cap = 200000;   // cap on the per-vertex subspace count product
    int hom_unknown_cap = 400;

    Int rank(const Object& x) const {
        Int r = 0;
        for (int d : x.dims) r = checked_add(r, d);
        return r;
    }

    Int degree(const Object& x) const {
        Int deg = 0;
        for (int v = 0; v < x.shape.vertices; ++v)
            deg = checked_add(deg, checked_mul(x.theta[v], x.dims[v]));
        return deg;
    }

    // All arrow-stable subspace tuples, by backtracking over vertices in a
    // fixed order with arrow-stability pruning as soon as both endpoints
    // of an arrow are chosen.
    std::vector<Sub> strict_subs(const Object& x) const {
        std::vector<std::vector<ff::SubspaceFF>> per_vertex;
        long long product = 1;
        for (int v = 0; v < x.shape.vertices; ++v) {
            per_vertex.push_back(ff::enumerate_subspaces(x.dims[v], x.field, enumeration_bound));
            product *= static_cast<long long>(per_vertex.back().size());
            if (product > product_cap)
                throw EnumerationBound("quiver subrepresentation search: candidate product exceeds cap");
        }
        std::vector<Sub> out;
        std::vector<ff::SubspaceFF> chosen;
        auto rec = [&](auto&& self, int v) -> void {
            if (v == x.shape.vertices) {
                out.push_back(qv_make_sub(x, chosen));
                return;
            }
            for (const auto& w : per_vertex[v]) {
                bool ok = true;
                for (size_t a = 0; a < x.maps.size() && ok; ++a) {
                    auto [s, d] = x.shape.arrows[a];
                    if (s > v || d > v || (s != v && d != v)) continue;
                    const auto& ws = s == v ? w : chosen[s];
                    const auto& wd = d == v ? w : chosen[d];
                    ok = wd.contains(ff::subspace_image(x.maps[a], ws));
                }
                if (!ok) continue;
                chosen.push_back(w);
                self(self, v + 1);
                chosen.pop_back();
            }
        };
        rec(rec, 0);
        return out;
    }

    Sub zero_sub(const Object& x) const {
        std::vector<ff::SubspaceFF> spaces;
        for (int v = 0; v < x.shape.vertices; ++v) spaces.push_back(ff::SubspaceFF::zero(x.field, x.dims[v]));
        return qv_make_sub(x, std::move(spaces));
    }

    Sub full_sub(const Object& x) const {
        std::vector<ff::SubspaceFF> spaces;
        for (int v = 0; v < x.shape.vertices; ++v) spaces.push_back(ff::SubspaceFF::full(x.field, x.dims[v]));
        return qv_make_sub(x, std::move(spaces));
    }

    bool contains(const Sub& outer, const Sub& inner) const {
        for (size_t v = 0; v < outer.spaces.size(); ++v)
            if (!outer.spaces[v].contains(inner.spaces[v])) return false;
        return true;
    }

    bool f_contains(const Sub& outer, const Sub& inner) const {
        for (size_t v = 0; v < outer.spaces.size(); ++v)
            if (ff::rank(ff::stack_rows(outer.spaces[v].basis, inner.spaces[v].basis)) != outer.spaces[v].dim())
                return false;
        return true;
    }

    Object sub_object(const Sub& s) const {
        const Object& x = s.parent;
        std::vector<int> dims;
        for (const auto& w : s.spaces) dims.push_back(w.dim());
        std::vector<ff::MatrixFF> maps;
        for (size_t a = 0; a < x.maps.size(); ++a) {
            auto [sv, dv] = x.shape.arrows[a];
            ff::MatrixFF m(x.field, dims[dv], dims[sv]);
            for (int j = 0; j < dims[sv]; ++j) {
                auto image = ff::mat_apply(x.maps[a], s.spaces[sv].basis.row(j));
                auto coords = s.spaces[dv].coordinates(image);
                for (int r = 0; r < dims[dv]; ++r) m.at(r, j) = coords[r];
            }
            maps.push_back(std::move(m));
        }
        return Object(x.field, x.shape, std::move(dims), std::move(maps), x.theta);
    }

    Object quotient(const Object& x, const Sub& s) const {
        std::vector<int> dims;
        std::vector<ff::MatrixFF> qmaps, sections;
        for (int v = 0; v < x.shape.vertices; ++v) {
            qmaps.push_back(ff::quotient_map(s.spaces[v]));
            sections.push_back(ff::quotient_section(s.spaces[v]));
            dims.push_back(qmaps.back().rows);
        }
        std::vector<ff::MatrixFF> maps;
        for (size_t a = 0; a < x.maps.size(); ++a) {
            auto [sv, dv] = x.shape.arrows[a];
            maps.push_back(ff::mat_mul(qmaps[dv], ff::mat_mul(x.maps[a], sections[sv])));
        }
        return Object(x.field, x.shape, std::move(dims), std::move(maps), x.theta);
    }

    Sub preimage(const Object& x, const Sub& s, const Sub& t_of_quotient) const {
        std::vector<ff::SubspaceFF> spaces;
        for (int v = 0; v < x.shape.vertices; ++v)
            spaces.push_back(ff::subspace_preimage(ff::quotient_map(s.spaces[v]), t_of_quotient.spaces[v]));
        return qv_make_sub(x, std::move(spaces));
    }

    Sub pushforward(const Object& x, const Sub& s, const Sub& t) const {
        if (!contains(t, s)) throw InvalidInput("pushforward requires s <= t");
        std::vector<ff::SubspaceFF> spaces;
        for (int v = 0; v < x.shape.vertices; ++v)
            spaces.push_back(ff::subspace_image(ff::quotient_map(s.spaces[v]), t.spaces[v]));
        return qv_make_sub(quotient(x, s), std::move(spaces));
    }

    Sub intersect(const Sub& a, const Sub& b) const {
        std::vector<ff::SubspaceFF> spaces;
        for (size_t v = 0; v < a.spaces.size(); ++v)
            spaces.push_back(ff::subspace_intersect(a.spaces[v], b.spaces[v]));
        return qv_make_sub(a.parent, std::move(spaces));
    }

    Sub saturated_sum(const Sub& a, const Sub& b) const {
        std::vector<ff::SubspaceFF> spaces;
        for (size_t v = 0; v < a.spaces.size(); ++v)
            spaces.push_back(ff::subspace_sum(a.spaces[v], b.spaces[v]));
        return qv_make_sub(a.parent, std::move(spaces));
    }

    DirectSum<Object, Sub> direct_sum(const Object& x, const Object& y) const {
        if (!(x.field == y.field) || !(x.shape == y.shape) || x.theta != y.theta)
            throw InvalidInput("quiver direct sum requires matching shape and theta");
        std::vector<int> dims;
        for (int v = 0; v < x.shape.vertices; ++v) dims.push_back(x.dims[v] + y.dims[v]);
        std::vector<ff::MatrixFF> maps;
        for (size_t a = 0; a < x.maps.size(); ++a) {
            auto [sv, dv] = x.shape.arrows[a];
            ff::MatrixFF m(x.field, dims[dv], dims[sv]);
            for (int r = 0; r < x.dims[dv]; ++r)
                for (int c = 0; c < x.dims[sv]; ++c) m.at(r, c) = x.maps[a].at(r, c);
            for (int r = 0; r < y.dims[dv]; ++r)
                for (int c = 0; c < y.dims[sv]; ++c) m.at(x.dims[dv] + r, x.dims[sv] + c) = y.maps[a].at(r, c);
            maps.push_back(std::move(m));
        }
        Object sum(x.field, x.shape, dims, std::move(maps), x.theta);
        std::vector<ff::SubspaceFF> left_spaces, right_spaces;
        for (int v = 0; v < x.shape.vertices; ++v) {
            std::vector<std::vector<int>> lrows, rrows;
            for (int c = 0; c < x.dims[v]; ++c) {
                std::vector<int> e(dims[v], 0);
                e[c] = 1;
                lrows.push_back(std::move(e));
            }
            for (int c = 0; c < y.dims[v]; ++c) {
                std::vector<int> e(dims[v], 0);
                e[x.dims[v] + c] = 1;
                rrows.push_back(std::move(e));
            }
            left_spaces.push_back(ff::SubspaceFF::span(ff::MatrixFF::from_rows(x.field, dims[v], lrows)));
            right_spaces.push_back(ff::SubspaceFF::span(ff::MatrixFF::from_rows(x.field, dims[v], rrows)));
        }
        Sub left = qv_make_sub(sum, std::move(left_spaces));
        Sub right = qv_make_sub(sum, std::move(right_spaces));
        return {std::move(sum), std::move(left), std::move(right)};
    }

    // Per-vertex blocks commuting with the arrows, by one linear solve.
    std::vector<Morphism> hom_basis(const Object& x, const Object& y) const {
        if (!(x.shape == y.shape)) throw InvalidInput("hom basis: shape mismatch");
        if (!(x.field == y.field)) throw InvalidInput("hom basis: field mismatch");
        std::vector<int> offset(x.shape.vertices + 1, 0);
        for (int v = 0; v < x.shape.vertices; ++v) offset[v + 1] = offset[v] + y.dims[v] * x.dims[v];
        int unknowns = offset.back();
        if (unknowns > hom_unknown_cap) throw EnumerationBound("hom basis: dimensions exceed the solve cap");
        if (unknowns == 0) return {};
        auto entry_index = [&](int v, int r, int c) { return offset[v] + r * x.dims[v] + c; };
        std::vector<std::vector<int>> constraint_rows;
        for (size_t a = 0; a < x.maps.size(); ++a) {
            auto [sv, dv] = x.shape.arrows[a];
            // (B_dst Ax - Ay B_src)[r][c] = 0
            for (int r = 0; r < y.dims[dv]; ++r)
                for (int c = 0; c < x.dims[sv]; ++c) {
                    std::vector<int> row(unknowns, 0);
                    for (int k = 0; k < x.dims[dv]; ++k) {
                        int idx = entry_index(dv, r, k);
                        row[idx] = x.field.add(row[idx], x.maps[a].at(k, c));
                    }
                    for (int k = 0; k < y.dims[sv]; ++k) {
                        int idx = entry_index(sv, k, c);
                        row[idx] = x.field.sub(row[idx], y.maps[a].at(r, k));
                    }
                    constraint_rows.push_back(std::move(row));
                }
        }
        ff::SubspaceFF sols =
            constraint_rows.empty()
                ? ff::SubspaceFF::full(x.field, unknowns)
                : ff::solve_kernel(ff::MatrixFF::from_rows(x.field, unknowns, constraint_rows));
        std::vector<Morphism> basis;
        for (int i = 0; i < sols.basis.rows; ++i) {
            std::vector<ff::MatrixFF> blocks;
            for (int v = 0; v < x.shape.vertices; ++v) {
                ff::MatrixFF m(x.field, y.dims[v], x.dims[v]);
                for (int r = 0; r < y.dims[v]; ++r)
                    for (int c = 0; c < x.dims[v]; ++c) m.at(r, c) = sols.basis.at(i, entry_index(v, r, c));
                blocks.push_back(std::move(m));
            }
            basis.push_back(qv_make_morphism(x, y, std::move(blocks)));
        }
        return basis;
    }

    Sub image_saturated(const Morphism& f) const {
        std::vector<ff::SubspaceFF> spaces;
        for (const auto& b : f.blocks) spaces.push_back(ff::SubspaceFF::span(ff::transpose(b)));
        return qv_make_sub(f.target, std::move(spaces));
    }

    Sub kernel_sub(const Morphism& f) const {
        std::vector<ff::SubspaceFF> spaces;
        for (const auto& b : f.blocks) spaces.push_back(ff::solve_kernel(b));
        return qv_make_sub(f.source, std::move(spaces));
    }

    Morphism identity(const Object& x) const {
        std::vector<ff::MatrixFF> blocks;
        for (int v = 0; v < x.shape.vertices; ++v) blocks.push_back(ff::MatrixFF::identity(x.field, x.dims[v]));
        return qv_make_morphism(x, x, std::move(blocks));
    }

    Morphism compose(const Morphism& g, const Morphism& f) const {
        if (!(g.source == f.target)) throw InvalidInput("compose: middle objects differ");
        std::vector<ff::MatrixFF> blocks;
        for (size_t v = 0; v < g.blocks.size(); ++v) blocks.push_back(ff::mat_mul(g.blocks[v], f.blocks[v]));
        return qv_make_morphism(f.source, g.target, std::move(blocks));
    }

    bool is_zero_morphism(const Morphism& f) const {
        for (const auto& b : f.blocks)
            if (!std::all_of(b.a.begin(), b.a.end(), [](int e) { return e == 0; })) return false;
        return true;
    }

    Object subquotient(const Object& /*x*/, const Sub& hi, const Sub& lo) const {
        Object inner = sub_object(hi);
        std::vector<ff::SubspaceFF> lo_in_hi;
        for (size_t v = 0; v < hi.spaces.size(); ++v) lo_in_hi.push_back(ff::express_in(hi.spaces[v], lo.spaces[v]));
        return quotient(inner, qv_make_sub(inner, std::move(lo_in_hi)));
    }

    Morphism subquotient_map(const Morphism& f, const Sub& xhi, const Sub& xlo, const Sub& yhi,
                             const Sub& ylo) const {
        Object src = subquotient(f.source, xhi, xlo);
        Object dst = subquotient(f.target, yhi, ylo);
        std::vector<ff::MatrixFF> blocks;
        for (int v = 0; v < f.source.shape.vertices; ++v) {
            for (int r = 0; r < xlo.spaces[v].basis.rows; ++r)
                if (!ylo.spaces[v].contains_vector(ff::mat_apply(f.blocks[v], xlo.spaces[v].basis.row(r))))
                    throw InvalidInput("subquotient map: f does not respect the lower steps");
            ff::SubspaceFF xlo_in_hi = ff::express_in(xhi.spaces[v], xlo.spaces[v]);
            ff::SubspaceFF ylo_in_hi = ff::express_in(yhi.spaces[v], ylo.spaces[v]);
            ff::MatrixFF qx = ff::quotient_map(xlo_in_hi);
            ff::MatrixFF qy = ff::quotient_map(ylo_in_hi);
            ff::MatrixFF sx = ff::quotient_section(xlo_in_hi);
            ff::MatrixFF m(f.source.field, qy.rows, qx.rows);
            for (int j = 0; j < qx.rows; ++j) {
                std::vector<int> e(qx.rows, 0);
                e[j] = 1;
                std::vector<int> hi_coords = ff::mat_apply(sx, e);
                std::vector<int> ambient(f.source.dims[v], 0);
                for (int i = 0; i < xhi.spaces[v].basis.rows; ++i)
                    for (int c = 0; c < f.source.dims[v]; ++c)
                        ambient[c] = f.source.field.add(
                            ambient[c], f.source.field.mul(hi_coords[i], xhi.spaces[v].basis.at(i, c)));
                std::vector<int> mapped = ff::mat_apply(f.blocks[v], ambient);
                if (!yhi.spaces[v].contains_vector(mapped))
                    throw InvalidInput("subquotient map: f does not respect the upper steps");
                std::vector<int> out = ff::mat_apply(qy, yhi.spaces[v].coordinates(mapped));
                for (int r = 0; r < qy.rows; ++r) m.at(r, j) = out[r];
            }
            blocks.push_back(std::move(m));
        }
        return qv_make_morphism(src, dst, std::move(blocks));
    }

    bool morphism_image_subspace_in(const Morphism& f, const Sub& src, const Sub& dst) const {
        for (size_t v = 0; v < src.spaces.size(); ++v)
            if (!dst.spaces[v].contains(ff::subspace_image(f.blocks[v], src.spaces[v]))) return false;
        return true;
    }

    std::string describe(const Object& x) const {
        std::ostringstream os;
        os << "quiver p=" << x.field.p << " dims=[";
        for (size_t v = 0; v < x.dims.size(); ++v) os << (v ? "," : "") << x.dims[v];
        os << "] theta=[";
        for (size_t v = 0; v < x.theta.size(); ++v) os << (v ? "," : "") << x.theta[v];
        os << "] arrows=" << x.shape.arrows.size();
        return os.str();
    }

    std::string describe_sub(const Sub& s) const {
        std::ostringstream os;
        os << "sub dims=[";
        for (size_t v = 0; v < s.spaces.size(); ++v) os << (v ? "," : "") << s.spaces[v].dim();
        os << "] deg=" << s.degree;
        return os.str();
    }
};

} // namespace hn::qv
