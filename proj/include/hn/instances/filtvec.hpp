#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "hn/core/instance.hpp"
#include "hn/ff/subspace.hpp"

namespace hn::fv {

// Filtered vector space over GF(p): an exhaustive, decreasing filtration
// fil(imin) = V >= ... >= fil(imax+1) = 0 by subspaces.  The forgetful
// functor to plain vector spaces realizes the strict-subobject bijection,
// so strict subobjects are exactly the subspaces, carrying the induced
// filtration.
struct FiltVecObject {
    ff::FieldPrime field;
    int dim = 0;
    int imin = 0;
    int imax = 0;
    std::vector<ff::SubspaceFF> fil; // index k holds fil(imin + k), size imax - imin + 2

    FiltVecObject() : fil{ff::SubspaceFF::zero(field, 0), ff::SubspaceFF::zero(field, 0)} {}

    FiltVecObject(ff::FieldPrime f, int dimension, int wmin, int wmax, std::vector<ff::SubspaceFF> steps)
        : field(f), dim(dimension), imin(wmin), imax(wmax), fil(std::move(steps)) {
        if (dim < 0) throw InvalidInput("filtvec: negative dimension");
        if (imax < imin) throw InvalidInput("filtvec: weight window [imin, imax] is empty");
        if (fil.size() != static_cast<size_t>(imax - imin + 2))
            throw InvalidInput("filtvec: filtration must cover every weight in [imin, imax+1]");
        for (const auto& w : fil) {
            if (w.ambient != dim) throw InvalidInput("filtvec: filtration subspace ambient mismatch");
            if (!(w.field() == field)) throw InvalidInput("filtvec: filtration field mismatch");
        }
        if (fil.front().dim() != dim) throw InvalidInput("filtvec: fil(imin) must be the full space");
        if (fil.back().dim() != 0) throw InvalidInput("filtvec: fil(imax+1) must be zero");
        for (size_t k = 0; k + 1 < fil.size(); ++k)
            if (!fil[k].contains(fil[k + 1])) throw InvalidInput("filtvec: filtration is not decreasing");
    }

    // Clamped filtration: full below the window, zero above it.
    const ff::SubspaceFF& fil_at(int i) const {
        if (i <= imin) return fil.front();
        if (i >= imax + 1) return fil.back();
        return fil[static_cast<size_t>(i - imin)];
    }

    friend bool operator==(const FiltVecObject& a, const FiltVecObject& b) {
        if (!(a.field == b.field) || a.dim != b.dim) return false;
        int lo = std::min(a.imin, b.imin), hi = std::max(a.imax, b.imax) + 1;
        for (int i = lo; i <= hi; ++i)
            if (!(a.fil_at(i) == b.fil_at(i))) return false;
        return true;
    }
};

// Degree = sum of i * dim gr^i.  The Abel-summation form is computed as
// well and the two are asserted equal.
inline Int fv_degree_of_filtration(const FiltVecObject& x, const std::vector<ff::SubspaceFF>* sub = nullptr) {
    auto dim_at = [&](int i) -> Int {
        if (sub) {
            if (i <= x.imin) return (*sub).front().dim();
            if (i >= x.imax + 1) return 0;
            return (*sub)[static_cast<size_t>(i - x.imin)].dim();
        }
        return x.fil_at(i).dim();
    };
    Int jump_form = 0;
    for (int i = x.imin; i <= x.imax; ++i)
        jump_form = checked_add(jump_form, checked_mul(i, checked_sub(dim_at(i), dim_at(i + 1))));
    Int n = dim_at(x.imin);
    Int abel_form = 0;
    for (int i = 1; i <= x.imax; ++i) abel_form = checked_add(abel_form, dim_at(i));
    for (int i = x.imin; i <= 0; ++i) abel_form = checked_sub(abel_form, checked_sub(n, dim_at(i)));
    if (jump_form != abel_form) throw Error("filtvec degree formulas disagree");
    return jump_form;
}

inline Int fv_degree(const FiltVecObject& x) { return fv_degree_of_filtration(x); }

// Strict subobject = subspace with the induced filtration; the handle is
// canonical through the subspace's RREF basis.
struct FiltVecSub {
    FiltVecObject parent;
    ff::SubspaceFF space;
    Int rank = 0;
    Int degree = 0;

    friend bool operator==(const FiltVecSub& a, const FiltVecSub& b) { return a.space == b.space; }
};

inline FiltVecSub fv_make_sub(const FiltVecObject& x, ff::SubspaceFF space) {
    if (space.ambient != x.dim) throw InvalidInput("filtvec sub: ambient mismatch");
    std::vector<ff::SubspaceFF> induced;
    for (int i = x.imin; i <= x.imax + 1; ++i)
        induced.push_back(ff::subspace_intersect(x.fil_at(i), space));
    Int deg = fv_degree_of_filtration(x, &induced);
    Int rk = space.dim();
    return FiltVecSub{x, std::move(space), rk, deg};
}

// Filtration-compatible linear map: mat * fil_X(i) <= fil_Y(i) for all i.
struct FiltVecMorphism {
    FiltVecObject source;
    FiltVecObject target;
    ff::MatrixFF mat; // target.dim x source.dim, column-vector convention
};

inline FiltVecMorphism fv_make_morphism(const FiltVecObject& x, const FiltVecObject& y, ff::MatrixFF mat) {
    if (mat.rows != y.dim || mat.cols != x.dim) throw InvalidInput("filtvec morphism: shape mismatch");
    int lo = std::min(x.imin, y.imin), hi = std::max(x.imax, y.imax) + 1;
    for (int i = lo; i <= hi; ++i)
        if (!y.fil_at(i).contains(ff::subspace_image(mat, x.fil_at(i))))
            throw InvalidInput("filtvec morphism: not filtration-compatible at weight " + std::to_string(i));
    return FiltVecMorphism{x, y, std::move(mat)};
}

// Witness for the saturation axiom: the degree of (subspace, given
// sub-filtration) never exceeds the degree of the induced filtration,
// with equality exactly when they coincide.
inline std::pair<Int, Int> fv_saturation_gap(const FiltVecObject& x, const ff::SubspaceFF& space,
                                             const std::vector<ff::SubspaceFF>& sub_filtration) {
    if (space.ambient != x.dim) throw InvalidInput("saturation gap: ambient mismatch");
    if (sub_filtration.size() != static_cast<size_t>(x.imax - x.imin + 2))
        throw InvalidInput("saturation gap: sub-filtration must cover the weight window");
    if (sub_filtration.front().dim() != space.dim() || sub_filtration.back().dim() != 0)
        throw InvalidInput("saturation gap: sub-filtration endpoints");
    for (size_t k = 0; k < sub_filtration.size(); ++k) {
        int i = x.imin + static_cast<int>(k);
        if (k + 1 < sub_filtration.size() && !sub_filtration[k].contains(sub_filtration[k + 1]))
            throw InvalidInput("saturation gap: sub-filtration not decreasing");
        if (!ff::subspace_intersect(x.fil_at(i), space).contains(sub_filtration[k]))
            throw InvalidInput("saturation gap: sub-filtration exceeds the induced filtration");
        if (!space.contains(sub_filtration[k]))
            throw InvalidInput("saturation gap: sub-filtration leaves the subspace");
    }
    FiltVecSub saturated = fv_make_sub(x, space);
    Int given = fv_degree_of_filtration(x, &sub_filtration);
    return {given, saturated.degree};
}

struct FiltVecSaturationWitness {
    Int degree_given = 0;
    Int degree_saturated = 0;
    bool structures_equal = true;
};

struct FiltVecInstance {
    using Object = FiltVecObject;
    using Sub = FiltVecSub;
    using Morphism = FiltVecMorphism;

    int enumeration_bound = 0; // 0: per-p defaults from ff
    int hom_unknown_cap = 400;

    Int rank(const Object& x) const { return x.dim; }
    Int degree(const Object& x) const { return fv_degree(x); }

    std::vector<Sub> strict_subs(const Object& x) const {
        std::vector<Sub> out;
        for (auto& w : ff::enumerate_subspaces(x.dim, x.field, enumeration_bound))
            out.push_back(fv_make_sub(x, std::move(w)));
        return out;
    }

    Sub zero_sub(const Object& x) const { return fv_make_sub(x, ff::SubspaceFF::zero(x.field, x.dim)); }
    Sub full_sub(const Object& x) const { return fv_make_sub(x, ff::SubspaceFF::full(x.field, x.dim)); }

    bool contains(const Sub& outer, const Sub& inner) const { return outer.space.contains(inner.space); }

    // Independent route for the axiom checker: containment through ranks
    // of stacked bases instead of vector reduction.
    bool f_contains(const Sub& outer, const Sub& inner) const {
        return ff::rank(ff::stack_rows(outer.space.basis, inner.space.basis)) == outer.space.dim();
    }

    Object sub_object(const Sub& s) const {
        const Object& x = s.parent;
        int k = s.space.dim();
        std::vector<ff::SubspaceFF> restricted;
        for (int i = x.imin; i <= x.imax + 1; ++i)
            restricted.push_back(ff::express_in(s.space, ff::subspace_intersect(x.fil_at(i), s.space)));
        (void)k;
        return Object(x.field, s.space.dim(), x.imin, x.imax, std::move(restricted));
    }

    Object quotient(const Object& x, const Sub& s) const {
        ff::MatrixFF q = ff::quotient_map(s.space);
        std::vector<ff::SubspaceFF> fil_q;
        for (int i = x.imin; i <= x.imax + 1; ++i) fil_q.push_back(ff::subspace_image(q, x.fil_at(i)));
        return Object(x.field, x.dim - s.space.dim(), x.imin, x.imax, std::move(fil_q));
    }

    Sub preimage(const Object& x, const Sub& s, const Sub& t_of_quotient) const {
        ff::MatrixFF q = ff::quotient_map(s.space);
        return fv_make_sub(x, ff::subspace_preimage(q, t_of_quotient.space));
    }

    Sub pushforward(const Object& x, const Sub& s, const Sub& t) const {
        if (!contains(t, s)) throw InvalidInput("pushforward requires s <= t");
        ff::MatrixFF q = ff::quotient_map(s.space);
        return fv_make_sub(quotient(x, s), ff::subspace_image(q, t.space));
    }

    Sub intersect(const Sub& a, const Sub& b) const {
        return fv_make_sub(a.parent, ff::subspace_intersect(a.space, b.space));
    }

    // At the F-level the sum of strict subobjects, then saturation; the
    // induced filtration is the saturation, so this is just the span sum.
    Sub saturated_sum(const Sub& a, const Sub& b) const {
        return fv_make_sub(a.parent, ff::subspace_sum(a.space, b.space));
    }

    DirectSum<Object, Sub> direct_sum(const Object& x, const Object& y) const {
        if (!(x.field == y.field)) throw InvalidInput("direct sum: field mismatch");
        int lo = std::min(x.imin, y.imin), hi = std::max(x.imax, y.imax);
        int n = x.dim + y.dim;
        std::vector<ff::SubspaceFF> fil_sum;
        for (int i = lo; i <= hi + 1; ++i) {
            const auto& wx = x.fil_at(i);
            const auto& wy = y.fil_at(i);
            std::vector<std::vector<int>> rows;
            for (int r = 0; r < wx.basis.rows; ++r) {
                std::vector<int> v(n, 0);
                for (int c = 0; c < x.dim; ++c) v[c] = wx.basis.at(r, c);
                rows.push_back(std::move(v));
            }
            for (int r = 0; r < wy.basis.rows; ++r) {
                std::vector<int> v(n, 0);
                for (int c = 0; c < y.dim; ++c) v[x.dim + c] = wy.basis.at(r, c);
                rows.push_back(std::move(v));
            }
            fil_sum.push_back(ff::SubspaceFF::span(ff::MatrixFF::from_rows(x.field, n, rows)));
        }
        Object sum(x.field, n, lo, hi, std::move(fil_sum));
        std::vector<std::vector<int>> left_rows, right_rows;
        for (int c = 0; c < x.dim; ++c) {
            std::vector<int> v(n, 0);
            v[c] = 1;
            left_rows.push_back(std::move(v));
        }
        for (int c = 0; c < y.dim; ++c) {
            std::vector<int> v(n, 0);
            v[x.dim + c] = 1;
            right_rows.push_back(std::move(v));
        }
        Sub left = fv_make_sub(sum, ff::SubspaceFF::span(ff::MatrixFF::from_rows(x.field, n, left_rows)));
        Sub right = fv_make_sub(sum, ff::SubspaceFF::span(ff::MatrixFF::from_rows(x.field, n, right_rows)));
        return {std::move(sum), std::move(left), std::move(right)};
    }

    // Basis of the space of filtration-compatible linear maps, found by
    // solving the linear compatibility constraints entry-wise.
    std::vector<Morphism> hom_basis(const Object& x, const Object& y) const {
        if (!(x.field == y.field)) throw InvalidInput("hom basis: field mismatch");
        int unknowns = x.dim * y.dim;
        if (unknowns > hom_unknown_cap) throw EnumerationBound("hom basis: dimensions exceed the solve cap");
        if (unknowns == 0) return {};
        std::vector<std::vector<int>> constraint_rows;
        int lo = std::min(x.imin, y.imin), hi = std::max(x.imax, y.imax) + 1;
        for (int i = lo; i <= hi; ++i) {
            const auto& wx = x.fil_at(i);
            ff::MatrixFF qy = ff::quotient_map(y.fil_at(i));
            for (int vrow = 0; vrow < wx.basis.rows; ++vrow) {
                auto v = wx.basis.row(vrow);
                for (int r = 0; r < qy.rows; ++r) {
                    std::vector<int> row(unknowns, 0);
                    for (int alpha = 0; alpha < y.dim; ++alpha) {
                        int coeff = qy.at(r, alpha);
                        if (coeff == 0) continue;
                        for (int beta = 0; beta < x.dim; ++beta)
                            row[alpha * x.dim + beta] =
                                x.field.add(row[alpha * x.dim + beta], x.field.mul(coeff, v[beta]));
                    }
                    constraint_rows.push_back(std::move(row));
                }
            }
        }
        ff::SubspaceFF sols =
            constraint_rows.empty()
                ? ff::SubspaceFF::full(x.field, unknowns)
                : ff::solve_kernel(ff::MatrixFF::from_rows(x.field, unknowns, constraint_rows));
        std::vector<Morphism> basis;
        for (int r = 0; r < sols.basis.rows; ++r) {
            ff::MatrixFF mat(x.field, y.dim, x.dim);
            for (int alpha = 0; alpha < y.dim; ++alpha)
                for (int beta = 0; beta < x.dim; ++beta) mat.at(alpha, beta) = sols.basis.at(r, alpha * x.dim + beta);
            basis.push_back(fv_make_morphism(x, y, std::move(mat)));
        }
        return basis;
    }

    Sub image_saturated(const Morphism& f) const {
        return fv_make_sub(f.target, ff::SubspaceFF::span(ff::transpose(f.mat)));
    }

    Sub kernel_sub(const Morphism& f) const { return fv_make_sub(f.source, ff::solve_kernel(f.mat)); }

    Morphism identity(const Object& x) const {
        return fv_make_morphism(x, x, ff::MatrixFF::identity(x.field, x.dim));
    }

    Morphism compose(const Morphism& g, const Morphism& f) const {
        if (!(g.source == f.target)) throw InvalidInput("compose: middle objects differ");
        return fv_make_morphism(f.source, g.target, ff::mat_mul(g.mat, f.mat));
    }

    bool is_zero_morphism(const Morphism& f) const {
        return std::all_of(f.mat.a.begin(), f.mat.a.end(), [](int e) { return e == 0; });
    }

    Object subquotient(const Object& /*x*/, const Sub& hi, const Sub& lo) const {
        Object inner = sub_object(hi);
        return quotient(inner, fv_make_sub(inner, ff::express_in(hi.space, lo.space)));
    }

    Morphism subquotient_map(const Morphism& f, const Sub& xhi, const Sub& xlo, const Sub& yhi,
                             const Sub& ylo) const {
        for (int r = 0; r < xlo.space.basis.rows; ++r)
            if (!ylo.space.contains_vector(ff::mat_apply(f.mat, xlo.space.basis.row(r))))
                throw InvalidInput("subquotient map: f does not respect the lower steps");
        Object src = subquotient(f.source, xhi, xlo);
        Object dst = subquotient(f.target, yhi, ylo);
        ff::SubspaceFF xlo_in_hi = ff::express_in(xhi.space, xlo.space);
        ff::SubspaceFF ylo_in_hi = ff::express_in(yhi.space, ylo.space);
        ff::MatrixFF qx = ff::quotient_map(xlo_in_hi);
        ff::MatrixFF qy = ff::quotient_map(ylo_in_hi);
        ff::MatrixFF sx = ff::quotient_section(xlo_in_hi);
        ff::MatrixFF mat(f.mat.field, dst.dim, src.dim);
        for (int j = 0; j < src.dim; ++j) {
            std::vector<int> e(src.dim, 0);
            e[j] = 1;
            std::vector<int> hi_coords = ff::mat_apply(sx, e);
            std::vector<int> ambient(f.source.dim, 0);
            for (int i = 0; i < xhi.space.basis.rows; ++i)
                for (int c = 0; c < f.source.dim; ++c)
                    ambient[c] = f.mat.field.add(ambient[c],
                                                 f.mat.field.mul(hi_coords[i], xhi.space.basis.at(i, c)));
            std::vector<int> mapped = ff::mat_apply(f.mat, ambient);
            if (!yhi.space.contains_vector(mapped))
                throw InvalidInput("subquotient map: f does not respect the upper steps");
            std::vector<int> out = ff::mat_apply(qy, yhi.space.coordinates(mapped));
            for (int r = 0; r < dst.dim; ++r) mat.at(r, j) = out[r];
        }
        return fv_make_morphism(src, dst, std::move(mat));
    }

    bool morphism_image_subspace_in(const Morphism& f, const Sub& src, const Sub& dst) const {
        return dst.space.contains(ff::subspace_image(f.mat, src.space));
    }

    // Degree-maximality witnesses for the axiom checker: for each line L
    // of X, compare the induced filtration on L with the one obtained by
    // dropping L out of the filtration one weight early.
    std::vector<FiltVecSaturationWitness> saturation_witnesses(const Object& x) const {
        std::vector<FiltVecSaturationWitness> out;
        for (auto& w : ff::enumerate_subspaces(x.dim, x.field, enumeration_bound)) {
            if (w.dim() == 0) continue;
            std::vector<ff::SubspaceFF> induced;
            for (int i = x.imin; i <= x.imax + 1; ++i)
                induced.push_back(ff::subspace_intersect(x.fil_at(i), w));
            // one lowered variant per interior weight with a nonzero step
            for (size_t k = 1; k + 1 < induced.size(); ++k) {
                if (induced[k].dim() == 0) continue;
                auto lowered = induced;
                lowered[k] = lowered[k + 1];
                bool equal = true;
                for (size_t j = 0; j < induced.size(); ++j)
                    if (!(lowered[j] == induced[j])) equal = false;
                auto [given, saturated] = fv_saturation_gap(x, w, lowered);
                out.push_back({given, saturated, equal});
            }
            // the induced filtration itself: equality case
            auto [given, saturated] = fv_saturation_gap(x, w, induced);
            out.push_back({given, saturated, true});
        }
        return out;
    }

    std::string describe(const Object& x) const {
        std::ostringstream os;
        os << "filtvec p=" << x.field.p << " dim=" << x.dim << " window=[" << x.imin << "," << x.imax
           << "] jumps=";
        for (int i = x.imin; i <= x.imax + 1; ++i) os << x.fil_at(i).dim() << (i <= x.imax ? ">" : "");
        return os.str();
    }

    std::string describe_sub(const Sub& s) const {
        std::ostringstream os;
        os << "sub dim=" << s.rank << " deg=" << s.degree << " basis=[";
        for (int r = 0; r < s.space.basis.rows; ++r) {
            if (r) os << ",";
            os << "[";
            for (int c = 0; c < s.space.basis.cols; ++c) {
                if (c) os << " ";
                os << s.space.basis.at(r, c);
            }
            os << "]";
        }
        os << "]";
        return os.str();
    }
};

} // namespace hn::fv
