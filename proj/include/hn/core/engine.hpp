#pragma once

#include <algorithm>
#include <vector>

#include "hn/core/instance.hpp"
#include "hn/core/polygon.hpp"
#include "hn/errors.hpp"

namespace hn {

template <SubHandle S>
Rational sub_slope(const S& s) {
    if (s.rank == 0) throw ZeroObject("slope of the zero subobject");
    return Rational(s.degree, s.rank);
}

template <CategoryInstance I>
Rational object_slope(const I& inst, const typename I::Object& x) {
    Int r = inst.rank(x);
    if (r == 0) throw ZeroObject("slope of the zero object");
    return Rational(inst.degree(x), r);
}

// Semistability via the strict-subobject criterion: no nonzero proper
// strict subobject of strictly larger slope.  Rank equality forces a
// strict subobject to be the whole object, so "proper" is a rank test.
template <CategoryInstance I>
bool is_semistable(const I& inst, const typename I::Object& x) {
    Int r = inst.rank(x);
    if (r == 0) throw ZeroObject("is_semistable on the zero object");
    Rational mu = object_slope(inst, x);
    for (const auto& s : inst.strict_subs(x)) {
        if (s.rank == 0 || s.rank >= r) continue;
        if (mu < sub_slope(s)) return false;
    }
    return true;
}

// The strongly-contradicting-semistability subobject: the final strict
// subobject of maximal slope.  Computed by enumeration: collect every
// nonzero strict subobject achieving the maximal slope and return their
// containment maximum.  Its existence is a theorem for lawful instances;
// absence is reported as an instance defect.  A semistable object is its
// own SCSS.
template <CategoryInstance I>
typename I::Sub scss(const I& inst, const typename I::Object& x) {
    if (inst.rank(x) == 0) throw ZeroObject("scss of the zero object");
    auto subs = inst.strict_subs(x);
    bool found = false;
    Rational best;
    for (const auto& s : subs) {
        if (s.rank == 0) continue;
        Rational mu = sub_slope(s);
        if (!found || best < mu) {
            best = mu;
            found = true;
        }
    }
    if (!found) throw AxiomViolation("nonzero object listed no nonzero strict subobject");
    std::vector<const typename I::Sub*> top;
    for (const auto& s : subs)
        if (s.rank > 0 && sub_slope(s) == best) top.push_back(&s);
    for (const auto* cand : top) {
        bool is_max = true;
        for (const auto* other : top)
            if (!inst.contains(*cand, *other)) {
                is_max = false;
                break;
            }
        if (is_max) return *cand;
    }
    throw AxiomViolation("max-slope strict subobjects admit no containment maximum");
}

// The HN filtration as a chain of strict-subobject handles from 0 to X,
// with the graded slope/rank/degree data alongside.
template <class I>
struct HNFiltration {
    typename I::Object object;
    std::vector<typename I::Sub> steps; // steps[0] = 0, steps[N] = X
    std::vector<Rational> graded_slopes; // strictly decreasing
    std::vector<Int> graded_ranks;
    std::vector<Int> graded_degrees;

    Int length() const { return static_cast<Int>(graded_slopes.size()); }
    const Rational& max_slope() const { return graded_slopes.front(); }
    const Rational& min_slope() const { return graded_slopes.back(); }
};

template <class I>
void fill_graded(HNFiltration<I>& filt) {
    filt.graded_slopes.clear();
    filt.graded_ranks.clear();
    filt.graded_degrees.clear();
    for (size_t i = 0; i + 1 < filt.steps.size(); ++i) {
        Int dr = checked_sub(filt.steps[i + 1].rank, filt.steps[i].rank);
        Int dd = checked_sub(filt.steps[i + 1].degree, filt.steps[i].degree);
        if (dr <= 0) throw AxiomViolation("filtration step ranks not strictly increasing");
        filt.graded_ranks.push_back(dr);
        filt.graded_degrees.push_back(dd);
        filt.graded_slopes.push_back(Rational(dd, dr));
    }
}

template <CategoryInstance I>
bool verify_hn(const I& inst, const typename I::Object& x, const std::vector<typename I::Sub>& steps);

// Existence by the standard recursion: the first step is the SCSS, and
// the remaining steps are preimages of the HN steps of X/SCSS.  The
// assembled chain is checked against the definition before returning.
template <CategoryInstance I>
HNFiltration<I> hn_filtration(const I& inst, const typename I::Object& x) {
    if (inst.rank(x) == 0) throw ZeroObject("hn_filtration of the zero object");
    HNFiltration<I> filt;
    filt.object = x;
    filt.steps.push_back(inst.zero_sub(x));
    auto first = scss(inst, x);
    filt.steps.push_back(first);
    if (first.rank < inst.rank(x)) {
        auto q = inst.quotient(x, first);
        auto qfilt = hn_filtration(inst, q);
        for (size_t i = 1; i < qfilt.steps.size(); ++i)
            filt.steps.push_back(inst.preimage(x, first, qfilt.steps[i]));
    }
    fill_graded(filt);
    for (size_t i = 0; i + 1 < filt.graded_slopes.size(); ++i)
        if (!(filt.graded_slopes[i + 1] < filt.graded_slopes[i]))
            throw AxiomViolation("assembled HN filtration has non-decreasing graded slopes");
    if (!verify_hn(inst, x, filt.steps))
        throw AxiomViolation("assembled HN filtration failed verification");
    return filt;
}

// Definition check: strictly increasing strict chain from 0 to X, each
// graded piece semistable, graded slopes strictly decreasing.  Malformed
// candidates yield false; resource errors still propagate.
template <CategoryInstance I>
bool verify_hn(const I& inst, const typename I::Object& x, const std::vector<typename I::Sub>& steps) {
    try {
        if (steps.size() < 2) return false;
        if (!(steps.front() == inst.zero_sub(x))) return false;
        if (!(steps.back() == inst.full_sub(x))) return false;
        for (size_t i = 0; i + 1 < steps.size(); ++i) {
            if (steps[i + 1] == steps[i]) return false;
            if (!(steps[i].rank < steps[i + 1].rank)) return false;
            if (!inst.contains(steps[i + 1], steps[i])) return false;
        }
        Rational prev;
        for (size_t i = 0; i + 1 < steps.size(); ++i) {
            Int dr = steps[i + 1].rank - steps[i].rank;
            Int dd = steps[i + 1].degree - steps[i].degree;
            Rational mu(dd, dr);
            if (i > 0 && !(mu < prev)) return false;
            prev = mu;
            auto graded = inst.sub_object(inst.pushforward(x, steps[i], steps[i + 1]));
            if (!is_semistable(inst, graded)) return false;
        }
        return true;
    } catch (const EnumerationBound&) {
        throw;
    } catch (const PrecisionExhausted&) {
        throw;
    } catch (const Error&) {
        return false;
    }
}

// X^(mu): the largest HN step whose graded slopes are all >= mu.
// Decreasing in mu, with breaks exactly at the HN slopes.
template <class I>
const typename I::Sub& slope_index(const HNFiltration<I>& filt, const Rational& mu) {
    size_t i = 0;
    while (i < filt.graded_slopes.size() && !(filt.graded_slopes[i] < mu)) ++i;
    return filt.steps[i];
}

// X^(mu+): the next smaller step when mu is an HN slope, X^(mu) itself
// otherwise (so Gr^(mu) is nonzero exactly at the HN slopes).
template <class I>
const typename I::Sub& slope_index_after(const HNFiltration<I>& filt, const Rational& mu) {
    size_t i = 0;
    while (i < filt.graded_slopes.size() && !(filt.graded_slopes[i] < mu)) ++i;
    if (i > 0 && filt.graded_slopes[i - 1] == mu) return filt.steps[i - 1];
    return filt.steps[i];
}

template <class I>
PolygonFn hn_polygon(const HNFiltration<I>& filt) {
    std::vector<PolygonFn::Vertex> vs;
    for (const auto& s : filt.steps) vs.push_back({s.rank, Rational(s.degree)});
    return PolygonFn(std::move(vs));
}

// Brute-force polygon oracle: the upper convex hull of the (rank, degree)
// points of all nonzero strict subobjects, with (0,0) prepended.  Must
// coincide with hn_polygon exactly on every enumerable instance.
template <CategoryInstance I>
PolygonFn oracle_polygon(const I& inst, const typename I::Object& x) {
    if (inst.rank(x) == 0) throw ZeroObject("oracle_polygon of the zero object");
    std::vector<std::pair<Int, Rational>> points;
    for (const auto& s : inst.strict_subs(x))
        if (s.rank > 0) points.emplace_back(s.rank, Rational(s.degree));
    return upper_convex_hull(std::move(points));
}

// (min HN slope of X) > (max HN slope of Y) predicts Hom(X, Y) = 0.
template <class I>
bool hom_vanishes_predicted(const HNFiltration<I>& filt_x, const HNFiltration<I>& filt_y) {
    return filt_y.max_slope() < filt_x.min_slope();
}

// Weighted-average identity: mu(X) = sum (rk_i / rk X) mu_i over the
// graded pieces of any strict chain from 0 to X, plus degree additivity.
// Both sides computed in exact rationals.
template <CategoryInstance I>
bool weighted_slope_identity(const I& inst, const typename I::Object& x,
                             const std::vector<typename I::Sub>& chain) {
    if (chain.size() < 2) return false;
    Int rk = inst.rank(x);
    Int deg = inst.degree(x);
    if (chain.front().rank != 0 || chain.back().rank != rk || chain.back().degree != deg) return false;
    Rational weighted(0);
    Int deg_sum = 0;
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        Int dr = checked_sub(chain[i + 1].rank, chain[i].rank);
        Int dd = checked_sub(chain[i + 1].degree, chain[i].degree);
        if (dr <= 0) return false;
        weighted = weighted + Rational(dr, rk) * Rational(dd, dr);
        deg_sum = checked_add(deg_sum, dd);
    }
    return weighted == Rational(deg, rk) && deg_sum == deg;
}

// Exactly one of mu(S) < mu(X) < mu(Q), mu(Q) < mu(X) < mu(S), or all
// three equal holds for a short strict exact sequence.
inline bool slope_sandwich_holds(const Rational& mu_sub, const Rational& mu_x, const Rational& mu_quot) {
    if (mu_sub < mu_x) return mu_x < mu_quot;
    if (mu_x < mu_sub) return mu_quot < mu_x;
    return mu_sub == mu_x && mu_x == mu_quot;
}

// The induced map Gr^(mu)(X) -> Gr^(mu)(Y) of f.  Source or target may be
// the zero object when mu is not an HN slope on that side.
template <MorphismInstance I>
typename I::Morphism gr_map(const I& inst, const typename I::Morphism& f, const Rational& mu) {
    auto filt_x = hn_filtration(inst, f.source);
    auto filt_y = hn_filtration(inst, f.target);
    const auto& xhi = slope_index(filt_x, mu);
    const auto& xlo = slope_index_after(filt_x, mu);
    const auto& yhi = slope_index(filt_y, mu);
    const auto& ylo = slope_index_after(filt_y, mu);
    return inst.subquotient_map(f, xhi, xlo, yhi, ylo);
}

} // namespace hn
