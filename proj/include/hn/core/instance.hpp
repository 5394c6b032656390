#pragma once

#include <concepts>
#include <string>
#include <vector>

#include "hn/rational.hpp"

namespace hn {

// Result of a direct sum: the sum object plus the two canonical strict
// summand handles.
template <class Object, class Sub>
struct DirectSum {
    Object object;
    Sub left;
    Sub right;
};

// A strict-subobject handle must expose its cached rank/degree and compare
// canonically: equal handles iff equal subobjects.
template <class S>
concept SubHandle = std::equality_comparable<S> && requires(const S s) {
    { s.rank } -> std::convertible_to<Int>;
    { s.degree } -> std::convertible_to<Int>;
};

// The slope-category contract.  An instance is a value (it may carry
// configuration such as enumeration bounds); all operations are pure.
//
//   rank/degree      additive over (S, X, X/S) triples
//   strict_subs      the full finite strict-subobject lattice, incl. 0 and X
//   contains(a, b)   b <= a in the subobject poset
//   sub_object       the subobject as a standalone object
//   quotient         X/S with its induced structure
//   preimage         lattice inverse of the quotient projection
//   pushforward      image of T in X/S, for S <= T
//   intersect        greatest lower bound (strict)
//   saturated_sum    least upper bound followed by saturation
//   direct_sum       block sum with canonical summand handles
//   f_contains       independent containment witness at the F-level,
//                    used by the axiom checker against contains()
template <class I>
concept CategoryInstance = SubHandle<typename I::Sub> &&
    requires(const I inst, const typename I::Object& x, const typename I::Object& y,
             const typename I::Sub& s, const typename I::Sub& t) {
        { inst.rank(x) } -> std::same_as<Int>;
        { inst.degree(x) } -> std::same_as<Int>;
        { inst.strict_subs(x) } -> std::same_as<std::vector<typename I::Sub>>;
        { inst.zero_sub(x) } -> std::same_as<typename I::Sub>;
        { inst.full_sub(x) } -> std::same_as<typename I::Sub>;
        { inst.contains(s, t) } -> std::same_as<bool>;
        { inst.f_contains(s, t) } -> std::same_as<bool>;
        { inst.sub_object(s) } -> std::same_as<typename I::Object>;
        { inst.quotient(x, s) } -> std::same_as<typename I::Object>;
        { inst.preimage(x, s, t) } -> std::same_as<typename I::Sub>;
        { inst.pushforward(x, s, t) } -> std::same_as<typename I::Sub>;
        { inst.intersect(s, t) } -> std::same_as<typename I::Sub>;
        { inst.saturated_sum(s, t) } -> std::same_as<typename I::Sub>;
        { inst.direct_sum(x, y) } -> std::same_as<DirectSum<typename I::Object, typename I::Sub>>;
        { inst.describe(x) } -> std::same_as<std::string>;
        { inst.describe_sub(s) } -> std::same_as<std::string>;
    };

// Extension for instances with computable morphism spaces.  hom_basis
// returns a GF(p)-basis of Hom_C(X, Y); image/kernel land in the strict
// lattice (image after saturation).  subquotient_map produces the induced
// map (hi_X/lo_X) -> (hi_Y/lo_Y), defined when f respects the pairs.
template <class I>
concept MorphismInstance = CategoryInstance<I> &&
    requires(const I inst, const typename I::Object& x, const typename I::Object& y,
             const typename I::Sub& s, const typename I::Morphism& f) {
        { inst.hom_basis(x, y) } -> std::same_as<std::vector<typename I::Morphism>>;
        { inst.image_saturated(f) } -> std::same_as<typename I::Sub>;
        { inst.kernel_sub(f) } -> std::same_as<typename I::Sub>;
        { inst.identity(x) } -> std::same_as<typename I::Morphism>;
        { inst.compose(f, f) } -> std::same_as<typename I::Morphism>;
        { inst.is_zero_morphism(f) } -> std::same_as<bool>;
        { inst.subquotient(x, s, s) } -> std::same_as<typename I::Object>;
        { inst.subquotient_map(f, s, s, s, s) } -> std::same_as<typename I::Morphism>;
        { inst.morphism_image_subspace_in(f, s, s) } -> std::same_as<bool>;
    };

} // namespace hn
