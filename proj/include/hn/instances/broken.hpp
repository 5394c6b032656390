#pragma once

#include "hn/instances/filtvec.hpp"

namespace hn::fv {

// Deliberately broken demo instance: rank-1 strict subobjects report a
// degree one higher than the truth.  Degree additivity over (S, X, X/S)
// triples then fails with a concrete witness, and on objects with several
// slope-tied lines the SCSS containment maximum disappears, so both the
// axiom checker and the engine surface the defect.  Negative control only.
struct BrokenDegreeInstance : FiltVecInstance {
    using Object = FiltVecObject;
    using Sub = FiltVecSub;
    using Morphism = FiltVecMorphism;

    static Sub tamper(Sub s) {
        if (s.rank == 1) s.degree = checked_add(s.degree, 1);
        return s;
    }

    std::vector<Sub> strict_subs(const Object& x) const {
        std::vector<Sub> out;
        for (auto& s : FiltVecInstance::strict_subs(x)) out.push_back(tamper(std::move(s)));
        return out;
    }

    Sub zero_sub(const Object& x) const { return FiltVecInstance::zero_sub(x); }
    Sub full_sub(const Object& x) const { return tamper(FiltVecInstance::full_sub(x)); }
    Sub intersect(const Sub& a, const Sub& b) const { return tamper(FiltVecInstance::intersect(a, b)); }
    Sub saturated_sum(const Sub& a, const Sub& b) const { return tamper(FiltVecInstance::saturated_sum(a, b)); }
    Sub preimage(const Object& x, const Sub& s, const Sub& t) const {
        return tamper(FiltVecInstance::preimage(x, s, t));
    }
    Sub pushforward(const Object& x, const Sub& s, const Sub& t) const {
        return tamper(FiltVecInstance::pushforward(x, s, t));
    }
};

} // namespace hn::fv
