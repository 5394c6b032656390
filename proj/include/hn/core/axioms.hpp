#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "hn/core/engine.hpp"

namespace hn {

struct AxiomCheck {
    std::string name;
    bool pass = true;
    long long cases = 0;
    std::string witness; // first counterexample, empty when passing

    AxiomCheck() = default;
    explicit AxiomCheck(std::string check_name) : name(std::move(check_name)) {}
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {
inline void fail(AxiomCheck& c, const std::string& witness) {
    if (c.pass) {
        c.pass = false;
        c.witness = witness;
    }
}
} // namespace detail

// Instance-conformance checks mirroring the axioms: rank and degree
// additivity over every (S, X, X/S) triple from the strict-subobject
// lattice, agreement of the poset structure with independent F-level
// containment, glb/lub lattice laws for intersect and saturated sum, and
// (when the instance exhibits non-strict subobject structures) degree
// maximality of the saturation.  Failures carry a concrete witness.
template <CategoryInstance I>
AxiomReport check_instance_axioms(const I& inst, const std::vector<typename I::Object>& samples) {
    AxiomCheck rank_add{"rank-additivity"};
    AxiomCheck deg_add{"degree-additivity"};
    AxiomCheck poset{"poset-isomorphism"};
    AxiomCheck glb{"lattice-glb"};
    AxiomCheck lub{"lattice-lub"};
    AxiomCheck saturation{"saturation-degree-maximality"};

    for (const auto& x : samples) {
        if (inst.rank(x) == 0) continue;
        auto subs = inst.strict_subs(x);

        for (const auto& s : subs) {
            auto q = inst.quotient(x, s);
            ++rank_add.cases;
            if (inst.rank(x) != checked_add(s.rank, inst.rank(q)))
                detail::fail(rank_add, "X=" + inst.describe(x) + " S=" + inst.describe_sub(s) +
                                           " rk(X)=" + std::to_string(inst.rank(x)) + " rk(S)=" +
                                           std::to_string(s.rank) + " rk(X/S)=" + std::to_string(inst.rank(q)));
            ++deg_add.cases;
            if (inst.degree(x) != checked_add(s.degree, inst.degree(q)))
                detail::fail(deg_add, "X=" + inst.describe(x) + " S=" + inst.describe_sub(s) +
                                          " deg(X)=" + std::to_string(inst.degree(x)) + " deg(S)=" +
                                          std::to_string(s.degree) + " deg(X/S)=" + std::to_string(inst.degree(q)));
            if (s.rank > 0) {
                auto so = inst.sub_object(s);
                if (inst.rank(so) != s.rank || inst.degree(so) != s.degree)
                    detail::fail(deg_add, "sub_object disagrees with handle on " + inst.describe_sub(s));
            }
        }

        for (const auto& s : subs)
            for (const auto& t : subs) {
                ++poset.cases;
                if (inst.contains(s, t) != inst.f_contains(s, t))
                    detail::fail(poset, "X=" + inst.describe(x) + " S=" + inst.describe_sub(s) +
                                            " T=" + inst.describe_sub(t));
                auto meet = inst.intersect(s, t);
                auto join = inst.saturated_sum(s, t);
                ++glb.cases;
                ++lub.cases;
                if (!inst.contains(s, meet) || !inst.contains(t, meet))
                    detail::fail(glb, "meet not below both: S=" + inst.describe_sub(s) +
                                          " T=" + inst.describe_sub(t));
                if (!inst.contains(join, s) || !inst.contains(join, t))
                    detail::fail(lub, "join not above both: S=" + inst.describe_sub(s) +
                                          " T=" + inst.describe_sub(t));
                for (const auto& u : subs) {
                    if (inst.contains(s, u) && inst.contains(t, u) && !inst.contains(meet, u))
                        detail::fail(glb, "meet not greatest: S=" + inst.describe_sub(s) + " T=" +
                                              inst.describe_sub(t) + " U=" + inst.describe_sub(u));
                    if (inst.contains(u, s) && inst.contains(u, t) && !inst.contains(u, join))
                        detail::fail(lub, "join not least: S=" + inst.describe_sub(s) + " T=" +
                                              inst.describe_sub(t) + " U=" + inst.describe_sub(u));
                }
            }

        if constexpr (requires { inst.saturation_witnesses(x); }) {
            for (const auto& w : inst.saturation_witnesses(x)) {
                ++saturation.cases;
                if (w.degree_given > w.degree_saturated)
                    detail::fail(saturation, "degree exceeds saturation on " + inst.describe(x) + ": " +
                                                 std::to_string(w.degree_given) + " > " +
                                                 std::to_string(w.degree_saturated));
                if ((w.degree_given == w.degree_saturated) != w.structures_equal)
                    detail::fail(saturation,
                                 "degree equality does not characterize saturation on " + inst.describe(x));
            }
        }
    }

    AxiomReport report;
    report.checks = {rank_add, deg_add, poset, glb, lub};
    if (saturation.cases > 0) report.checks.push_back(saturation);
    return report;
}

} // namespace hn
