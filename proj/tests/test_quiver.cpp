#include <catch2/catch.hpp>

#include "hn/core/engine.hpp"
#include "hn/instances/generators.hpp"

using namespace hn;
using qv::QuiverInstance;
using qv::QuiverRepObject;

namespace {
QuiverInstance inst;
}

TEST_CASE("qr_strict_subs: counts and arrow-stability pruning") {
    ff::FieldPrime f(2);
    // one vertex, no arrows, dim 2: the 5 subspaces
    QuiverRepObject free2(f, qv::QuiverShape{1, {}}, {2}, {}, {0});
    REQUIRE(inst.strict_subs(free2).size() == 5);

    // A2 identity rep, dims (1,1): (F2, 0) fails arrow-stability
    auto a2 = gen::qv_a2_identity(-1, 1);
    auto subs = inst.strict_subs(a2);
    REQUIRE(subs.size() == 3);
    for (const auto& s : subs) {
        bool src_only = s.spaces[0].dim() == 1 && s.spaces[1].dim() == 0;
        REQUIRE_FALSE(src_only);
    }

    // zero representation: exactly the zero subobject
    QuiverRepObject zero(f, qv::QuiverShape{1, {}}, {0}, {}, {1});
    REQUIRE(inst.strict_subs(zero).size() == 1);
}

TEST_CASE("qr_degree: theta pairing") {
    auto a2 = gen::qv_a2_identity(-1, 1);
    REQUIRE(inst.degree(a2) == 0); // -1 + 1
    auto a2z = gen::qv_a2_identity(0, 0);
    REQUIRE(inst.degree(a2z) == 0);
    for (const auto& s : inst.strict_subs(a2))
        if (s.spaces[0].dim() == 0 && s.spaces[1].dim() == 1) REQUIRE(s.degree == 1); // theta_b * 1
}

TEST_CASE("qr quotient, preimage and hom complete the contract") {
    auto a2 = gen::qv_a2_identity(-1, 1);
    auto subs = inst.strict_subs(a2);
    for (const auto& s : subs) {
        auto q = inst.quotient(a2, s);
        REQUIRE(inst.rank(q) == inst.rank(a2) - s.rank);
        REQUIRE(inst.degree(q) == inst.degree(a2) - s.degree);
        if (s.rank == 0) REQUIRE(q == a2);
        // round trip: preimage of the quotient's subobjects
        for (const auto& t : inst.strict_subs(q)) {
            auto back = inst.preimage(a2, s, t);
            REQUIRE(back.rank == s.rank + t.rank);
            REQUIRE(inst.contains(back, s));
        }
    }
    // quotient by (0, F2) is the rep (F2 -> 0) with dims (1, 0)
    for (const auto& s : subs)
        if (s.spaces[0].dim() == 0 && s.spaces[1].dim() == 1) {
            auto q = inst.quotient(a2, s);
            REQUIRE(q.dims == std::vector<int>{1, 0});
        }

    // Hom(A2 identity, itself) over GF(2): commuting pairs force equal scalars
    REQUIRE(inst.hom_basis(a2, a2).size() == 1);
}

TEST_CASE("A2 HN filtrations against the exhaustive oracle") {
    // theta (-1, 1): steps 0 < (0,F2) < X with slopes (1, -1)
    auto x = gen::qv_a2_identity(-1, 1);
    auto filt = hn_filtration(inst, x);
    REQUIRE(filt.graded_slopes == std::vector<Rational>{Rational(1), Rational(-1)});
    REQUIRE(filt.steps[1].spaces[0].dim() == 0);
    REQUIRE(filt.steps[1].spaces[1].dim() == 1);
    REQUIRE(hn_polygon(filt) == oracle_polygon(inst, x));

    // theta (1, -1): semistable of slope 0
    auto y = gen::qv_a2_identity(1, -1);
    REQUIRE(is_semistable(inst, y));
    auto fy = hn_filtration(inst, y);
    REQUIRE(fy.length() == 1);
    REQUIRE(fy.graded_slopes[0] == Rational(0));
    REQUIRE(hn_polygon(fy) == oracle_polygon(inst, y));
}

TEST_CASE("engine equals oracle on seeded random quiver fixtures") {
    gen::Rng rng(20240817);
    for (int i = 0; i < 120; ++i) {
        auto x = gen::qv_random(rng, 4, 2);
        if (inst.rank(x) == 0) continue;
        auto filt = hn_filtration(inst, x);
        REQUIRE(hn_polygon(filt) == oracle_polygon(inst, x));
        REQUIRE(verify_hn(inst, x, filt.steps));
        if (filt.length() > 1) REQUIRE(filt.steps[1] == scss(inst, x));
    }
}

TEST_CASE("quiver direct sums join polygons when slopes are ordered") {
    // same shape and theta, supported at different vertices: slopes 2 and 0
    ff::FieldPrime f(2);
    qv::QuiverShape a2{2, {{0, 1}}};
    QuiverRepObject hi(f, a2, {1, 0}, {ff::MatrixFF(f, 0, 1)}, {2, 0});
    QuiverRepObject lo(f, a2, {0, 1}, {ff::MatrixFF(f, 1, 0)}, {2, 0});
    auto sum = inst.direct_sum(hi, lo);
    auto p = hn_polygon(hn_filtration(inst, sum.object));
    auto joined = polygon_join(hn_polygon(hn_filtration(inst, hi)),
                               hn_polygon(hn_filtration(inst, lo)));
    REQUIRE(p == joined);
    REQUIRE_THROWS_AS(inst.direct_sum(hi, gen::qv_a2_identity(0, 1)), InvalidInput);
}
