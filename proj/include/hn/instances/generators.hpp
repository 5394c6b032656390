#pragma once

#include <random>
#include <vector>

#include "hn/instances/filtvec.hpp"
#include "hn/instances/phimod.hpp"
#include "hn/instances/quiver.hpp"

namespace hn::gen {

// All randomness in the project flows through a seeded mt19937_64; raw
// modulo draws keep the streams implementation-independent.
using Rng = std::mt19937_64;

inline std::uint64_t draw(Rng& rng, std::uint64_t n) { return rng() % n; }

// Every filtered vector space over GF(p) with the given dimension and
// weight window: nested chains full = fil(wmin) >= ... >= fil(wmax+1) = 0.
inline std::vector<fv::FiltVecObject> fv_exhaustive(ff::FieldPrime f, int dim, int wmin, int wmax) {
    auto all = ff::enumerate_subspaces(dim, f);
    std::vector<fv::FiltVecObject> out;
    std::vector<ff::SubspaceFF> chain{ff::SubspaceFF::full(f, dim)};
    auto rec = [&](auto&& self, int i) -> void {
        if (i == wmax + 1) {
            auto fil = chain;
            fil.push_back(ff::SubspaceFF::zero(f, dim));
            out.emplace_back(f, dim, wmin, wmax, std::move(fil));
            return;
        }
        for (const auto& w : all) {
            if (!chain.back().contains(w)) continue;
            chain.push_back(w);
            self(self, i + 1);
            chain.pop_back();
        }
    };
    rec(rec, wmin + 1);
    return out;
}

// The filtvec acceptance corpus: p = 2, all dims in [1, max_dim], weights
// in [0, 2].
inline std::vector<fv::FiltVecObject> fv_corpus(int max_dim = 3, int p = 2, int wmin = 0, int wmax = 2) {
    ff::FieldPrime f(p);
    std::vector<fv::FiltVecObject> out;
    for (int dim = 1; dim <= max_dim; ++dim)
        for (auto& x : fv_exhaustive(f, dim, wmin, wmax)) out.push_back(std::move(x));
    return out;
}

// The running example: GF(2)^2 with a weight-1 jump on span(e1).
inline fv::FiltVecObject fv_fixture_a() {
    ff::FieldPrime f(2);
    return fv::FiltVecObject(
        f, 2, 0, 1,
        {ff::SubspaceFF::full(f, 2),
         ff::SubspaceFF::span(ff::MatrixFF::from_rows(f, 2, {{1, 0}})),
         ff::SubspaceFF::zero(f, 2)});
}

// Seeded random filtered space: nested filtration over the default
// weight window [-3, 3].
inline fv::FiltVecObject fv_random(Rng& rng, int max_dim = 3, int p = 2, int wmin = -3, int wmax = 3) {
    ff::FieldPrime f(p);
    int dim = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_dim)));
    auto all = ff::enumerate_subspaces(dim, f);
    std::vector<ff::SubspaceFF> fil{ff::SubspaceFF::full(f, dim)};
    for (int i = wmin + 1; i <= wmax; ++i) {
        std::vector<const ff::SubspaceFF*> nested;
        for (const auto& w : all)
            if (fil.back().contains(w)) nested.push_back(&w);
        fil.push_back(*nested[draw(rng, nested.size())]);
    }
    fil.push_back(ff::SubspaceFF::zero(f, dim));
    return fv::FiltVecObject(f, dim, wmin, wmax, std::move(fil));
}

// Rank-1 filtered space of the given weight (slope = weight).
inline fv::FiltVecObject fv_line(int weight, int p = 2) {
    ff::FieldPrime f(p);
    int lo = std::min(weight, 0), hi = std::max(weight, 0);
    std::vector<ff::SubspaceFF> fil;
    for (int i = lo; i <= hi + 1; ++i)
        fil.push_back(i <= weight ? ff::SubspaceFF::full(f, 1) : ff::SubspaceFF::zero(f, 1));
    return fv::FiltVecObject(f, 1, lo, hi, std::move(fil));
}

inline ff::MatrixFF random_matrix(Rng& rng, ff::FieldPrime f, int rows, int cols) {
    ff::MatrixFF m(f, rows, cols);
    for (auto& e : m.a) e = static_cast<int>(draw(rng, static_cast<std::uint64_t>(f.p)));
    return m;
}

// Random quiver representation with total dimension <= max_total, at most
// 3 vertices and 3 arrows, theta entries in [-2, 2].
inline qv::QuiverRepObject qv_random(Rng& rng, int max_total = 4, int p = 2) {
    ff::FieldPrime f(p);
    int vertices = 1 + static_cast<int>(draw(rng, 3));
    qv::QuiverShape shape;
    shape.vertices = vertices;
    int arrows = static_cast<int>(draw(rng, 4));
    for (int a = 0; a < arrows; ++a)
        shape.arrows.emplace_back(static_cast<int>(draw(rng, vertices)), static_cast<int>(draw(rng, vertices)));
    std::vector<int> dims(vertices, 0);
    int total = 1 + static_cast<int>(draw(rng, max_total));
    for (int i = 0; i < total; ++i) ++dims[draw(rng, vertices)];
    std::vector<ff::MatrixFF> maps;
    for (auto [s, d] : shape.arrows) maps.push_back(random_matrix(rng, f, dims[d], dims[s]));
    std::vector<Int> theta;
    for (int v = 0; v < vertices; ++v) theta.push_back(static_cast<Int>(draw(rng, 5)) - 2);
    return qv::QuiverRepObject(f, std::move(shape), std::move(dims), std::move(maps), std::move(theta));
}

// The A2 quiver a -> b with the identity map on dims (1, 1).
inline qv::QuiverRepObject qv_a2_identity(Int theta_a, Int theta_b, int p = 2) {
    ff::FieldPrime f(p);
    qv::QuiverShape shape{2, {{0, 1}}};
    return qv::QuiverRepObject(f, shape, {1, 1}, {ff::MatrixFF::identity(f, 1)}, {theta_a, theta_b});
}

// Small deterministic quiver corpus for the axiom checker.
inline std::vector<qv::QuiverRepObject> qv_small_corpus(int p = 2) {
    std::vector<qv::QuiverRepObject> out;
    out.push_back(qv_a2_identity(-1, 1, p));
    out.push_back(qv_a2_identity(1, -1, p));
    out.push_back(qv_a2_identity(0, 0, p));
    ff::FieldPrime f(p);
    // one vertex, no arrows, dim 2
    out.emplace_back(f, qv::QuiverShape{1, {}}, std::vector<int>{2}, std::vector<ff::MatrixFF>{},
                     std::vector<Int>{1});
    // loop on one vertex, nilpotent map
    out.emplace_back(f, qv::QuiverShape{1, {{0, 0}}}, std::vector<int>{2},
                     std::vector<ff::MatrixFF>{ff::MatrixFF::from_rows(f, 2, {{0, 1}, {0, 0}})},
                     std::vector<Int>{1});
    // A2 with dims (2, 1) and a projection arrow
    out.emplace_back(f, qv::QuiverShape{2, {{0, 1}}}, std::vector<int>{2, 1},
                     std::vector<ff::MatrixFF>{ff::MatrixFF::from_rows(f, 2, {{1, 0}})},
                     std::vector<Int>{1, -1});
    return out;
}

inline pm::SeriesPoly random_series(Rng& rng, ff::FieldPrime f, int max_degree, bool nonzero) {
    for (;;) {
        std::vector<int> c(static_cast<size_t>(1 + draw(rng, static_cast<std::uint64_t>(max_degree + 1))));
        for (auto& e : c) e = static_cast<int>(draw(rng, static_cast<std::uint64_t>(f.p)));
        pm::SeriesPoly s(f, std::move(c));
        if (!nonzero || !s.is_zero()) return s;
    }
}

inline pm::PhiModObject pm_diag(std::vector<int> exponents, int p = 2, int q = 2) {
    ff::FieldPrime f(p);
    int n = static_cast<int>(exponents.size());
    std::vector<pm::SeriesPoly> entries(static_cast<size_t>(n) * n, pm::SeriesPoly::zero(f));
    for (int i = 0; i < n; ++i)
        entries[static_cast<size_t>(i) * n + i] = pm::SeriesPoly::monomial(f, exponents[static_cast<size_t>(i)]);
    return pm::PhiModObject(f, q, n, std::move(entries));
}

// [[1, 1], [0, X]] over GF(2), q = 2: the non-split triangular fixture.
inline pm::PhiModObject pm_triangular_fixture() {
    ff::FieldPrime f(2);
    return pm::PhiModObject(f, 2, 2,
                            {pm::SeriesPoly::one(f), pm::SeriesPoly::one(f), pm::SeriesPoly::zero(f),
                             pm::SeriesPoly::monomial(f, 1)});
}

} // namespace hn::gen
