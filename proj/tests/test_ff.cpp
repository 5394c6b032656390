#include <catch2/catch.hpp>

#include <map>
#include <random>
#include <set>

#include "hn/ff/subspace.hpp"

using namespace hn;
using namespace hn::ff;

namespace {

// Independent subspace oracle: spans of all <= n-element vector subsets,
// deduplicated by membership sets.  No RREF involved.
std::vector<std::set<std::vector<int>>> subspaces_bruteforce(int n, const FieldPrime& f) {
    std::vector<std::vector<int>> vectors;
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= f.p;
    for (long long code = 0; code < total; ++code) {
        std::vector<int> v(n);
        long long rest = code;
        for (int i = 0; i < n; ++i) {
            v[i] = static_cast<int>(rest % f.p);
            rest /= f.p;
        }
        vectors.push_back(v);
    }
    auto span_members = [&](const std::vector<std::vector<int>>& gens) {
        std::set<std::vector<int>> members{std::vector<int>(n, 0)};
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::vector<int>> snapshot(members.begin(), members.end());
            for (const auto& m : snapshot)
                for (const auto& g : gens)
                    for (int c = 0; c < f.p; ++c) {
                        std::vector<int> next(n);
                        for (int i = 0; i < n; ++i) next[i] = f.add(m[i], f.mul(c, g[i]));
                        if (members.insert(next).second) grew = true;
                    }
        }
        return members;
    };
    std::set<std::set<std::vector<int>>> found;
    std::vector<int> pick;
    auto rec = [&](auto&& self, size_t start, int k) -> void {
        if (k == 0) {
            std::vector<std::vector<int>> gens;
            for (int idx : pick) gens.push_back(vectors[static_cast<size_t>(idx)]);
            found.insert(span_members(gens));
            return;
        }
        for (size_t i = start; i < vectors.size(); ++i) {
            pick.push_back(static_cast<int>(i));
            self(self, i + 1, k - 1);
            pick.pop_back();
        }
    };
    for (int k = 0; k <= n; ++k) rec(rec, 0, k);
    return {found.begin(), found.end()};
}

std::set<std::vector<int>> members_of(const SubspaceFF& w, const FieldPrime& f) {
    std::set<std::vector<int>> members;
    int k = w.dim();
    long long total = 1;
    for (int i = 0; i < k; ++i) total *= f.p;
    for (long long code = 0; code < total; ++code) {
        std::vector<int> v(static_cast<size_t>(w.ambient), 0);
        long long rest = code;
        for (int r = 0; r < k; ++r) {
            int c = static_cast<int>(rest % f.p);
            rest /= f.p;
            for (int j = 0; j < w.ambient; ++j) v[static_cast<size_t>(j)] = f.add(v[static_cast<size_t>(j)], f.mul(c, w.basis.at(r, j)));
        }
        members.insert(v);
    }
    return members;
}

// Gaussian binomial [n choose k]_p by the product formula; test-only
// counting oracle.
long long gaussian_binomial(int n, int k, int p) {
    long long num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        long long pn = 1, pk = 1;
        for (int j = 0; j < n - i; ++j) pn *= p;
        for (int j = 0; j < k - i; ++j) pk *= p;
        num *= pn - 1;
        den *= pk - 1;
    }
    return num / den;
}

} // namespace

TEST_CASE("field arithmetic is exact") {
    for (int p : {2, 3, 5, 7, 11, 13, 17}) {
        FieldPrime f(p);
        for (int a = 1; a < p; ++a) {
            REQUIRE(f.mul(a, f.inv(a)) == 1);
            for (int b = 0; b < p; ++b)
                for (int c = 0; c < p; ++c) REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        }
    }
    REQUIRE_THROWS_AS(FieldPrime(4), InvalidInput);
    REQUIRE_THROWS_AS(FieldPrime(19), InvalidInput);
    REQUIRE_THROWS_AS(FieldPrime(2).inv(0), InvalidInput);
}

TEST_CASE("rref: identity, invertible and zero cases") {
    FieldPrime f2(2), f5(5);
    MatrixFF id2 = MatrixFF::identity(f2, 2);
    REQUIRE(rref(id2) == id2);

    // [[2,4],[1,3]] over GF(5): det = 2*3 - 4*1 = 2 != 0 mod 5, so the rref
    // is the identity
    MatrixFF m = MatrixFF::from_rows(f5, 2, {{2, 4}, {1, 3}});
    int det = f5.sub(f5.mul(2, 3), f5.mul(4, 1));
    REQUIRE(det != 0);
    REQUIRE(rref(m) == MatrixFF::identity(f5, 2));

    MatrixFF zero(f2, 3, 3);
    REQUIRE(rref(zero).rows == 0);
}

TEST_CASE("rref is idempotent and canonical on row spaces") {
    FieldPrime f(3);
    for (int seed = 0; seed < 50; ++seed) {
        std::mt19937_64 rng(seed);
        MatrixFF m(f, 3, 4);
        for (auto& e : m.a) e = static_cast<int>(rng() % 3);
        MatrixFF r = rref(m);
        REQUIRE(rref(r) == r);
        // permuting and scaling rows preserves the row space, hence the rref
        MatrixFF shuffled = m;
        if (m.rows >= 2) {
            for (int c = 0; c < m.cols; ++c) {
                std::swap(shuffled.at(0, c), shuffled.at(1, c));
                shuffled.at(0, c) = f.mul(shuffled.at(0, c), 2);
            }
        }
        REQUIRE(rref(shuffled) == r);
    }
}

TEST_CASE("subspace sum and intersection on GF(2)^2") {
    FieldPrime f(2);
    SubspaceFF e1 = SubspaceFF::span(MatrixFF::from_rows(f, 2, {{1, 0}}));
    SubspaceFF e2 = SubspaceFF::span(MatrixFF::from_rows(f, 2, {{0, 1}}));
    SubspaceFF diag = SubspaceFF::span(MatrixFF::from_rows(f, 2, {{1, 1}}));
    SubspaceFF full = SubspaceFF::full(f, 2);

    REQUIRE(subspace_sum(e1, e2) == full);
    REQUIRE(subspace_sum(e1, e1) == e1);
    REQUIRE(subspace_sum(e1, diag) == full);
    REQUIRE(subspace_intersect(e1, e2).dim() == 0);
    REQUIRE(subspace_intersect(diag, diag) == diag);
}

TEST_CASE("enumerate_subspaces matches the brute-force oracle and Gaussian counts") {
    for (auto [n, p] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {3, 2}, {1, 3}, {2, 3}}) {
        FieldPrime f(p);
        auto enumerated = enumerate_subspaces(n, f);
        auto oracle = subspaces_bruteforce(n, f);
        REQUIRE(enumerated.size() == oracle.size());
        long long expected = 0;
        for (int k = 0; k <= n; ++k) expected += gaussian_binomial(n, k, p);
        REQUIRE(static_cast<long long>(enumerated.size()) == expected);
        // same membership sets, each exactly once
        std::set<std::set<std::vector<int>>> enum_sets;
        for (const auto& w : enumerated) enum_sets.insert(members_of(w, f));
        REQUIRE(enum_sets.size() == enumerated.size());
        std::set<std::set<std::vector<int>>> oracle_sets(oracle.begin(), oracle.end());
        REQUIRE(enum_sets == oracle_sets);
    }
    REQUIRE(enumerate_subspaces(1, FieldPrime(2)).size() == 2);
    REQUIRE(enumerate_subspaces(2, FieldPrime(2)).size() == 5);
    REQUIRE(enumerate_subspaces(3, FieldPrime(2)).size() == 16);
    // counts across the whole supported (dim, p) table
    for (int p : {2, 3, 5}) {
        FieldPrime f(p);
        for (int n = 0; n <= default_enumeration_bound(p); ++n) {
            long long expected = 0;
            for (int k = 0; k <= n; ++k) expected += gaussian_binomial(n, k, p);
            REQUIRE(static_cast<long long>(enumerate_subspaces(n, f).size()) == expected);
        }
    }
}

TEST_CASE("enumeration output follows the canonical order") {
    FieldPrime f(2);
    auto all = enumerate_subspaces(3, f);
    for (size_t i = 0; i + 1 < all.size(); ++i) {
        bool ordered = all[i].dim() < all[i + 1].dim() ||
                       (all[i].dim() == all[i + 1].dim() && all[i].basis.a < all[i + 1].basis.a);
        REQUIRE(ordered);
    }
}

TEST_CASE("lattice operations reject mismatched ambients") {
    FieldPrime f(2);
    SubspaceFF a = SubspaceFF::full(f, 2);
    SubspaceFF b = SubspaceFF::full(f, 3);
    REQUIRE_THROWS_AS(subspace_sum(a, b), InvalidInput);
    REQUIRE_THROWS_AS(subspace_intersect(a, b), InvalidInput);
    REQUIRE_THROWS_AS(a.contains(b), InvalidInput);
}

TEST_CASE("enumeration bound is an error, not a truncation") {
    REQUIRE_THROWS_AS(enumerate_subspaces(6, FieldPrime(2)), EnumerationBound);
    REQUIRE_THROWS_AS(enumerate_subspaces(5, FieldPrime(3)), EnumerationBound);
    REQUIRE_NOTHROW(enumerate_subspaces(5, FieldPrime(2)));
}

TEST_CASE("dimension formula dim A + dim B = dim(A+B) + dim(A cap B), exhaustive") {
    for (int p : {2, 3}) {
        FieldPrime f(p);
        auto all = enumerate_subspaces(3, f);
        for (const auto& a : all)
            for (const auto& b : all) {
                int lhs = a.dim() + b.dim();
                int rhs = subspace_sum(a, b).dim() + subspace_intersect(a, b).dim();
                REQUIRE(lhs == rhs);
            }
    }
}

TEST_CASE("solve_kernel: identity, zero map and a line") {
    FieldPrime f(2);
    REQUIRE(solve_kernel(MatrixFF::identity(f, 3)).dim() == 0);
    REQUIRE(solve_kernel(MatrixFF(f, 3, 3)) == SubspaceFF::full(f, 3));
    // x + y = 0 over GF(2): kernel is span((1,1))
    SubspaceFF k = solve_kernel(MatrixFF::from_rows(f, 2, {{1, 1}}));
    REQUIRE(k == SubspaceFF::span(MatrixFF::from_rows(f, 2, {{1, 1}})));
}

TEST_CASE("quotient map has the subspace as its exact kernel") {
    FieldPrime f(2);
    for (const auto& w : enumerate_subspaces(3, f)) {
        MatrixFF q = quotient_map(w);
        REQUIRE(q.rows == 3 - w.dim());
        REQUIRE(solve_kernel(q) == w);
        MatrixFF s = quotient_section(w);
        REQUIRE(mat_mul(q, s) == MatrixFF::identity(f, q.rows));
    }
}
