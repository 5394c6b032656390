#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "hn/ff/field.hpp"
#include "hn/rational.hpp"

namespace hn::pm {

// Element of GF(p)[[X]] with finite support: a polynomial, representing an
// honest member of the power-series ring.  All arithmetic is exact;
// "precision" elsewhere refers only to how many coefficient orders of a
// functional equation are enforced, never to rounded coefficients.
struct SeriesPoly {
    ff::FieldPrime field;
    std::vector<int> c; // c[i] = coefficient of X^i, trailing zeros trimmed

    SeriesPoly() = default;
    explicit SeriesPoly(ff::FieldPrime f) : field(f) {}
    SeriesPoly(ff::FieldPrime f, std::vector<int> coeffs) : field(f), c(std::move(coeffs)) {
        for (auto& e : c) e = field.reduce(e);
        trim();
    }

    static SeriesPoly zero(ff::FieldPrime f) { return SeriesPoly(f); }
    static SeriesPoly one(ff::FieldPrime f) { return SeriesPoly(f, {1}); }
    static SeriesPoly monomial(ff::FieldPrime f, int k, int coeff = 1) {
        std::vector<int> cs(static_cast<size_t>(k) + 1, 0);
        cs[static_cast<size_t>(k)] = coeff;
        return SeriesPoly(f, std::move(cs));
    }

    bool is_zero() const { return c.empty(); }

    int coeff(int i) const { return i >= 0 && i < static_cast<int>(c.size()) ? c[static_cast<size_t>(i)] : 0; }

    int poly_degree() const { return static_cast<int>(c.size()) - 1; } // -1 for zero

    // X-adic valuation; only defined for nonzero input.
    int val() const {
        for (size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0) return static_cast<int>(i);
        throw InvalidInput("valuation of the zero series");
    }

    SeriesPoly truncated(int n) const {
        std::vector<int> cs(c.begin(), c.begin() + std::min<size_t>(c.size(), static_cast<size_t>(std::max(n, 0))));
        return SeriesPoly(field, std::move(cs));
    }

    // Division by X^k; requires val >= k.
    SeriesPoly shifted_down(int k) const {
        if (is_zero()) return *this;
        if (val() < k) throw InvalidInput("shift below valuation");
        return SeriesPoly(field, std::vector<int>(c.begin() + k, c.end()));
    }

    friend SeriesPoly operator+(const SeriesPoly& a, const SeriesPoly& b) {
        std::vector<int> cs(std::max(a.c.size(), b.c.size()), 0);
        for (size_t i = 0; i < cs.size(); ++i) cs[i] = a.field.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
        return SeriesPoly(a.field, std::move(cs));
    }

    friend SeriesPoly operator-(const SeriesPoly& a, const SeriesPoly& b) {
        std::vector<int> cs(std::max(a.c.size(), b.c.size()), 0);
        for (size_t i = 0; i < cs.size(); ++i) cs[i] = a.field.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
        return SeriesPoly(a.field, std::move(cs));
    }

    friend SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b) {
        if (a.is_zero() || b.is_zero()) return SeriesPoly(a.field);
        std::vector<int> cs(a.c.size() + b.c.size() - 1, 0);
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == 0) continue;
            for (size_t j = 0; j < b.c.size(); ++j)
                cs[i + j] = a.field.add(cs[i + j], a.field.mul(a.c[i], b.c[j]));
        }
        return SeriesPoly(a.field, std::move(cs));
    }

    friend bool operator==(const SeriesPoly& a, const SeriesPoly& b) { return a.field == b.field && a.c == b.c; }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            if (!first) os << "+";
            first = false;
            if (i == 0)
                os << c[i];
            else {
                if (c[i] != 1) os << c[i] << "*";
                os << "X";
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

// The Frobenius substitution of the series instance: X -> X^q on
// coefficients fixed by sigma = identity (prime fields are rigid).
inline SeriesPoly frobenius(const SeriesPoly& s, int q) {
    if (q < 2) throw InvalidInput("frobenius exponent must be >= 2");
    if (s.is_zero()) return s;
    std::vector<int> cs(static_cast<size_t>(s.poly_degree()) * q + 1, 0);
    for (int i = 0; i <= s.poly_degree(); ++i) cs[static_cast<size_t>(i) * q] = s.coeff(i);
    return SeriesPoly(s.field, std::move(cs));
}

inline int series_val(const SeriesPoly& s) { return s.val(); }

// Exact determinant of a square polynomial matrix by cofactor expansion;
// ranks in scope are tiny.
inline SeriesPoly poly_det(const std::vector<std::vector<SeriesPoly>>& m, ff::FieldPrime f) {
    size_t n = m.size();
    if (n == 0) return SeriesPoly::one(f);
    for (const auto& row : m)
        if (row.size() != n) throw InvalidInput("determinant of non-square matrix");
    if (n == 1) return m[0][0];
    SeriesPoly acc = SeriesPoly::zero(f);
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<SeriesPoly>> minor;
        for (size_t r = 1; r < n; ++r) {
            std::vector<SeriesPoly> row;
            for (size_t col = 0; col < n; ++col)
                if (col != j) row.push_back(m[r][col]);
            minor.push_back(std::move(row));
        }
        SeriesPoly term = m[0][j] * poly_det(minor, f);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// Rank over the fraction field GF(p)((X)), by fraction-free elimination.
inline int poly_matrix_rank(std::vector<std::vector<SeriesPoly>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rows;
        for (size_t r = rank; r < rows; ++r)
            if (!m[r][col].is_zero() && (pivot == rows || m[r][col].val() < m[pivot][col].val())) pivot = r;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            SeriesPoly factor = m[r][col];
            SeriesPoly lead = m[rank][col];
            for (size_t cc = 0; cc < cols; ++cc) m[r][cc] = lead * m[r][cc] - factor * m[rank][cc];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

} // namespace hn::pm
