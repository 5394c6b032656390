#pragma once

#include <utility>
#include <vector>

#include "hn/ff/field.hpp"

namespace hn::ff {

// Dense row-major matrix over GF(p).  Entries always reduced.
struct MatrixFF {
    FieldPrime field;
    int rows = 0;
    int cols = 0;
    std::vector<int> a; // rows*cols entries

    MatrixFF() = default;
    MatrixFF(FieldPrime f, int r, int c) : field(f), rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {
        if (r < 0 || c < 0) throw InvalidInput("negative matrix dimensions");
    }
    MatrixFF(FieldPrime f, int r, int c, std::vector<int> entries)
        : field(f), rows(r), cols(c), a(std::move(entries)) {
        if (a.size() != static_cast<size_t>(r) * c) throw InvalidInput("matrix entry count mismatch");
        for (auto& e : a) e = field.reduce(e);
    }

    int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    int at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    std::vector<int> row(int r) const {
        return {a.begin() + static_cast<long>(r) * cols, a.begin() + static_cast<long>(r + 1) * cols};
    }

    static MatrixFF identity(FieldPrime f, int n) {
        MatrixFF m(f, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static MatrixFF from_rows(FieldPrime f, int cols, const std::vector<std::vector<int>>& rws) {
        MatrixFF m(f, static_cast<int>(rws.size()), cols);
        for (size_t r = 0; r < rws.size(); ++r) {
            if (static_cast<int>(rws[r].size()) != cols) throw InvalidInput("ragged matrix rows");
            for (int c = 0; c < cols; ++c) m.at(static_cast<int>(r), c) = f.reduce(rws[r][c]);
        }
        return m;
    }

    friend bool operator==(const MatrixFF& x, const MatrixFF& y) {
        return x.field == y.field && x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

inline MatrixFF mat_mul(const MatrixFF& x, const MatrixFF& y) {
    if (!(x.field == y.field) || x.cols != y.rows) throw InvalidInput("matrix product shape mismatch");
    MatrixFF r(x.field, x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            int v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j)
                r.at(i, j) = x.field.add(r.at(i, j), x.field.mul(v, y.at(k, j)));
        }
    return r;
}

inline std::vector<int> mat_apply(const MatrixFF& m, const std::vector<int>& v) {
    if (static_cast<int>(v.size()) != m.cols) throw InvalidInput("matrix/vector shape mismatch");
    std::vector<int> out(m.rows, 0);
    for (int i = 0; i < m.rows; ++i) {
        long long acc = 0;
        for (int j = 0; j < m.cols; ++j) acc += static_cast<long long>(m.at(i, j)) * v[j];
        out[i] = m.field.reduce(acc);
    }
    return out;
}

inline MatrixFF stack_rows(const MatrixFF& top, const MatrixFF& bottom) {
    if (!(top.field == bottom.field) || top.cols != bottom.cols)
        throw InvalidInput("row stack shape mismatch");
    MatrixFF r(top.field, top.rows + bottom.rows, top.cols);
    std::copy(top.a.begin(), top.a.end(), r.a.begin());
    std::copy(bottom.a.begin(), bottom.a.end(), r.a.begin() + static_cast<long>(top.rows) * top.cols);
    return r;
}

inline MatrixFF transpose(const MatrixFF& m) {
    MatrixFF t(m.field, m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

// Reduced row-echelon form with zero rows dropped: the canonical basis of
// the row space.  rref is idempotent, and two matrices have equal row
// space iff their rrefs are identical.
inline MatrixFF rref(MatrixFF m, std::vector<int>* pivots_out = nullptr) {
    const FieldPrime& f = m.field;
    int pivot_row = 0;
    std::vector<int> pivots;
    for (int col = 0; col < m.cols && pivot_row < m.rows; ++col) {
        int sel = -1;
        for (int r = pivot_row; r < m.rows; ++r)
            if (m.at(r, col) != 0) { sel = r; break; }
        if (sel < 0) continue;
        for (int c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(pivot_row, c));
        int scale = f.inv(m.at(pivot_row, col));
        for (int c = 0; c < m.cols; ++c) m.at(pivot_row, c) = f.mul(m.at(pivot_row, c), scale);
        for (int r = 0; r < m.rows; ++r) {
            if (r == pivot_row || m.at(r, col) == 0) continue;
            int factor = m.at(r, col);
            for (int c = 0; c < m.cols; ++c)
                m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(pivot_row, c)));
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    MatrixFF out(f, pivot_row, m.cols);
    std::copy(m.a.begin(), m.a.begin() + static_cast<long>(pivot_row) * m.cols, out.a.begin());
    if (pivots_out) *pivots_out = pivots;
    return out;
}

inline int rank(const MatrixFF& m) { return rref(m).rows; }

} // namespace hn::ff
