#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hn/core/engine.hpp"
#include "hn/core/instance.hpp"
#include "hn/instances/series.hpp"

namespace hn::pm {

// Weak phi-module over R = GF(p)[[X]] with phi(sum a_n X^n) = sum a_n X^(qn):
// a finite free R-module given by the matrix of its isogeny in a fixed
// basis (entries are polynomials, honest elements of R).  Degree is
// -ord(det).  Saturated phi-stable submodules correspond to phi-stable
// subspaces over the fraction field; the subobject search is implemented
// at rank <= 2 through the stable-line solver below.
struct PhiModObject {
    ff::FieldPrime field;
    int q = 2;
    int n = 0;
    std::vector<SeriesPoly> mat; // n*n row-major
    int precision = 32;
    int det_val = 0; // valuation of det(mat)

    PhiModObject() = default;
    PhiModObject(ff::FieldPrime f, int twist, int rank_in, std::vector<SeriesPoly> entries, int prec = 32)
        : field(f), q(twist), n(rank_in), mat(std::move(entries)), precision(prec) {
        if (q < 2) throw InvalidInput("phimod: q must be >= 2");
        if (n < 0) throw InvalidInput("phimod: negative rank");
        if (precision < 4 || precision > 512)
            throw InvalidInput("phimod: precision must lie in [4, 512]");
        if (mat.size() != static_cast<size_t>(n) * n) throw InvalidInput("phimod: matrix entry count mismatch");
        for (const auto& e : mat)
            if (!(e.field == field)) throw InvalidInput("phimod: entry field mismatch");
        if (n > 0) {
            std::vector<std::vector<SeriesPoly>> rows;
            for (int r = 0; r < n; ++r) {
                std::vector<SeriesPoly> row;
                for (int c = 0; c < n; ++c) row.push_back(at(r, c));
                rows.push_back(std::move(row));
            }
            SeriesPoly det = poly_det(rows, field);
            if (det.is_zero()) throw SingularMatrix("phimod: det(phi) = 0, not an isogeny");
            det_val = det.val();
        }
    }

    const SeriesPoly& at(int r, int c) const { return mat[static_cast<size_t>(r) * n + c]; }

    friend bool operator==(const PhiModObject& a, const PhiModObject& b) {
        return a.field == b.field && a.q == b.q && a.n == b.n && a.mat == b.mat;
    }
};

inline Int pm_degree(const PhiModObject& m) { return -static_cast<Int>(m.det_val); }

// Divide a nonzero vector by X^(min componentwise valuation); the result
// spans the saturation of the original span.
inline std::vector<SeriesPoly> pm_saturate_line(const std::vector<SeriesPoly>& v) {
    int minval = -1;
    for (const auto& comp : v)
        if (!comp.is_zero() && (minval < 0 || comp.val() < minval)) minval = comp.val();
    if (minval < 0) throw InvalidInput("saturation of the zero vector");
    std::vector<SeriesPoly> out;
    for (const auto& comp : v) out.push_back(comp.is_zero() ? comp : comp.shifted_down(minval));
    return out;
}

// A saturated phi-stable line, reported with its eigenvalue valuation and
// how it was certified: an exact polynomial solution of the stability
// equation, or the unique-extension recursion available when v(lambda)=0.
struct PhiLine {
    std::vector<SeriesPoly> generator; // 2 components, min valuation 0
    int eigen_val = 0;
    bool exact = false;
};

namespace detail {

struct LineSearchOutcome {
    std::vector<PhiLine> lines;
    bool undecided = false;
};

// Solve A (v o q) = lambda v for v = (1, b), coefficient by coefficient.
// With swap_coords the (a, 1) normal form is solved on the swapped matrix
// (b_0 forced to 0), so together the two calls cover every saturated line
// exactly once.  At each order the unknown coefficient enters linearly
// with coefficient lambda(0); when that vanishes the order becomes a
// consistency constraint and the coefficient branches over GF(p).
inline void solve_normal_form(const PhiModObject& x, bool swap_coords, int orders, int bound,
                              int width_cap, LineSearchOutcome& out) {
    const ff::FieldPrime f = x.field;
    SeriesPoly a11 = x.at(0, 0), a12 = x.at(0, 1), a21 = x.at(1, 0), a22 = x.at(1, 1);
    if (swap_coords) {
        std::swap(a11, a22);
        std::swap(a12, a21);
    }
    auto stability_defect = [&](const SeriesPoly& b) {
        SeriesPoly bq = frobenius(b, x.q);
        return a21 + a22 * bq - a11 * b - a12 * b * bq;
    };
    std::vector<std::vector<int>> branches;
    for (int t = 0; t < f.p; ++t) {
        if (swap_coords && t != 0) continue;
        int g0 = f.reduce(a21.coeff(0) + static_cast<long long>(a22.coeff(0)) * t -
                          static_cast<long long>(a11.coeff(0)) * t -
                          static_cast<long long>(a12.coeff(0)) * t * t);
        if (g0 == 0) branches.push_back({t});
    }
    for (int m = 1; m < orders && !branches.empty(); ++m) {
        std::vector<std::vector<int>> next;
        for (auto& br : branches) {
            int lambda0 = f.reduce(a11.coeff(0) + static_cast<long long>(a12.coeff(0)) * br[0]);
            int gm = stability_defect(SeriesPoly(f, br)).coeff(m);
            if (lambda0 != 0) {
                br.push_back(f.mul(gm, f.inv(lambda0)));
                next.push_back(std::move(br));
            } else if (gm == 0) {
                for (int t = 0; t < f.p; ++t) {
                    auto ext = br;
                    ext.push_back(t);
                    next.push_back(std::move(ext));
                }
            }
            if (static_cast<int>(next.size()) > width_cap)
                throw EnumerationBound("stable-line search: branch count exceeds width cap");
        }
        branches = std::move(next);
    }
    for (auto& br : branches) {
        SeriesPoly b(f, br);
        int lambda0 = f.reduce(a11.coeff(0) + static_cast<long long>(a12.coeff(0)) * br[0]);
        SeriesPoly lambda = a11 + a12 * frobenius(b, x.q);
        auto emit = [&](int eigen, bool exact) {
            std::vector<SeriesPoly> gen{SeriesPoly::one(f), b.truncated(orders)};
            if (swap_coords) std::swap(gen[0], gen[1]);
            out.lines.push_back(PhiLine{std::move(gen), eigen, exact});
        };
        if (lambda0 != 0) {
            emit(0, false);
            continue;
        }
        // lambda's coefficients are final through order q*(orders-1): the
        // undetermined b_j (j >= orders) only reach lambda at order q*j.
        int reliable = x.q * (orders - 1);
        int s = -1;
        for (int i = 0; i <= reliable; ++i)
            if (lambda.coeff(i) != 0) {
                s = i;
                break;
            }
        if (s < 0) {
            // v(lambda) > reliable: out of scope when the bound is inside
            // the reliable window, otherwise undecidable here
            if (bound > reliable) out.undecided = true;
            continue;
        }
        if (s > bound) continue; // slope too negative to affect the polygon
        SeriesPoly defect = stability_defect(b);
        if (defect.is_zero()) {
            emit(s, true);
            continue;
        }
        // Undetermined coefficients b_j (j >= orders) perturb the defect
        // only at orders >= orders + v(lambda) (lambda side) and
        // >= q*orders (twisted side).  A nonzero defect below that window
        // kills the branch outright; otherwise it is genuinely undecided
        // at this precision.
        int safe = orders + std::min(s, (x.q - 1) * orders);
        if (defect.val() < safe)
            continue; // dead branch: trailing forks whose pin lies just beyond the loop
        out.undecided = true;
    }
}

} // namespace detail

// All saturated phi-stable lines with eigenvalue valuation within the
// search bound B = v(det) + max entry valuation + 1 (lines beyond B
// cannot beat slopes already found).  Lines are reported to the working
// precision; an undecided branch retries once at doubled precision and
// then raises PrecisionExhausted.
inline std::vector<PhiLine> pm_stable_lines(const PhiModObject& x, int precision = 0, int width_cap = 4096) {
    if (x.n != 2) throw InvalidInput("pm_stable_lines requires rank 2");
    int base = precision > 0 ? precision : x.precision;
    int max_entry_val = 0;
    for (const auto& e : x.mat)
        if (!e.is_zero()) max_entry_val = std::max(max_entry_val, e.val());
    int bound = x.det_val + max_entry_val + 1;
    for (int attempt = 0; attempt < 2; ++attempt) {
        int orders = base << attempt;
        detail::LineSearchOutcome out;
        detail::solve_normal_form(x, false, orders, bound, width_cap, out);
        detail::solve_normal_form(x, true, orders, bound, width_cap, out);
        if (out.undecided) continue;
        std::sort(out.lines.begin(), out.lines.end(), [](const PhiLine& a, const PhiLine& b) {
            if (a.eigen_val != b.eigen_val) return a.eigen_val < b.eigen_val;
            if (!(a.generator[0].c == b.generator[0].c)) return a.generator[0].c < b.generator[0].c;
            return a.generator[1].c < b.generator[1].c;
        });
        return out.lines;
    }
    throw PrecisionExhausted("stable-line search undecided at doubled precision " + std::to_string(2 * base));
}

// Saturated phi-stable submodule handle.  Generators span the line (or a
// coordinate block for direct-sum summands); equality and containment are
// decided over the fraction field, which is faithful for saturated subs.
struct PhiSub {
    PhiModObject parent;
    std::vector<std::vector<SeriesPoly>> gens; // rank generators of length n
    Int rank = 0;
    Int degree = 0;

    friend bool operator==(const PhiSub& a, const PhiSub& b) {
        if (a.rank != b.rank) return false;
        if (a.rank == 0) return true;
        std::vector<std::vector<SeriesPoly>> stacked = a.gens;
        stacked.insert(stacked.end(), b.gens.begin(), b.gens.end());
        return poly_matrix_rank(std::move(stacked)) == a.rank;
    }
};

struct PhiModInstance {
    using Object = PhiModObject;
    using Sub = PhiSub;
    // No computable morphism spaces; the hom-side engine operations are
    // not available for this instance.
    struct Morphism {};

    Int rank(const Object& x) const { return x.n; }
    Int degree(const Object& x) const { return pm_degree(x); }

    Sub zero_sub(const Object& x) const { return Sub{x, {}, 0, 0}; }

    Sub full_sub(const Object& x) const {
        std::vector<std::vector<SeriesPoly>> gens;
        for (int i = 0; i < x.n; ++i) gens.push_back(unit_vector(x, i));
        return Sub{x, std::move(gens), x.n, pm_degree(x)};
    }

    std::vector<Sub> strict_subs(const Object& x) const {
        if (x.n == 0) return {zero_sub(x)};
        std::vector<Sub> out;
        out.push_back(zero_sub(x));
        if (x.n == 2) {
            for (const auto& line : pm_stable_lines(x))
                out.push_back(Sub{x, {line.generator}, 1, -static_cast<Int>(line.eigen_val)});
        } else if (x.n > 2) {
            throw EnumerationBound("phimod strict-subobject search is implemented for rank <= 2");
        }
        out.push_back(full_sub(x));
        return out;
    }

    bool contains(const Sub& outer, const Sub& inner) const {
        if (inner.rank == 0) return true;
        if (outer.rank == outer.parent.n) return true;
        if (inner.rank > outer.rank) return false;
        std::vector<std::vector<SeriesPoly>> stacked = outer.gens;
        stacked.insert(stacked.end(), inner.gens.begin(), inner.gens.end());
        return poly_matrix_rank(std::move(stacked)) == outer.rank;
    }

    // Independent containment route: fraction-field span comparison via
    // nonvanishing minors instead of elimination.
    bool f_contains(const Sub& outer, const Sub& inner) const {
        if (inner.rank == 0) return true;
        if (outer.rank == outer.parent.n) return true;
        if (inner.rank > outer.rank) return false;
        std::vector<std::vector<SeriesPoly>> stacked = outer.gens;
        stacked.insert(stacked.end(), inner.gens.begin(), inner.gens.end());
        return rank_by_minors(stacked, outer.parent.field) == outer.rank;
    }

    Object sub_object(const Sub& s) const {
        const Object& x = s.parent;
        if (s.rank == 0) return Object(x.field, x.q, 0, {}, x.precision);
        if (s.rank == x.n) return x;
        auto block = coordinate_block(s);
        if (block) {
            Object obj(x.field, x.q, s.rank, std::move(*block), x.precision);
            if (pm_degree(obj) != s.degree)
                throw AxiomViolation("phimod coordinate block degree disagrees with handle");
            return obj;
        }
        if (s.rank == 1) {
            int e = static_cast<int>(-s.degree);
            if (e < 0) throw AxiomViolation("phimod line with negative eigenvalue valuation");
            return Object(x.field, x.q, 1, {SeriesPoly::monomial(x.field, e)}, x.precision);
        }
        throw EnumerationBound("phimod sub_object: unsupported handle shape");
    }

    Object quotient(const Object& x, const Sub& s) const {
        if (s.rank == 0) return x;
        if (s.rank == x.n) return Object(x.field, x.q, 0, {}, x.precision);
        auto idx = coordinate_indices(s);
        if (idx) {
            // complement coordinates present the quotient
            std::vector<int> comp;
            for (int i = 0; i < x.n; ++i)
                if (std::find(idx->begin(), idx->end(), i) == idx->end()) comp.push_back(i);
            std::vector<SeriesPoly> entries;
            for (int r : comp)
                for (int c : comp) entries.push_back(x.at(r, c));
            Object q(x.field, x.q, static_cast<int>(comp.size()), std::move(entries), x.precision);
            if (checked_add(s.degree, pm_degree(q)) != pm_degree(x))
                throw AxiomViolation("phimod coordinate-block quotient breaks degree additivity");
            return q;
        }
        if (s.rank == 1 && x.n == 2) {
            // degree-faithful representative: deg(X/L) = deg X - deg L
            int e = x.det_val + static_cast<int>(s.degree);
            if (e < 0) throw AxiomViolation("phimod quotient would have positive-valuation defect");
            return Object(x.field, x.q, 1, {SeriesPoly::monomial(x.field, e)}, x.precision);
        }
        throw EnumerationBound("phimod quotient: unsupported handle shape");
    }

    Sub preimage(const Object& x, const Sub& s, const Sub& t_of_quotient) const {
        if (s.rank == 0) return Sub{x, t_of_quotient.gens, t_of_quotient.rank, t_of_quotient.degree};
        if (t_of_quotient.rank == 0) return s;
        if (checked_add(s.rank, t_of_quotient.rank) == x.n) return full_sub(x);
        throw EnumerationBound("phimod preimage: unsupported intermediate step");
    }

    Sub pushforward(const Object& x, const Sub& s, const Sub& t) const {
        if (!contains(t, s)) throw InvalidInput("pushforward requires s <= t");
        Object q = quotient(x, s);
        if (s.rank == 0) return Sub{q, t.gens, t.rank, t.degree};
        if (t.rank == s.rank) return zero_sub(q);
        if (t.rank == x.n) return full_sub(q);
        throw EnumerationBound("phimod pushforward: unsupported intermediate step");
    }

    Sub intersect(const Sub& a, const Sub& b) const {
        if (contains(a, b)) return b;
        if (contains(b, a)) return a;
        if (a.rank == 1 && b.rank == 1) return zero_sub(a.parent);
        throw EnumerationBound("phimod intersect: unsupported handle pair");
    }

    Sub saturated_sum(const Sub& a, const Sub& b) const {
        if (contains(a, b)) return a;
        if (contains(b, a)) return b;
        if (a.rank == 1 && b.rank == 1 && a.parent.n == 2) return full_sub(a.parent);
        throw EnumerationBound("phimod saturated_sum: unsupported handle pair");
    }

    DirectSum<Object, Sub> direct_sum(const Object& x, const Object& y) const {
        if (!(x.field == y.field) || x.q != y.q) throw InvalidInput("phimod direct sum: field or twist mismatch");
        int n = x.n + y.n;
        std::vector<SeriesPoly> entries(static_cast<size_t>(n) * n, SeriesPoly::zero(x.field));
        for (int r = 0; r < x.n; ++r)
            for (int c = 0; c < x.n; ++c) entries[static_cast<size_t>(r) * n + c] = x.at(r, c);
        for (int r = 0; r < y.n; ++r)
            for (int c = 0; c < y.n; ++c)
                entries[static_cast<size_t>(x.n + r) * n + (x.n + c)] = y.at(r, c);
        Object sum(x.field, x.q, n, std::move(entries), std::max(x.precision, y.precision));
        std::vector<std::vector<SeriesPoly>> lgens, rgens;
        for (int i = 0; i < x.n; ++i) lgens.push_back(unit_vector(sum, i));
        for (int i = 0; i < y.n; ++i) rgens.push_back(unit_vector(sum, x.n + i));
        Sub left{sum, std::move(lgens), x.n, pm_degree(x)};
        Sub right{sum, std::move(rgens), y.n, pm_degree(y)};
        return {std::move(sum), std::move(left), std::move(right)};
    }

    std::string describe(const Object& x) const {
        std::ostringstream os;
        os << "phimod p=" << x.field.p << " q=" << x.q << " rank=" << x.n << " deg=" << pm_degree(x);
        return os.str();
    }

    std::string describe_sub(const Sub& s) const {
        std::ostringstream os;
        os << "sub rank=" << s.rank << " deg=" << s.degree;
        if (!s.gens.empty()) {
            os << " gen=[";
            for (size_t i = 0; i < s.gens[0].size(); ++i) os << (i ? "," : "") << s.gens[0][i].str();
            os << "]";
        }
        return os.str();
    }

private:
    static std::vector<SeriesPoly> unit_vector(const Object& x, int i) {
        std::vector<SeriesPoly> v(static_cast<size_t>(x.n), SeriesPoly::zero(x.field));
        v[static_cast<size_t>(i)] = SeriesPoly::one(x.field);
        return v;
    }

    // If every generator is a coordinate unit vector, the spanned indices.
    std::optional<std::vector<int>> coordinate_indices(const Sub& s) const {
        std::vector<int> idx;
        for (const auto& g : s.gens) {
            int pos = -1;
            for (size_t i = 0; i < g.size(); ++i) {
                if (g[i].is_zero()) continue;
                if (pos >= 0 || !(g[i] == SeriesPoly::one(s.parent.field))) return std::nullopt;
                pos = static_cast<int>(i);
            }
            if (pos < 0) return std::nullopt;
            idx.push_back(pos);
        }
        return idx;
    }

    // The diagonal block of a coordinate-span handle, when it is genuinely
    // phi-stable (off-block column entries vanish).
    std::optional<std::vector<SeriesPoly>> coordinate_block(const Sub& s) const {
        auto idx = coordinate_indices(s);
        if (!idx) return std::nullopt;
        const Object& x = s.parent;
        for (int c : *idx)
            for (int r = 0; r < x.n; ++r)
                if (std::find(idx->begin(), idx->end(), r) == idx->end() && !x.at(r, c).is_zero())
                    return std::nullopt;
        std::vector<SeriesPoly> block;
        for (int r : *idx)
            for (int c : *idx) block.push_back(x.at(r, c));
        return block;
    }

    static int rank_by_minors(const std::vector<std::vector<SeriesPoly>>& m, ff::FieldPrime f) {
        int rows = static_cast<int>(m.size());
        int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
        int best = 0;
        std::vector<int> rsel, csel;
        auto minors = [&](auto&& self, int k) -> bool {
            // does any k x k minor not vanish?
            rsel.clear();
            csel.clear();
            std::vector<int> ridx(k), cidx(k);
            auto rec_rows = [&](auto&& rr, int pos, int start) -> bool {
                if (pos == k) {
                    auto rec_cols = [&](auto&& cc, int cpos, int cstart) -> bool {
                        if (cpos == k) {
                            std::vector<std::vector<SeriesPoly>> sub;
                            for (int i = 0; i < k; ++i) {
                                std::vector<SeriesPoly> row;
                                for (int j = 0; j < k; ++j) row.push_back(m[ridx[i]][cidx[j]]);
                                sub.push_back(std::move(row));
                            }
                            return !poly_det(sub, f).is_zero();
                        }
                        for (int c = cstart; c < cols; ++c) {
                            cidx[cpos] = c;
                            if (cc(cc, cpos + 1, c + 1)) return true;
                        }
                        return false;
                    };
                    return rec_cols(rec_cols, 0, 0);
                }
                for (int r = start; r < rows; ++r) {
                    ridx[pos] = r;
                    if (rr(rr, pos + 1, r + 1)) return true;
                }
                return false;
            };
            (void)self;
            return rec_rows(rec_rows, 0, 0);
        };
        for (int k = 1; k <= std::min(rows, cols); ++k) {
            if (minors(minors, k))
                best = k;
            else
                break;
        }
        return best;
    }
};

// HN filtration for a rank-2 module: semistable single step when the best
// line slope does not exceed mu(M), otherwise 0 < L < M through the unique
// maximal-slope line.  Ties between distinct maximal lines contradict the
// saturated-sum law and surface as AxiomViolation inside the generic
// engine.
inline HNFiltration<PhiModInstance> pm_hn_rank2(const PhiModObject& m, int precision = 0) {
    if (m.n != 2) throw InvalidInput("pm_hn_rank2 requires rank 2");
    PhiModObject working = m;
    if (precision > 0) working.precision = precision;
    return hn_filtration(PhiModInstance{}, working);
}

} // namespace hn::pm
