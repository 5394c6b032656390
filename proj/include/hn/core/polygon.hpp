#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "hn/rational.hpp"

namespace hn {

// Concave-down piecewise-linear function on [0, rank] with integer
// breakpoint abscissae and exact rational ordinates.  Starts at (0, 0);
// consecutive segment slopes strictly decrease.
struct PolygonFn {
    struct Vertex {
        Int x = 0;
        Rational y;
        friend bool operator==(const Vertex& a, const Vertex& b) { return a.x == b.x && a.y == b.y; }
    };
    std::vector<Vertex> vertices; // starts at (0,0), x strictly increasing

    PolygonFn() { vertices.push_back({0, Rational(0)}); }
    explicit PolygonFn(std::vector<Vertex> vs) : vertices(std::move(vs)) { validate(); }

    Int max_x() const { return vertices.back().x; }
    Rational end_y() const { return vertices.back().y; }

    // Exact evaluation at rational x within [0, max_x].
    Rational eval(const Rational& x) const {
        if (x < Rational(0) || x > Rational(max_x())) throw InvalidInput("polygon evaluated outside domain");
        for (size_t i = 0; i + 1 < vertices.size(); ++i) {
            Rational x0(vertices[i].x), x1(vertices[i + 1].x);
            if (x >= x0 && x <= x1) {
                Rational slope = (vertices[i + 1].y - vertices[i].y) / (x1 - x0);
                return vertices[i].y + slope * (x - x0);
            }
        }
        return vertices.back().y; // x == max_x with a single vertex
    }

    std::vector<Rational> segment_slopes() const {
        std::vector<Rational> slopes;
        for (size_t i = 0; i + 1 < vertices.size(); ++i) {
            Rational w(vertices[i + 1].x - vertices[i].x);
            slopes.push_back((vertices[i + 1].y - vertices[i].y) / w);
        }
        return slopes;
    }

    friend bool operator==(const PolygonFn& a, const PolygonFn& b) { return a.vertices == b.vertices; }

private:
    void validate() const {
        if (vertices.empty() || vertices.front().x != 0 || !(vertices.front().y == Rational(0)))
            throw InvalidInput("polygon must start at (0, 0)");
        for (size_t i = 0; i + 1 < vertices.size(); ++i)
            if (vertices[i].x >= vertices[i + 1].x) throw InvalidInput("polygon abscissae must increase");
        auto slopes = segment_slopes();
        for (size_t i = 0; i + 1 < slopes.size(); ++i)
            if (!(slopes[i + 1] < slopes[i])) throw InvalidInput("polygon slopes must strictly decrease");
    }
};

// Polygon from (slope, width) pairs already sorted nonincreasing; merges
// equal-slope runs into single segments.
inline PolygonFn polygon_from_sorted(const std::vector<std::pair<Rational, Int>>& graded) {
    std::vector<PolygonFn::Vertex> vs;
    vs.push_back({0, Rational(0)});
    for (const auto& [mu, width] : graded) {
        if (width <= 0) throw InvalidInput("polygon segment with nonpositive width");
        Rational y = vs.back().y + mu * Rational(width);
        Int x = checked_add(vs.back().x, width);
        if (vs.size() >= 2) {
            const auto& a = vs[vs.size() - 2];
            const auto& b = vs.back();
            Rational last = (b.y - a.y) / Rational(b.x - a.x);
            if (last == mu) { // extend the previous segment
                vs.back() = {x, y};
                continue;
            }
            if (last < mu) throw InvalidInput("polygon slopes not nonincreasing");
        }
        vs.push_back({x, y});
    }
    return PolygonFn(std::move(vs));
}

// Polygon of a semistable filtration: sort the graded slopes into
// nonincreasing order first, so that P(n) is the sum of the n largest
// slopes counted with rank multiplicity.
inline PolygonFn filtration_polygon(std::vector<std::pair<Rational, Int>> graded) {
    if (graded.empty()) throw InvalidInput("filtration polygon of empty graded data");
    std::stable_sort(graded.begin(), graded.end(),
                     [](const auto& a, const auto& b) { return b.first < a.first; });
    return polygon_from_sorted(graded);
}

// p <= q pointwise on the common domain.  Both sides are piecewise linear
// with integer breakpoints, so comparing at the merged breakpoint set is
// exact and complete.
inline bool polygon_leq(const PolygonFn& p, const PolygonFn& q) {
    Int hi = std::min(p.max_x(), q.max_x());
    std::vector<Int> xs;
    for (const auto& v : p.vertices)
        if (v.x <= hi) xs.push_back(v.x);
    for (const auto& v : q.vertices)
        if (v.x <= hi) xs.push_back(v.x);
    xs.push_back(hi);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (Int x : xs)
        if (q.eval(Rational(x)) < p.eval(Rational(x))) return false;
    return true;
}

// First abscissa in the merged breakpoint set where the two differ, if any.
inline bool polygon_first_divergence(const PolygonFn& p, const PolygonFn& q, Int* x_out,
                                     Rational* py_out, Rational* qy_out) {
    Int hi = std::max(p.max_x(), q.max_x());
    std::vector<Int> xs;
    for (const auto& v : p.vertices) xs.push_back(v.x);
    for (const auto& v : q.vertices) xs.push_back(v.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (Int x : xs) {
        bool pin = x <= p.max_x(), qin = x <= q.max_x();
        if (!pin || !qin) {
            *x_out = x;
            if (py_out && pin) *py_out = p.eval(Rational(x));
            if (qy_out && qin) *qy_out = q.eval(Rational(x));
            return true;
        }
        Rational py = p.eval(Rational(x)), qy = q.eval(Rational(x));
        if (!(py == qy)) {
            *x_out = x;
            if (py_out) *py_out = py;
            if (qy_out) *qy_out = qy;
            return true;
        }
    }
    (void)hi;
    return false;
}

// Concatenation of two polygons, valid when every slope of the left one is
// >= every slope of the right one; the result is the polygon of the direct
// sum of the underlying objects.
inline PolygonFn polygon_join(const PolygonFn& left, const PolygonFn& right) {
    auto ls = left.segment_slopes();
    auto rs = right.segment_slopes();
    if (!ls.empty() && !rs.empty() && ls.back() < rs.front())
        throw InvalidInput("polygon join: left slopes must dominate right slopes");
    std::vector<std::pair<Rational, Int>> graded;
    for (size_t i = 0; i + 1 < left.vertices.size(); ++i)
        graded.emplace_back(ls[i], left.vertices[i + 1].x - left.vertices[i].x);
    for (size_t i = 0; i + 1 < right.vertices.size(); ++i)
        graded.emplace_back(rs[i], right.vertices[i + 1].x - right.vertices[i].x);
    return polygon_from_sorted(graded);
}

// Upper convex hull of integer-x points with exact rational y, with (0,0)
// prepended.  Used by the brute-force polygon oracle.
inline PolygonFn upper_convex_hull(std::vector<std::pair<Int, Rational>> points) {
    points.emplace_back(0, Rational(0));
    std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    // keep only the highest point per abscissa
    std::vector<std::pair<Int, Rational>> top;
    for (const auto& pt : points) {
        if (!top.empty() && top.back().first == pt.first)
            top.back() = pt;
        else
            top.push_back(pt);
    }
    // monotone chain, upper hull: pop while the middle point is not above
    // the chord (cross product in exact rationals)
    std::vector<std::pair<Int, Rational>> hull;
    for (const auto& pt : top) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // b above segment a-pt <=> (b.y - a.y)(pt.x - a.x) > (pt.y - a.y)(b.x - a.x)
            Rational lhs = (b.second - a.second) * Rational(pt.first - a.first);
            Rational rhs = (pt.second - a.second) * Rational(b.first - a.first);
            if (lhs > rhs) break;
            hull.pop_back();
        }
        hull.push_back(pt);
    }
    std::vector<PolygonFn::Vertex> vs;
    for (const auto& pt : hull) vs.push_back({pt.first, pt.second});
    return PolygonFn(std::move(vs));
}

} // namespace hn
