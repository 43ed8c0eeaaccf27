#include "seriesfact/newton.hpp"

#include <algorithm>

namespace seriesfact {

namespace {

// Cross product of OA x OB; positive means O -> A -> B turns left.
Int cross(const NPPoint& o, const NPPoint& a, const NPPoint& b) {
    Int ax = Int(a.index) - Int(o.index);
    Int ay = a.val - o.val;
    Int bx = Int(b.index) - Int(o.index);
    Int by = b.val - o.val;
    return ax * by - ay * bx;
}

} // namespace

std::vector<NPEdge> NewtonPolygon::edges() const {
    std::vector<NPEdge> out;
    for (std::size_t j = 1; j < vertices.size(); ++j)
        out.push_back(NPEdge{vertices[j - 1], vertices[j]});
    return out;
}

std::vector<NPPoint> np_points(const Series& f, const Valuation& v,
                               std::size_t window) {
    std::vector<NPPoint> out;
    for (std::size_t i = 0; i <= window; ++i) {
        RingElem c = f.coeff(i);
        if (c.is_zero()) continue;
        ValValue val = v(c);
        out.push_back(NPPoint{i, val.finite()});
    }
    return out;
}

std::vector<NPPoint> lower_hull(std::vector<NPPoint> points) {
    std::sort(points.begin(), points.end(),
              [](const NPPoint& a, const NPPoint& b) { return a.index < b.index; });
    std::vector<NPPoint> hull;
    for (const NPPoint& p : points) {
        // Non-left turns (including collinear) lift the middle point off the
        // lower hull; what remains are vertices with strictly rising slopes.
        while (hull.size() >= 2 &&
               cross(hull[hull.size() - 2], hull[hull.size() - 1], p) <= 0) {
            hull.pop_back();
        }
        hull.push_back(p);
    }
    return hull;
}

NewtonPolygon newton_polygon(const Series& f, const Valuation& v,
                             std::size_t window) {
    std::vector<NPPoint> hull = lower_hull(np_points(f, v, window));

    NewtonPolygon poly;
    poly.window = window;
    if (hull.empty()) return poly;

    // Keep the descending edges and the at-most-one flat edge; the first
    // rising edge ends the polygon.
    std::size_t keep = 1;
    while (keep < hull.size() && hull[keep].val <= hull[keep - 1].val) ++keep;
    hull.resize(keep);
    poly.vertices = std::move(hull);

    if (poly.vertices.size() >= 2) {
        const NPPoint& last = poly.vertices.back();
        const NPPoint& prev = poly.vertices[poly.vertices.size() - 2];
        poly.censored = last.val == prev.val && last.index == window;
    }
    return poly;
}

std::pair<Int, bool> f_star(const NewtonPolygon& polygon, const Rat& slope) {
    for (const NPEdge& e : polygon.edges()) {
        if (e.slope() == slope) {
            bool censored = polygon.censored && slope == 0;
            return {e.width(), censored};
        }
    }
    return {Int(0), false};
}

std::pair<Int, bool> f_star(const Series& f, const Valuation& v,
                            const Rat& slope, std::size_t window) {
    return f_star(newton_polygon(f, v, window), slope);
}

bool single_edge_test(const Series& f, const Valuation& v, const Int& k,
                      std::size_t n) {
    for (std::size_t i = 1; i < n; ++i) {
        RingElem c = f.coeff(i);
        if (c.is_zero()) continue;
        Int vi = v(c).finite();
        if (!(k * Int(n - i) < Int(n) * vi)) return false;
    }
    return true;
}

} // namespace seriesfact
