#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "seriesfact/rings.hpp"
#include "seriesfact/series.hpp"

namespace seriesfact {

// Lattice point (index, valuation of that coefficient); only finite
// valuations are represented, so zero coefficients never contribute points.
struct NPPoint {
    std::size_t index;
    Int val;

    bool operator==(const NPPoint&) const = default;
};

struct NPEdge {
    NPPoint from, to;

    Rat slope() const {
        return Rat(to.val - from.val, Int(to.index) - Int(from.index));
    }
    // lattice width (horizontal extent)
    Int width() const { return Int(to.index) - Int(from.index); }
};

/**
 * Descending-and-flat prefix of the lower convex hull of the coefficient
 * valuation points of a series, scanned over indices 0..window. Edges with
 * positive slope are trimmed away.
 *
 * `censored` marks a flat tail that touches the window boundary: the flat
 * run may continue past index `window`, so its width is a lower estimate.
 * Descending edges are final as soon as the window contains a coefficient
 * of valuation zero; a hull that ends at valuation zero can only gain flat
 * width beyond the window, never lose reported descent.
 */
struct NewtonPolygon {
    std::vector<NPPoint> vertices; // increasing index; adjacent slopes increase
    std::size_t window = 0;        // highest scanned index
    bool censored = false;

    std::vector<NPEdge> edges() const;
};

// Valuation points (i, v(a_i)) for the nonzero coefficients a_0..a_window.
std::vector<NPPoint> np_points(const Series& f, const Valuation& v,
                               std::size_t window);

// Vertices of the lower convex hull, left to right; interior collinear
// points are dropped.
std::vector<NPPoint> lower_hull(std::vector<NPPoint> points);

NewtonPolygon newton_polygon(const Series& f, const Valuation& v,
                             std::size_t window);

// Lattice width of the polygon edge with the given slope (0 when no such
// edge), paired with whether that width is censored by the window.
std::pair<Int, bool> f_star(const NewtonPolygon& polygon, const Rat& slope);

// Convenience form that builds the polygon over 0..window first.
std::pair<Int, bool> f_star(const Series& f, const Valuation& v,
                            const Rat& slope, std::size_t window);

/**
 * True when every interior valuation point lies strictly above the segment
 * from (0, k) to (n, 0): for each i in 1..n-1 with a_i != 0,
 * k*(n-i) < n*v(a_i), compared exactly. Callers establish v(a_0) = k and
 * v(a_n) = 0 themselves.
 */
bool single_edge_test(const Series& f, const Valuation& v, const Int& k,
                      std::size_t n);

} // namespace seriesfact
