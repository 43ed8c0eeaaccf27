#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "seriesfact/criteria.hpp"
#include "seriesfact/newton.hpp"
#include "seriesfact/series.hpp"

namespace seriesfact {

// All JSON output is exact: big integers are decimal strings, rational
// slopes are [numerator, denominator] string pairs with positive
// denominator, and indices/counts/widths are plain JSON numbers.

// Inverse of ring_name (declared with the ring types).
std::optional<RingTag> ring_from_name(const std::string& name);

// {window, censored, vertices:[[index,"val"],...],
//  edges:[{slope:["num","den"], hlen, from:[i,"v"], to:[i,"v"]}]}
nlohmann::json polygon_to_json(const NewtonPolygon& polygon);

// {status, z_power, lower, upper, criteria:[{name, params}], notes,
//  window:{deepest_index_read, valuation_scan, pattern_period_bound,
//          zero_valuation_scan, zpower_probe}}
nlohmann::json verdict_to_json(const Verdict& verdict, const Config& cfg);

// {order, coefficients:["a0","a1",...]}
nlohmann::json truncated_to_json(const TruncatedSeries& t);

// Human-readable renderings carrying the same information as the JSON
// forms, one fact per line.
std::string verdict_to_text(const Verdict& verdict, const Config& cfg);
std::string polygon_to_text(const NewtonPolygon& polygon);

// Standalone static SVG picture of the polygon: valuation points,
// hull edges (censored flat run dashed), axis ticks.
std::string polygon_to_svg(const NewtonPolygon& polygon);

} // namespace seriesfact
