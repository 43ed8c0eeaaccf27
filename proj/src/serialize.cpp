#include "seriesfact/serialize.hpp"

#include <sstream>

namespace mp = boost::multiprecision;

namespace seriesfact {

namespace {

nlohmann::json point_json(const NPPoint& p) {
    return nlohmann::json::array({p.index, p.val.str()});
}

std::string slope_text(const Rat& s) {
    Int num = mp::numerator(s);
    Int den = mp::denominator(s);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string factor_count_text(const Verdict& v) {
    switch (v.status) {
        case VerdictStatus::Unit:
            return "0 (unit)";
        case VerdictStatus::Irreducible:
            return "exactly 1 (irreducible)";
        case VerdictStatus::ExactCount:
            return "exactly " + std::to_string(*v.lower);
        case VerdictStatus::Bounds:
            return "between " + std::to_string(*v.lower) + " and " +
                   std::to_string(*v.upper);
        case VerdictStatus::Unknown:
            if (v.upper)
                return "at least 1, at most " + std::to_string(*v.upper);
            return "at least 1";
    }
    return "?";
}

} // namespace

std::optional<RingTag> ring_from_name(const std::string& name) {
    if (name == "int") return RingTag::integers;
    if (name == "gauss") return RingTag::gaussian;
    if (name == "polyq") return RingTag::polyq;
    return std::nullopt;
}

nlohmann::json polygon_to_json(const NewtonPolygon& polygon) {
    nlohmann::json vertices = nlohmann::json::array();
    for (const NPPoint& p : polygon.vertices) vertices.push_back(point_json(p));

    nlohmann::json edges = nlohmann::json::array();
    for (const NPEdge& e : polygon.edges()) {
        Rat s = e.slope();
        edges.push_back(
            {{"slope", {mp::numerator(s).str(), mp::denominator(s).str()}},
             {"hlen", e.width().convert_to<std::uint64_t>()},
             {"from", point_json(e.from)},
             {"to", point_json(e.to)}});
    }

    return {{"window", polygon.window},
            {"censored", polygon.censored},
            {"vertices", vertices},
            {"edges", edges}};
}

nlohmann::json verdict_to_json(const Verdict& verdict, const Config& cfg) {
    nlohmann::json criteria = nlohmann::json::array();
    for (const CriterionHit& hit : verdict.criteria) {
        criteria.push_back({{"name", hit.name}, {"params", hit.params}});
    }

    nlohmann::json j{{"status", status_name(verdict.status)},
                     {"z_power", verdict.z_power},
                     {"criteria", criteria},
                     {"notes", verdict.notes},
                     {"window",
                      {{"deepest_index_read", verdict.window},
                       {"valuation_scan", cfg.valuation_scan},
                       {"pattern_period_bound", cfg.pattern_period_bound},
                       {"zero_valuation_scan", cfg.zero_valuation_scan},
                       {"zpower_probe", cfg.zpower_probe}}}};
    j["lower"] = verdict.lower ? nlohmann::json(*verdict.lower)
                               : nlohmann::json(nullptr);
    j["upper"] = verdict.upper ? nlohmann::json(*verdict.upper)
                               : nlohmann::json(nullptr);
    return j;
}

nlohmann::json truncated_to_json(const TruncatedSeries& t) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (std::size_t i = 0; i <= t.order(); ++i)
        coeffs.push_back(t.coeff(i).str());
    return {{"order", t.order()}, {"coefficients", coeffs}};
}

std::string verdict_to_text(const Verdict& verdict, const Config& cfg) {
    std::ostringstream out;
    out << "status: " << status_name(verdict.status) << "\n";
    if (verdict.z_power > 0) {
        out << "z-power: " << verdict.z_power
            << " (the verdict describes the cofactor after removing z^"
            << verdict.z_power << ")\n";
    }
    out << "factors: " << factor_count_text(verdict) << "\n";
    if (!verdict.criteria.empty()) {
        out << "criteria:\n";
        for (const CriterionHit& hit : verdict.criteria) {
            out << "  " << hit.name << ":";
            for (const auto& [key, value] : hit.params)
                out << " " << key << "=" << value;
            out << "\n";
        }
    }
    for (const std::string& note : verdict.notes)
        out << "note: " << note << "\n";
    out << "window: deepest index read " << verdict.window
        << " (scan bounds: J=" << cfg.valuation_scan
        << ", M=" << cfg.pattern_period_bound
        << ", D=" << cfg.zero_valuation_scan
        << ", probe=" << cfg.zpower_probe << ")\n";
    return out.str();
}

std::string polygon_to_text(const NewtonPolygon& polygon) {
    std::ostringstream out;
    out << "window: " << polygon.window << "\n";
    out << "censored: " << (polygon.censored ? "yes" : "no") << "\n";
    out << "vertices:";
    for (const NPPoint& p : polygon.vertices)
        out << " (" << p.index << "," << p.val.str() << ")";
    out << "\n";
    for (const NPEdge& e : polygon.edges()) {
        out << "edge: (" << e.from.index << "," << e.from.val.str() << ") -> ("
            << e.to.index << "," << e.to.val.str() << ")  slope "
            << slope_text(e.slope()) << "  hlen " << e.width().str() << "\n";
    }
    return out.str();
}

std::string polygon_to_svg(const NewtonPolygon& polygon) {
    constexpr long margin = 48;
    constexpr long cell = 56;

    long max_index = 1, max_val = 1;
    for (const NPPoint& p : polygon.vertices) {
        max_index = std::max(max_index, static_cast<long>(p.index));
        max_val = std::max(max_val, p.val.convert_to<long>());
    }
    const long width = 2 * margin + max_index * cell;
    const long height = 2 * margin + max_val * cell;
    const auto px = [&](std::size_t index) {
        return margin + static_cast<long>(index) * cell;
    };
    const auto py = [&](const Int& val) {
        return margin + (max_val - val.convert_to<long>()) * cell;
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
        << height << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // axes with integer ticks
    out << "  <line x1=\"" << margin << "\" y1=\"" << height - margin
        << "\" x2=\"" << width - margin / 2 << "\" y2=\"" << height - margin
        << "\" stroke=\"#888\"/>\n";
    out << "  <line x1=\"" << margin << "\" y1=\"" << height - margin
        << "\" x2=\"" << margin << "\" y2=\"" << margin / 2
        << "\" stroke=\"#888\"/>\n";
    for (long i = 0; i <= max_index; ++i) {
        out << "  <text x=\"" << margin + i * cell << "\" y=\""
            << height - margin + 20
            << "\" font-size=\"12\" text-anchor=\"middle\" fill=\"#555\">" << i
            << "</text>\n";
    }
    for (long v = 0; v <= max_val; ++v) {
        out << "  <text x=\"" << margin - 12 << "\" y=\""
            << margin + (max_val - v) * cell + 4
            << "\" font-size=\"12\" text-anchor=\"end\" fill=\"#555\">" << v
            << "</text>\n";
    }

    for (const NPEdge& e : polygon.edges()) {
        bool flat = e.from.val == e.to.val;
        out << "  <line x1=\"" << px(e.from.index) << "\" y1=\""
            << py(e.from.val) << "\" x2=\"" << px(e.to.index) << "\" y2=\""
            << py(e.to.val) << "\" stroke=\"#1f77b4\" stroke-width=\"2\"";
        if (flat && polygon.censored) out << " stroke-dasharray=\"6,4\"";
        out << "/>\n";
        out << "  <text x=\"" << (px(e.from.index) + px(e.to.index)) / 2
            << "\" y=\"" << (py(e.from.val) + py(e.to.val)) / 2 - 8
            << "\" font-size=\"12\" text-anchor=\"middle\" fill=\"#1f77b4\">"
            << slope_text(e.slope()) << "</text>\n";
    }

    for (const NPPoint& p : polygon.vertices) {
        out << "  <circle cx=\"" << px(p.index) << "\" cy=\"" << py(p.val)
            << "\" r=\"4\" fill=\"#d62728\"/>\n";
    }

    if (polygon.censored) {
        out << "  <text x=\"" << width - margin / 2 << "\" y=\""
            << margin / 2
            << "\" font-size=\"12\" text-anchor=\"end\" fill=\"#d62728\">"
            << "flat run censored at window " << polygon.window
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace seriesfact
