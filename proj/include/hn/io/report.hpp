#pragma once

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hn/core/engine.hpp"

namespace hn::io {

inline constexpr const char* kReportSchema = "hn-report/1";

inline nlohmann::json polygon_to_json(const PolygonFn& poly) {
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : poly.vertices) vs.push_back({v.x, v.y.str()});
    return vs;
}

template <class I>
nlohmann::json filtration_to_json(const I& inst, const HNFiltration<I>& filt) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : filt.steps)
        steps.push_back({{"rank", s.rank}, {"degree", s.degree}, {"description", inst.describe_sub(s)}});
    nlohmann::json graded = nlohmann::json::array();
    for (size_t i = 0; i < filt.graded_slopes.size(); ++i)
        graded.push_back({{"slope", filt.graded_slopes[i].str()},
                          {"rank", filt.graded_ranks[i]},
                          {"degree", filt.graded_degrees[i]}});
    return {{"steps", steps}, {"graded", graded}};
}

// Deterministic rendering: sorted keys, two-space indent, trailing newline.
inline std::string render_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

// Flat tab-separated rendering of the same report data.
inline std::string render_tsv(const nlohmann::json& j) {
    std::ostringstream os;
    auto emit_scalar = [&](const std::string& key, const nlohmann::json& v) {
        os << key << "\t";
        if (v.is_string())
            os << v.get<std::string>();
        else
            os << v.dump();
        os << "\n";
    };
    std::function<void(const std::string&, const nlohmann::json&)> walk =
        [&](const std::string& prefix, const nlohmann::json& v) {
            if (v.is_object()) {
                for (auto it = v.begin(); it != v.end(); ++it)
                    walk(prefix.empty() ? it.key() : prefix + "." + it.key(), it.value());
            } else if (v.is_array()) {
                bool scalars = std::all_of(v.begin(), v.end(),
                                           [](const nlohmann::json& e) { return !e.is_structured(); });
                if (scalars) {
                    os << prefix;
                    for (const auto& e : v) {
                        os << "\t";
                        if (e.is_string())
                            os << e.get<std::string>();
                        else
                            os << e.dump();
                    }
                    os << "\n";
                } else {
                    int idx = 0;
                    for (const auto& e : v) walk(prefix + "." + std::to_string(idx++), e);
                }
            } else {
                emit_scalar(prefix, v);
            }
        };
    walk("", j);
    return os.str();
}

// Fixed 480x320 viewport with rank/degree axis labels and marked
// breakpoints.  Presentation only, never parsed back.
inline std::string polygon_svg(const PolygonFn& poly) {
    const double width = 480, height = 320, margin = 40;
    double xmax = static_cast<double>(std::max<Int>(poly.max_x(), 1));
    double ymin = 0, ymax = 0;
    for (const auto& v : poly.vertices) {
        double y = static_cast<double>(v.y.num()) / static_cast<double>(v.y.den());
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    if (ymax - ymin < 1e-9) ymax = ymin + 1;
    auto px = [&](double x) { return margin + x / xmax * (width - 2 * margin); };
    auto py = [&](double y) { return height - margin - (y - ymin) / (ymax - ymin) * (height - 2 * margin); };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 480 320\">\n";
    os << "  <rect width=\"480\" height=\"320\" fill=\"white\"/>\n";
    os << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(xmax) << "\" y2=\"" << py(0)
       << "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
    os << "  <text x=\"" << width - margin + 4 << "\" y=\"" << py(0) + 4 << "\" font-size=\"12\">rank</text>\n";
    os << "  <text x=\"" << margin - 30 << "\" y=\"" << margin - 10 << "\" font-size=\"12\">degree</text>\n";
    os << "  <polyline fill=\"none\" stroke=\"#1a6\" stroke-width=\"2\" points=\"";
    for (const auto& v : poly.vertices) {
        double y = static_cast<double>(v.y.num()) / static_cast<double>(v.y.den());
        os << px(static_cast<double>(v.x)) << "," << py(y) << " ";
    }
    os << "\"/>\n";
    for (const auto& v : poly.vertices) {
        double y = static_cast<double>(v.y.num()) / static_cast<double>(v.y.den());
        os << "  <circle cx=\"" << px(static_cast<double>(v.x)) << "\" cy=\"" << py(y)
           << "\" r=\"3\" fill=\"#1a6\"/>\n";
        os << "  <text x=\"" << px(static_cast<double>(v.x)) + 5 << "\" y=\"" << py(y) - 5
           << "\" font-size=\"10\">(" << v.x << "," << v.y.str() << ")</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace hn::io
