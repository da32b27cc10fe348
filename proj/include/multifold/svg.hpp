#pragma once

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>
#include <utility>

#include "multifold/fold_simulator.hpp"

namespace multifold {

namespace detail {

inline std::string svg_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    std::string s(buf);
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    if (s == "-0") s = "0";
    return s;
}

inline const char* svg_stroke(Role role) {
    switch (role) {
        case Role::zero_crease:
        case Role::one_crease:
        case Role::diagonal_reference:
            return "#999999";
        case Role::sheet_x_edge:
            return "#1f77b4";
        case Role::pair_zero_edge:
        case Role::pair_other_edge:
        case Role::seed_zero_edge:
        case Role::seed_other_edge:
            return "#000000";
        case Role::rect_diagonal:
        case Role::auxiliary_edge:
            return "#d62728";
        case Role::y_edge:
            return "#2ca02c";
        default:
            return "#ff7f0e";
    }
}

}  // namespace detail

/// SVG 1.1 drawing of a concrete scene: one <line> per element, clipped to
/// the sheet, thin cosmetic rectangles under the horizontal strips. One sheet
/// unit is 100 display units and y points up. The final gap is carried
/// exactly in the root's data-final-gap attribute.
inline std::string render_svg(const ConcreteScene& cs) {
    constexpr double scale = 100.0;
    constexpr double strip_width = 0.04;
    const double width = to_double(cs.extents.width);
    const double half = to_double(cs.extents.height) / 2.0;
    const double pad = 0.5;

    std::ostringstream os;
    using detail::svg_number;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"";
    os << " viewBox=\"" << svg_number(-pad * scale) << ' ' << svg_number(-(half + pad) * scale) << ' '
       << svg_number((width + 2 * pad) * scale) << ' ' << svg_number((2 * half + 2 * pad) * scale) << "\"";
    os << " data-x=\"" << to_string(cs.x) << "\"";
    if (cs.final_gap) os << " data-final-gap=\"" << to_string(*cs.final_gap) << "\"";
    os << ">\n";
    os << "  <title>multifold scene at x = " << to_string(cs.x) << "</title>\n";
    os << "  <g transform=\"matrix(1 0 0 -1 0 0)\" fill=\"none\" stroke-width=\"2\">\n";
    os << "    <rect class=\"sheet\" x=\"0\" y=\"" << svg_number(-half * scale) << "\" width=\""
       << svg_number(width * scale) << "\" height=\"" << svg_number(2 * half * scale)
       << "\" stroke=\"#cccccc\" fill=\"#fdfdf5\"/>\n";

    for (const auto& e : cs.elements) {
        if (const auto* h = std::get_if<HorizontalEdge<Rational>>(&e.geometry)) {
            const double v = to_double(h->v);
            os << "    <rect class=\"strip\" x=\"0\" y=\"" << svg_number((v - strip_width / 2) * scale)
               << "\" width=\"" << svg_number(width * scale) << "\" height=\"" << svg_number(strip_width * scale)
               << "\" fill=\"#eeeeee\" stroke=\"none\"/>\n";
        }
    }

    for (const auto& e : cs.elements) {
        double u1 = 0, v1 = 0, u2 = 0, v2 = 0;
        std::visit(
            [&](const auto& g) {
                using T = std::decay_t<decltype(g)>;
                if constexpr (std::is_same_v<T, VerticalLine<Rational>>) {
                    u1 = u2 = to_double(g.u);
                    v1 = -half;
                    v2 = half;
                } else if constexpr (std::is_same_v<T, HorizontalEdge<Rational>>) {
                    u1 = 0;
                    u2 = width;
                    v1 = v2 = to_double(g.v);
                } else {
                    const double s = to_double(g.slope);
                    const double b = to_double(g.intercept);
                    double lo = 0, hi = width;
                    if (s != 0) {
                        double ua = (-half - b) / s, ub = (half - b) / s;
                        if (ua > ub) std::swap(ua, ub);
                        lo = std::max(lo, ua);
                        hi = std::min(hi, ub);
                    }
                    if (lo > hi) hi = lo;
                    u1 = lo;
                    u2 = hi;
                    v1 = s * lo + b;
                    v2 = s * hi + b;
                }
            },
            e.geometry);
        os << "    <line class=\"" << role_name(e.role) << "\" data-id=\"" << e.id << "\" x1=\"" << svg_number(u1 * scale)
           << "\" y1=\"" << svg_number(v1 * scale) << "\" x2=\"" << svg_number(u2 * scale) << "\" y2=\""
           << svg_number(v2 * scale) << "\" stroke=\"" << detail::svg_stroke(e.role) << "\"/>\n";
    }
    os << "  </g>\n";
    if (cs.final_gap) {
        os << "  <text x=\"0\" y=\"" << svg_number(-(half + pad / 2) * scale) << "\" font-size=\"20\">gap = "
           << to_string(*cs.final_gap) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace multifold
