#include "tdgen/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_map>

namespace tdgen {

namespace {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace

std::string render_svg(const Instance& inst, const SvgOptions& opt) {
    const bool three_d = inst.dimension == Dimension::ThreeD;
    const double sin_a = sin_deg(opt.azimuth_deg), cos_a = cos_deg(opt.azimuth_deg);
    const double sin_e = sin_deg(opt.elevation_deg), cos_e = cos_deg(opt.elevation_deg);
    const auto project = [&](const Vec3& p) -> Point {
        if (!three_d) return {p.x, p.y};
        return {-p.x * sin_a + p.y * cos_a, -(p.x * cos_a + p.y * sin_a) * sin_e + p.z * cos_e};
    };

    const double hours = opt.arrow_minutes / 60.0;
    std::vector<Point> marks, tips;
    marks.reserve(inst.aircraft.size());
    for (const Aircraft& a : inst.aircraft) {
        marks.push_back(project(a.p_hat));
        tips.push_back(project(a.p_hat + a.v_hat * hours));
    }

    double min_x = marks[0].x, max_x = marks[0].x, min_y = marks[0].y, max_y = marks[0].y;
    for (const auto& pts : {marks, tips}) {
        for (const Point& p : pts) {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
    }
    const double extent = std::max({max_x - min_x, max_y - min_y, 1e-9});
    const double scale = (opt.size_px - 2.0 * opt.margin_px) / extent;
    const auto screen = [&](const Point& p) -> Point {
        // y grows upward in instance space, downward on the canvas
        return {opt.margin_px + (p.x - min_x) * scale,
                opt.size_px - opt.margin_px - (p.y - min_y) * scale};
    };

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(opt.size_px) + "\" height=\"" +
         num(opt.size_px) + "\" viewBox=\"0 0 " + num(opt.size_px) + " " + num(opt.size_px) +
         "\">\n";
    s += "<defs>\n"
         "<marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"7\" "
         "markerHeight=\"7\" orient=\"auto-start-reverse\">\n"
         "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#30415d\"/>\n"
         "</marker>\n"
         "</defs>\n";

    std::unordered_map<int, std::size_t> index;
    for (std::size_t k = 0; k < inst.aircraft.size(); ++k) index.emplace(inst.aircraft[k].id, k);
    std::vector<bool> in_conflict(inst.aircraft.size(), false);
    if (opt.highlight_conflicts) {
        for (const PairConflict& c : detect_conflicts(inst)) {
            const std::size_t a = index.at(c.i), b = index.at(c.j);
            in_conflict[a] = in_conflict[b] = true;
            const Point pa = screen(marks[a]), pb = screen(marks[b]);
            s += "<line class=\"conflict\" x1=\"" + num(pa.x) + "\" y1=\"" + num(pa.y) +
                 "\" x2=\"" + num(pb.x) + "\" y2=\"" + num(pb.y) +
                 "\" stroke=\"#c94f4f\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
        }
    }
    for (std::size_t k = 0; k < inst.aircraft.size(); ++k) {
        const Point from = screen(marks[k]);
        const Point to = screen(tips[k]);
        s += "<line x1=\"" + num(from.x) + "\" y1=\"" + num(from.y) + "\" x2=\"" + num(to.x) +
             "\" y2=\"" + num(to.y) +
             "\" stroke=\"#30415d\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\"/>\n";
        const char* fill = in_conflict[k] ? "#c94f4f" : "#1f7a4d";
        s += "<circle cx=\"" + num(from.x) + "\" cy=\"" + num(from.y) + "\" r=\"3.5\" fill=\"" +
             fill + "\"/>\n";
    }
    s += "</svg>\n";
    return s;
}

}  // namespace tdgen
