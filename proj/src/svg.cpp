#include "subdiv/svg.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "subdiv/io.hpp"

namespace subdiv {

void SvgScene::add_polyline(const Polygon& polygon, SvgStyle style) {
    if (polygon.dimension() != 2)
        throw std::invalid_argument("SvgScene: only 2-D polygons can be plotted");
    Entry e;
    e.closed = polygon.topology() == Topology::closed;
    e.style = std::move(style);
    e.points.reserve(polygon.size() + (e.closed ? 1 : 0));
    for (const auto& p : polygon.points())
        e.points.emplace_back(p[0].to_double(), p[1].to_double());
    entries_.push_back(std::move(e));
}

void SvgScene::write(std::ostream& out) const {
    double min_x = 0, min_y = 0, max_x = 1, max_y = 1;
    bool first = true;
    for (const auto& e : entries_)
        for (const auto& [x, y] : e.points) {
            if (first) {
                min_x = max_x = x;
                min_y = max_y = y;
                first = false;
            } else {
                min_x = std::min(min_x, x);
                max_x = std::max(max_x, x);
                min_y = std::min(min_y, y);
                max_y = std::max(max_y, y);
            }
        }
    double span_x = max_x - min_x, span_y = max_y - min_y;
    double margin = 0.05 * std::max({span_x, span_y, 1e-9});
    double vb_x = min_x - margin, vb_y = min_y - margin;
    double vb_w = span_x + 2 * margin, vb_h = span_y + 2 * margin;

    auto num = [](double v) { return format_real(v, 9); };
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
        << num(vb_x) << " " << num(vb_y) << " " << num(vb_w) << " " << num(vb_h) << "\">\n";
    for (const auto& e : entries_) {
        out << "  <polyline fill=\"none\" stroke=\"" << e.style.stroke
            << "\" stroke-width=\"" << num(e.style.stroke_width * vb_w / 512.0)
            << "\" points=\"";
        bool sep = false;
        auto emit = [&](double x, double y) {
            if (sep) out << " ";
            // SVG's y axis points down; flip so plots read naturally.
            out << num(x) << "," << num(vb_y + (max_y + margin) - y);
            sep = true;
        };
        for (const auto& [x, y] : e.points) emit(x, y);
        if (e.closed && !e.points.empty()) emit(e.points.front().first, e.points.front().second);
        out << "\"/>\n";
    }
    out << "</svg>\n";
}

}  // namespace subdiv
