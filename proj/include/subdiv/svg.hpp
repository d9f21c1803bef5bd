#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "subdiv/polygon.hpp"

namespace subdiv {

struct SvgStyle {
    std::string stroke = "black";
    double stroke_width = 1.0;
};

/// Collects 2-D polygons as styled polylines and emits SVG 1.1. Closed
/// polygons repeat their first vertex; the viewBox is the joint bounding box
/// with a 5% margin; coordinates carry 9 significant digits.
class SvgScene {
public:
    void add_polyline(const Polygon& polygon, SvgStyle style);
    void write(std::ostream& out) const;

private:
    struct Entry {
        std::vector<std::pair<double, double>> points;
        bool closed = false;
        SvgStyle style;
    };
    std::vector<Entry> entries_;
};

}  // namespace subdiv
