#pragma once

#include <stdexcept>
#include <vector>

#include "subdiv/scheme.hpp"

namespace subdiv {

enum class Topology { closed, open };

struct TooFewPoints : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Control polygon with exact rational coordinates. All points share one
/// dimension d >= 1; open polygons need >= 2 points, closed ones >= 3.
class Polygon {
public:
    Polygon(Topology topology, std::vector<std::vector<Rational>> points);

    Topology topology() const { return topology_; }
    std::size_t dimension() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<std::vector<Rational>>& points() const { return points_; }
    const std::vector<Rational>& point(std::size_t i) const { return points_[i]; }

private:
    Topology topology_;
    std::size_t dim_;
    std::vector<std::vector<Rational>> points_;
};

struct RefinementTrace {
    std::vector<Polygon> levels;  // levels[0] is the input
    SubdivisionScheme scheme;
};

/// One refinement step. Closed polygons wrap indices cyclically and yield
/// exactly arity * n points. Open polygons keep only refined points whose
/// stencil lies fully inside the data; throws TooFewPoints when no refined
/// point is fully supported.
Polygon refine_once(const Polygon& p, const SubdivisionScheme& s);

RefinementTrace refine(const Polygon& p, const SubdivisionScheme& s, int steps);

/// Max L-infinity hop between a refined point and its anchor source point
/// (the source point nearest the stencil's index center of mass), over all
/// consecutive level pairs of the trace. Exact.
Rational displacement_bound(const RefinementTrace& trace);

}  // namespace subdiv
