#ifndef MGSIM_REGION_HPP
#define MGSIM_REGION_HPP

#include <vector>

#include <json.hpp>

#include "mgsim/analytic.hpp"

namespace mgsim {

struct Vec2 {
    double x = 0.0;  // S_u
    double y = 0.0;  // S_e
};

/// Convex region in the (S_u, S_e) quadrant, stored both as constraints and
/// as a counter-clockwise vertex list. Regions are down-sets: the axes are
/// always part of the boundary.
struct MGRegion {
    std::vector<LinearConstraint> constraints;  // excluding S_u >= 0, S_e >= 0
    std::vector<Vec2> vertices;                 // counter-clockwise
    bool degenerate = false;                    // empty, a point, or a segment

    nlohmann::json to_json() const;
};

/// Intersects the half-planes with the nonnegative quadrant. Constraints must
/// have nonnegative normals; an unbounded system throws std::domain_error.
MGRegion polygon_from_constraints(std::vector<LinearConstraint> constraints);

/// Convex hull of the points together with their axis projections and the
/// origin (time sharing plus free disposal of MG).
MGRegion timeshare_hull(const std::vector<Vec2>& points);

struct SubsetReport {
    bool contained = false;
    double max_violation = 0.0;
};

/// Evaluates the outer region's constraints at the inner vertices and at
/// `samples` points along the inner boundary.
SubsetReport is_subset(const MGRegion& inner, const MGRegion& outer, int samples);

}  // namespace mgsim

#endif
