#pragma once

// Brute-force reference implementations used only by tests. Everything here
// must stay independent of the production code paths it checks.

#include <optional>
#include <span>
#include <vector>

#include "digicurv/boundary.hpp"
#include "digicurv/geometry.hpp"
#include "digicurv/grid.hpp"

namespace oracle {

using digicurv::Point;
using digicurv::Vec2;

/// Minimum-radius separating circle by exhaustive support-set enumeration:
/// every candidate circle is the circumcircle of 3 points of the union, the
/// diametral circle of 2, or a zero circle at an enclosed point.
struct MinCircle {
    bool feasible = false;
    Point center{0.0, 0.0};
    double radius = 0.0;
};
MinCircle min_separating_circle(std::span<const Point> enclosed,
                                std::span<const Point> excluded);

/// Line with `enclosed` strictly on one side and `excluded` on the other
/// closed side (the circle limit for R -> infinity). Candidate normals are
/// pair differences and their perpendiculars, nudged into open validity arcs.
bool strict_line(std::span<const Point> enclosed, std::span<const Point> excluded);

/// Full separability decision in either orientation, circles then lines.
bool separable(std::span<const Point> a, std::span<const Point> b);

/// All boundary edges of a pixel set (pairs of inner/outer 4-neighbors),
/// for comparing against traced curves on hole-free single components.
std::size_t count_boundary_edges(const digicurv::PixelSet& px);

/// Exact curvature of the axis-aligned ellipse x^2/a^2 + y^2/b^2 = 1 at a
/// boundary point.
double ellipse_curvature(double a, double b, Point p);

/// Curvature of an implicit curve at a boundary point via the circumcircle
/// of three nearby points marched along the contour (step s, Newton
/// reprojection). Independent of the gradient/Hessian formula.
double marched_curvature(const digicurv::ImplicitShape& shape, Point p, double step);

}  // namespace oracle
