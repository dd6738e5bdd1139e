#pragma once

#include <optional>
#include <span>
#include <vector>

#include "digicurv/geometry.hpp"

namespace digicurv {

enum class SeparatorKind { Circle, Halfplane };

/// Witness of circular separability. For kind Circle all enclosed points
/// satisfy |p - center| <= radius + eps and all excluded points
/// |q - center| >= radius - eps, with eps = 1e-9 * (1 + max coordinate).
/// For kind Halfplane (the R -> infinity limit) the enclosed set lies
/// strictly on the normal . x < offset side and the excluded set on the
/// closed normal . x >= offset side; radius is +infinity.
struct SeparatingCircle {
    SeparatorKind kind = SeparatorKind::Circle;
    Point center{0.0, 0.0};
    double radius = 0.0;
    Vec2 normal{0.0, 0.0};
    double offset = 0.0;
    bool inner_enclosed = true;  // which input set is enclosed
};

/// A point lifted onto the paraboloid z = x^2 + y^2. A point is strictly
/// inside the circle with center m and radius R exactly when its lift lies
/// strictly below the plane z = 2 m . (x,y) + (R^2 - |m|^2).
struct LiftedPoint {
    double x = 0.0, y = 0.0, z = 0.0;
    static LiftedPoint lift(Point p) { return {p.x, p.y, p.x * p.x + p.y * p.y}; }
};

/// Decides circular separability in either orientation, including the
/// halfplane limit, and returns a witness if one exists.
std::optional<SeparatingCircle> is_circular_separable(std::span<const Point> inner,
                                                      std::span<const Point> outer);

/// Smallest circle enclosing all of `inner` while excluding all of `outer`
/// (orientation fixed by the caller). Returns a halfplane witness with
/// radius +infinity when finite circles fail only in the limit. Throws
/// NotSeparable when no separator exists in this orientation.
SeparatingCircle smallest_separating_circle(std::span<const Point> inner,
                                            std::span<const Point> outer);

namespace detail {

/// Result of the minimum-radius separating-circle problem.
struct MinCircle {
    bool feasible = false;
    Point center{0.0, 0.0};
    double radius = 0.0;
    /// Near-active constraint points, usable to warm-start a nearby solve.
    std::vector<Point> support_enclosed;
    std::vector<Point> support_excluded;
};

/// Minimum-radius circle with `enclosed` inside-or-on and `excluded`
/// outside-or-on, or infeasible when no finite circle separates.
///
/// Lifting the points onto the paraboloid turns the constraints into linear
/// ones in the plane coefficients (w, b) = (2m, R^2 - |m|^2), and the
/// objective R^2 = b + |w|^2/4 is convex, so the optimum is determined by at
/// most three contact points: the circumcircle of three of them, the
/// diametral circle of two, or a zero circle at a single enclosed point.
/// A working set is grown by most-violated constraints; each subproblem is
/// solved exactly by enumerating those candidate circles.
MinCircle min_separating_circle(std::span<const Point> enclosed,
                                std::span<const Point> excluded,
                                const MinCircle* warm = nullptr);

/// Line n . x = c with `enclosed` strictly below (n . p < c) and `excluded`
/// on the closed side above (n . q >= c): the halfplane limit of circles.
bool limit_halfplane(std::span<const Point> enclosed, std::span<const Point> excluded,
                     Vec2& normal_out, double& offset_out);

}  // namespace detail

}  // namespace digicurv
