#pragma once

#include <string_view>
#include <vector>

#include "digicurv/grid.hpp"

namespace digicurv {

/// Circle of given radius: g = (x-cx)^2 + (y-cy)^2 - R^2.
ImplicitShape make_circle(double radius, Point center = {0.0, 0.0});

/// The builtin analytic test shapes:
///   ellipse    x^2/81 + y^2/9 - 1            (semi axes 9 and 3)
///   gummybear  (x/3)^4 + (y/2)^4 - x^2 - y^2 - 1
///   hourglass  (3.96 + (x/3)^2 + (y/3)^2)^2 - 15.84 (x/3)^2 - 16
///   rhombus    |x| + |y| - 9                  (corners are singular points)
const std::vector<ImplicitShape>& shape_catalog();

/// Catalog lookup by name; nullptr when unknown.
const ImplicitShape* find_shape(std::string_view name);

/// Unsigned curvature |kappa| of the implicit curve g = 0 at a boundary
/// point, from the gradient and Hessian of g:
///   kappa = (g_xx g_y^2 - 2 g_xy g_x g_y + g_yy g_x^2) / |grad g|^3.
/// Throws NotOnCurve when p is not on the curve (distance estimate
/// |g|/|grad g| above 1e-8 * scale) and SingularPoint at singular points of
/// the shape or where the gradient vanishes.
double implicit_curvature(const ImplicitShape& shape, Point p);

/// Dense zero-contour sampling of a shape boundary with nearest-point
/// queries. Sample points are the sign-change crossings of a regular scan
/// grid of the given cell size; queries refine the best sample by projected
/// descent onto { g = 0 }.
class BoundarySampler {
public:
    BoundarySampler(const ImplicitShape& shape, double cell);

    /// Closest boundary point to p (global to sampling density, then a
    /// local optimum after refinement).
    Point nearest(Point p) const;

    std::size_t sample_count() const { return points_.size(); }

private:
    Point best_sample(Point p) const;

    const ImplicitShape& shape_;
    double cell_;
    std::vector<Point> points_;
    // uniform bucket index over the sampling domain
    double bucket_size_ = 1.0;
    Point bucket_origin_{0.0, 0.0};
    int buckets_per_side_ = 1;
    std::vector<std::vector<int>> buckets_;
};

/// One-shot nearest-boundary-point query (builds a sampler internally).
/// Throws NoBoundaryFound when the scan finds no zero crossing.
Point nearest_boundary_point(const ImplicitShape& shape, Point p, double cell);

}  // namespace digicurv
