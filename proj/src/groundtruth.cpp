#include "digicurv/groundtruth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "digicurv/errors.hpp"

namespace digicurv {

ImplicitShape make_circle(double radius, Point center) {
    ImplicitShape s;
    s.name = "circle";
    s.extent = std::max(std::abs(center.x), std::abs(center.y)) + radius;
    s.g = [=](Point p) { return squared_distance(p, center) - radius * radius; };
    s.grad = [=](Point p) -> Vec2 { return {2.0 * (p.x - center.x), 2.0 * (p.y - center.y)}; };
    s.hess = [](Point) -> std::array<double, 3> { return {2.0, 0.0, 2.0}; };
    return s;
}

namespace {

ImplicitShape make_ellipse() {
    ImplicitShape s;
    s.name = "ellipse";
    s.extent = 9.0;
    s.g = [](Point p) { return p.x * p.x / 81.0 + p.y * p.y / 9.0 - 1.0; };
    s.grad = [](Point p) -> Vec2 { return {2.0 * p.x / 81.0, 2.0 * p.y / 9.0}; };
    s.hess = [](Point) -> std::array<double, 3> { return {2.0 / 81.0, 0.0, 2.0 / 9.0}; };
    return s;
}

ImplicitShape make_gummybear() {
    ImplicitShape s;
    s.name = "gummybear";
    s.extent = 9.5;
    s.g = [](Point p) {
        const double u = p.x / 3.0, v = p.y / 2.0;
        return u * u * u * u + v * v * v * v - p.x * p.x - p.y * p.y - 1.0;
    };
    s.grad = [](Point p) -> Vec2 {
        return {4.0 * p.x * p.x * p.x / 81.0 - 2.0 * p.x,
                4.0 * p.y * p.y * p.y / 16.0 - 2.0 * p.y};
    };
    s.hess = [](Point p) -> std::array<double, 3> {
        return {12.0 * p.x * p.x / 81.0 - 2.0, 0.0, 12.0 * p.y * p.y / 16.0 - 2.0};
    };
    return s;
}

ImplicitShape make_hourglass() {
    ImplicitShape s;
    s.name = "hourglass";
    s.extent = 9.0;
    const double c0 = 3.96, c1 = 15.84;
    s.g = [=](Point p) {
        const double b = c0 + (p.x * p.x + p.y * p.y) / 9.0;
        return b * b - c1 * p.x * p.x / 9.0 - 16.0;
    };
    s.grad = [=](Point p) -> Vec2 {
        const double b = c0 + (p.x * p.x + p.y * p.y) / 9.0;
        return {(4.0 * b / 9.0 - 2.0 * c1 / 9.0) * p.x, 4.0 * b / 9.0 * p.y};
    };
    s.hess = [=](Point p) -> std::array<double, 3> {
        const double b = c0 + (p.x * p.x + p.y * p.y) / 9.0;
        return {4.0 * b / 9.0 + 8.0 * p.x * p.x / 81.0 - 2.0 * c1 / 9.0,
                8.0 * p.x * p.y / 81.0,
                4.0 * b / 9.0 + 8.0 * p.y * p.y / 81.0};
    };
    return s;
}

ImplicitShape make_rhombus() {
    ImplicitShape s;
    s.name = "rhombus";
    s.extent = 9.0;
    s.g = [](Point p) { return std::abs(p.x) + std::abs(p.y) - 9.0; };
    s.grad = [](Point p) -> Vec2 {
        auto sgn = [](double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); };
        return {sgn(p.x), sgn(p.y)};
    };
    s.hess = [](Point) -> std::array<double, 3> { return {0.0, 0.0, 0.0}; };
    s.singular_points = {{9.0, 0.0}, {0.0, 9.0}, {-9.0, 0.0}, {0.0, -9.0}};
    return s;
}

}  // namespace

const std::vector<ImplicitShape>& shape_catalog() {
    static const std::vector<ImplicitShape> catalog = {
        make_ellipse(), make_gummybear(), make_hourglass(), make_rhombus()};
    return catalog;
}

const ImplicitShape* find_shape(std::string_view name) {
    for (const ImplicitShape& s : shape_catalog())
        if (s.name == name) return &s;
    return nullptr;
}

double implicit_curvature(const ImplicitShape& shape, Point p) {
    constexpr double kSingularRadius = 1e-6;
    for (const Point s : shape.singular_points) {
        if (distance(p, s) <= kSingularRadius)
            throw SingularPoint("implicit_curvature: singular boundary point");
    }
    const Vec2 gr = shape.grad(p);
    const double gn = norm(gr);
    if (gn <= 1e-8) throw SingularPoint("implicit_curvature: vanishing gradient");
    const double scale = 1.0 + std::max(std::abs(p.x), std::abs(p.y));
    if (std::abs(shape.g(p)) / gn > 1e-8 * scale)
        throw NotOnCurve("implicit_curvature: point is not on the boundary");
    const auto [gxx, gxy, gyy] = shape.hess(p);
    const double num = gxx * gr.y * gr.y - 2.0 * gxy * gr.x * gr.y + gyy * gr.x * gr.x;
    return std::abs(num) / (gn * gn * gn);
}

BoundarySampler::BoundarySampler(const ImplicitShape& shape, double cell)
    : shape_(shape), cell_(cell) {
    const double L = shape.extent + 1.0;
    const int m = std::max(2, static_cast<int>(std::ceil(2.0 * L / cell)));

    // Zero crossings along every horizontal and vertical scan-grid edge.
    auto corner = [&](int i, int j) -> Point {
        return {-L + i * cell, -L + j * cell};
    };
    std::vector<double> row(m + 1), next(m + 1);
    for (int i = 0; i <= m; ++i) row[i] = shape.g(corner(i, 0));
    for (int j = 0; j <= m; ++j) {
        if (j < m)
            for (int i = 0; i <= m; ++i) next[i] = shape.g(corner(i, j + 1));
        for (int i = 0; i <= m; ++i) {
            const double g0 = row[i];
            if (g0 == 0.0) {
                points_.push_back(corner(i, j));
                continue;
            }
            if (i < m) {  // horizontal edge (i,j)-(i+1,j)
                const double g1 = row[i + 1];
                if (g0 * g1 < 0.0) {
                    const double t = g0 / (g0 - g1);
                    points_.push_back(corner(i, j) + t * Vec2{cell, 0.0});
                }
            }
            if (j < m) {  // vertical edge (i,j)-(i,j+1)
                const double g1 = next[i];
                if (g0 * g1 < 0.0) {
                    const double t = g0 / (g0 - g1);
                    points_.push_back(corner(i, j) + t * Vec2{0.0, cell});
                }
            }
        }
        std::swap(row, next);
    }
    if (points_.empty())
        throw NoBoundaryFound("BoundarySampler: no zero crossing in the domain");

    buckets_per_side_ = 128;
    bucket_origin_ = {-L, -L};
    bucket_size_ = 2.0 * L / buckets_per_side_;
    buckets_.assign(static_cast<std::size_t>(buckets_per_side_) * buckets_per_side_, {});
    for (int idx = 0; idx < static_cast<int>(points_.size()); ++idx) {
        const Point p = points_[idx];
        const int bi = std::clamp(static_cast<int>((p.x - bucket_origin_.x) / bucket_size_),
                                  0, buckets_per_side_ - 1);
        const int bj = std::clamp(static_cast<int>((p.y - bucket_origin_.y) / bucket_size_),
                                  0, buckets_per_side_ - 1);
        buckets_[static_cast<std::size_t>(bj) * buckets_per_side_ + bi].push_back(idx);
    }
}

Point BoundarySampler::best_sample(Point p) const {
    const int bi = std::clamp(static_cast<int>((p.x - bucket_origin_.x) / bucket_size_),
                              0, buckets_per_side_ - 1);
    const int bj = std::clamp(static_cast<int>((p.y - bucket_origin_.y) / bucket_size_),
                              0, buckets_per_side_ - 1);
    double best_d2 = std::numeric_limits<double>::infinity();
    Point best = points_.front();
    // Expand rings until the found distance beats the untested remainder.
    for (int ring = 0; ring < buckets_per_side_; ++ring) {
        bool any_cell = false;
        for (int dj = -ring; dj <= ring; ++dj) {
            for (int di = -ring; di <= ring; ++di) {
                if (std::max(std::abs(di), std::abs(dj)) != ring) continue;
                const int ci = bi + di, cj = bj + dj;
                if (ci < 0 || cj < 0 || ci >= buckets_per_side_ || cj >= buckets_per_side_)
                    continue;
                any_cell = true;
                for (const int idx :
                     buckets_[static_cast<std::size_t>(cj) * buckets_per_side_ + ci]) {
                    const double d2 = squared_distance(p, points_[idx]);
                    if (d2 < best_d2) {
                        best_d2 = d2;
                        best = points_[idx];
                    }
                }
            }
        }
        if (std::isfinite(best_d2)) {
            const double safe = ring * bucket_size_;
            if (best_d2 <= safe * safe) break;
        }
        if (!any_cell && ring > 0 && std::isfinite(best_d2)) break;
    }
    return best;
}

Point BoundarySampler::nearest(Point p) const {
    Point q = best_sample(p);
    for (int iter = 0; iter < 20; ++iter) {
        Vec2 gr = shape_.grad(q);
        double n2 = squared_norm(gr);
        if (n2 > 1e-16) q = q - (shape_.g(q) / n2) * gr;  // level-set correction
        gr = shape_.grad(q);
        n2 = squared_norm(gr);
        if (n2 <= 1e-16) break;
        const Vec2 nhat = (1.0 / std::sqrt(n2)) * gr;
        const Vec2 d = q - p;
        const Vec2 tangential = d - dot(d, nhat) * nhat;
        q = q - 0.5 * tangential;
    }
    const Vec2 gr = shape_.grad(q);
    const double n2 = squared_norm(gr);
    if (n2 > 1e-16) q = q - (shape_.g(q) / n2) * gr;
    return q;
}

Point nearest_boundary_point(const ImplicitShape& shape, Point p, double cell) {
    return BoundarySampler(shape, cell).nearest(p);
}

}  // namespace digicurv
