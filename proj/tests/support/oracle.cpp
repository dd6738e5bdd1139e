#include "support/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace oracle {

namespace {

double scale_of(std::span<const Point> a, std::span<const Point> b) {
    double m = 0.0;
    for (const Point p : a) m = std::max({m, std::abs(p.x), std::abs(p.y)});
    for (const Point p : b) m = std::max({m, std::abs(p.x), std::abs(p.y)});
    return 1.0 + m;
}

}  // namespace

MinCircle min_separating_circle(std::span<const Point> enclosed,
                                std::span<const Point> excluded) {
    const double eps = 1e-9 * scale_of(enclosed, excluded);
    std::vector<Point> pts(enclosed.begin(), enclosed.end());
    pts.insert(pts.end(), excluded.begin(), excluded.end());

    MinCircle best;
    auto try_circle = [&](Point m, double r) {
        if (!std::isfinite(m.x) || !std::isfinite(m.y) || !std::isfinite(r)) return;
        if (best.feasible && r >= best.radius) return;
        for (const Point p : enclosed)
            if (digicurv::distance(m, p) > r + eps) return;
        for (const Point q : excluded)
            if (digicurv::distance(m, q) < r - eps) return;
        best = {true, m, r};
    };

    for (const Point p : enclosed) try_circle(p, 0.0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            try_circle(0.5 * (pts[i] + pts[j]), 0.5 * digicurv::distance(pts[i], pts[j]));
            for (std::size_t k = j + 1; k < pts.size(); ++k) {
                const Point a = pts[i], b = pts[j], c = pts[k];
                const double d =
                    2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
                if (d == 0.0) continue;
                const double za = digicurv::squared_norm(a),
                             zb = digicurv::squared_norm(b),
                             zc = digicurv::squared_norm(c);
                const Point m{(za * (b.y - c.y) + zb * (c.y - a.y) + zc * (a.y - b.y)) / d,
                              (za * (c.x - b.x) + zb * (a.x - c.x) + zc * (b.x - a.x)) / d};
                try_circle(m, std::max({digicurv::distance(m, a), digicurv::distance(m, b),
                                        digicurv::distance(m, c)}));
            }
        }
    }
    return best;
}

bool strict_line(std::span<const Point> enclosed, std::span<const Point> excluded) {
    if (enclosed.empty() || excluded.empty()) return false;
    const double eps = 1e-12 * scale_of(enclosed, excluded);
    std::vector<Point> pts(enclosed.begin(), enclosed.end());
    pts.insert(pts.end(), excluded.begin(), excluded.end());

    auto valid = [&](Vec2 n) {
        const double len = digicurv::norm(n);
        if (len == 0.0) return false;
        n = (1.0 / len) * n;
        double max_enc = -std::numeric_limits<double>::infinity();
        for (const Point p : enclosed) max_enc = std::max(max_enc, digicurv::dot(n, p));
        double min_exc = std::numeric_limits<double>::infinity();
        for (const Point q : excluded) min_exc = std::min(min_exc, digicurv::dot(n, q));
        return max_enc < min_exc - eps;
    };
    auto with_nudges = [&](Vec2 v) {
        for (const double a : {0.0, 1e-4, -1e-4}) {
            const double c = std::cos(a), s = std::sin(a);
            if (valid({c * v.x - s * v.y, s * v.x + c * v.y})) return true;
        }
        return false;
    };

    if (with_nudges({1.0, 0.0}) || with_nudges({0.0, 1.0}) || with_nudges({-1.0, 0.0}) ||
        with_nudges({0.0, -1.0}))
        return true;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const Vec2 d = pts[j] - pts[i];
            if (d.x == 0.0 && d.y == 0.0) continue;
            if (with_nudges(d) || with_nudges({-d.x, -d.y}) ||
                with_nudges(digicurv::perp(d)) || with_nudges({d.y, -d.x}))
                return true;
        }
    }
    return false;
}

bool separable(std::span<const Point> a, std::span<const Point> b) {
    return min_separating_circle(a, b).feasible ||
           min_separating_circle(b, a).feasible || strict_line(a, b) || strict_line(b, a);
}

std::size_t count_boundary_edges(const digicurv::PixelSet& px) {
    std::size_t n = 0;
    for (int j = 0; j < px.spec.height; ++j) {
        for (int i = 0; i < px.spec.width; ++i) {
            if (!px.inside(i, j)) continue;
            if (!px.inside(i + 1, j)) ++n;
            if (!px.inside(i - 1, j)) ++n;
            if (!px.inside(i, j + 1)) ++n;
            if (!px.inside(i, j - 1)) ++n;
        }
    }
    return n;
}

double ellipse_curvature(double a, double b, Point p) {
    const double t = std::atan2(p.y / b, p.x / a);
    const double s = a * a * std::sin(t) * std::sin(t) + b * b * std::cos(t) * std::cos(t);
    return a * b / std::pow(s, 1.5);
}

namespace {

Point project_to_curve(const digicurv::ImplicitShape& shape, Point q) {
    for (int i = 0; i < 40; ++i) {
        const Vec2 g = shape.grad(q);
        const double n2 = digicurv::squared_norm(g);
        if (n2 < 1e-18) break;
        q = q - (shape.g(q) / n2) * g;
    }
    return q;
}

}  // namespace

double marched_curvature(const digicurv::ImplicitShape& shape, Point p, double step) {
    const Point p0 = project_to_curve(shape, p);
    auto march = [&](double dir) {
        const Vec2 g = shape.grad(p0);
        const Vec2 t = (1.0 / digicurv::norm(g)) * digicurv::perp(g);
        return project_to_curve(shape, p0 + (dir * step) * t);
    };
    const Point pm = march(-1.0), pp = march(+1.0);
    // Menger curvature: 4 * area / (product of side lengths).
    const double area2 = std::abs(digicurv::cross(pm, p0, pp));
    const double l1 = digicurv::distance(pm, p0), l2 = digicurv::distance(p0, pp),
                 l3 = digicurv::distance(pm, pp);
    return 2.0 * area2 / (l1 * l2 * l3);
}

}  // namespace oracle
