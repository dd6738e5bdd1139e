#include "digicurv/separability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "digicurv/errors.hpp"

namespace digicurv {
namespace detail {

namespace {

constexpr double kRelTol = 1e-9;

struct Constraint {
    Point p;
    bool enclosed;
};

double coordinate_scale(std::span<const Point> a, std::span<const Point> b) {
    double m = 0.0;
    for (const Point p : a) m = std::max({m, std::abs(p.x), std::abs(p.y)});
    for (const Point p : b) m = std::max({m, std::abs(p.x), std::abs(p.y)});
    return 1.0 + m;
}

struct Candidate {
    Point center;
    double radius;
};

/// Circumcircle of three points; nullopt for (near-)collinear triples.
std::optional<Candidate> circumcircle(Point a, Point b, Point c) {
    const double d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    if (d == 0.0) return std::nullopt;
    const double za = squared_norm(a), zb = squared_norm(b), zc = squared_norm(c);
    const Point m{(za * (b.y - c.y) + zb * (c.y - a.y) + zc * (a.y - b.y)) / d,
                  (za * (c.x - b.x) + zb * (a.x - c.x) + zc * (b.x - a.x)) / d};
    if (!std::isfinite(m.x) || !std::isfinite(m.y)) return std::nullopt;
    const double r = std::max({distance(m, a), distance(m, b), distance(m, c)});
    if (!std::isfinite(r)) return std::nullopt;
    return Candidate{m, r};
}

/// Exact minimum over the working set, by enumerating all circles pinned by
/// at most three of its points. Returns nullopt when the subset is already
/// infeasible (which proves the full problem infeasible).
std::optional<Candidate> solve_working_set(const std::vector<Constraint>& ws, double eps) {
    const int n = static_cast<int>(ws.size());
    auto feasible = [&](const Candidate& c) {
        for (const Constraint& w : ws) {
            const double d = distance(c.center, w.p);
            if (w.enclosed ? d > c.radius + eps : d < c.radius - eps) return false;
        }
        return true;
    };

    std::optional<Candidate> best;
    auto consider = [&](const Candidate& c) {
        if (!best || c.radius < best->radius) {
            if (feasible(c)) best = c;
        }
    };

    for (int i = 0; i < n; ++i) {
        if (ws[i].enclosed) consider({ws[i].p, 0.0});
        for (int j = i + 1; j < n; ++j) {
            const Point mid = 0.5 * (ws[i].p + ws[j].p);
            consider({mid, 0.5 * distance(ws[i].p, ws[j].p)});
            for (int k = j + 1; k < n; ++k) {
                if (auto c = circumcircle(ws[i].p, ws[j].p, ws[k].p)) consider(*c);
            }
        }
    }
    return best;
}

}  // namespace

MinCircle min_separating_circle(std::span<const Point> enclosed,
                                std::span<const Point> excluded,
                                const MinCircle* warm) {
    MinCircle result;
    if (enclosed.empty()) return result;

    const double eps = kRelTol * coordinate_scale(enclosed, excluded);

    auto contains = [](std::span<const Point> pts, Point p) {
        for (const Point q : pts)
            if (q.x == p.x && q.y == p.y) return true;
        return false;
    };

    std::vector<Constraint> ws;
    if (warm) {
        for (const Point p : warm->support_enclosed)
            if (contains(enclosed, p)) ws.push_back({p, true});
        for (const Point p : warm->support_excluded)
            if (contains(excluded, p)) ws.push_back({p, false});
    }
    if (ws.empty() || std::none_of(ws.begin(), ws.end(),
                                   [](const Constraint& c) { return c.enclosed; })) {
        ws.push_back({enclosed.front(), true});
    }

    // Grow the working set by the most violated constraint. A violator is
    // never already a member, so without drops the set grows strictly and
    // the loop terminates within the constraint count. Mild pruning keeps
    // the subproblems tiny; it is only allowed in the early iterations so
    // that the termination argument still applies afterwards.
    const int hard_cap = 128 + 2 * static_cast<int>(enclosed.size() + excluded.size());
    for (int iter = 0;; ++iter) {
        if (iter > hard_cap)
            throw Error("min_separating_circle: working-set loop failed to converge");
        const auto sol = solve_working_set(ws, eps);
        if (!sol) return result;  // infeasible subset => infeasible problem

        double worst = eps;
        std::optional<Constraint> violator;
        for (const Point p : enclosed) {
            const double v = distance(sol->center, p) - sol->radius;
            if (v > worst) {
                worst = v;
                violator = {p, true};
            }
        }
        for (const Point q : excluded) {
            const double v = sol->radius - distance(sol->center, q);
            if (v > worst) {
                worst = v;
                violator = {q, false};
            }
        }

        if (!violator) {
            result.feasible = true;
            result.center = sol->center;
            result.radius = sol->radius;
            for (const Point p : enclosed)
                result.radius = std::max(result.radius, distance(sol->center, p));
            const double tight = std::max(8.0 * eps, 1e-7 * (1.0 + result.radius));
            for (const Constraint& c : ws) {
                if (std::abs(distance(result.center, c.p) - result.radius) > tight) continue;
                auto& side = c.enclosed ? result.support_enclosed : result.support_excluded;
                if (side.size() < 6) side.push_back(c.p);
            }
            return result;
        }

        if (ws.size() > 16 && iter < 48) {
            std::vector<Constraint> kept;
            for (const Constraint& c : ws) {
                const double slack = std::abs(distance(sol->center, c.p) - sol->radius);
                if (slack <= 16.0 * eps) kept.push_back(c);
            }
            if (std::any_of(kept.begin(), kept.end(),
                            [](const Constraint& c) { return c.enclosed; })) {
                ws = std::move(kept);
            }
        }
        ws.push_back(*violator);
    }
}

bool limit_halfplane(std::span<const Point> enclosed, std::span<const Point> excluded,
                     Vec2& normal_out, double& offset_out) {
    if (enclosed.empty() || excluded.empty()) return false;
    const double eps = kRelTol * coordinate_scale(enclosed, excluded);

    std::vector<Point> pts(enclosed.begin(), enclosed.end());
    pts.insert(pts.end(), excluded.begin(), excluded.end());

    auto try_direction = [&](Vec2 n) {
        const double len = norm(n);
        if (len == 0.0 || !std::isfinite(len)) return false;
        n = (1.0 / len) * n;
        double max_enc = -std::numeric_limits<double>::infinity();
        for (const Point p : enclosed) max_enc = std::max(max_enc, dot(n, p));
        double min_exc = std::numeric_limits<double>::infinity();
        for (const Point q : excluded) min_exc = std::min(min_exc, dot(n, q));
        if (max_enc < min_exc - eps) {
            normal_out = n;
            offset_out = min_exc;
            return true;
        }
        return false;
    };

    // A valid direction set is an open arc of the circle of normals whose
    // endpoints are perpendicular to some difference vector, so candidates
    // are pair differences, their perpendiculars, and small rotations of
    // both to land inside open arcs.
    const double nudges[3] = {0.0, 1e-7, -1e-7};
    auto try_rotations = [&](Vec2 v) {
        for (const double a : nudges) {
            const double c = std::cos(a), s = std::sin(a);
            if (try_direction({c * v.x - s * v.y, s * v.x + c * v.y})) return true;
        }
        return false;
    };

    if (try_rotations({1.0, 0.0}) || try_rotations({0.0, 1.0}) ||
        try_rotations({-1.0, 0.0}) || try_rotations({0.0, -1.0}))
        return true;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const Vec2 d = pts[j] - pts[i];
            if (d.x == 0.0 && d.y == 0.0) continue;
            if (try_rotations(d) || try_rotations({-d.x, -d.y}) ||
                try_rotations(perp(d)) || try_rotations({d.y, -d.x}))
                return true;
        }
    }
    return false;
}

}  // namespace detail

std::optional<SeparatingCircle> is_circular_separable(std::span<const Point> inner,
                                                      std::span<const Point> outer) {
    auto as_circle = [](const detail::MinCircle& mc, bool inner_enclosed) {
        SeparatingCircle sc;
        sc.kind = SeparatorKind::Circle;
        sc.center = mc.center;
        sc.radius = mc.radius;
        sc.inner_enclosed = inner_enclosed;
        return sc;
    };

    if (const auto mc = detail::min_separating_circle(inner, outer); mc.feasible)
        return as_circle(mc, true);
    if (const auto mc = detail::min_separating_circle(outer, inner); mc.feasible)
        return as_circle(mc, false);

    SeparatingCircle sc;
    sc.kind = SeparatorKind::Halfplane;
    sc.radius = std::numeric_limits<double>::infinity();
    if (detail::limit_halfplane(inner, outer, sc.normal, sc.offset)) {
        sc.inner_enclosed = true;
        return sc;
    }
    if (detail::limit_halfplane(outer, inner, sc.normal, sc.offset)) {
        sc.inner_enclosed = false;
        return sc;
    }
    return std::nullopt;
}

SeparatingCircle smallest_separating_circle(std::span<const Point> inner,
                                            std::span<const Point> outer) {
    if (const auto mc = detail::min_separating_circle(inner, outer); mc.feasible) {
        SeparatingCircle sc;
        sc.kind = SeparatorKind::Circle;
        sc.center = mc.center;
        sc.radius = mc.radius;
        sc.inner_enclosed = true;
        return sc;
    }
    SeparatingCircle sc;
    sc.kind = SeparatorKind::Halfplane;
    sc.radius = std::numeric_limits<double>::infinity();
    sc.inner_enclosed = true;
    if (detail::limit_halfplane(inner, outer, sc.normal, sc.offset)) return sc;
    throw NotSeparable("smallest_separating_circle: sets are not separable with inner enclosed");
}

}  // namespace digicurv
