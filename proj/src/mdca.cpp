#include "digicurv/mdca.hpp"

#include <map>

#include "digicurv/errors.hpp"

namespace digicurv {

namespace {

/// Deduplicated inner/outer pixel centers of a window of curve edges, with
/// multiplicity counts so edges can be removed from the front.
class WindowPoints {
public:
    explicit WindowPoints(const DigitalCurve& curve) : curve_(curve) {}

    void add(int edge) {
        const int k = wrap(edge);
        bump(inner_, curve_.edges[k].inner, +1);
        bump(outer_, curve_.edges[k].outer, +1);
        dirty_ = true;
    }
    void remove(int edge) {
        const int k = wrap(edge);
        bump(inner_, curve_.edges[k].inner, -1);
        bump(outer_, curve_.edges[k].outer, -1);
        dirty_ = true;
    }

    const std::vector<Point>& inner_points() { refresh(); return inner_pts_; }
    const std::vector<Point>& outer_points() { refresh(); return outer_pts_; }

private:
    int wrap(int edge) const {
        const int n = curve_.size();
        return (edge % n + n) % n;
    }
    static void bump(std::map<PixelCoord, int>& m, PixelCoord p, int d) {
        const int c = (m[p] += d);
        if (c == 0) m.erase(p);
    }
    void refresh() {
        if (!dirty_) return;
        inner_pts_.clear();
        outer_pts_.clear();
        for (const auto& [p, c] : inner_) inner_pts_.push_back(curve_.spec.grid_point(p));
        for (const auto& [p, c] : outer_) outer_pts_.push_back(curve_.spec.grid_point(p));
        dirty_ = false;
    }

    const DigitalCurve& curve_;
    std::map<PixelCoord, int> inner_, outer_;
    std::vector<Point> inner_pts_, outer_pts_;
    bool dirty_ = true;
};

/// Separability test over the current window, keeping warm starts for both
/// orientations across successive windows.
struct SeparabilityProbe {
    detail::MinCircle warm_inner;  // inner pixels enclosed
    detail::MinCircle warm_outer;  // outer pixels enclosed

    bool separable(WindowPoints& w) {
        auto r = detail::min_separating_circle(w.inner_points(), w.outer_points(),
                                               warm_inner.feasible ? &warm_inner : nullptr);
        if (r.feasible) {
            warm_inner = std::move(r);
            return true;
        }
        auto s = detail::min_separating_circle(w.outer_points(), w.inner_points(),
                                               warm_outer.feasible ? &warm_outer : nullptr);
        if (s.feasible) {
            warm_outer = std::move(s);
            return true;
        }
        return false;
    }
};

/// Smallest separating circle of an arc: the feasible orientation with the
/// smaller radius wins. Concave boundary pieces separate only with the
/// outer pixels enclosed, mirroring the inverse parametrization of concave
/// runs; the reported curvature is the magnitude either way.
SeparatingCircle best_arc_circle(WindowPoints& w) {
    const auto in = detail::min_separating_circle(w.inner_points(), w.outer_points());
    const auto out = detail::min_separating_circle(w.outer_points(), w.inner_points());
    if (!in.feasible && !out.feasible)
        throw NotSeparable("mdca: arc window lost separability");
    const bool use_inner = in.feasible && (!out.feasible || in.radius <= out.radius);
    const auto& mc = use_inner ? in : out;
    SeparatingCircle sc;
    sc.kind = SeparatorKind::Circle;
    sc.center = mc.center;
    sc.radius = mc.radius;
    sc.inner_enclosed = use_inner;
    return sc;
}

double discrete_curvature(const SeparatingCircle& sc) {
    if (sc.kind == SeparatorKind::Halfplane) return 0.0;
    if (sc.radius <= 0.0)
        throw NotSeparable("mdca: degenerate zero-radius arc circle");
    return 1.0 / sc.radius;
}

}  // namespace

bool is_dca(const DigitalCurve& curve, int i, int j) {
    const int n = curve.size();
    if (i < 0 || j < 0 || i >= n || j >= n)
        throw IndexOutOfRange("is_dca: edge index out of range");
    WindowPoints w(curve);
    const int span = ((j - i) % n + n) % n;
    for (int k = 0; k <= span; ++k) w.add(i + k);
    SeparabilityProbe probe;
    return probe.separable(w);
}

MdcaSet compute_mdcas(const DigitalCurve& curve) {
    const int n = curve.size();
    if (n < 4) throw DegenerateCurve("compute_mdcas: curve has fewer than 4 edges");

    MdcaSet set;
    set.curve_size = n;

    // Whole curve one arc (coarse digitizations of near-circular shapes).
    {
        WindowPoints all(curve);
        for (int k = 0; k < n; ++k) all.add(k);
        SeparabilityProbe probe;
        if (probe.separable(all)) {
            Mdca arc;
            arc.i = 0;
            arc.j = n - 1;
            arc.n = n;
            arc.circle = best_arc_circle(all);
            arc.k = discrete_curvature(arc.circle);
            set.arcs.push_back(arc);
            return set;
        }
    }

    // J[i] = furthest absolute end index with [i..J[i]] separable, capped at
    // i + n - 2 (whole curve minus one edge).
    std::vector<long> far_end(n);
    WindowPoints window(curve);
    SeparabilityProbe probe;
    long hi = -1;
    for (int i = 0; i < n; ++i) {
        if (hi < i) {
            hi = i;
            window.add(i);
        }
        while (hi - i < n - 2) {
            window.add(hi + 1);
            if (probe.separable(window)) {
                ++hi;
            } else {
                window.remove(hi + 1);
                break;
            }
        }
        far_end[i] = hi;
        window.remove(i);
    }

    for (int i = 0; i < n; ++i) {
        const long prev = i == 0 ? far_end[n - 1] - n : far_end[i - 1];
        if (far_end[i] <= prev) continue;
        Mdca arc;
        arc.i = i;
        arc.j = static_cast<int>(far_end[i] % n);
        arc.n = static_cast<int>(far_end[i] - i + 1);
        WindowPoints w(curve);
        for (long k = i; k <= far_end[i]; ++k) w.add(static_cast<int>(k));
        arc.circle = best_arc_circle(w);
        arc.k = discrete_curvature(arc.circle);
        set.arcs.push_back(arc);
    }
    return set;
}

}  // namespace digicurv
