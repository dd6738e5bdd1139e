#include "digicurv/estimator.hpp"

#include <cmath>

#include "digicurv/errors.hpp"

namespace digicurv {

WeightFunction WeightFunction::entropy() {
    return {"entropy", [](double t) {
                auto part = [](double u) { return u > 0.0 ? -u * std::log(u) : 0.0; };
                return part(t) + part(1.0 - t);
            }};
}

WeightFunction WeightFunction::parabola() {
    return {"parabola", [](double t) { return 4.0 * t * (1.0 - t); }};
}

int central_edge(const Mdca& arc, int curve_size) {
    const int span = arc.n - 1;
    return (arc.i + (span + 1) / 2) % curve_size;
}

double eccentricity(const Mdca& arc, int k, int curve_size) {
    const int offset = ((k - arc.i) % curve_size + curve_size) % curve_size;
    const int span = arc.n - 1;
    if (offset > span) throw EdgeNotOnArc("eccentricity: edge is not on the arc");
    if (span == 0) return 0.0;
    return static_cast<double>(offset) / span;
}

namespace {

/// Index of the arc whose central edge is nearest to edge k; arcs are
/// ordered by initial edge, so a strict comparison realizes the tie rule.
int nearest_arc(const DigitalCurve& curve, const MdcaSet& arcs,
                const std::vector<int>& centrals, int k) {
    int best = 0;
    int best_d = curve.size();
    for (std::size_t l = 0; l < arcs.arcs.size(); ++l) {
        const int d = edge_distance(curve, k, centrals[l]);
        if (d < best_d) {
            best_d = d;
            best = static_cast<int>(l);
        }
    }
    return best;
}

std::vector<int> central_edges(const MdcaSet& arcs, int n) {
    std::vector<int> centrals;
    centrals.reserve(arcs.arcs.size());
    for (const Mdca& a : arcs.arcs) centrals.push_back(central_edge(a, n));
    return centrals;
}

}  // namespace

CurvatureProfile mdca_estimate(const DigitalCurve& curve, const MdcaSet& arcs) {
    const int n = curve.size();
    const auto centrals = central_edges(arcs, n);
    CurvatureProfile profile;
    profile.method = EstimatorMethod::Mdca;
    profile.h = curve.spec.h;
    profile.values.resize(n);
    for (int k = 0; k < n; ++k)
        profile.values[k] = arcs.arcs[nearest_arc(curve, arcs, centrals, k)].k;
    return profile;
}

CurvatureProfile lambda_mdca_estimate(const DigitalCurve& curve, const MdcaSet& arcs,
                                      const WeightFunction& weight) {
    const int n = curve.size();
    const auto centrals = central_edges(arcs, n);
    CurvatureProfile profile;
    profile.method = EstimatorMethod::LambdaMdca;
    profile.h = curve.spec.h;
    profile.values.resize(n);
    for (int k = 0; k < n; ++k) {
        double wsum = 0.0, vsum = 0.0;
        for (const Mdca& a : arcs.arcs) {
            if (!a.contains(k, n)) continue;
            const double w = weight.value(eccentricity(a, k, n));
            wsum += w;
            vsum += w * a.k;
        }
        profile.values[k] = wsum > 0.0
                                ? vsum / wsum
                                : arcs.arcs[nearest_arc(curve, arcs, centrals, k)].k;
    }
    return profile;
}

}  // namespace digicurv
