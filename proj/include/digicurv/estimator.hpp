#pragma once

#include <functional>
#include <string>
#include <vector>

#include "digicurv/mdca.hpp"

namespace digicurv {

enum class EstimatorMethod { Mdca, LambdaMdca };

/// Per-edge curvature estimates along a curve (units 1/length, nonnegative).
struct CurvatureProfile {
    EstimatorMethod method = EstimatorMethod::Mdca;
    double h = 1.0;
    std::vector<double> values;  // one per curve edge
};

/// Eccentricity weight: concave on [0,1], zero at the endpoints, maximal
/// at 1/2. Estimates are invariant under positive scaling of the weight.
struct WeightFunction {
    std::string name;
    std::function<double(double)> value;

    /// -t log t - (1-t) log(1-t), with 0 log 0 = 0. The default weight.
    static WeightFunction entropy();
    /// 4 t (1-t).
    static WeightFunction parabola();
};

/// Index of the middle edge of an arc: (i + ceil(span/2)) mod N.
int central_edge(const Mdca& arc, int curve_size);

/// Relative position of edge k within the arc: 0 at the initial edge, 1 at
/// the terminal edge, linear in cyclic position. A single-edge arc yields 0.
/// Throws EdgeNotOnArc when k is outside the arc's cyclic range.
double eccentricity(const Mdca& arc, int k, int curve_size);

/// Piecewise-constant estimator: each edge takes the discrete curvature of
/// the arc whose central edge is nearest in cyclic edge distance; ties go
/// to the arc with the smaller initial index.
CurvatureProfile mdca_estimate(const DigitalCurve& curve, const MdcaSet& arcs);

/// Eccentricity-weighted estimator: each edge takes the weighted mean of
/// the discrete curvatures of all arcs containing it. If every containing
/// arc has weight zero there (eccentricity exactly 0 or 1), the edge falls
/// back to its nearest-central-edge value.
CurvatureProfile lambda_mdca_estimate(const DigitalCurve& curve, const MdcaSet& arcs,
                                      const WeightFunction& weight);

}  // namespace digicurv
