#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "digicurv/estimator.hpp"
#include "digicurv/groundtruth.hpp"

namespace digicurv {

struct ErrorRow {
    double h = 1.0;
    double eps_av = 0.0;
    double eps_max = 0.0;
    int n_edges = 0;
    int n_arcs = 0;
    int excluded_edges = 0;  // edges skipped at singular boundary points
};

struct RegressionLine {
    double slope = 0.0;
    double intercept = 0.0;  // natural-log intercept: log(eps) = slope*log(h) + intercept
};

/// Multigrid convergence report for one shape and estimator.
struct ErrorReport {
    std::string shape;
    EstimatorMethod method = EstimatorMethod::Mdca;
    std::string weight_name;  // empty for the plain MDCA estimator
    std::vector<ErrorRow> rows;
    std::optional<RegressionLine> fit_av;
    std::optional<RegressionLine> fit_max;
};

/// Absolute error at edge k: |kappa(X, p') - estimate|, where p' is the
/// boundary point nearest to the edge midpoint. Propagates SingularPoint
/// (the caller excludes such edges from the statistics).
double absolute_error(const ImplicitShape& shape, const BoundarySampler& sampler,
                      const DigitalCurve& curve, const CurvatureProfile& profile, int k);

/// Mean and maximum of the per-edge errors. Throws EmptyProfile when empty.
std::pair<double, double> aggregate_errors(std::span<const double> errors);

/// Least-squares fit of log(eps) against log(h). Throws InsufficientData
/// (< 3 rows or degenerate h values) and NonpositiveError (eps <= 0).
RegressionLine convergence_rate(std::span<const std::pair<double, double>> rows);

/// h = 2^-n for n = 0..6.
std::vector<double> default_resolutions();

/// Full experiment: per resolution, rasterize / trace / segment / estimate /
/// compare against ground truth; then fit the convergence rates (when at
/// least 3 rows are available). Pipeline errors are rethrown with the
/// offending h named.
ErrorReport run_experiment(const ImplicitShape& shape, EstimatorMethod method,
                           const WeightFunction& weight,
                           std::span<const double> resolutions);

}  // namespace digicurv
