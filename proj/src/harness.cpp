#include "digicurv/harness.hpp"

#include <cmath>
#include <sstream>

#include "digicurv/errors.hpp"

namespace digicurv {

double absolute_error(const ImplicitShape& shape, const BoundarySampler& sampler,
                      const DigitalCurve& curve, const CurvatureProfile& profile, int k) {
    const Point nearest = sampler.nearest(curve.edge_midpoint(k));
    const double truth = implicit_curvature(shape, nearest);
    return std::abs(truth - profile.values[k]);
}

std::pair<double, double> aggregate_errors(std::span<const double> errors) {
    if (errors.empty()) throw EmptyProfile("aggregate_errors: no included edges");
    double sum = 0.0, mx = 0.0;
    for (const double e : errors) {
        sum += e;
        mx = std::max(mx, e);
    }
    return {sum / static_cast<double>(errors.size()), mx};
}

RegressionLine convergence_rate(std::span<const std::pair<double, double>> rows) {
    if (rows.size() < 3) throw InsufficientData("convergence_rate: need at least 3 rows");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& [h, eps] : rows) {
        if (!(eps > 0.0)) throw NonpositiveError("convergence_rate: error must be positive");
        if (!(h > 0.0)) throw InsufficientData("convergence_rate: h must be positive");
        const double x = std::log(h), y = std::log(eps);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(rows.size());
    const double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-12)
        throw InsufficientData("convergence_rate: resolutions are not distinct");
    RegressionLine fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    return fit;
}

std::vector<double> default_resolutions() {
    std::vector<double> hs;
    for (int n = 0; n <= 6; ++n) hs.push_back(std::ldexp(1.0, -n));
    return hs;
}

ErrorReport run_experiment(const ImplicitShape& shape, EstimatorMethod method,
                           const WeightFunction& weight,
                           std::span<const double> resolutions) {
    ErrorReport report;
    report.shape = shape.name;
    report.method = method;
    if (method == EstimatorMethod::LambdaMdca) report.weight_name = weight.name;

    for (const double h : resolutions) {
        try {
            const GridSpec spec = grid_for_shape(shape, h);
            const PixelSet pixels = gauss_discretize(shape, spec);
            const DigitalCurve curve = trace_boundary(pixels);
            const MdcaSet arcs = compute_mdcas(curve);
            const CurvatureProfile profile =
                method == EstimatorMethod::Mdca
                    ? mdca_estimate(curve, arcs)
                    : lambda_mdca_estimate(curve, arcs, weight);
            const BoundarySampler sampler(shape, h / 4.0);

            std::vector<double> errors;
            errors.reserve(curve.size());
            int excluded = 0;
            for (int k = 0; k < curve.size(); ++k) {
                try {
                    errors.push_back(absolute_error(shape, sampler, curve, profile, k));
                } catch (const SingularPoint&) {
                    ++excluded;
                }
            }
            const auto [av, mx] = aggregate_errors(errors);
            report.rows.push_back({h, av, mx, curve.size(),
                                   static_cast<int>(arcs.arcs.size()), excluded});
        } catch (const Error& e) {
            std::ostringstream msg;
            msg << "h=" << h << ": " << e.what();
            throw Error(msg.str());
        }
    }

    if (report.rows.size() >= 3) {
        std::vector<std::pair<double, double>> av, mx;
        for (const ErrorRow& r : report.rows) {
            av.emplace_back(r.h, r.eps_av);
            mx.emplace_back(r.h, r.eps_max);
        }
        report.fit_av = convergence_rate(av);
        report.fit_max = convergence_rate(mx);
    }
    return report;
}

}  // namespace digicurv
