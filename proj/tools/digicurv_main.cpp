// Command-line front end: one subcommand per pipeline stage plus the
// multigrid convergence experiment, so every intermediate artifact can be
// inspected and diffed.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "digicurv/errors.hpp"
#include "digicurv/export.hpp"

namespace {

using nlohmann::json;

/// Lets --config point at a flat JSON object whose keys are long option
/// names; values fill in any flag not given on the command line.
class JsonConfig : public CLI::Config {
public:
    std::string to_config(const CLI::App*, bool, bool, std::string) const override {
        return "{}";
    }
    std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
        json doc = json::parse(input);
        if (!doc.is_object()) throw CLI::FileError("config must be a JSON object");
        std::vector<CLI::ConfigItem> items;
        for (const auto& [key, value] : doc.items()) {
            CLI::ConfigItem item;
            item.name = key;
            if (value.is_array()) {
                for (const auto& v : value) item.inputs.push_back(v.dump());
            } else if (value.is_string()) {
                item.inputs.push_back(value.get<std::string>());
            } else {
                item.inputs.push_back(value.dump());
            }
            items.push_back(item);
        }
        return items;
    }
};

struct Options {
    std::string shape_name;
    std::string image_path;
    std::string shape_config;
    double h = 0.25;
    std::string method = "mdca";
    std::string lambda_name = "entropy";
    std::string resolutions;
    std::string output;
    std::string format = "csv";
};

digicurv::ImplicitShape shape_from_polynomial(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw digicurv::ParseError("cannot open shape config '" + path + "'");
    json doc = json::parse(in);
    if (!doc.contains("terms") || !doc["terms"].is_array())
        throw digicurv::ParseError("shape config: missing 'terms' array");

    struct Term {
        int px, py;
        double c;
    };
    std::vector<Term> terms;
    for (const auto& t : doc["terms"]) {
        if (!t.is_array() || t.size() != 3)
            throw digicurv::ParseError("shape config: each term is [x_exp, y_exp, coeff]");
        terms.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<double>()});
    }

    auto power = [](double v, int e) {
        double r = 1.0;
        for (int k = 0; k < e; ++k) r *= v;
        return r;
    };
    digicurv::ImplicitShape s;
    s.name = doc.value("name", std::string("custom"));
    s.extent = doc.value("extent", 10.0);
    s.g = [=](digicurv::Point p) {
        double v = 0.0;
        for (const Term& t : terms) v += t.c * power(p.x, t.px) * power(p.y, t.py);
        return v;
    };
    s.grad = [=](digicurv::Point p) -> digicurv::Vec2 {
        digicurv::Vec2 g{0.0, 0.0};
        for (const Term& t : terms) {
            if (t.px > 0) g.x += t.c * t.px * power(p.x, t.px - 1) * power(p.y, t.py);
            if (t.py > 0) g.y += t.c * t.py * power(p.x, t.px) * power(p.y, t.py - 1);
        }
        return g;
    };
    s.hess = [=](digicurv::Point p) -> std::array<double, 3> {
        std::array<double, 3> h{0.0, 0.0, 0.0};
        for (const Term& t : terms) {
            if (t.px > 1)
                h[0] += t.c * t.px * (t.px - 1) * power(p.x, t.px - 2) * power(p.y, t.py);
            if (t.px > 0 && t.py > 0)
                h[1] += t.c * t.px * t.py * power(p.x, t.px - 1) * power(p.y, t.py - 1);
            if (t.py > 1)
                h[2] += t.c * t.py * (t.py - 1) * power(p.x, t.px) * power(p.y, t.py - 2);
        }
        return h;
    };
    return s;
}

digicurv::ImplicitShape resolve_shape(const Options& opt) {
    if (!opt.shape_name.empty()) {
        const digicurv::ImplicitShape* s = digicurv::find_shape(opt.shape_name);
        if (!s) throw digicurv::Error("unknown shape '" + opt.shape_name + "'");
        return *s;
    }
    return shape_from_polynomial(opt.shape_config);
}

digicurv::PixelSet rasterize_stage(const Options& opt) {
    if (!opt.image_path.empty()) return digicurv::load_binary_image(opt.image_path, opt.h);
    const digicurv::ImplicitShape shape = resolve_shape(opt);
    return digicurv::gauss_discretize(shape, digicurv::grid_for_shape(shape, opt.h));
}

digicurv::WeightFunction resolve_weight(const Options& opt) {
    if (opt.lambda_name == "entropy") return digicurv::WeightFunction::entropy();
    if (opt.lambda_name == "parabola") return digicurv::WeightFunction::parabola();
    throw digicurv::Error("unknown weight function '" + opt.lambda_name + "'");
}

std::vector<double> resolve_resolutions(const Options& opt) {
    if (opt.resolutions.empty()) return digicurv::default_resolutions();
    std::vector<double> hs;
    std::stringstream ss(opt.resolutions);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            hs.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw digicurv::Error("bad resolution value '" + tok + "'");
        }
        if (hs.back() <= 0.0) throw digicurv::Error("resolutions must be positive");
    }
    if (hs.empty()) throw digicurv::Error("empty resolution list");
    return hs;
}

int run_with_output(const Options& opt, const std::function<void(std::ostream&)>& emit) {
    if (opt.output.empty() || opt.output == "-") {
        emit(std::cout);
        return 0;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) {
        std::cerr << "digicurv: cannot open output file '" << opt.output << "'\n";
        return 1;
    }
    emit(out);
    return 0;
}

void add_shape_flags(CLI::App* cmd, Options& opt, bool image_allowed) {
    auto* shape = cmd->add_option("--shape", opt.shape_name, "builtin shape name");
    auto* config =
        cmd->add_option("--shape-config", opt.shape_config, "polynomial shape JSON file");
    shape->excludes(config);
    if (image_allowed) {
        auto* image = cmd->add_option("--image", opt.image_path, "PBM/PGM input image");
        image->excludes(shape);
        image->excludes(config);
    }
}

}  // namespace

int main(int argc, char** argv) {
    using digicurv::EstimatorMethod;

    CLI::App app{"Curvature profiles of digitized planar shapes via maximal "
                 "digital circular arcs"};
    app.set_help_flag("--help", "print help");  // keep -h free for --h
    app.require_subcommand(1);
    app.config_formatter(std::make_shared<JsonConfig>());
    app.set_config("--config", "", "JSON config file with long option names as keys");

    Options opt;

    CLI::App* rasterize = app.add_subcommand("rasterize", "Gauss-discretize a shape or load an image");
    CLI::App* trace = app.add_subcommand("trace", "trace the boundary curve of the rasterization");
    CLI::App* mdca = app.add_subcommand("mdca", "segment the boundary into maximal circular arcs");
    CLI::App* curvature = app.add_subcommand("curvature", "per-edge curvature estimates");
    CLI::App* convergence = app.add_subcommand("convergence", "multigrid convergence experiment");
    for (CLI::App* cmd : {rasterize, trace, mdca, curvature, convergence})
        cmd->set_help_flag("--help", "print help");

    for (CLI::App* cmd : {rasterize, trace, mdca, curvature}) {
        add_shape_flags(cmd, opt, true);
        cmd->add_option("--h", opt.h, "pixel side length")->check(CLI::PositiveNumber);
        cmd->add_option("--output,-o", opt.output, "output file (default stdout)");
        cmd->add_option("--format", opt.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    }
    for (CLI::App* cmd : {curvature, convergence}) {
        cmd->add_option("--method", opt.method, "estimator: mdca or lambda-mdca")
            ->check(CLI::IsMember({"mdca", "lambda-mdca"}));
        cmd->add_option("--lambda", opt.lambda_name, "weight function: entropy or parabola")
            ->check(CLI::IsMember({"entropy", "parabola"}));
    }
    add_shape_flags(convergence, opt, false);
    convergence->add_option("--resolutions", opt.resolutions,
                            "comma-separated pixel sizes (default 2^0..2^-6)");
    convergence->add_option("--output,-o", opt.output, "output file (default stdout)");
    convergence->add_option("--format", opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    if (opt.shape_name.empty() && opt.shape_config.empty() &&
        (convergence->parsed() || opt.image_path.empty())) {
        std::cerr << "digicurv: usage: one of --shape/--image/--shape-config is required\n";
        return 2;
    }

    const bool json_out = opt.format == "json";
    std::string stage = "setup";
    try {
        if (rasterize->parsed()) {
            stage = "rasterize";
            const digicurv::PixelSet px = rasterize_stage(opt);
            return run_with_output(opt, [&](std::ostream& os) {
                json_out ? digicurv::write_pixels_json(px, os)
                         : digicurv::write_pixels_csv(px, os);
            });
        }
        if (trace->parsed()) {
            stage = "rasterize";
            const digicurv::PixelSet px = rasterize_stage(opt);
            stage = "trace";
            const digicurv::DigitalCurve curve = digicurv::trace_boundary(px);
            return run_with_output(opt, [&](std::ostream& os) {
                json_out ? digicurv::write_curve_json(curve, os)
                         : digicurv::write_curve_csv(curve, os);
            });
        }
        if (mdca->parsed()) {
            stage = "rasterize";
            const digicurv::PixelSet px = rasterize_stage(opt);
            stage = "trace";
            const digicurv::DigitalCurve curve = digicurv::trace_boundary(px);
            stage = "mdca";
            const digicurv::MdcaSet arcs = digicurv::compute_mdcas(curve);
            return run_with_output(opt, [&](std::ostream& os) {
                json_out ? digicurv::write_arcs_json(curve, arcs, os)
                         : digicurv::write_arcs_csv(curve, arcs, os);
            });
        }
        if (curvature->parsed()) {
            stage = "rasterize";
            const digicurv::PixelSet px = rasterize_stage(opt);
            stage = "trace";
            const digicurv::DigitalCurve curve = digicurv::trace_boundary(px);
            stage = "mdca";
            const digicurv::MdcaSet arcs = digicurv::compute_mdcas(curve);
            stage = "estimate";
            const digicurv::CurvatureProfile pm = digicurv::mdca_estimate(curve, arcs);
            const digicurv::CurvatureProfile pl =
                digicurv::lambda_mdca_estimate(curve, arcs, resolve_weight(opt));
            return run_with_output(opt, [&](std::ostream& os) {
                json_out ? digicurv::write_profile_json(curve, pm, pl, os)
                         : digicurv::write_profile_csv(curve, pm, pl, os);
            });
        }
        // convergence
        stage = "convergence";
        const digicurv::ImplicitShape shape = resolve_shape(opt);
        const EstimatorMethod method = opt.method == "mdca" ? EstimatorMethod::Mdca
                                                            : EstimatorMethod::LambdaMdca;
        const digicurv::ErrorReport report = digicurv::run_experiment(
            shape, method, resolve_weight(opt), resolve_resolutions(opt));
        return run_with_output(opt, [&](std::ostream& os) {
            json_out ? digicurv::write_report_json(report, os)
                     : digicurv::write_report_csv(report, os);
        });
    } catch (const digicurv::Error& e) {
        std::cerr << "digicurv: " << stage << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "digicurv: " << stage << ": " << e.what() << "\n";
        return 1;
    }
}
