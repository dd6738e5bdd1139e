#include "digicurv/export.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace digicurv {

std::string format_sig(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

const char* method_name(EstimatorMethod m) {
    return m == EstimatorMethod::Mdca ? "mdca" : "lambda-mdca";
}

/// "inf" is not valid JSON; halfplane radii are emitted as strings.
std::string json_number(double v) {
    if (std::isfinite(v)) return format_sig(v);
    return "\"" + format_sig(v) + "\"";
}

void write_spec_json(const GridSpec& spec, std::ostream& out) {
    out << "{\"h\":" << format_sig(spec.h) << ",\"origin\":[" << format_sig(spec.origin.x)
        << "," << format_sig(spec.origin.y) << "],\"width\":" << spec.width
        << ",\"height\":" << spec.height << "}";
}

}  // namespace

void write_pixels_csv(const PixelSet& pixels, std::ostream& out) {
    out << "i,j\n";
    for (const PixelCoord p : pixels.inside_pixels()) out << p.i << "," << p.j << "\n";
}

void write_pixels_json(const PixelSet& pixels, std::ostream& out) {
    out << "{\"spec\":";
    write_spec_json(pixels.spec, out);
    out << ",\"count\":" << pixels.count << ",\"pixels\":[";
    bool first = true;
    for (const PixelCoord p : pixels.inside_pixels()) {
        if (!first) out << ",";
        first = false;
        out << "[" << p.i << "," << p.j << "]";
    }
    out << "]}\n";
}

void write_curve_csv(const DigitalCurve& curve, std::ostream& out) {
    out << "index,vx0,vy0,vx1,vy1,inner_i,inner_j,outer_i,outer_j\n";
    for (int k = 0; k < curve.size(); ++k) {
        const GridEdge& e = curve.edges[k];
        out << k << "," << e.vx0 << "," << e.vy0 << "," << e.vx1 << "," << e.vy1 << ","
            << e.inner.i << "," << e.inner.j << "," << e.outer.i << "," << e.outer.j << "\n";
    }
}

void write_curve_json(const DigitalCurve& curve, std::ostream& out) {
    out << "{\"spec\":";
    write_spec_json(curve.spec, out);
    out << ",\"edges\":[";
    for (int k = 0; k < curve.size(); ++k) {
        const GridEdge& e = curve.edges[k];
        if (k) out << ",";
        out << "{\"v0\":[" << e.vx0 << "," << e.vy0 << "],\"v1\":[" << e.vx1 << ","
            << e.vy1 << "],\"inner\":[" << e.inner.i << "," << e.inner.j << "],\"outer\":["
            << e.outer.i << "," << e.outer.j << "]}";
    }
    out << "]}\n";
}

void write_arcs_csv(const DigitalCurve&, const MdcaSet& arcs, std::ostream& out) {
    out << "index,i,j,n,kind,center_x,center_y,radius,k\n";
    for (std::size_t l = 0; l < arcs.arcs.size(); ++l) {
        const Mdca& a = arcs.arcs[l];
        out << l << "," << a.i << "," << a.j << "," << a.n << ",";
        if (a.circle.kind == SeparatorKind::Circle) {
            out << "circle," << format_sig(a.circle.center.x) << ","
                << format_sig(a.circle.center.y) << "," << format_sig(a.circle.radius);
        } else {
            out << "halfplane,,,inf";
        }
        out << "," << format_sig(a.k) << "\n";
    }
}

void write_arcs_json(const DigitalCurve&, const MdcaSet& arcs, std::ostream& out) {
    out << "{\"curve_size\":" << arcs.curve_size << ",\"arcs\":[";
    for (std::size_t l = 0; l < arcs.arcs.size(); ++l) {
        const Mdca& a = arcs.arcs[l];
        if (l) out << ",";
        out << "{\"i\":" << a.i << ",\"j\":" << a.j << ",\"n\":" << a.n << ",\"kind\":\""
            << (a.circle.kind == SeparatorKind::Circle ? "circle" : "halfplane") << "\"";
        if (a.circle.kind == SeparatorKind::Circle) {
            out << ",\"center\":[" << format_sig(a.circle.center.x) << ","
                << format_sig(a.circle.center.y) << "],\"radius\":"
                << json_number(a.circle.radius);
        }
        out << ",\"k\":" << format_sig(a.k) << "}";
    }
    out << "]}\n";
}

void write_profile_csv(const DigitalCurve& curve, const CurvatureProfile& mdca,
                       const CurvatureProfile& lambda, std::ostream& out) {
    out << "index,mid_x,mid_y,mdca,lambda_mdca\n";
    for (int k = 0; k < curve.size(); ++k) {
        const Point m = curve.edge_midpoint(k);
        out << k << "," << format_sig(m.x) << "," << format_sig(m.y) << ","
            << format_sig(mdca.values[k]) << "," << format_sig(lambda.values[k]) << "\n";
    }
}

void write_profile_json(const DigitalCurve& curve, const CurvatureProfile& mdca,
                        const CurvatureProfile& lambda, std::ostream& out) {
    out << "{\"h\":" << format_sig(curve.spec.h) << ",\"edges\":[";
    for (int k = 0; k < curve.size(); ++k) {
        const Point m = curve.edge_midpoint(k);
        if (k) out << ",";
        out << "{\"index\":" << k << ",\"mid\":[" << format_sig(m.x) << ","
            << format_sig(m.y) << "],\"mdca\":" << format_sig(mdca.values[k])
            << ",\"lambda_mdca\":" << format_sig(lambda.values[k]) << "}";
    }
    out << "]}\n";
}

void write_report_csv(const ErrorReport& report, std::ostream& out) {
    out << "h,eps_av,eps_max,n_edges,n_arcs,excluded_edges\n";
    for (const ErrorRow& r : report.rows) {
        out << format_sig(r.h) << "," << format_sig(r.eps_av) << ","
            << format_sig(r.eps_max) << "," << r.n_edges << "," << r.n_arcs << ","
            << r.excluded_edges << "\n";
    }
}

void write_report_json(const ErrorReport& report, std::ostream& out) {
    out << "{\"shape\":\"" << report.shape << "\",\"method\":\""
        << method_name(report.method) << "\"";
    if (!report.weight_name.empty()) out << ",\"weight\":\"" << report.weight_name << "\"";
    out << ",\"rows\":[";
    for (std::size_t r = 0; r < report.rows.size(); ++r) {
        const ErrorRow& row = report.rows[r];
        if (r) out << ",";
        out << "{\"h\":" << format_sig(row.h) << ",\"eps_av\":" << format_sig(row.eps_av)
            << ",\"eps_max\":" << format_sig(row.eps_max) << ",\"n_edges\":" << row.n_edges
            << ",\"n_arcs\":" << row.n_arcs << ",\"excluded_edges\":" << row.excluded_edges
            << "}";
    }
    out << "]";
    if (report.fit_av) {
        out << ",\"slope_av\":" << format_sig(report.fit_av->slope)
            << ",\"intercept_av\":" << format_sig(report.fit_av->intercept);
    }
    if (report.fit_max) {
        out << ",\"slope_max\":" << format_sig(report.fit_max->slope)
            << ",\"intercept_max\":" << format_sig(report.fit_max->intercept);
    }
    out << "}\n";
}

}  // namespace digicurv
