#pragma once

#include <iosfwd>
#include <string>

#include "digicurv/harness.hpp"

namespace digicurv {

/// Fixed 12-significant-digit float formatting; used by every writer so
/// that output files are byte-identical across runs.
std::string format_sig(double v);

void write_pixels_csv(const PixelSet& pixels, std::ostream& out);
void write_pixels_json(const PixelSet& pixels, std::ostream& out);

void write_curve_csv(const DigitalCurve& curve, std::ostream& out);
void write_curve_json(const DigitalCurve& curve, std::ostream& out);

void write_arcs_csv(const DigitalCurve& curve, const MdcaSet& arcs, std::ostream& out);
void write_arcs_json(const DigitalCurve& curve, const MdcaSet& arcs, std::ostream& out);

void write_profile_csv(const DigitalCurve& curve, const CurvatureProfile& mdca,
                       const CurvatureProfile& lambda, std::ostream& out);
void write_profile_json(const DigitalCurve& curve, const CurvatureProfile& mdca,
                        const CurvatureProfile& lambda, std::ostream& out);

void write_report_csv(const ErrorReport& report, std::ostream& out);
void write_report_json(const ErrorReport& report, std::ostream& out);

}  // namespace digicurv
