#pragma once

#include <string>
#include <vector>

#include "toric/geometry.hpp"
#include "toric/surgery.hpp"

namespace toric {

struct SvgOverlay {
  std::string name;  // emitted as the element's class
  std::vector<Point> points;
  bool closed = true;  // polygon when closed, polyline otherwise
  std::string color = "#d62728";
};

/// Removed sector of a strangulation, truncated at distance `length` from the apex.
SvgOverlay sector_overlay(const StrangulationSpec& s, double length);
/// Triangle (0,0), (eps/k + a, eps), (1/sqrt(eps), 0) added by a strain.
SvgOverlay triangle_overlay(const StrainSpec& s);
/// The extremal boundary w2 = f_c(w1), sampled in mu.
SvgOverlay gc_overlay(double b, double c, int samples = 64);

std::string profile_svg(const MomentProfile& p, const std::vector<SvgOverlay>& overlays = {});
void emit_profile_svg(const MomentProfile& p, const std::string& path,
                      const std::vector<SvgOverlay>& overlays = {});

struct SvgSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

/// Log-log line plot; non-positive values are skipped.
std::string loglog_svg(const std::vector<SvgSeries>& series, const std::string& x_label,
                       const std::string& y_label);

}  // namespace toric
