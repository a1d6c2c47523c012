#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "toric/geometry.hpp"
#include "toric/surgery.hpp"

namespace toric {

enum class SweepOp { Strangulate, Strain };
const char* to_string(SweepOp op);

struct RunConfig {
  std::string command;
  std::string profile;  // file path or family spec
  SweepOp op = SweepOp::Strangulate;
  std::vector<double> eps_grid;
  std::string csv_path;
  std::string svg_path;
  double tol = 1e-9;  // slack for bound comparisons
  int oracle_n = 200;
  std::uint64_t seed = 1;
  int corpus_size = 100;
  double ray_angle = kDiagonal;
  double flatten_radius = 0.0;  // 0: a hundredth of the w1-intercept, used only for curved profiles
};

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct SweepRecord {
  double eps = kNaN;
  double area = kNaN;
  double ruelle = kNaN;
  double t_min = kNaN;
  double sys = kNaN;
  double ru = kNaN;
  double product = kNaN;
  // Strangulation: sys <= 4 eps^2 / Vol(in). Strain: product >= T_min(in) / (6 sqrt(eps) Vol(in)).
  double bound_value = kNaN;
  bool bound_holds = false;
  double volume_delta = kNaN;
  double volume_delta_bound = kNaN;
  // Strangulation: 16 w*^2 theta < Vol(in). Strain: sqrt(eps) < Vol(in).
  bool side_condition = false;
  std::string error;  // error kind when the surgery was rejected at this eps
};

/// One record per eps, sorted by descending eps. Writes CSV/SVG when paths are set.
std::vector<SweepRecord> run_sweep(const RunConfig& config, const MomentProfile& input);
std::vector<SweepRecord> run_sweep(const RunConfig& config);

/// Profile actually fed to the surgery: strain needs a straight piece at (a, 0).
MomentProfile sweep_input(const RunConfig& config, const MomentProfile& input);

std::string sweep_csv(const RunConfig& config, const std::vector<SweepRecord>& rows);
std::string sweep_svg(const std::vector<SweepRecord>& rows);

struct CorpusSummary {
  int monotone_count = 0;
  int convex_count = 0;
  double monotone_min_product = kNaN;
  int monotone_argmin = -1;
  double convex_max_product = kNaN;
  int convex_argmax = -1;
  std::vector<std::string> violations;
  std::vector<double> polydisk_b;
  std::vector<double> polydisk_products;
};

CorpusSummary run_corpus_bounds(const RunConfig& config);
std::string corpus_summary_text(const CorpusSummary& s);

struct FcRecord {
  double c = kNaN;
  double area_closed_form = kNaN;
  double area_quadrature = kNaN;
  double ratio = kNaN;  // c_Gr / Vol with the quadrature area
};

struct FcScanSummary {
  double b = kNaN;
  std::vector<FcRecord> rows;
  double argmax_c = kNaN;
  double max_ratio = kNaN;
};

/// Area of the f_c domain in closed form.
double fc_area_closed_form(double b, double c);

FcScanSummary run_fc_scan(double b, const std::vector<double>& grid, int samples_per_piece = 64);
std::string fc_scan_csv(const FcScanSummary& s);

}  // namespace toric
