#include "toric/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "toric/corpus.hpp"
#include "toric/format.hpp"
#include "toric/invariants.hpp"
#include "toric/io.hpp"
#include "toric/svg.hpp"

namespace toric {

const char* to_string(SweepOp op) { return op == SweepOp::Strain ? "strain" : "strangulate"; }

MomentProfile sweep_input(const RunConfig& config, const MomentProfile& input) {
  if (config.op != SweepOp::Strain || input.tag(0).kind == CurveKind::Line) return input;
  const double r = config.flatten_radius > 0.0 ? config.flatten_radius : 0.01 * input.a_intercept();
  return flatten_near_intercept(input, r).profile;
}

std::vector<SweepRecord> run_sweep(const RunConfig& config, const MomentProfile& input) {
  const MomentProfile base = sweep_input(config, input);
  const double vol_in = area(base);
  const double t_in = config.op == SweepOp::Strain ? t_min(base).action : kNaN;

  std::vector<double> grid = config.eps_grid;
  std::sort(grid.begin(), grid.end(), std::greater<>());
  std::vector<SweepRecord> rows(grid.size());
  const auto n = static_cast<long long>(grid.size());

#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i) {
    SweepRecord& row = rows[static_cast<std::size_t>(i)];
    row.eps = grid[static_cast<std::size_t>(i)];
    try {
      const SurgeryOutcome o = config.op == SweepOp::Strain ? strain(base, row.eps)
                                                            : strangulate(base, row.eps, config.ray_angle);
      const InvariantReport r = report(o.profile);
      row.area = r.area;
      row.ruelle = r.ruelle;
      row.t_min = r.t_min;
      row.sys = r.sys;
      row.ru = r.ru;
      row.product = r.product;
      row.volume_delta = o.volume_delta;
      row.volume_delta_bound = o.volume_delta_bound;
      if (config.op == SweepOp::Strain) {
        row.bound_value = t_in / (6.0 * std::sqrt(row.eps) * vol_in);
        row.bound_holds = row.product >= row.bound_value - config.tol;
        row.side_condition = std::sqrt(row.eps) < vol_in;
      } else {
        const auto& g = *o.strangulation;
        row.bound_value = 4.0 * row.eps * row.eps / vol_in;
        row.bound_holds = row.sys <= row.bound_value + config.tol;
        row.side_condition = 16.0 * g.w_star * g.w_star * g.theta < vol_in;
      }
    } catch (const Error& e) {
      row.error = to_string(e.kind());
    }
  }

  if (!config.csv_path.empty()) write_text_file(config.csv_path, sweep_csv(config, rows));
  if (!config.svg_path.empty()) write_text_file(config.svg_path, sweep_svg(rows));
  return rows;
}

std::vector<SweepRecord> run_sweep(const RunConfig& config) {
  return run_sweep(config, resolve_profile(config.profile));
}

std::string sweep_csv(const RunConfig& config, const std::vector<SweepRecord>& rows) {
  std::ostringstream os;
  os << "#schema=1 op=" << to_string(config.op) << " profile=" << config.profile << '\n';
  os << "eps,area,ruelle,t_min,sys,ru,product,bound_value,bound_holds,volume_delta,volume_delta_bound,"
        "side_condition,error\n";
  for (const SweepRecord& r : rows)
    os << fmt17(r.eps) << ',' << fmt17(r.area) << ',' << fmt17(r.ruelle) << ',' << fmt17(r.t_min) << ','
       << fmt17(r.sys) << ',' << fmt17(r.ru) << ',' << fmt17(r.product) << ',' << fmt17(r.bound_value) << ','
       << r.bound_holds << ',' << fmt17(r.volume_delta) << ',' << fmt17(r.volume_delta_bound) << ','
       << r.side_condition << ',' << r.error << '\n';
  return os.str();
}

std::string sweep_svg(const std::vector<SweepRecord>& rows) {
  SvgSeries product{"product", {}, {}};
  for (const SweepRecord& r : rows) {
    if (!r.error.empty()) continue;
    product.x.push_back(r.eps);
    product.y.push_back(r.product);
  }
  return loglog_svg({product}, "eps", "ru*sys^1/2");
}

CorpusSummary run_corpus_bounds(const RunConfig& config) {
  CorpusSummary s;
  const auto mono = monotone_corpus(config.seed, config.corpus_size);
  const auto conv = convex4d_corpus(config.seed ^ 0x9e3779b97f4a7c15ULL, config.corpus_size);
  const auto rm = batch_reports_parallel(mono);
  const auto rc = batch_reports_parallel(conv);

  s.monotone_count = static_cast<int>(rm.size());
  s.convex_count = static_cast<int>(rc.size());
  for (std::size_t i = 0; i < rm.size(); ++i) {
    if (!rm[i].classification.monotone.value) s.violations.push_back("monotone corpus #" + std::to_string(i) + ": generator produced a non-monotone profile");
    if (s.monotone_argmin < 0 || rm[i].product < s.monotone_min_product) {
      s.monotone_min_product = rm[i].product;
      s.monotone_argmin = static_cast<int>(i);
    }
    if (rm[i].product < kDefaultLowerThreshold - config.tol)
      s.violations.push_back("monotone corpus #" + std::to_string(i) + ": product " + fmt17(rm[i].product) + " < 1/2");
  }
  for (std::size_t i = 0; i < rc.size(); ++i) {
    const auto& c = rc[i].classification;
    if (!c.monotone.value || !c.convex_4d.value)
      s.violations.push_back("convex corpus #" + std::to_string(i) + ": generator produced a non-convex profile");
    if (s.convex_argmax < 0 || rc[i].product > s.convex_max_product) {
      s.convex_max_product = rc[i].product;
      s.convex_argmax = static_cast<int>(i);
    }
    if (rc[i].product > kDefaultUpperThreshold + config.tol)
      s.violations.push_back("convex corpus #" + std::to_string(i) + ": product " + fmt17(rc[i].product) + " > 3");
  }
  for (double b : {1.0, 10.0, 100.0, 1000.0}) {
    s.polydisk_b.push_back(b);
    s.polydisk_products.push_back(report(polydisk(1.0, b)).product);
  }
  return s;
}

std::string corpus_summary_text(const CorpusSummary& s) {
  std::ostringstream os;
  os << "monotone_count=" << s.monotone_count << "\nmonotone_min_product=" << fmt17(s.monotone_min_product)
     << "\nmonotone_argmin=" << s.monotone_argmin << "\nconvex_count=" << s.convex_count
     << "\nconvex_max_product=" << fmt17(s.convex_max_product) << "\nconvex_argmax=" << s.convex_argmax << '\n';
  for (std::size_t i = 0; i < s.polydisk_b.size(); ++i)
    os << "polydisk_product[b=" << s.polydisk_b[i] << "]=" << fmt17(s.polydisk_products[i]) << '\n';
  os << "violations=" << s.violations.size() << '\n';
  for (const auto& v : s.violations) os << "violation: " << v << '\n';
  return os.str();
}

double fc_area_closed_form(double b, double c) {
  return c * c / 2.0 + (b - c) * (b - c) * c / (6.0 * b) + c * (1.0 - c) * (1.0 - c) / 6.0;
}

FcScanSummary run_fc_scan(double b, const std::vector<double>& grid, int samples_per_piece) {
  FcScanSummary s;
  s.b = b;
  s.rows.resize(grid.size());
  // Validate up front so a bad grid point is reported before any work.
  for (double c : grid) fc_domain(b, c, 2);
  const auto n = static_cast<long long>(grid.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i) {
    FcRecord& r = s.rows[static_cast<std::size_t>(i)];
    r.c = grid[static_cast<std::size_t>(i)];
    const MomentProfile p = fc_domain(b, r.c, samples_per_piece);
    r.area_closed_form = fc_area_closed_form(b, r.c);
    r.area_quadrature = area(p);
    r.ratio = gromov_width_monotone(p) / r.area_quadrature;
  }
  for (const FcRecord& r : s.rows)
    if (!(s.max_ratio >= r.ratio)) {
      s.max_ratio = r.ratio;
      s.argmax_c = r.c;
    }
  return s;
}

std::string fc_scan_csv(const FcScanSummary& s) {
  std::ostringstream os;
  os << "#schema=1 fc_scan b=" << fmt17(s.b) << '\n' << "c,area_closed_form,area_quadrature,ratio\n";
  for (const FcRecord& r : s.rows)
    os << fmt17(r.c) << ',' << fmt17(r.area_closed_form) << ',' << fmt17(r.area_quadrature) << ','
       << fmt17(r.ratio) << '\n';
  return os.str();
}

}  // namespace toric
