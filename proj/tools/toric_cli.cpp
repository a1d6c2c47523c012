#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include "toric/experiments.hpp"
#include "toric/format.hpp"
#include "toric/invariants.hpp"
#include "toric/io.hpp"
#include "toric/reeb.hpp"
#include "toric/surgery.hpp"
#include "toric/svg.hpp"

using namespace toric;

namespace {

constexpr int kOk = 0;
constexpr int kValidation = 2;
constexpr int kFinding = 3;

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) std::cout << text;
  else write_text_file(path, text);
}

std::string flags_text(const Classification& c) {
  std::string out;
  auto line = [&](const char* name, const Flag& f) {
    out += std::string(name) + '=' + (f.value ? "true" : "false");
    if (!f.value) out += " witness=" + std::to_string(f.witness) + (f.detail.empty() ? "" : " (" + f.detail + ")");
    out += '\n';
  };
  line("star_shaped", c.star_shaped);
  line("monotone", c.monotone);
  line("strictly_monotone", c.strictly_monotone);
  line("convex_4d", c.convex_4d);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ruelle invariant, systolic ratio and surgeries of star-shaped toric domains"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string csv_path, svg_path;
  double tol = 1e-9;
  int oracle_n = 200;
  app.add_option("--csv", csv_path, "write tabular output to this path");
  app.add_option("--svg", svg_path, "write a figure to this path");
  app.add_option("--tol", tol, "slack for bound comparisons")->check(CLI::PositiveNumber);
  app.add_option("--oracle-n", oracle_n, "box size of the brute-force T_min oracle")->check(CLI::PositiveNumber);

  std::string profile_arg;
  const std::string profile_help = "profile file or family spec (ellipsoid:1,4 ball:2 polydisk:1,2 fc:1,0.5,32)";

  auto* classify_cmd = app.add_subcommand("classify", "star-shaped / monotone / convex flags");
  classify_cmd->add_option("profile", profile_arg, profile_help)->required();

  auto* inv_cmd = app.add_subcommand("invariants", "area, Ruelle invariant, T_min and the ratios");
  inv_cmd->add_option("profile", profile_arg, profile_help)->required();

  double cutoff = 0.0;
  auto* orbits_cmd = app.add_subcommand("orbits", "closed Reeb orbits up to an action cutoff");
  orbits_cmd->add_option("profile", profile_arg, profile_help)->required();
  orbits_cmd->add_option("--cutoff", cutoff, "action cutoff")->required();

  std::string method = "fast";
  auto* tmin_cmd = app.add_subcommand("tmin", "minimal action of a closed Reeb orbit");
  tmin_cmd->add_option("profile", profile_arg, profile_help)->required();
  tmin_cmd->add_option("--method", method)->check(CLI::IsMember({"fast", "oracle"}));

  double eps = 0.0, ray = kDiagonal, flatten_radius = 0.0;
  std::string out_path;
  auto* strang_cmd = app.add_subcommand("strangulate", "remove a thin sector along a ray");
  strang_cmd->add_option("profile", profile_arg, profile_help)->required();
  strang_cmd->add_option("--eps", eps)->required();
  strang_cmd->add_option("--ray", ray, "ray angle in radians");
  strang_cmd->add_option("--out", out_path, "write the new profile here");

  auto* strain_cmd = app.add_subcommand("strain", "attach a thin spike at the w1-intercept");
  strain_cmd->add_option("profile", profile_arg, profile_help)->required();
  strain_cmd->add_option("--eps", eps)->required();
  strain_cmd->add_option("--flatten-radius", flatten_radius, "chord radius used when the profile is curved at (a,0)");
  strain_cmd->add_option("--out", out_path, "write the new profile here");

  std::string op = "strangulate";
  std::vector<double> eps_grid;
  auto* sweep_cmd = app.add_subcommand("sweep", "invariants of a surgery over a grid of eps");
  sweep_cmd->add_option("--op", op)->check(CLI::IsMember({"strangulate", "strain"}));
  sweep_cmd->add_option("--profile", profile_arg, profile_help)->required();
  sweep_cmd->add_option("--eps-grid", eps_grid)->expected(0, -1);
  sweep_cmd->add_option("--ray", ray, "ray angle in radians");
  sweep_cmd->add_option("--flatten-radius", flatten_radius);

  int corpus = 100;
  std::uint64_t seed = 1;
  auto* bounds_cmd = app.add_subcommand("bounds", "product bounds on seeded random corpora");
  bounds_cmd->add_option("--corpus", corpus)->check(CLI::PositiveNumber);
  bounds_cmd->add_option("--seed", seed);

  double b = 1.0;
  std::vector<double> grid;
  auto* fc_cmd = app.add_subcommand("fc-scan", "c_Gr/Vol over the extremal f_c family");
  fc_cmd->add_option("--b", b)->required();
  fc_cmd->add_option("--grid", grid)->required()->expected(1, -1);

  int panels = 8;
  auto* ruelle_cmd = app.add_subcommand("verify-ruelle", "Ruelle invariant by quadrature against a + b");
  ruelle_cmd->add_option("profile", profile_arg, profile_help)->required();
  ruelle_cmd->add_option("--n", panels, "Gauss-Legendre panels per curved segment");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kValidation;
  }

  try {
    if (*classify_cmd) {
      std::cout << flags_text(classify(resolve_profile(profile_arg)));
    } else if (*inv_cmd) {
      const MomentProfile p = resolve_profile(profile_arg);
      const InvariantReport r = report(p);
      std::cout << report_key_value(r);
      if (!csv_path.empty()) write_text_file(csv_path, report_csv_header() + "\n" + report_csv_row(r) + "\n");
      if (!svg_path.empty()) emit_profile_svg(p, svg_path);
    } else if (*orbits_cmd) {
      emit(orbits_csv(enumerate_orbits(resolve_profile(profile_arg), cutoff)), csv_path);
    } else if (*tmin_cmd) {
      const TminResult r = t_min(resolve_profile(profile_arg),
                                 method == "oracle" ? TminMethod::Oracle : TminMethod::Fast, oracle_n);
      std::cout << "t_min=" << fmt17(r.action) << "\nwitness=" << r.witness.mn.m << ',' << r.witness.mn.n
                << "\nlocation=" << to_string(r.witness.location_kind) << ' ' << r.witness.location_index
                << "\nnodes_visited=" << r.nodes_visited << '\n';
    } else if (*strang_cmd || *strain_cmd) {
      const MomentProfile p = resolve_profile(profile_arg);
      std::vector<SvgOverlay> overlay;
      const SurgeryOutcome o = [&] {
        if (*strang_cmd) return strangulate(p, eps, ray);
        RunConfig cfg;
        cfg.op = SweepOp::Strain;
        cfg.flatten_radius = flatten_radius;
        return strain(sweep_input(cfg, p), eps);
      }();
      if (o.strangulation) overlay.push_back(sector_overlay(*o.strangulation, 0.5 * p.diameter()));
      if (o.strain) overlay.push_back(triangle_overlay(*o.strain));
      std::cout << surgery_key_value(o) << report_key_value(report(o.profile));
      if (!out_path.empty()) save_profile(o.profile, out_path);
      if (!svg_path.empty()) emit_profile_svg(o.profile, svg_path, overlay);
    } else if (*sweep_cmd) {
      RunConfig cfg;
      cfg.command = "sweep";
      cfg.profile = profile_arg;
      cfg.op = op == "strain" ? SweepOp::Strain : SweepOp::Strangulate;
      cfg.eps_grid = eps_grid;
      cfg.csv_path = csv_path;
      cfg.svg_path = svg_path;
      cfg.tol = tol;
      cfg.oracle_n = oracle_n;
      cfg.ray_angle = ray;
      cfg.flatten_radius = flatten_radius;
      const auto rows = run_sweep(cfg);
      if (csv_path.empty()) std::cout << sweep_csv(cfg, rows);
      for (const auto& r : rows)
        if (r.error.empty() && r.side_condition && !r.bound_holds) return kFinding;
    } else if (*bounds_cmd) {
      RunConfig cfg;
      cfg.command = "bounds";
      cfg.seed = seed;
      cfg.corpus_size = corpus;
      cfg.tol = tol;
      const CorpusSummary s = run_corpus_bounds(cfg);
      emit(corpus_summary_text(s), csv_path);
      if (!s.violations.empty()) return kFinding;
    } else if (*fc_cmd) {
      const FcScanSummary s = run_fc_scan(b, grid);
      emit(fc_scan_csv(s), csv_path);
      std::cout << "argmax_c=" << fmt17(s.argmax_c) << "\nmax_ratio=" << fmt17(s.max_ratio) << '\n';
      if (!svg_path.empty()) emit_profile_svg(fc_domain(b, s.argmax_c, 32), svg_path, {gc_overlay(b, s.argmax_c)});
      for (const auto& r : s.rows)
        if (std::abs(r.area_quadrature - r.area_closed_form) > 1e-8) return kFinding;
    } else if (*ruelle_cmd) {
      const MomentProfile p = resolve_profile(profile_arg);
      const double closed = ruelle_closed_form(p);
      const double quad = ruelle_quadrature(p, panels);
      const double rel = std::abs(quad - closed) / closed;
      std::cout << "ruelle_closed_form=" << fmt17(closed) << "\nruelle_quadrature=" << fmt17(quad)
                << "\nrelative_error=" << fmt17(rel) << '\n';
      if (rel > 1e-6) return kFinding;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  }
  return kOk;
}
