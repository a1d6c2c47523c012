#include "toric/invariants.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <sstream>

#include "toric/format.hpp"
#include "toric/quadrature.hpp"

namespace toric {

namespace {

// (1/2) * integral of (w1 dw2 - w2 dw1) along one boundary piece.
double sector_area(const MomentProfile& p, std::size_t seg) {
  const Point a = p.vertex(seg);
  const Point b = p.vertex(seg + 1);
  const SegmentTag& tag = p.tag(seg);
  switch (tag.kind) {
    case CurveKind::Line:
      return 0.5 * cross(a, b);
    case CurveKind::SqrtLine:
      // cubic in t, integrated exactly
      return 0.5 * gauss_legendre(
                       [&](double t) { return cross(curve_point(p, seg, t), curve_derivative(p, seg, t)); }, 0.0,
                       1.0);
    case CurveKind::Arc: {
      const Point c = tag.center;
      const double r = tag.radius;
      const double a0 = polar_angle(a - c);
      const double sweep = std::atan2(cross(a - c, b - c), dot(a - c, b - c));
      const double a1 = a0 + sweep;
      return 0.5 * (r * r * sweep + r * (c.w1 * (std::sin(a1) - std::sin(a0)) - c.w2 * (std::cos(a1) - std::cos(a0))));
    }
  }
  return 0.0;
}

}  // namespace

double area(const MomentProfile& p) {
  double total = 0.0;
  for (std::size_t s = 0; s < p.segment_count(); ++s) total += sector_area(p, s);
  return total;
}

double ruelle_closed_form(const MomentProfile& p) { return p.a_intercept() + p.b_intercept(); }

double ruelle_quadrature(const MomentProfile& p, int panels) {
  if (panels < 2) throw Error(ErrorKind::ParamOutOfRange, "quadrature needs at least 2 panels per segment");
  double total = 0.0;
  for (std::size_t s = 0; s < p.segment_count(); ++s) {
    if (p.tag(s).kind == CurveKind::Line) {
      // the integrand is constant on a straight segment
      const Point a = p.vertex(s);
      const Point d = p.vertex(s + 1) - a;
      total += rotation_density(a, p.chord_normal(s)) * cross(a, d);
      continue;
    }
    total += gauss_legendre(
        [&](double t) {
          const Point c = curve_point(p, s, t);
          const Point dc = curve_derivative(p, s, t);
          return rotation_density(c, outward_normal(dc)) * cross(c, dc);
        },
        0.0, 1.0, panels);
  }
  return total;
}

InvariantReport report(const MomentProfile& p) {
  InvariantReport r;
  r.area = area(p);
  r.contact_volume = 2.0 * r.area;
  r.ruelle = ruelle_closed_form(p);
  r.ruelle_quadrature = ruelle_quadrature(p);
  const TminResult tm = t_min(p, TminMethod::Fast);
  r.t_min = tm.action;
  r.t_min_witness = tm.witness;
  r.sys = r.t_min * r.t_min / r.contact_volume;
  r.ru = r.ruelle / std::sqrt(r.contact_volume);
  r.product = r.ruelle * r.t_min / r.contact_volume;
  r.classification = classify(p);
  return r;
}

double gromov_width_monotone(const MomentProfile& p) {
  const Classification c = classify(p);
  if (!c.monotone.value)
    throw Error(ErrorKind::NotMonotone, "Gromov width formula needs a monotone profile", c.monotone.witness);
  double best = std::numeric_limits<double>::infinity();
  for (const Point& v : p.vertices()) best = std::min(best, v.w1 + v.w2);
  for (std::size_t s = 0; s < p.segment_count(); ++s) {
    const SegmentTag& tag = p.tag(s);
    if (tag.kind == CurveKind::SqrtLine) {
      // w1 + w2 = |mu(t)|^2 along a straight mu-segment
      const Point ma{std::sqrt(p.vertex(s).w1), std::sqrt(p.vertex(s).w2)};
      const Point mb{std::sqrt(p.vertex(s + 1).w1), std::sqrt(p.vertex(s + 1).w2)};
      const Point dm = mb - ma;
      const double t = std::clamp(-dot(ma, dm) / dot(dm, dm), 0.0, 1.0);
      const Point m = ma + t * dm;
      best = std::min(best, dot(m, m));
    } else if (tag.kind == CurveKind::Arc) {
      const Point a = p.vertex(s) - tag.center;
      const Point b = p.vertex(s + 1) - tag.center;
      const double a0 = polar_angle(a);
      const double sweep = std::atan2(cross(a, b), dot(a, b));
      // w1 + w2 on the circle is smallest in direction 5pi/4
      double crit = 1.25 * std::numbers::pi;
      while (crit > a0 + sweep) crit -= 2 * std::numbers::pi;
      while (crit < a0) crit += 2 * std::numbers::pi;
      if (crit <= a0 + sweep)
        best = std::min(best, tag.center.w1 + tag.center.w2 - tag.radius * std::numbers::sqrt2);
    }
  }
  return best;
}

VolGrBound vol_gr_bound_check(const MomentProfile& p) {
  VolGrBound r;
  const double cgr = gromov_width_monotone(p);
  r.lhs = area(p);
  // reflecting w1 <-> w2 if needed puts the larger intercept in the role of b
  r.rhs = std::max(p.a_intercept(), p.b_intercept()) * cgr;
  r.holds = r.lhs <= r.rhs * (1.0 + 1e-12);
  return r;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::BelowLower: return "BelowLower";
    case Verdict::AboveUpper: return "AboveUpper";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

CriterionVerdict criterion_verdict(double product, double c_threshold, double C_threshold) {
  if (!(c_threshold > 0.0 && c_threshold <= C_threshold))
    throw Error(ErrorKind::BadThresholds, "thresholds must satisfy 0 < c <= C");
  CriterionVerdict v;
  v.product = product;
  v.c_threshold = c_threshold;
  v.C_threshold = C_threshold;
  v.verdict = product < c_threshold   ? Verdict::BelowLower
              : product > C_threshold ? Verdict::AboveUpper
                                      : Verdict::Inconclusive;
  v.note =
      "BelowLower/AboveUpper rule out symplectic convexity only relative to the supplied thresholds; the true "
      "constants are unknown and satisfy c <= 1/2, C >= 3";
  return v;
}

CriterionVerdict criterion_verdict(const MomentProfile& p, double c_threshold, double C_threshold) {
  if (!(c_threshold > 0.0 && c_threshold <= C_threshold))
    throw Error(ErrorKind::BadThresholds, "thresholds must satisfy 0 < c <= C");
  return criterion_verdict(report(p).product, c_threshold, C_threshold);
}

std::string report_csv_header() {
  return "area,contact_volume,ruelle,ruelle_quadrature,t_min,sys,ru,product,star_shaped,monotone,strictly_"
         "monotone,convex_4d";
}

std::string report_csv_row(const InvariantReport& r) {
  std::ostringstream os;
  os << fmt17(r.area) << ',' << fmt17(r.contact_volume) << ',' << fmt17(r.ruelle) << ','
     << fmt17(r.ruelle_quadrature) << ',' << fmt17(r.t_min) << ',' << fmt17(r.sys) << ',' << fmt17(r.ru) << ','
     << fmt17(r.product) << ',' << r.classification.star_shaped.value << ',' << r.classification.monotone.value
     << ',' << r.classification.strictly_monotone.value << ',' << r.classification.convex_4d.value;
  return os.str();
}

std::string report_key_value(const InvariantReport& r) {
  std::ostringstream os;
  os << "area = " << fmt17(r.area) << '\n'
     << "contact_volume = " << fmt17(r.contact_volume) << '\n'
     << "ruelle = " << fmt17(r.ruelle) << '\n'
     << "ruelle_quadrature = " << fmt17(r.ruelle_quadrature) << '\n'
     << "t_min = " << fmt17(r.t_min) << '\n'
     << "sys = " << fmt17(r.sys) << '\n'
     << "ru = " << fmt17(r.ru) << '\n'
     << "product = " << fmt17(r.product) << '\n'
     << "flags = star_shaped:" << r.classification.star_shaped.value
     << " monotone:" << r.classification.monotone.value
     << " strictly_monotone:" << r.classification.strictly_monotone.value
     << " convex_4d:" << r.classification.convex_4d.value << '\n'
     << "t_min_witness = (" << r.t_min_witness.mn.m << ", " << r.t_min_witness.mn.n << ") "
     << to_string(r.t_min_witness.location_kind) << ' ' << r.t_min_witness.location_index << '\n';
  return os.str();
}

}  // namespace toric
