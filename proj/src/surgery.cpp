#include "toric/surgery.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "toric/format.hpp"
#include "toric/invariants.hpp"

namespace toric {
namespace {

constexpr double kAngleMerge = 1e-13;

Point unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

// Intersection of the ray at angle `ang` with the chord P->Q.
Point ray_chord(Point P, Point Q, double ang) {
  const Point u = unit(ang);
  const Point d = Q - P;
  const double den = cross(u, d);
  if (den == 0.0) return P;
  const double t = std::clamp(-cross(u, P) / den, 0.0, 1.0);
  return P + t * d;
}

struct Chain {
  std::vector<Point> pts;
  std::vector<double> ang;

  explicit Chain(std::vector<Point> v) : pts(std::move(v)) {
    ang.reserve(pts.size());
    for (Point q : pts) ang.push_back(polar_angle(q));
  }
  double lo() const { return ang.front(); }
  double hi() const { return ang.back(); }
  bool covers(double a) const { return a > lo() && a < hi(); }

  Point at(double a) const {
    auto it = std::upper_bound(ang.begin(), ang.end(), a);
    std::size_t j = it == ang.begin() ? 0 : static_cast<std::size_t>(it - ang.begin()) - 1;
    j = std::min(j, pts.size() - 2);
    return ray_chord(pts[j], pts[j + 1], a);
  }
};

struct Breakpoint {
  double ang = 0.0;
  int a = -1;  // vertex index in the base chain
  int b = -1;  // vertex index in the other chain
  bool crossing = false;
  Point cp;
};

// Proper intersection of segments P0P1 and Q0Q1 (interior of both).
bool segment_crossing(Point P0, Point P1, Point Q0, Point Q1, Point& out) {
  const Point r = P1 - P0;
  const Point s = Q1 - Q0;
  const double den = cross(r, s);
  if (den == 0.0) return false;
  const double t = cross(Q0 - P0, s) / den;
  const double u = cross(Q0 - P0, r) / den;
  constexpr double e = 1e-12;
  if (t <= e || t >= 1 - e || u <= e || u >= 1 - e) return false;
  out = P0 + t * r;
  return true;
}

}  // namespace

MomentProfile radial_combine(const MomentProfile& p, const std::vector<Point>& other, RadialMode mode) {
  const Chain A(std::vector<Point>(p.vertices().begin(), p.vertices().end()));
  const Chain B(other);
  if (B.pts.size() < 2) throw Error(ErrorKind::TooFewVertices, "combining polyline needs two points");

  std::vector<Breakpoint> bps;
  for (std::size_t i = 0; i < A.pts.size(); ++i) bps.push_back({A.ang[i], static_cast<int>(i), -1, false, {}});
  for (std::size_t j = 0; j < B.pts.size(); ++j) {
    if (B.ang[j] < 0.0 || B.ang[j] > A.hi()) continue;
    bps.push_back({B.ang[j], -1, static_cast<int>(j), false, {}});
  }
  for (std::size_t i = 0; i + 1 < A.pts.size(); ++i)
    for (std::size_t j = 0; j + 1 < B.pts.size(); ++j) {
      Point x;
      if (segment_crossing(A.pts[i], A.pts[i + 1], B.pts[j], B.pts[j + 1], x))
        bps.push_back({polar_angle(x), -1, -1, true, x});
    }
  std::sort(bps.begin(), bps.end(), [](const Breakpoint& x, const Breakpoint& y) { return x.ang < y.ang; });

  std::vector<Breakpoint> merged;
  for (const Breakpoint& bp : bps) {
    if (!merged.empty() && bp.ang - merged.back().ang <= kAngleMerge) {
      Breakpoint& m = merged.back();
      if (bp.a >= 0) { m.a = bp.a; m.ang = bp.ang; }
      if (bp.b >= 0) m.b = bp.b;
      if (bp.crossing && !m.crossing) { m.crossing = true; m.cp = bp.cp; }
      continue;
    }
    merged.push_back(bp);
  }

  // Source of each open interval between breakpoints: false = base, true = other.
  const std::size_t K = merged.size();
  std::vector<bool> src(K - 1, false);
  for (std::size_t k = 0; k + 1 < K; ++k) {
    const double mid = 0.5 * (merged[k].ang + merged[k + 1].ang);
    if (!B.covers(mid)) continue;
    const double ra = norm(A.at(mid));
    const double rb = norm(B.at(mid));
    src[k] = mode == RadialMode::Max ? rb > ra : rb < ra;
  }

  struct Emitted {
    Point q;
    int a_index;
  };
  std::vector<Emitted> out;
  auto point_on = [&](bool other_src, const Breakpoint& bp) -> Emitted {
    if (!other_src && bp.a >= 0) return {A.pts[static_cast<std::size_t>(bp.a)], bp.a};
    if (other_src && bp.b >= 0) return {B.pts[static_cast<std::size_t>(bp.b)], -1};
    return {other_src ? B.at(bp.ang) : A.at(bp.ang), -1};
  };
  auto emit = [&](Emitted e) {
    if (!out.empty() && out.back().q == e.q) return;
    out.push_back(e);
  };

  const double snap = p.tolerance();
  emit(point_on(src.front(), merged.front()));
  for (std::size_t k = 1; k + 1 < K; ++k) {
    const Breakpoint& bp = merged[k];
    const bool sl = src[k - 1];
    const bool sr = src[k];
    if (sl == sr) {
      if ((!sl && bp.a >= 0) || (sl && bp.b >= 0)) emit(point_on(sl, bp));
      continue;
    }
    // Exact points first: ray evaluation is ill-conditioned on nearly radial chords.
    if (bp.crossing && bp.a < 0 && bp.b < 0) {
      emit({bp.cp, -1});
      continue;
    }
    const Emitted el = point_on(sl, bp);
    const Emitted er = point_on(sr, bp);
    if (norm(el.q - er.q) <= snap) {
      if (bp.b >= 0) emit(point_on(true, bp));
      else if (bp.a >= 0) emit(point_on(false, bp));
      else emit(el);
    } else {
      emit(el);
      emit(er);
    }
  }
  emit(point_on(src.back(), merged.back()));

  std::vector<Point> verts;
  std::vector<SegmentTag> tags;
  for (std::size_t i = 0; i < out.size(); ++i) {
    verts.push_back(out[i].q);
    if (i == 0) continue;
    const int ia = out[i - 1].a_index;
    const int ib = out[i].a_index;
    tags.push_back(ia >= 0 && ib == ia + 1 && !src.empty() ? p.tag(static_cast<std::size_t>(ia)) : SegmentTag{});
  }
  return MomentProfile::from_vertices(std::move(verts), std::move(tags));
}

double strangulation_half_angle(const MomentProfile& p, Point apex, double ray_angle, Point hit, double eps) {
  const double limit = std::min(ray_angle, 0.5 * M_PI - ray_angle);
  const double box = eps * (1.0 + 1e-12) + 1e-15 * p.diameter();
  auto inside_box = [&](Point x) {
    return std::abs(x.w1 - hit.w1) <= box && std::abs(x.w2 - hit.w2) <= box;
  };
  auto trace_ok = [&](double theta) {
    const Point lo = unit(ray_angle - theta);
    const Point hi = unit(ray_angle + theta);
    for (std::size_t s = 0; s < p.segment_count(); ++s) {
      const Point P = p.vertex(s) - apex;
      const Point d = p.vertex(s + 1) - p.vertex(s);
      double t0 = 0.0, t1 = 1.0;
      // Clip to cross(lo, x) >= 0 and cross(x, hi) >= 0, both affine in t.
      const double f0 = cross(lo, P), fd = cross(lo, d);
      const double g0 = cross(P, hi), gd = cross(d, hi);
      auto clip = [&](double c0, double cd) {
        if (cd == 0.0) {
          if (c0 < 0.0) t1 = -1.0;
          return;
        }
        const double r = -c0 / cd;
        if (cd > 0.0) t0 = std::max(t0, r);
        else t1 = std::min(t1, r);
      };
      clip(f0, fd);
      clip(g0, gd);
      if (t0 > t1) continue;
      if (!inside_box(p.vertex(s) + t0 * d) || !inside_box(p.vertex(s) + t1 * d)) return false;
    }
    return true;
  };
  if (trace_ok(limit)) return limit;
  double lo = 0.0, hi = limit;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (trace_ok(mid) ? lo : hi) = mid;
  }
  return lo;
}

SurgeryOutcome strangulate(const MomentProfile& p, double eps, double ray_angle) {
  if (!(ray_angle > 0.0 && ray_angle < 0.5 * M_PI))
    throw Error(ErrorKind::RayMissesBoundary, "ray angle must lie strictly inside the first quadrant");
  const BoundaryHit bh = boundary_along_ray(p, ray_angle);
  const Point H = bh.point;
  const double w_star = 0.5 * (H.w1 + H.w2);
  if (!(eps > 0.0) || eps >= w_star)
    throw Error(ErrorKind::EpsTooLarge, "eps must lie in (0, w*) with w* = " + fmt17(w_star));

  const Point dir = unit(ray_angle);
  const Point V = (2.0 * eps / (dir.w1 + dir.w2)) * dir;
  const double theta = strangulation_half_angle(p, V, ray_angle, H, eps);
  if (!(theta > 0.0)) throw Error(ErrorKind::ClippingBreaksStarShape, "no admissible sector angle");

  const double L = 4.0 * p.diameter() + 1.0;
  const std::vector<Point> wedge{V + L * unit(ray_angle - theta), V, V + L * unit(ray_angle + theta)};

  MomentProfile out = [&] {
    try {
      return radial_combine(p, wedge, RadialMode::Min);
    } catch (const Error& e) {
      throw Error(ErrorKind::ClippingBreaksStarShape, std::string("strangulation: ") + e.what());
    }
  }();
  out = out.with_family("strangulated", {eps, ray_angle});

  SurgeryOutcome o{out, area(out) - area(p), 4.0 * norm(H) * norm(H) * theta, {}, classify(out), {}, {}};
  StrangulationSpec spec{eps, ray_angle, theta, w_star, H, V, -1};
  for (std::size_t i = 0; i < out.vertex_count(); ++i)
    if (out.vertex(i) == V) spec.notch_vertex = static_cast<int>(i);

  if (spec.notch_vertex > 0) {
    // The primitive vector of the notch cone closest in direction to the ray.
    const NormalCone cone = normal_cone(out, static_cast<std::size_t>(spec.notch_vertex));
    constexpr long long kSearch = 64;
    std::optional<IntVec> best;
    double best_cos = -2.0;
    for (long long m = -kSearch; m <= kSearch; ++m)
      for (long long n = -kSearch; n <= kSearch; ++n) {
        if ((m == 0 && n == 0) || gcd_ll(m, n) != 1) continue;
        const IntVec v{m, n};
        if (!cone_contains(cone, v)) continue;
        const double len = std::hypot(double(m), double(n));
        const double c = (m * dir.w1 + n * dir.w2) / len;
        if (!best || c > best_cos + 1e-15 ||
            (std::abs(c - best_cos) <= 1e-15 && len < std::hypot(double(best->m), double(best->n)))) {
          best = v;
          best_cos = c;
        }
      }
    if (best) {
      OrbitDatum w;
      w.mn = *best;
      w.base_point = V;
      w.action = double(best->m) * V.w1 + double(best->n) * V.w2;
      w.location_kind = LocationKind::Vertex;
      w.location_index = spec.notch_vertex;
      o.new_orbit_witnesses.push_back(w);
    }
  }
  o.strangulation = spec;
  return o;
}

SurgeryOutcome strain(const MomentProfile& p, double eps, std::optional<double> k_given) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw Error(ErrorKind::ParamOutOfRange, "eps must be positive");
  if (p.tag(0).kind != CurveKind::Line)
    throw Error(ErrorKind::NotFlattened, "first boundary segment is curved; flatten it first", 0);
  const Point v0 = p.vertex(0);
  const Point v1 = p.vertex(1);
  const Point d = v1 - v0;
  if (d.w1 == 0.0) throw Error(ErrorKind::NotFlattened, "first boundary segment is vertical", 0);
  const double a = v0.w1;
  const double k = d.w2 / d.w1;
  if (k_given && !(std::abs(*k_given - k) <= 1e-9 * std::max(1.0, std::abs(k))))
    throw Error(ErrorKind::NotFlattened, "first segment slope " + fmt17(k) + " differs from k = " + fmt17(*k_given), 0);
  if (eps >= v1.w2)
    throw Error(ErrorKind::EpsTooLargeForNeighborhood,
                "eps must be below the height " + fmt17(v1.w2) + " of the first straight piece", 1);
  const double w_star = eps / k + a;
  const double spike = 1.0 / std::sqrt(eps);
  if (!(w_star > 0.0) || spike <= std::max(w_star, a))
    throw Error(ErrorKind::ValidityConditionFails, "1/sqrt(eps) must exceed eps/k + a");
  if (k < 0.0 && -eps / (spike - w_star) <= k)
    throw Error(ErrorKind::ValidityConditionFails, "spike slope does not exceed the boundary slope");

  const Point apex{w_star, eps};
  MomentProfile out = [&] {
    try {
      return radial_combine(p, {Point{spike, 0.0}, apex}, RadialMode::Max);
    } catch (const Error& e) {
      throw Error(ErrorKind::ValidityConditionFails, std::string("strain: ") + e.what());
    }
  }();
  out = out.with_family("strained", {eps});

  SurgeryOutcome o{out, area(out) - area(p), 0.5 * std::sqrt(eps), {}, classify(out), {}, {}};
  StrainSpec spec{eps, k, w_star, spike, -1};
  for (std::size_t i = 0; i < out.vertex_count(); ++i)
    if (out.vertex(i) == apex) spec.spike_vertex = static_cast<int>(i);

  OrbitDatum axis;
  axis.mn = {1, 0};
  axis.base_point = out.vertex(0);
  axis.action = out.vertex(0).w1;
  axis.location_kind = LocationKind::Axis;
  axis.location_index = 0;
  o.new_orbit_witnesses.push_back(axis);
  if (spec.spike_vertex > 0) {
    const auto vi = static_cast<std::size_t>(spec.spike_vertex);
    const double floor = cone_min_unit_action(normal_cone(out, vi));
    double cutoff = std::max(floor, 1e-300) * 2.0;
    for (int it = 0; it < 64; ++it, cutoff *= 2.0) {
      const auto orbits = orbits_at_vertex(out, vi, cutoff);
      if (!orbits.empty()) {
        o.new_orbit_witnesses.push_back(orbits.front());
        break;
      }
    }
  }
  o.strain = spec;
  return o;
}

FlattenResult flatten_near_intercept(const MomentProfile& p, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw Error(ErrorKind::ParamOutOfRange, "radius must be positive");
  const Point v0 = p.vertex(0);
  if (p.tag(0).kind == CurveKind::Line) {
    const Point d = p.vertex(1) - v0;
    if (radius > norm(d)) throw Error(ErrorKind::RadiusTooLarge, "radius exceeds the first straight piece", 0);
    const double k = d.w1 == 0.0 ? std::numeric_limits<double>::infinity() : d.w2 / d.w1;
    return {p, k, 0.0};
  }

  // Walk the leading run of curved segments to the point at distance radius.
  std::size_t seg = 0;
  while (seg < p.segment_count() && p.tag(seg).kind != CurveKind::Line &&
         norm(p.vertex(seg + 1) - v0) < radius)
    ++seg;
  if (seg == p.segment_count() || p.tag(seg).kind == CurveKind::Line)
    throw Error(ErrorKind::RadiusTooLarge, "radius exceeds the curved piece at the w1-intercept",
                static_cast<int>(seg));
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
    const double mid = 0.5 * (lo + hi);
    (norm(curve_point(p, seg, mid) - v0) < radius ? lo : hi) = mid;
  }
  const Point X = curve_point(p, seg, hi);

  std::vector<Point> verts{v0};
  std::vector<SegmentTag> tags{SegmentTag{}};
  if (X == p.vertex(seg + 1)) {
    verts.push_back(X);
  } else {
    verts.push_back(X);
    verts.push_back(p.vertex(seg + 1));
    tags.push_back(p.tag(seg));
  }
  for (std::size_t i = seg + 1; i < p.segment_count(); ++i) {
    verts.push_back(p.vertex(i + 1));
    tags.push_back(p.tag(i));
  }
  MomentProfile out = MomentProfile::from_vertices(std::move(verts), std::move(tags))
                          .with_family(p.family(), std::vector<double>(p.params().begin(), p.params().end()));
  const double k = X.w2 / (X.w1 - v0.w1);
  return {out, k, area(out) - area(p)};
}

std::string surgery_key_value(const SurgeryOutcome& o) {
  std::ostringstream s;
  if (o.strangulation) {
    const auto& g = *o.strangulation;
    s << "surgery=strangulation\neps=" << fmt17(g.eps) << "\nray_angle=" << fmt17(g.ray_angle)
      << "\ntheta=" << fmt17(g.theta) << "\nw_star=" << fmt17(g.w_star) << "\nnotch_w1=" << fmt17(g.notch.w1)
      << "\nnotch_w2=" << fmt17(g.notch.w2) << "\nnotch_vertex=" << g.notch_vertex << '\n';
  }
  if (o.strain) {
    const auto& g = *o.strain;
    s << "surgery=strain\neps=" << fmt17(g.eps) << "\nk=" << fmt17(g.k) << "\nw_star_eps=" << fmt17(g.w_star_eps)
      << "\nspike_intercept=" << fmt17(g.spike_intercept) << "\nspike_vertex=" << g.spike_vertex << '\n';
  }
  s << "volume_delta=" << fmt17(o.volume_delta) << "\nvolume_delta_bound=" << fmt17(o.volume_delta_bound) << '\n';
  for (const OrbitDatum& w : o.new_orbit_witnesses)
    s << "witness=" << w.mn.m << ',' << w.mn.n << ',' << fmt17(w.action) << ',' << to_string(w.location_kind) << ','
      << w.location_index << '\n';
  const Classification& c = o.preserved_flags;
  s << "star_shaped=" << c.star_shaped.value << "\nmonotone=" << c.monotone.value
    << "\nstrictly_monotone=" << c.strictly_monotone.value << "\nconvex_4d=" << c.convex_4d.value << '\n';
  return s.str();
}

}  // namespace toric
