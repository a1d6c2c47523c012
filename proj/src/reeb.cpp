#include "toric/reeb.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace toric {

long long gcd_ll(long long a, long long b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    const long long r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::optional<IntVec> primitive_direction(Point dir, long long max_coord, double rel_tol) {
  const double x = dir.w1, y = dir.w2;
  if (x == 0.0 && y == 0.0) return std::nullopt;
  const long long sx = x > 0.0 ? 1 : -1;
  const long long sy = y > 0.0 ? 1 : -1;
  if (y == 0.0) return IntVec{sx, 0};
  if (x == 0.0) return IntVec{0, sy};

  const double r = std::abs(y) / std::abs(x);
  // convergents h/k of the continued fraction of r = |y|/|x|
  long long h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
  double value = r;
  for (int it = 0; it < 64; ++it) {
    const double a = std::floor(value);
    if (a > static_cast<double>(max_coord)) return std::nullopt;
    const long long ai = static_cast<long long>(a);
    const long long h = ai * h_prev + h_prev2;
    const long long k = ai * k_prev + k_prev2;
    if (h > max_coord || k > max_coord) return std::nullopt;
    if (std::abs(static_cast<double>(h) / static_cast<double>(k) - r) <= rel_tol * r) {
      return IntVec{sx * k, sy * h};
    }
    const double frac = value - a;
    if (frac <= 0.0) return std::nullopt;
    value = 1.0 / frac;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
  }
  return std::nullopt;
}

const char* to_string(LocationKind kind) {
  switch (kind) {
    case LocationKind::Axis: return "axis";
    case LocationKind::Segment: return "segment";
    case LocationKind::Vertex: return "vertex";
  }
  return "vertex";
}

bool orbit_less(const OrbitDatum& x, const OrbitDatum& y) {
  return std::tie(x.action, x.mn.m, x.mn.n, x.location_kind, x.location_index) <
         std::tie(y.action, y.mn.m, y.mn.n, y.location_kind, y.location_index);
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double support(Point point, Point normal) {
  const double s = dot(normal, point);
  if (!(s > 1e-12 * std::max(1.0, norm(point))))
    throw Error(ErrorKind::DegenerateDenominator, "nu . p <= 0: point violates star-shapedness");
  return s;
}

double action_of(IntVec v, Point w) {
  return static_cast<double>(v.m) * w.w1 + static_cast<double>(v.n) * w.w2;
}

Point as_point(IntVec v) { return {static_cast<double>(v.m), static_cast<double>(v.n)}; }

// Sign-exact cross product between a cone ray and a lattice vector.
double ray_cross(const ConeRay& r, IntVec v) {
  if (r.lattice) return static_cast<double>(r.lattice->m * v.n - r.lattice->n * v.m);
  return cross(r.dir, as_point(v));
}

double ray_cross(IntVec v, const ConeRay& r) { return -ray_cross(r, v); }

struct Arc {
  double start;
  double width;
};

std::optional<Arc> overlap(Arc x, Arc y) {
  constexpr double slack = 1e-12;
  for (double k : {-kTwoPi, 0.0, kTwoPi}) {
    const double lo = std::max(x.start, y.start + k);
    const double hi = std::min(x.start + x.width, y.start + k + y.width);
    if (lo <= hi + slack) return Arc{lo - slack, hi - lo + 2 * slack};
  }
  return std::nullopt;
}

double unit_action(double angle, Point apex) {
  return std::cos(angle) * apex.w1 + std::sin(angle) * apex.w2;
}

Arc cone_arc(const NormalCone& c) {
  return {polar_angle(c.lo.dir), std::max(0.0, std::atan2(cross(c.lo.dir, c.hi.dir), dot(c.lo.dir, c.hi.dir)))};
}

// Visits every primitive vector of the cone whose action can still be <= bound().
// Stern-Brocot mediant descent per quadrant; a subtree spanned by (L, R) only
// contains vectors aL + bR with a, b >= 1, all at least as long as L + R, so
// |L+R| * min(unit action over the subtree's directions) bounds it from below.
template <class Bound, class Hit>
long long descend_cone(const NormalCone& cone, Bound bound, Hit on_hit) {
  long long nodes = 0;
  if (cone.degenerate) {
    if (cone.lo.lattice) on_hit(*cone.lo.lattice);
    else if (cone.hi.lattice) on_hit(*cone.hi.lattice);
    return 1;
  }
  static constexpr std::array<IntVec, 4> axes{IntVec{1, 0}, IntVec{0, 1}, IntVec{-1, 0}, IntVec{0, -1}};
  for (IntVec v : axes) {
    if (cone_contains(cone, v)) on_hit(v);
  }
  const Arc carc = cone_arc(cone);
  std::vector<std::pair<IntVec, IntVec>> stack;
  for (int q = 0; q < 4; ++q) {
    const IntVec l = axes[q], r = axes[(q + 1) % 4];
    if (overlap({polar_angle(as_point(l)), std::numbers::pi / 2}, carc)) stack.push_back({l, r});
  }
  constexpr long long kNodeCap = 200'000'000;
  while (!stack.empty()) {
    const auto [l, r] = stack.back();
    stack.pop_back();
    const IntVec m{l.m + r.m, l.n + r.n};
    const double al = polar_angle(as_point(l));
    double width = polar_angle(as_point(r)) - al;
    if (width < 0) width += kTwoPi;
    const auto ov = overlap({al, width}, carc);
    if (!ov) continue;
    const double min_unit = std::min(unit_action(ov->start, cone.apex),
                                     unit_action(ov->start + ov->width, cone.apex));
    const double lower = norm(as_point(m)) * min_unit;
    if (lower > bound() * (1.0 + 1e-12)) continue;
    if (++nodes > kNodeCap) throw Error(ErrorKind::DegenerateDenominator, "Stern-Brocot descent did not terminate");
    if (cone_contains(cone, m)) on_hit(m);
    stack.push_back({l, m});
    stack.push_back({m, r});
  }
  return nodes;
}

OrbitDatum vertex_orbit(const NormalCone& cone, IntVec v) {
  OrbitDatum o;
  o.mn = v;
  o.base_point = cone.apex;
  o.action = action_of(v, cone.apex);
  o.location_kind = LocationKind::Vertex;
  o.location_index = static_cast<int>(cone.vertex);
  o.on_cone_boundary = (cone.lo.lattice && *cone.lo.lattice == v) || (cone.hi.lattice && *cone.hi.lattice == v);
  return o;
}

std::array<OrbitDatum, 2> axis_orbits(const MomentProfile& p) {
  OrbitDatum a;
  a.mn = {1, 0};
  a.base_point = p.vertex(0);
  a.action = p.a_intercept();
  a.location_kind = LocationKind::Axis;
  a.location_index = 0;
  OrbitDatum b;
  b.mn = {0, 1};
  b.base_point = p.vertex(p.vertex_count() - 1);
  b.action = p.b_intercept();
  b.location_kind = LocationKind::Axis;
  b.location_index = static_cast<int>(p.vertex_count() - 1);
  return {a, b};
}

void keep_min(std::optional<OrbitDatum>& best, const OrbitDatum& cand) {
  if (!best || orbit_less(cand, *best)) best = cand;
}

}  // namespace

AngularVelocities reeb_angular_velocities(Point point, Point normal) {
  const double s = support(point, normal);
  return {kTwoPi * normal.w1 / s, kTwoPi * normal.w2 / s};
}

double rotation_density(Point point, Point normal) {
  const double s = support(point, normal);
  return (normal.w1 + normal.w2) / s;
}

std::optional<OrbitDatum> closed_orbit_on_segment(const MomentProfile& p, std::size_t seg) {
  const Point d = p.vertex(seg + 1) - p.vertex(seg);
  const auto v = primitive_direction({d.w2, -d.w1});
  if (!v) return std::nullopt;
  OrbitDatum o;
  o.mn = *v;
  o.base_point = 0.5 * (p.vertex(seg) + p.vertex(seg + 1));
  o.action = action_of(*v, o.base_point);
  o.location_kind = LocationKind::Segment;
  o.location_index = static_cast<int>(seg);
  return o;
}

NormalCone normal_cone(const MomentProfile& p, std::size_t vertex) {
  if (vertex == 0 || vertex + 1 >= p.vertex_count())
    throw Error(ErrorKind::ParamOutOfRange, "normal cones exist only at interior vertices", static_cast<int>(vertex));
  const Point d_in = p.vertex(vertex) - p.vertex(vertex - 1);
  const Point d_out = p.vertex(vertex + 1) - p.vertex(vertex);
  ConeRay in{outward_normal(d_in), primitive_direction({d_in.w2, -d_in.w1})};
  ConeRay out{outward_normal(d_out), primitive_direction({d_out.w2, -d_out.w1})};

  NormalCone c;
  c.vertex = vertex;
  c.apex = p.vertex(vertex);
  double turn;
  if (in.lattice && out.lattice) {
    turn = static_cast<double>(in.lattice->m * out.lattice->n - in.lattice->n * out.lattice->m);
  } else {
    turn = cross(in.dir, out.dir);
  }
  c.reflex = turn < 0.0;
  c.lo = c.reflex ? out : in;
  c.hi = c.reflex ? in : out;
  if (in.lattice && out.lattice) {
    c.degenerate = *in.lattice == *out.lattice;
  } else {
    c.degenerate = turn == 0.0 && dot(in.dir, out.dir) > 0.0;
  }
  return c;
}

bool cone_contains(const NormalCone& cone, IntVec v) {
  if (cone.degenerate) {
    return (cone.lo.lattice && *cone.lo.lattice == v) || (cone.hi.lattice && *cone.hi.lattice == v);
  }
  return ray_cross(cone.lo, v) >= 0.0 && ray_cross(v, cone.hi) >= 0.0;
}

double cone_min_unit_action(const NormalCone& cone) {
  return std::min(dot(cone.lo.dir, cone.apex), dot(cone.hi.dir, cone.apex));
}

std::vector<OrbitDatum> orbits_at_vertex(const MomentProfile& p, std::size_t vertex, double action_cutoff) {
  std::vector<OrbitDatum> out;
  if (vertex == 0 || vertex + 1 == p.vertex_count()) {
    const auto axes = axis_orbits(p);
    const OrbitDatum& o = vertex == 0 ? axes[0] : axes[1];
    if (o.action <= action_cutoff) out.push_back(o);
    return out;
  }
  const NormalCone cone = normal_cone(p, vertex);
  descend_cone(
      cone, [&] { return action_cutoff; },
      [&](IntVec v) {
        const OrbitDatum o = vertex_orbit(cone, v);
        if (o.action <= action_cutoff) out.push_back(o);
      });
  std::sort(out.begin(), out.end(), orbit_less);
  return out;
}

std::vector<OrbitDatum> enumerate_orbits(const MomentProfile& p, double action_cutoff) {
  std::vector<OrbitDatum> out;
  for (const OrbitDatum& o : axis_orbits(p))
    if (o.action <= action_cutoff) out.push_back(o);
  for (std::size_t s = 0; s < p.segment_count(); ++s) {
    const auto o = closed_orbit_on_segment(p, s);
    if (o && o->action <= action_cutoff) out.push_back(*o);
  }
  const long long interior = static_cast<long long>(p.vertex_count()) - 2;
  std::vector<std::vector<OrbitDatum>> per_vertex(static_cast<std::size_t>(std::max(0LL, interior)));
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < interior; ++i) {
    per_vertex[static_cast<std::size_t>(i)] = orbits_at_vertex(p, static_cast<std::size_t>(i + 1), action_cutoff);
  }
  for (const auto& v : per_vertex) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end(), orbit_less);
  return out;
}

namespace {

TminResult t_min_fast(const MomentProfile& p) {
  std::optional<OrbitDatum> best;
  for (const OrbitDatum& o : axis_orbits(p)) keep_min(best, o);
  for (std::size_t s = 0; s < p.segment_count(); ++s) {
    if (const auto o = closed_orbit_on_segment(p, s)) keep_min(best, *o);
  }
  long long nodes = 0;
  for (std::size_t v = 1; v + 1 < p.vertex_count(); ++v) {
    const NormalCone cone = normal_cone(p, v);
    nodes += descend_cone(
        cone, [&] { return best->action; }, [&](IntVec m) { keep_min(best, vertex_orbit(cone, m)); });
  }
  return {best->action, *best, nodes};
}

struct OracleSetup {
  std::vector<NormalCone> cones;
  std::vector<OrbitDatum> segment_orbits;  // rational segments inside the box
  std::vector<OrbitDatum> beyond_box;      // rational segments outside the box
};

OracleSetup oracle_setup(const MomentProfile& p, int oracle_n) {
  OracleSetup s;
  for (std::size_t v = 1; v + 1 < p.vertex_count(); ++v) s.cones.push_back(normal_cone(p, v));
  for (std::size_t seg = 0; seg < p.segment_count(); ++seg) {
    if (const auto o = closed_orbit_on_segment(p, seg)) {
      const long long extent = std::max(std::llabs(o->mn.m), std::llabs(o->mn.n));
      (extent <= oracle_n ? s.segment_orbits : s.beyond_box).push_back(*o);
    }
  }
  return s;
}

void scan_row(const OracleSetup& s, long long m, int oracle_n, std::optional<OrbitDatum>& best) {
  for (long long n = -oracle_n; n <= oracle_n; ++n) {
    if (gcd_ll(m, n) != 1) continue;
    const IntVec v{m, n};
    for (const NormalCone& c : s.cones)
      if (cone_contains(c, v)) keep_min(best, vertex_orbit(c, v));
  }
}

TminResult oracle_finish(const MomentProfile& p, const OracleSetup& s, std::optional<OrbitDatum> best,
                         int oracle_n) {
  for (const OrbitDatum& o : axis_orbits(p)) keep_min(best, o);
  for (const OrbitDatum& o : s.segment_orbits) keep_min(best, o);
  const double limit = static_cast<double>(oracle_n + 1);
  for (const NormalCone& c : s.cones) {
    if (c.degenerate) continue;
    const double outside_lower = limit * cone_min_unit_action(c);
    if (best->action >= outside_lower * (1.0 - 1e-12))
      throw Error(ErrorKind::OracleCutoffInsufficient,
                  "vectors beyond the oracle box could undercut the best action at vertex " +
                      std::to_string(c.vertex),
                  static_cast<int>(c.vertex));
  }
  for (const OrbitDatum& o : s.beyond_box) {
    if (o.action <= best->action)
      throw Error(ErrorKind::OracleCutoffInsufficient, "segment orbit beyond the oracle box", o.location_index);
  }
  const long long box = 2LL * oracle_n + 1;
  return {best->action, *best, box * box};
}

TminResult t_min_oracle_parallel(const MomentProfile& p, int oracle_n) {
  const OracleSetup s = oracle_setup(p, oracle_n);
  std::optional<OrbitDatum> best;
#pragma omp parallel
  {
    std::optional<OrbitDatum> local;
#pragma omp for schedule(static)
    for (long long m = -oracle_n; m <= oracle_n; ++m) scan_row(s, m, oracle_n, local);
#pragma omp critical
    if (local) keep_min(best, *local);
  }
  return oracle_finish(p, s, best, oracle_n);
}

}  // namespace

TminResult t_min_oracle_serial(const MomentProfile& p, int oracle_n) {
  const OracleSetup s = oracle_setup(p, oracle_n);
  std::optional<OrbitDatum> best;
  for (long long m = -oracle_n; m <= oracle_n; ++m) scan_row(s, m, oracle_n, best);
  return oracle_finish(p, s, best, oracle_n);
}

TminResult t_min(const MomentProfile& p, TminMethod method, int oracle_n) {
  if (method == TminMethod::Fast) return t_min_fast(p);
  if (oracle_n < 1) throw Error(ErrorKind::ParamOutOfRange, "oracle box must be >= 1");
  return t_min_oracle_parallel(p, oracle_n);
}

ShearCheckResult shear_monodromy_check(const MomentProfile& p, Point point, double time, double h) {
  if (!(time >= 0.0)) throw Error(ErrorKind::ParamOutOfRange, "flow time must be non-negative");
  if (!(h > 0.0)) throw Error(ErrorKind::ParamOutOfRange, "finite-difference step must be positive");
  const BoundaryHit base = boundary_along_ray(p, polar_angle(point));
  if (base.t <= 0.0 || base.t >= 1.0)
    throw Error(ErrorKind::ParamOutOfRange, "shear check needs a segment-interior point",
                static_cast<int>(base.segment));

  const Point w = base.point;
  const Point nu = base.normal;
  const Point e1{-nu.w2, nu.w1};
  const Point e2_theta{-w.w2, w.w1};
  const AngularVelocities vel0 = reeb_angular_velocities(w, nu);

  // e1 perturbation: move along the boundary, flow, difference-quotient.
  const Point shifted = w + h * e1;
  const BoundaryHit moved = boundary_along_ray(p, polar_angle(shifted));
  const AngularVelocities vel1 = reeb_angular_velocities(moved.point, moved.normal);
  const Point dw = (1.0 / h) * (moved.point - w);
  const Point dtheta{time * (vel1.theta1 - vel0.theta1) / h, time * (vel1.theta2 - vel0.theta2) / h};
  // theta-part in the basis (e2, Reeb direction)
  const double det = cross(e2_theta, nu);
  const double along_e2 = cross(dtheta, nu) / det;

  // e2 perturbation only shifts the angles, which the flow transports rigidly.
  const Point e2_image_theta = e2_theta;
  const double e2_along_e2 = cross(e2_image_theta, nu) / det;
  const double e2_along_e1 = 0.0;

  ShearCheckResult r;
  r.base_point = w;
  r.time = time;
  r.monodromy[0][0] = dot(dw, e1);
  r.monodromy[1][0] = along_e2;
  r.monodromy[0][1] = e2_along_e1;
  r.monodromy[1][1] = e2_along_e2;
  r.shear_coefficient = time > 0.0 ? along_e2 / time : 0.0;
  r.normal_leak = std::abs(dot(dw, nu));
  r.residual = std::max({std::abs(r.monodromy[0][0] - 1.0), std::abs(r.monodromy[0][1]),
                         std::abs(r.monodromy[1][1] - 1.0)});
  if (r.residual > 1e-2)
    throw Error(ErrorKind::StepTooLarge, "monodromy residual " + std::to_string(r.residual) + " exceeds 1e-2");
  return r;
}

}  // namespace toric
