#include "toric/geometry.hpp"

#include <algorithm>
#include <numbers>
#include <sstream>

namespace toric {

const char* to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::Line: return "line";
    case CurveKind::SqrtLine: return "sqrt_line";
    case CurveKind::Arc: return "arc";
  }
  return "line";
}

namespace {

std::string describe(Point p) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << p.w1 << ", " << p.w2 << ")";
  return os.str();
}

Point sqrt_point(Point p) { return {std::sqrt(p.w1), std::sqrt(p.w2)}; }

double arc_sweep(Point from, Point to, Point center) {
  const Point u = from - center;
  const Point v = to - center;
  return std::atan2(cross(u, v), dot(u, v));
}

}  // namespace

MomentProfile MomentProfile::from_vertices(std::vector<Point> vertices,
                                           std::vector<SegmentTag> tags) {
  const std::size_t n = vertices.size();
  if (n < 2) throw Error(ErrorKind::TooFewVertices, "a profile needs at least two vertices");
  if (!tags.empty() && tags.size() != n - 1)
    throw Error(ErrorKind::Parse, "segment tag count does not match segment count");
  if (tags.empty()) tags.assign(n - 1, SegmentTag{});

  for (std::size_t i = 0; i < n; ++i) {
    const Point v = vertices[i];
    if (!std::isfinite(v.w1) || !std::isfinite(v.w2))
      throw Error(ErrorKind::AxisViolation, "non-finite vertex", static_cast<int>(i));
  }
  if (!(vertices.front().w2 == 0.0 && vertices.front().w1 > 0.0))
    throw Error(ErrorKind::AxisViolation,
                "first vertex must lie on the positive w1-axis, got " + describe(vertices.front()), 0);
  if (!(vertices.back().w1 == 0.0 && vertices.back().w2 > 0.0))
    throw Error(ErrorKind::AxisViolation,
                "last vertex must lie on the positive w2-axis, got " + describe(vertices.back()),
                static_cast<int>(n - 1));
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!(vertices[i].w1 > 0.0 && vertices[i].w2 > 0.0))
      throw Error(ErrorKind::AxisViolation,
                  "interior vertex off the open quadrant: " + describe(vertices[i]), static_cast<int>(i));
  }

  MomentProfile p;
  p.vertices_ = std::move(vertices);
  p.tags_ = std::move(tags);
  const double tol = p.tolerance();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Point d = p.vertices_[i + 1] - p.vertices_[i];
    if (norm(d) <= tol)
      throw Error(ErrorKind::SelfIntersection, "zero-length segment", static_cast<int>(i));
    // nu.p is constant along a straight segment and equals cross(p_i, p_i+1)/|d|;
    // positivity is equivalent to strictly increasing polar angle.
    const double support = cross(p.vertices_[i], p.vertices_[i + 1]) / norm(d);
    if (!(support > tol))
      throw Error(ErrorKind::NotStarShaped,
                  "segment " + std::to_string(i) + " is not transverse to the radial direction (nu.p = " +
                      std::to_string(support) + ")",
                  static_cast<int>(i));
    const SegmentTag& tag = p.tags_[i];
    if (tag.kind != CurveKind::Line) {
      for (double t : {0.0, 0.5, 1.0}) {
        // A curve may meet an axis tangentially at the intercepts themselves.
        if ((t == 0.0 && i == 0) || (t == 1.0 && i + 2 == n)) continue;
        const Point c = curve_point(p, i, t);
        const Point nu = curve_normal(p, i, t);
        if (!(dot(nu, c) > tol))
          throw Error(ErrorKind::NotStarShaped, "curved segment fails nu.p > 0", static_cast<int>(i));
      }
    }
  }
  return p;
}

bool MomentProfile::has_curved_segments() const {
  return std::any_of(tags_.begin(), tags_.end(),
                     [](const SegmentTag& t) { return t.kind != CurveKind::Line; });
}

double MomentProfile::diameter() const {
  double d = 0.0;
  for (const Point& v : vertices_) d = std::max(d, norm(v));
  return d;
}

Point MomentProfile::chord_normal(std::size_t seg) const {
  return outward_normal(vertices_[seg + 1] - vertices_[seg]);
}

MomentProfile MomentProfile::with_family(std::string family, std::vector<double> params) const {
  MomentProfile p = *this;
  p.family_ = std::move(family);
  p.params_ = std::move(params);
  return p;
}

MomentProfile MomentProfile::scaled(double s) const {
  if (!(s > 0.0)) throw Error(ErrorKind::ParamOutOfRange, "scale factor must be positive");
  std::vector<Point> v;
  v.reserve(vertices_.size());
  for (const Point& q : vertices_) v.push_back(s * q);
  std::vector<SegmentTag> t = tags_;
  for (SegmentTag& tag : t) {
    tag.center = s * tag.center;
    tag.radius *= s;
  }
  return from_vertices(std::move(v), std::move(t));
}

Point curve_point(const MomentProfile& p, std::size_t seg, double t) {
  const Point a = p.vertex(seg);
  const Point b = p.vertex(seg + 1);
  if (t == 0.0) return a;
  if (t == 1.0) return b;
  const SegmentTag& tag = p.tag(seg);
  switch (tag.kind) {
    case CurveKind::Line:
      return a + t * (b - a);
    case CurveKind::SqrtLine: {
      const Point ma = sqrt_point(a);
      const Point m = ma + t * (sqrt_point(b) - ma);
      return {m.w1 * m.w1, m.w2 * m.w2};
    }
    case CurveKind::Arc: {
      const double alpha = polar_angle(a - tag.center) + t * arc_sweep(a, b, tag.center);
      return tag.center + tag.radius * Point{std::cos(alpha), std::sin(alpha)};
    }
  }
  return a;
}

Point curve_derivative(const MomentProfile& p, std::size_t seg, double t) {
  const Point a = p.vertex(seg);
  const Point b = p.vertex(seg + 1);
  const SegmentTag& tag = p.tag(seg);
  switch (tag.kind) {
    case CurveKind::Line:
      return b - a;
    case CurveKind::SqrtLine: {
      const Point ma = sqrt_point(a);
      const Point dm = sqrt_point(b) - ma;
      const Point m = ma + t * dm;
      return {2.0 * m.w1 * dm.w1, 2.0 * m.w2 * dm.w2};
    }
    case CurveKind::Arc: {
      const double sweep = arc_sweep(a, b, tag.center);
      const double alpha = polar_angle(a - tag.center) + t * sweep;
      return tag.radius * sweep * Point{-std::sin(alpha), std::cos(alpha)};
    }
  }
  return b - a;
}

Point curve_normal(const MomentProfile& p, std::size_t seg, double t) {
  return outward_normal(curve_derivative(p, seg, t));
}

BoundaryHit boundary_along_ray(const MomentProfile& p, double angle) {
  const auto verts = p.vertices();
  if (!(angle >= 0.0 && angle <= std::numbers::pi / 2))
    throw Error(ErrorKind::RayMissesBoundary, "ray angle outside [0, pi/2]");
  std::size_t seg = 0;
  while (seg + 2 < verts.size() && polar_angle(verts[seg + 1]) < angle) ++seg;

  const Point u{std::cos(angle), std::sin(angle)};
  BoundaryHit hit;
  hit.segment = seg;
  if (p.tag(seg).kind == CurveKind::Line) {
    const Point a = verts[seg];
    const Point d = verts[seg + 1] - a;
    hit.t = std::clamp(-cross(u, a) / cross(u, d), 0.0, 1.0);
  } else {
    // polar angle increases monotonically along a valid curve
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      if (cross(u, curve_point(p, seg, mid)) < 0.0) lo = mid; else hi = mid;
    }
    hit.t = 0.5 * (lo + hi);
  }
  hit.point = curve_point(p, seg, hit.t);
  if (p.tag(seg).kind == CurveKind::Line) {
    // keep the hit exactly on the ray
    const double s = dot(u, hit.point);
    hit.point = s * u;
  }
  hit.normal = curve_normal(p, seg, hit.t);
  return hit;
}

Classification classify(const MomentProfile& p) {
  Classification c;
  c.star_shaped.value = true;  // enforced at construction
  const double tol_n = 1e-9;
  const std::size_t nseg = p.segment_count();
  const std::size_t last = p.vertex_count() - 1;

  for (std::size_t s = 0; s < nseg && (c.monotone.value || c.strictly_monotone.value); ++s) {
    std::vector<std::pair<Point, bool>> normals;  // normal, evaluated at an axis endpoint
    if (p.tag(s).kind == CurveKind::Line) {
      normals.push_back({p.chord_normal(s), false});
    } else {
      normals.push_back({curve_normal(p, s, 0.0), s == 0});
      normals.push_back({curve_normal(p, s, 1.0), s + 1 == last});
    }
    for (const auto& [nu, at_axis] : normals) {
      if (c.monotone.value && (nu.w1 < -tol_n || nu.w2 < -tol_n)) {
        c.monotone = {false, static_cast<int>(s), "outward normal has a negative component"};
      }
      if (c.strictly_monotone.value && !at_axis && !(nu.w1 > tol_n && nu.w2 > tol_n)) {
        c.strictly_monotone = {false, static_cast<int>(s), "outward normal has a non-positive component"};
      }
    }
  }
  if (!c.monotone.value && c.strictly_monotone.value)
    c.strictly_monotone = {false, c.monotone.witness, "not monotone"};

  if (!c.monotone.value) {
    c.convex_4d = {false, c.monotone.witness, "not monotone"};
    return c;
  }
  const auto mu = sqrt_transform(p);
  double mu_diam = 0.0;
  for (const Point& m : mu) mu_diam = std::max(mu_diam, norm(m));
  const double tol_mu = 1e-9 * mu_diam * mu_diam;
  const double tol_w = p.tolerance() * p.diameter();
  const auto verts = p.vertices();
  for (std::size_t i = 1; i < last; ++i) {
    // a w-collinear vertex is a smooth point of the mu-image
    const double w_turn = cross(verts[i] - verts[i - 1], verts[i + 1] - verts[i]);
    if (std::abs(w_turn) <= tol_w) continue;
    const double mu_turn = cross(mu[i] - mu[i - 1], mu[i + 1] - mu[i]);
    if (!(mu_turn > tol_mu)) {
      c.convex_4d = {false, static_cast<int>(i),
                     std::abs(mu_turn) <= tol_mu ? "near-collinear sqrt-chain vertex"
                                                 : "sqrt-chain turns away from the interior"};
      break;
    }
  }
  return c;
}

MomentProfile ellipsoid(double a, double b, int segments) {
  if (!(a > 0.0 && b > 0.0) || segments < 1)
    throw Error(ErrorKind::ParamOutOfRange, "ellipsoid needs a, b > 0 and n >= 1");
  std::vector<Point> v;
  v.reserve(segments + 1);
  v.push_back({a, 0.0});
  for (int j = 1; j < segments; ++j) {
    const double t = static_cast<double>(j) / segments;
    v.push_back({a * (1.0 - t), b * t});
  }
  v.push_back({0.0, b});
  return MomentProfile::from_vertices(std::move(v))
      .with_family("ellipsoid", {a, b, static_cast<double>(segments)});
}

MomentProfile ball(double c, int segments) { return ellipsoid(c, c, segments); }

MomentProfile polydisk(double a, double b) {
  if (!(a > 0.0 && b > 0.0)) throw Error(ErrorKind::ParamOutOfRange, "polydisk needs a, b > 0");
  return MomentProfile::from_vertices({{a, 0.0}, {a, b}, {0.0, b}}).with_family("polydisk", {a, b});
}

MomentProfile fc_domain(double b, double c, int samples_per_piece) {
  if (!(b >= 1.0)) throw Error(ErrorKind::ParamOutOfRange, "fc_domain needs b >= 1");
  const double c_min = b / (1.0 + b);
  if (!(c >= c_min * (1.0 - 1e-12) && c < 1.0))
    throw Error(ErrorKind::ParamOutOfRange, "fc_domain needs c in [b/(1+b), 1)");
  if (samples_per_piece < 2) throw Error(ErrorKind::ParamOutOfRange, "fc_domain needs n >= 2");
  const int n = samples_per_piece;

  std::vector<Point> v;
  std::vector<SegmentTag> tags;
  const SegmentTag curved{CurveKind::SqrtLine, {}, 0.0};

  // mu2 = sqrt(c/(1-c)) (1 - mu1) for mu1 in [c, 1]
  const double slope3 = std::sqrt(c / (1.0 - c));
  v.push_back({1.0, 0.0});
  for (int j = 1; j <= n; ++j) {
    const double m1 = 1.0 - j * (1.0 - c) / n;
    const double m2 = slope3 * (1.0 - m1);
    v.push_back({m1 * m1, m2 * m2});
    tags.push_back(curved);
  }
  // mu2 = sqrt(b) - sqrt((b-c)/c) mu1 for mu1 in [0, sqrt(c(b-c)/b)]; the middle
  // piece w1 + w2 = c is straight in w and may be degenerate.
  const double slope1 = std::sqrt((b - c) / c);
  const double m_break = std::sqrt(c * (b - c) / b);
  const auto piece1 = [&](double m1) {
    const double m2 = std::sqrt(b) - slope1 * m1;
    return Point{m1 * m1, m2 * m2};
  };
  const Point start1 = piece1(m_break);
  if (norm(start1 - v.back()) > 1e-13) {
    v.push_back(start1);
    tags.push_back(SegmentTag{});
  } else {
    v.back() = start1;
  }
  for (int j = 1; j <= n; ++j) {
    const double m1 = m_break * (1.0 - static_cast<double>(j) / n);
    v.push_back(j == n ? Point{0.0, b} : piece1(m1));
    tags.push_back(curved);
  }
  return MomentProfile::from_vertices(std::move(v), std::move(tags))
      .with_family("fc", {b, c, static_cast<double>(n)});
}

std::vector<Point> sqrt_transform(std::span<const Point> pts) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const Point& q : pts) out.push_back(sqrt_point(q));
  return out;
}

std::vector<Point> square_transform(std::span<const Point> pts) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const Point& q : pts) out.push_back({q.w1 * q.w1, q.w2 * q.w2});
  return out;
}

MomentProfile smooth_corners(const MomentProfile& p, double r, int arc_segments) {
  if (r == 0.0) return p;
  if (!(r > 0.0) || arc_segments < 1)
    throw Error(ErrorKind::ParamOutOfRange, "smoothing radius must be >= 0");
  const auto verts = p.vertices();
  const std::size_t last = verts.size() - 1;
  const double tol = p.tolerance() * p.diameter();

  std::vector<Point> out_v{verts[0]};
  std::vector<SegmentTag> out_t;
  for (std::size_t i = 1; i <= last; ++i) {
    const bool smoothable = i < last && p.tag(i - 1).kind == CurveKind::Line &&
                            p.tag(i).kind == CurveKind::Line;
    const Point d_in = verts[i] - verts[i - 1];
    const Point d_out = i < last ? verts[i + 1] - verts[i] : Point{};
    if (!smoothable || !(cross(d_in, d_out) > tol)) {
      out_t.push_back(p.tag(i - 1));
      out_v.push_back(verts[i]);
      continue;
    }
    const double len_in = norm(d_in), len_out = norm(d_out);
    const Point u_in = (1.0 / len_in) * d_in;
    const Point u_out = (1.0 / len_out) * d_out;
    const double turn = std::atan2(cross(u_in, u_out), dot(u_in, u_out));
    const double tangent = r * std::tan(0.5 * turn);
    if (!(tangent < 0.5 * std::min(len_in, len_out)))
      throw Error(ErrorKind::RadiusTooLarge,
                  "rounding radius too large for the segments at vertex " + std::to_string(i),
                  static_cast<int>(i));
    const Point p1 = verts[i] - tangent * u_in;
    const Point p2 = verts[i] + tangent * u_out;
    const Point bis = u_out - u_in;
    const Point center = verts[i] + (r / (std::cos(0.5 * turn) * norm(bis))) * bis;

    out_t.push_back(p.tag(i - 1));
    out_v.push_back(p1);
    const double alpha0 = polar_angle(p1 - center);
    const SegmentTag arc{CurveKind::Arc, center, r};
    for (int j = 1; j < arc_segments; ++j) {
      const double alpha = alpha0 + turn * j / arc_segments;
      out_v.push_back(center + r * Point{std::cos(alpha), std::sin(alpha)});
      out_t.push_back(arc);
    }
    out_v.push_back(p2);
    out_t.push_back(arc);
  }
  try {
    return MomentProfile::from_vertices(std::move(out_v), std::move(out_t));
  } catch (const Error& e) {
    throw Error(ErrorKind::SmoothingBreaksStarShape, e.what(), e.index());
  }
}

std::vector<double> turning_angles(const MomentProfile& p) {
  const auto verts = p.vertices();
  std::vector<double> out;
  for (std::size_t i = 1; i + 1 < verts.size(); ++i) {
    const Point d_in = verts[i] - verts[i - 1];
    const Point d_out = verts[i + 1] - verts[i];
    out.push_back(std::atan2(cross(d_in, d_out), dot(d_in, d_out)));
  }
  return out;
}

}  // namespace toric
