#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "toric/error.hpp"

namespace toric {

/// A point of the moment plane, in (w1, w2) = (pi|z1|^2, pi|z2|^2) units.
struct Point {
  double w1 = 0.0;
  double w2 = 0.0;

  friend Point operator+(Point p, Point q) { return {p.w1 + q.w1, p.w2 + q.w2}; }
  friend Point operator-(Point p, Point q) { return {p.w1 - q.w1, p.w2 - q.w2}; }
  friend Point operator*(double s, Point p) { return {s * p.w1, s * p.w2}; }
  friend bool operator==(Point p, Point q) = default;
};

inline double dot(Point p, Point q) { return p.w1 * q.w1 + p.w2 * q.w2; }
inline double cross(Point p, Point q) { return p.w1 * q.w2 - p.w2 * q.w1; }
inline double norm(Point p) { return std::hypot(p.w1, p.w2); }
inline double polar_angle(Point p) { return std::atan2(p.w2, p.w1); }

/// Unit outward normal of a boundary piece traversed in direction `d`
/// (profiles run counterclockwise around the origin, so outward is to the right).
inline Point outward_normal(Point d) {
  const double len = norm(d);
  return {d.w2 / len, -d.w1 / len};
}

/// Exact shape of the boundary between two consecutive vertices. Untagged
/// segments are straight.
enum class CurveKind {
  Line,
  SqrtLine,  // image under w = mu^2 of the straight mu-segment between the endpoints
  Arc,       // circular arc around `center`, traversed counterclockwise
};

struct SegmentTag {
  CurveKind kind = CurveKind::Line;
  Point center{};
  double radius = 0.0;

  friend bool operator==(const SegmentTag&, const SegmentTag&) = default;
};

const char* to_string(CurveKind kind);

/// Boundary arc of a star-shaped toric domain, from (a, 0) to (0, b).
/// Immutable after construction; every instance satisfies the axis,
/// star-shape and simplicity invariants.
class MomentProfile {
 public:
  static MomentProfile from_vertices(std::vector<Point> vertices,
                                     std::vector<SegmentTag> tags = {});

  std::span<const Point> vertices() const { return vertices_; }
  std::span<const SegmentTag> tags() const { return tags_; }
  const Point& vertex(std::size_t i) const { return vertices_[i]; }
  const SegmentTag& tag(std::size_t seg) const { return tags_[seg]; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t segment_count() const { return vertices_.size() - 1; }

  double a_intercept() const { return vertices_.front().w1; }
  double b_intercept() const { return vertices_.back().w2; }

  bool has_curved_segments() const;
  double diameter() const;
  /// Scale-aware tolerance used by every geometric predicate.
  double tolerance() const { return 1e-9 * diameter(); }

  /// Outward unit normal of the chord of segment `seg`.
  Point chord_normal(std::size_t seg) const;

  // Free-form provenance carried through the profile file format.
  const std::string& family() const { return family_; }
  std::span<const double> params() const { return params_; }
  MomentProfile with_family(std::string family, std::vector<double> params) const;

  MomentProfile scaled(double s) const;

 private:
  MomentProfile() = default;

  std::vector<Point> vertices_;
  std::vector<SegmentTag> tags_;
  std::string family_ = "custom";
  std::vector<double> params_;
};

// Exact boundary curves. `t` runs over [0, 1] from vertex `seg` to `seg + 1`.
Point curve_point(const MomentProfile& p, std::size_t seg, double t);
Point curve_derivative(const MomentProfile& p, std::size_t seg, double t);
/// Outward unit normal of the exact curve at parameter t.
Point curve_normal(const MomentProfile& p, std::size_t seg, double t);

struct BoundaryHit {
  Point point;
  Point normal;
  std::size_t segment = 0;
  double t = 0.0;
};

/// Intersection of the ray from the origin at polar angle `angle` with the
/// exact boundary curve.
BoundaryHit boundary_along_ray(const MomentProfile& p, double angle);

struct Flag {
  bool value = true;
  int witness = -1;  // violating segment or vertex index when false
  std::string detail;
};

struct Classification {
  Flag star_shaped;
  Flag monotone;
  Flag strictly_monotone;
  Flag convex_4d;
};

Classification classify(const MomentProfile& p);

MomentProfile ellipsoid(double a, double b, int segments = 1);
MomentProfile ball(double c, int segments = 1);
MomentProfile polydisk(double a, double b);

/// Boundary w2 = f_c(w1) of the volume-minimising convex domain with Gromov
/// width c and intercepts (1, 0), (0, b). Curved pieces are sampled uniformly
/// in mu = sqrt(w) and tagged, so area integrals are exact.
MomentProfile fc_domain(double b, double c, int samples_per_piece);

std::vector<Point> sqrt_transform(std::span<const Point> pts);
std::vector<Point> square_transform(std::span<const Point> pts);
inline std::vector<Point> sqrt_transform(const MomentProfile& p) { return sqrt_transform(p.vertices()); }

/// Replaces every convex corner between two straight segments with a
/// circular arc of radius r sampled into `arc_segments` tagged pieces.
MomentProfile smooth_corners(const MomentProfile& p, double r, int arc_segments = 16);

/// Signed turning angle of the chord directions at each interior vertex.
std::vector<double> turning_angles(const MomentProfile& p);

}  // namespace toric
