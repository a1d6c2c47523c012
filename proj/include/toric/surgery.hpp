#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/geometry.hpp"
#include "toric/reeb.hpp"

namespace toric {

struct StrangulationSpec {
  double eps = 0.0;
  double ray_angle = 0.0;
  double theta = 0.0;   // half-angle of the removed sector
  double w_star = 0.0;  // (w1 + w2)/2 at the ray's boundary hit; the diagonal hit is (w_star, w_star)
  Point hit;
  Point notch;  // sector apex; (eps, eps) on the diagonal
  int notch_vertex = -1;
};

struct StrainSpec {
  double eps = 0.0;
  double k = 0.0;               // slope of the flattened boundary at (a, 0)
  double w_star_eps = 0.0;      // eps/k + a
  double spike_intercept = 0.0; // 1/sqrt(eps)
  int spike_vertex = -1;        // index of (w_star_eps, eps) in the output
};

struct SurgeryOutcome {
  MomentProfile profile;
  double volume_delta = 0.0;  // Vol(out) - Vol(in)
  double volume_delta_bound = 0.0;
  std::vector<OrbitDatum> new_orbit_witnesses;
  Classification preserved_flags;
  std::optional<StrangulationSpec> strangulation;
  std::optional<StrainSpec> strain;
};

inline constexpr double kDiagonal = 0.78539816339744830962;  // pi/4

/// Removes from Omega the open sector with apex on the ray at parameter eps
/// and the largest half-angle whose trace on the boundary stays inside the
/// eps-box around the ray's boundary hit.
SurgeryOutcome strangulate(const MomentProfile& p, double eps, double ray_angle = kDiagonal);

/// Largest sector half-angle for the eps-box containment (bisection, 60 steps).
double strangulation_half_angle(const MomentProfile& p, Point apex, double ray_angle, Point hit, double eps);

/// Omega union the triangle (0,0), (eps/k + a, eps), (1/sqrt(eps), 0). The first
/// segment of the input must be straight (see flatten_near_intercept); a given
/// `k` must match its slope.
SurgeryOutcome strain(const MomentProfile& p, double eps, std::optional<double> k = std::nullopt);

struct FlattenResult {
  MomentProfile profile;
  double k = 0.0;
  double area_change = 0.0;
};

/// Replaces the boundary within `radius` of (a, 0) by its chord, keeping a fixed.
FlattenResult flatten_near_intercept(const MomentProfile& p, double radius);

enum class RadialMode { Max, Min };

/// Boundary of the union (Max) or intersection (Min) of the star-shaped region
/// under `p` with the region under the polyline `other`, which must have
/// increasing polar angle; outside its angular range `other` is ignored.
/// Tags of segments of `p` that survive intact are kept.
MomentProfile radial_combine(const MomentProfile& p, const std::vector<Point>& other, RadialMode mode);

std::string surgery_key_value(const SurgeryOutcome& o);

}  // namespace toric
