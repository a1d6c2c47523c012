#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/geometry.hpp"

namespace toric {

struct IntVec {
  long long m = 0;
  long long n = 0;
  friend bool operator==(IntVec, IntVec) = default;
};

/// Primitive integer vector parallel to `dir` if the direction ratio is
/// rational with max(|m|,|n|) <= max_coord (continued-fraction reconstruction
/// at relative tolerance `rel_tol`); nullopt otherwise.
std::optional<IntVec> primitive_direction(Point dir, long long max_coord = 1'000'000,
                                          double rel_tol = 1e-13);

long long gcd_ll(long long a, long long b);

enum class LocationKind { Axis, Segment, Vertex };
const char* to_string(LocationKind kind);

struct OrbitDatum {
  IntVec mn;
  Point base_point;
  double action = 0.0;
  LocationKind location_kind = LocationKind::Vertex;
  int location_index = 0;
  bool on_cone_boundary = false;
};

/// Total order: action, then (m, n) lexicographically, then location.
bool orbit_less(const OrbitDatum& x, const OrbitDatum& y);

struct AngularVelocities {
  double theta1 = 0.0;
  double theta2 = 0.0;
};

/// Reeb field on the torus over `point` with outward unit normal `normal`:
/// Theta_i = 2 pi nu_i / (nu . p).
AngularVelocities reeb_angular_velocities(Point point, Point normal);

/// (nu1 + nu2) / (nu . p), the asymptotic rotation density.
double rotation_density(Point point, Point normal);

/// Orbit family of a segment whose normal is rational; the action is constant
/// along the segment and reported at the midpoint.
std::optional<OrbitDatum> closed_orbit_on_segment(const MomentProfile& p, std::size_t seg);

/// Boundary ray of a normal cone; `lattice` is set when the direction is rational.
struct ConeRay {
  Point dir;
  std::optional<IntVec> lattice;
};

/// Directions swept by any smoothing of an interior vertex: the short arc
/// between the normals of the two incident segments, closed at both ends.
struct NormalCone {
  std::size_t vertex = 0;
  Point apex;
  ConeRay lo;  // counterclockwise from lo to hi
  ConeRay hi;
  bool degenerate = false;
  bool reflex = false;
};

NormalCone normal_cone(const MomentProfile& p, std::size_t vertex);
bool cone_contains(const NormalCone& cone, IntVec v);
/// Infimum of (unit direction . apex) over the cone.
double cone_min_unit_action(const NormalCone& cone);

/// Primitive vectors of a vertex normal cone with action <= cutoff, sorted by
/// orbit_less. Axis endpoints yield only their axis orbit.
std::vector<OrbitDatum> orbits_at_vertex(const MomentProfile& p, std::size_t vertex, double action_cutoff);

/// Every closed orbit (axis, segment and vertex families) with action <= cutoff.
std::vector<OrbitDatum> enumerate_orbits(const MomentProfile& p, double action_cutoff);

enum class TminMethod { Fast, Oracle };

struct TminResult {
  double action = 0.0;
  OrbitDatum witness;
  long long nodes_visited = 0;
};

/// Minimal action of a closed Reeb orbit. `Fast` runs a pruned Stern-Brocot
/// descent per cone; `Oracle` scans every primitive vector with
/// max(|m|,|n|) <= oracle_n and throws OracleCutoffInsufficient when a vector
/// outside the box could still beat the result.
TminResult t_min(const MomentProfile& p, TminMethod method = TminMethod::Fast, int oracle_n = 200);

/// Single-threaded brute force kept as the reference for the OpenMP oracle.
TminResult t_min_oracle_serial(const MomentProfile& p, int oracle_n = 200);

struct ShearCheckResult {
  Point base_point;
  double time = 0.0;
  double monodromy[2][2] = {{1.0, 0.0}, {0.0, 1.0}};  // in the frame (e1, e2)
  double shear_coefficient = 0.0;                     // f(T)/T
  double residual = 0.0;                              // max(|M11-1|, |M12|, |M22-1|)
  double normal_leak = 0.0;                           // component of d(phi)e1 off the boundary
};

/// Finite-difference linearisation of the exact toric Reeb flow at a smooth
/// boundary point. Perturbations are projected back to the boundary radially.
ShearCheckResult shear_monodromy_check(const MomentProfile& p, Point point, double time, double h);

}  // namespace toric
