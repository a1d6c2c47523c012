#include <doctest.h>

#include <cmath>
#include <numbers>

#include "toric/corpus.hpp"
#include "toric/invariants.hpp"
#include "toric/surgery.hpp"

using namespace toric;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Io;
}

bool has_vertex(const MomentProfile& p, Point q, double tol) {
  for (const Point& v : p.vertices())
    if (norm(v - q) <= tol) return true;
  return false;
}

}  // namespace

TEST_SUITE("surgery") {
  TEST_CASE("strangulated ball") {
    const auto in = ball(2);
    const auto o = strangulate(in, 0.1);
    REQUIRE(o.strangulation);
    const auto& s = *o.strangulation;
    CHECK(s.w_star == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(norm(s.notch - Point{0.1, 0.1}) <= 1e-15);
    CHECK(has_vertex(o.profile, {0.1, 0.1}, 1e-15));
    // The sector edge meets w1 + w2 = 2 at the eps-box corner: tan(theta) = eps/(w* - eps).
    CHECK(std::tan(s.theta) == doctest::Approx(0.1 / 0.9).epsilon(1e-12));
    REQUIRE(o.new_orbit_witnesses.size() == 1);
    CHECK(o.new_orbit_witnesses[0].mn == IntVec{1, 1});
    CHECK(o.new_orbit_witnesses[0].action == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(ruelle_closed_form(o.profile) == 4.0);
    // removed area: the triangle (eps, eps), (1 + eps, 1 - eps), (1 - eps, 1 + eps)
    CHECK(o.volume_delta == doctest::Approx(-2 * 0.1 * 0.9).epsilon(1e-10));
    CHECK(std::abs(o.volume_delta) <= o.volume_delta_bound);
    CHECK(o.volume_delta_bound == doctest::Approx(8 * s.theta).epsilon(1e-14));
    CHECK(o.preserved_flags.star_shaped.value);
    CHECK_FALSE(o.preserved_flags.monotone.value);
    CHECK(t_min(o.profile).action <= 0.2 + 1e-12);
  }

  TEST_CASE("strangulation errors and general rays") {
    CHECK(kind_of([] { strangulate(ball(2), 2.0); }) == ErrorKind::EpsTooLarge);
    CHECK(kind_of([] { strangulate(ball(2), 0.0); }) == ErrorKind::EpsTooLarge);
    CHECK(kind_of([] { strangulate(ball(2), 0.1, 0.0); }) == ErrorKind::RayMissesBoundary);
    CHECK(kind_of([] { strangulate(ball(2), 0.1, 2.0); }) == ErrorKind::RayMissesBoundary);

    const auto o = strangulate(ellipsoid(1, 4, 1), 0.05, 1.0);
    const auto& s = *o.strangulation;
    CHECK(s.notch.w1 + s.notch.w2 == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(std::atan2(s.notch.w2, s.notch.w1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(o.profile.a_intercept() == 1.0);
    CHECK(o.profile.b_intercept() == 4.0);
    CHECK(std::abs(o.volume_delta) <= o.volume_delta_bound);
    REQUIRE_FALSE(o.new_orbit_witnesses.empty());
    CHECK(cone_contains(normal_cone(o.profile, s.notch_vertex), o.new_orbit_witnesses[0].mn));
  }

  TEST_CASE("property: strangulation certificates over random polygons") {
    Rng rng(21);
    int done = 0;
    for (int i = 0; i < 60; ++i) {
      const auto p = random_star_polygon(rng);
      const double ray = 0.3 + 0.9 * (i % 7) / 6.0;
      const BoundaryHit h = boundary_along_ray(p, ray);
      const double eps = 0.1 * 0.5 * (h.point.w1 + h.point.w2);
      try {
        const auto o = strangulate(p, eps, ray);
        ++done;
        CHECK(o.profile.a_intercept() == p.a_intercept());
        CHECK(o.profile.b_intercept() == p.b_intercept());
        CHECK(std::abs(o.volume_delta) <= o.volume_delta_bound + 1e-9);
        CHECK(o.volume_delta <= 0);
        CHECK(o.preserved_flags.star_shaped.value);
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ClippingBreaksStarShape);
      }
    }
    CHECK(done > 40);
  }

  TEST_CASE("strain on E(1,4)") {
    const auto in = ellipsoid(1, 4, 1);
    const double t_in = t_min(in).action;
    for (double eps : {1e-2, 1e-3, 1e-4}) {
      const auto o = strain(in, eps);
      REQUIRE(o.strain);
      const auto& s = *o.strain;
      CHECK(s.k == -4.0);
      CHECK(s.w_star_eps == eps / -4.0 + 1.0);
      CHECK(s.spike_intercept == 1 / std::sqrt(eps));
      CHECK(ruelle_closed_form(o.profile) == 4.0 + 1 / std::sqrt(eps));
      CHECK(o.volume_delta >= 0);
      CHECK(o.volume_delta <= std::sqrt(eps) / 2 + 1e-9);
      // added triangle (a,0), (w*, eps), (1/sqrt(eps), 0)
      CHECK(o.volume_delta == doctest::Approx(0.5 * eps * (1 / std::sqrt(eps) - 1)).epsilon(1e-10));
      CHECK(t_min(o.profile).action >= t_in / 2 - 1e-9);
      CHECK(o.preserved_flags.strictly_monotone.value);
      REQUIRE(o.new_orbit_witnesses.size() == 2);
      CHECK(o.new_orbit_witnesses[0].action == s.spike_intercept);
      CHECK(o.new_orbit_witnesses[1].action >= 0.5);
    }
  }

  TEST_CASE("strain preconditions") {
    CHECK(kind_of([] { strain(polydisk(1, 2), 0.01); }) == ErrorKind::NotFlattened);
    CHECK(kind_of([] { strain(fc_domain(1, 0.6, 8), 0.01); }) == ErrorKind::NotFlattened);
    CHECK(kind_of([] { strain(ellipsoid(1, 4), 0.01, -3.0); }) == ErrorKind::NotFlattened);
    CHECK_NOTHROW(strain(ellipsoid(1, 4), 0.01, -4.0));
    CHECK(kind_of([] { strain(ellipsoid(1, 4), 5.0); }) == ErrorKind::EpsTooLargeForNeighborhood);
    CHECK(kind_of([] { strain(ellipsoid(1, 4, 8), 0.6); }) == ErrorKind::EpsTooLargeForNeighborhood);
    // spike no longer past the intercept: 1/sqrt(0.9) < w*
    CHECK(kind_of([] { strain(ellipsoid(1.2, 4), 0.9); }) == ErrorKind::ValidityConditionFails);
    CHECK(kind_of([] { strain(ball(1), -1.0); }) == ErrorKind::ParamOutOfRange);
  }

  TEST_CASE("strain with a positive first slope") {
    const auto p = MomentProfile::from_vertices({{1, 0}, {1.2, 0.5}, {0, 1}});
    const auto o = strain(p, 0.04);
    CHECK(o.strain->k == doctest::Approx(2.5));
    CHECK(o.profile.a_intercept() == 5.0);
    CHECK(o.volume_delta <= 0.1 + 1e-12);
  }

  TEST_CASE("flatten_near_intercept") {
    const auto e = ellipsoid(1, 4, 1);
    const auto f = flatten_near_intercept(e, 0.5);
    CHECK(f.k == -4.0);
    CHECK(f.area_change == 0.0);
    CHECK(f.profile.vertex_count() == e.vertex_count());
    CHECK(kind_of([&] { flatten_near_intercept(e, 10.0); }) == ErrorKind::RadiusTooLarge);
    CHECK(kind_of([&] { flatten_near_intercept(e, 0.0); }) == ErrorKind::ParamOutOfRange);

    const double c = 0.6, r = 0.05;
    const auto fc = fc_domain(1, c, 16);
    const auto g = flatten_near_intercept(fc, r);
    CHECK(g.k < 0);
    CHECK(g.profile.a_intercept() == 1.0);
    CHECK(g.profile.tag(0).kind == CurveKind::Line);
    CHECK(norm(g.profile.vertex(1) - Point{1, 0}) == doctest::Approx(r).epsilon(1e-12));
    // chord slope from the f_c formula
    const Point x = g.profile.vertex(1);
    CHECK(x.w2 == doctest::Approx(c / (1 - c) * std::pow(1 - std::sqrt(x.w1), 2)).epsilon(1e-12));
    CHECK(g.k == doctest::Approx(x.w2 / (x.w1 - 1)).epsilon(1e-15));
    CHECK(std::abs(g.area_change) <= r * r);
    CHECK(g.area_change > 0);  // the curve is convex near (1, 0), the chord lies above it
    CHECK(kind_of([&] { flatten_near_intercept(fc, 0.9); }) == ErrorKind::RadiusTooLarge);

    const auto s = strain(g.profile, 1e-4);
    CHECK(s.preserved_flags.strictly_monotone.value);
  }

  TEST_CASE("radial_combine keeps untouched tags") {
    const auto sm = smooth_corners(polydisk(1, 1), 0.2, 8);
    const auto o = strangulate(sm, 0.05);
    int arcs = 0;
    for (const auto& t : o.profile.tags()) arcs += t.kind == CurveKind::Arc;
    CHECK(arcs > 0);
    CHECK(o.profile.has_curved_segments());
  }

  TEST_CASE("surgery record") {
    const auto kv = surgery_key_value(strangulate(ball(2), 0.1));
    CHECK(kv.find("surgery=strangulation") != std::string::npos);
    CHECK(kv.find("witness=1,1,") != std::string::npos);
    CHECK(kv.find("volume_delta_bound=") != std::string::npos);
  }
}
