#include <doctest.h>

#include <cmath>
#include <numbers>

#include "toric/corpus.hpp"
#include "toric/geometry.hpp"
#include "toric/invariants.hpp"

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

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("from_vertices accepts the basic shapes") {
    const auto ball1 = MomentProfile::from_vertices({{1, 0}, {0, 1}});
    CHECK(ball1.a_intercept() == 1.0);
    CHECK(ball1.b_intercept() == 1.0);
    const auto rect = MomentProfile::from_vertices({{1, 0}, {1, 2}, {0, 2}});
    CHECK(rect.vertex_count() == 3);
    CHECK(rect.b_intercept() == 2.0);
    // Both segments have nu.p = 0.1/|d| > 0 and the polar angle increases.
    CHECK_NOTHROW(MomentProfile::from_vertices({{1, 0}, {0.1, 0.1}, {0, 1}}));
  }

  TEST_CASE("from_vertices rejections") {
    CHECK(kind_of([] { MomentProfile::from_vertices({{1, 0}}); }) == ErrorKind::TooFewVertices);
    CHECK(kind_of([] { MomentProfile::from_vertices({{1, 0.1}, {0, 1}}); }) == ErrorKind::AxisViolation);
    CHECK(kind_of([] { MomentProfile::from_vertices({{1, 0}, {0.5, 1}}); }) == ErrorKind::AxisViolation);
    CHECK(kind_of([] { MomentProfile::from_vertices({{1, 0}, {0, 0.5}, {0, 1}}); }) == ErrorKind::AxisViolation);
    CHECK(kind_of([] { MomentProfile::from_vertices({{1, 0}, {0.5, 0.5}, {0.5, 0.5}, {0, 1}}); }) ==
          ErrorKind::SelfIntersection);
    // polar angle decreases from (0.2, 0.8) to (0.8, 0.9)
    try {
      MomentProfile::from_vertices({{1, 0}, {0.2, 0.8}, {0.8, 0.9}, {0, 1}});
      FAIL("expected NotStarShaped");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotStarShaped);
      CHECK(e.index() == 1);
    }
  }

  TEST_CASE("named families") {
    const auto e = ellipsoid(1, 4, 1);
    REQUIRE(e.vertex_count() == 2);
    CHECK(e.vertex(0) == Point{1, 0});
    CHECK(e.vertex(1) == Point{0, 4});
    const auto b2 = ellipsoid(2, 2, 1);
    CHECK(b2.a_intercept() == 2.0);
    CHECK(b2.b_intercept() == 2.0);
    const auto e4 = ellipsoid(1, 1, 4);
    REQUIRE(e4.vertex_count() == 5);
    for (const Point& v : e4.vertices()) CHECK(v.w1 + v.w2 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(polydisk(1, 1).vertices().size() == 3);
    CHECK(polydisk(1, 1).vertex(1) == Point{1, 1});
    CHECK(polydisk(1, 1000).b_intercept() == 1000.0);
    CHECK(polydisk(2, 1).vertex(1) == Point{2, 1});
    CHECK(ball(3).vertex(0) == Point{3, 0});
  }

  TEST_CASE("fc_domain breakpoints and extremal case") {
    // b = 1, c = 1/2: both breakpoints at w1 = 0.25, the straight middle piece vanishes.
    const auto f = fc_domain(1, 0.5, 8);
    CHECK(f.vertex_count() == 17);
    CHECK(f.vertex(8).w1 == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(f.vertex(8).w2 == doctest::Approx(0.25).epsilon(1e-15));
    for (std::size_t s = 0; s < f.segment_count(); ++s) CHECK(f.tag(s).kind == CurveKind::SqrtLine);

    // c = b/(1+b): boundary w2 = b (1 - sqrt(w1))^2.
    for (double b : {1.0, 2.0, 4.0}) {
      const auto g = fc_domain(b, b / (1 + b), 16);
      for (std::size_t s = 0; s < g.segment_count(); ++s)
        for (double t : {0.0, 0.3, 0.7}) {
          const Point q = curve_point(g, s, t);
          const double r = 1 - std::sqrt(q.w1);
          CHECK(q.w2 == doctest::Approx(b * r * r).epsilon(1e-12));
        }
    }

    // b = 2, c = 0.8: middle piece w1 + w2 = c on [c(b-c)/b, c^2].
    const auto h = fc_domain(2, 0.8, 8);
    bool found = false;
    for (std::size_t s = 0; s < h.segment_count(); ++s)
      if (h.tag(s).kind == CurveKind::Line) {
        found = true;
        CHECK(h.vertex(s).w1 == doctest::Approx(0.64));
        CHECK(h.vertex(s + 1).w1 == doctest::Approx(0.8 * 1.2 / 2));
        CHECK(h.vertex(s).w1 + h.vertex(s).w2 == doctest::Approx(0.8));
      }
    CHECK(found);

    CHECK(kind_of([] { fc_domain(1, 1.5, 8); }) == ErrorKind::ParamOutOfRange);
    CHECK(kind_of([] { fc_domain(1, 0.3, 8); }) == ErrorKind::ParamOutOfRange);
    CHECK(kind_of([] { fc_domain(0.5, 0.5, 8); }) == ErrorKind::ParamOutOfRange);
  }

  TEST_CASE("classify named shapes") {
    const auto pd = classify(polydisk(1, 2));
    CHECK(pd.star_shaped.value);
    CHECK(pd.monotone.value);
    CHECK_FALSE(pd.strictly_monotone.value);
    CHECK(pd.strictly_monotone.witness >= 0);
    // The sqrt image of a polydisk is a rectangle, a convex set; see the README.
    CHECK(pd.convex_4d.value);

    const auto el = classify(ellipsoid(1, 4, 1));
    CHECK(el.monotone.value);
    CHECK(el.strictly_monotone.value);
    CHECK(el.convex_4d.value);

    // A w-polygon whose sqrt image has a reflex vertex.
    const auto bent = classify(MomentProfile::from_vertices({{1, 0}, {0.1, 0.1}, {0, 1}}));
    CHECK(bent.monotone.value);
    CHECK_FALSE(bent.convex_4d.value);
    CHECK(bent.convex_4d.witness == 1);

    const auto notmono = classify(MomentProfile::from_vertices({{1, 0}, {1.2, 0.5}, {0, 1}}));
    CHECK_FALSE(notmono.monotone.value);
    CHECK(notmono.monotone.witness == 0);
    CHECK_FALSE(notmono.strictly_monotone.value);
  }

  TEST_CASE("sqrt transform") {
    const std::vector<Point> a{{1, 0}, {0, 1}};
    CHECK(sqrt_transform(a) == a);
    const std::vector<Point> b{{4, 0}, {0, 9}};
    CHECK(sqrt_transform(b) == std::vector<Point>{{2, 0}, {0, 3}});
    const auto m = sqrt_transform(std::vector<Point>{{0.5, 0.5}});
    CHECK(m[0].w1 == doctest::Approx(0.7071067811865476).epsilon(1e-15));
  }

  TEST_CASE("smooth_corners") {
    const auto pd = polydisk(1, 1);
    const auto sm = smooth_corners(pd, 0.1);
    CHECK(sm.has_curved_segments());
    CHECK(area(pd) - area(sm) == doctest::Approx((1 - std::numbers::pi / 4) * 0.01).epsilon(1e-12));
    const auto same = smooth_corners(pd, 0.0);
    CHECK(std::vector<Point>(same.vertices().begin(), same.vertices().end()) ==
          std::vector<Point>(pd.vertices().begin(), pd.vertices().end()));
    CHECK(kind_of([&] { smooth_corners(pd, 10.0); }) == ErrorKind::RadiusTooLarge);

    // Total turning is preserved.
    double before = 0, after = 0;
    for (double t : turning_angles(pd)) before += t;
    for (double t : turning_angles(sm)) after += t;
    CHECK(after == doctest::Approx(before).epsilon(1e-9));
  }

  TEST_CASE("boundary_along_ray lands on the curve") {
    const auto sm = smooth_corners(polydisk(1, 1), 0.2);
    for (double ang : {0.1, 0.5, std::numbers::pi / 4, 1.2}) {
      const BoundaryHit h = boundary_along_ray(sm, ang);
      CHECK(std::atan2(h.point.w2, h.point.w1) == doctest::Approx(ang).epsilon(1e-12));
      CHECK(dot(h.normal, h.point) > 0);
    }
  }

  TEST_CASE("property: random profiles keep their invariants") {
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
      const MomentProfile p = (i % 2) ? random_star_polygon(rng) : random_monotone_profile(rng);
      for (std::size_t k = 0; k + 1 < p.vertex_count(); ++k)
        CHECK(polar_angle(p.vertex(k)) < polar_angle(p.vertex(k + 1)));
      const auto c = classify(p);
      CHECK(c.star_shaped.value);
      if (c.strictly_monotone.value) CHECK(c.monotone.value);
      const auto round = square_transform(sqrt_transform(p));
      for (std::size_t k = 0; k < round.size(); ++k) {
        CHECK(round[k].w1 == doctest::Approx(p.vertex(k).w1).epsilon(1e-15));
        CHECK(round[k].w2 == doctest::Approx(p.vertex(k).w2).epsilon(1e-15));
      }
    }
    for (double a : {0.3, 1.0, 7.0})
      for (int n : {1, 3, 10}) CHECK(classify(ellipsoid(a, 2.5, n)).monotone.value);
  }
}
