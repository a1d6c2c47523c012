#include <doctest.h>

#include <cmath>

#include "toric/corpus.hpp"
#include "toric/experiments.hpp"
#include "toric/invariants.hpp"
#include "toric/surgery.hpp"

using namespace toric;

TEST_SUITE("invariants") {
  TEST_CASE("area") {
    CHECK(area(ball(1)) == 0.5);
    CHECK(area(polydisk(1, 2)) == 2.0);
    for (double b : {1.0, 2.0, 4.0})
      for (double c : {b / (1 + b), 0.9}) {
        // Oracle: composite Simpson on the f_c formula in w1, with the sqrt
        // singularity at w1 = 0 removed by integrating in mu1 instead.
        auto f = [&](double w1) {
          const double r = std::sqrt(w1);
          if (w1 <= c * (b - c) / b) return std::pow(std::sqrt(b) - std::sqrt((b - c) / c) * r, 2);
          if (w1 <= c * c) return c - w1;
          return c / (1 - c) * std::pow(1 - r, 2);
        };
        const int n = 20000;
        double acc = 0;
        for (int i = 0; i <= n; ++i) {
          const double mu = static_cast<double>(i) / n;
          const double wt = (i == 0 || i == n) ? 1 : (i % 2 ? 4 : 2);
          acc += wt * f(mu * mu) * 2 * mu;
        }
        const double simpson = acc / (3.0 * n);
        const double got = area(fc_domain(b, c, 16));
        CHECK(got == doctest::Approx(simpson).epsilon(1e-9));
        CHECK(got == doctest::Approx(fc_area_closed_form(b, c)).epsilon(1e-13));
      }
  }

  TEST_CASE("Ruelle invariant both ways") {
    CHECK(ruelle_closed_form(ellipsoid(1, 4, 1)) == 5.0);
    CHECK(ruelle_closed_form(ball(2)) == 4.0);
    CHECK(ruelle_closed_form(polydisk(3, 0.5)) == 3.5);
    CHECK(std::abs(ruelle_quadrature(ellipsoid(1, 4, 64)) - 5.0) <= 1e-12);
    const auto sm = smooth_corners(polydisk(1, 1), 0.05);
    CHECK(std::abs(ruelle_quadrature(sm, 256) - 2.0) <= 1e-6);
    CHECK(std::abs(ruelle_quadrature(fc_domain(2, 0.8, 16)) - 3.0) <= 1e-6);
    CHECK_THROWS_AS(ruelle_quadrature(ball(1), 1), Error);

    Rng rng(2);
    for (int i = 0; i < 50; ++i) {
      const auto p = random_star_polygon(rng);
      CHECK(std::abs(ruelle_quadrature(p) - ruelle_closed_form(p)) <= 1e-12 * ruelle_closed_form(p));
    }
  }

  TEST_CASE("report values") {
    const auto b = report(ball(1));
    CHECK(b.area == 0.5);
    CHECK(b.contact_volume == 1.0);
    CHECK(b.ruelle == 2.0);
    CHECK(b.t_min == 1.0);
    CHECK(b.sys == 1.0);
    CHECK(b.ru == 2.0);
    CHECK(b.product == 2.0);
    const auto e = report(ellipsoid(1, 4, 1));
    CHECK(e.ruelle == 5.0);
    CHECK(e.area == 2.0);
    CHECK(e.contact_volume == 4.0);
    CHECK(e.t_min == 1.0);
    CHECK(e.sys == 0.25);
    CHECK(e.ru == 2.5);
    CHECK(e.product == 1.25);
    for (double bb : {1.0, 10.0, 100.0, 1000.0})
      CHECK(std::abs(report(polydisk(1, bb)).product - (1 + bb) / (2 * bb)) <= 1e-12);
  }

  TEST_CASE("csv and key-value records") {
    const auto r = report(ellipsoid(1, 4, 1));
    CHECK(report_csv_header() ==
          "area,contact_volume,ruelle,ruelle_quadrature,t_min,sys,ru,product,star_shaped,monotone,"
          "strictly_monotone,convex_4d");
    CHECK(report_csv_row(r).rfind("2,4,5,", 0) == 0);
    CHECK(report_key_value(r).find("product = 1.25") != std::string::npos);
  }

  TEST_CASE("Gromov width and volume bound") {
    CHECK(gromov_width_monotone(ellipsoid(1, 4, 1)) == 1.0);
    CHECK(gromov_width_monotone(ball(2.5)) == 2.5);
    for (double c : {0.5, 0.7, 0.95}) CHECK(gromov_width_monotone(fc_domain(1, c, 16)) == doctest::Approx(c));
    CHECK_THROWS_AS(gromov_width_monotone(MomentProfile::from_vertices({{1, 0}, {1.2, 0.5}, {0, 1}})), Error);

    const auto pd = vol_gr_bound_check(polydisk(1, 2));
    CHECK(pd.lhs == 2.0);
    CHECK(pd.rhs == 2.0);
    CHECK(pd.holds);
    const auto el = vol_gr_bound_check(ellipsoid(1, 4, 1));
    CHECK(el.lhs == 2.0);
    CHECK(el.rhs == 4.0);
    CHECK(el.holds);
    const auto bl = vol_gr_bound_check(ball(1));
    CHECK(bl.lhs == 0.5);
    CHECK(bl.rhs == 1.0);
    CHECK(bl.holds);
  }

  TEST_CASE("criterion verdicts") {
    CHECK(criterion_verdict(polydisk(1, 1000), 0.4, 3).verdict == Verdict::Inconclusive);
    CHECK(criterion_verdict(strangulate(ball(2), 0.01).profile, 0.4, 3).verdict == Verdict::BelowLower);
    CHECK(criterion_verdict(strain(ellipsoid(1, 4), 1e-4).profile, 0.4, 3).verdict == Verdict::AboveUpper);
    const auto v = criterion_verdict(1.0);
    CHECK(v.c_threshold == 0.5);
    CHECK(v.C_threshold == 3.0);
    CHECK_FALSE(v.note.empty());
    CHECK_THROWS_AS(criterion_verdict(1.0, 0.0, 3.0), Error);
    CHECK_THROWS_AS(criterion_verdict(1.0, 4.0, 3.0), Error);
  }

  TEST_CASE("property: monotone corpus") {
    const auto corpus = monotone_corpus(17, 120);
    for (const auto& p : corpus) {
      const auto r = report(p);
      CHECK(r.product >= 0.5 - 1e-9);
      CHECK(r.contact_volume == 2 * r.area);
      CHECK(r.product == doctest::Approx(r.ru * std::sqrt(r.sys)).epsilon(1e-12));
      CHECK(r.t_min == doctest::Approx(gromov_width_monotone(p)).epsilon(1e-9));
      const auto vg = vol_gr_bound_check(p);
      CHECK(vg.holds);
    }
    for (const auto& p : convex4d_corpus(17, 120)) CHECK(report(p).product <= 3 + 1e-9);
  }

  TEST_CASE("t_min against Gromov width on non-strict monotone profiles is logged") {
    // A vertical interior edge makes the profile monotone but not strictly so;
    // here the minimal orbit sits on that edge and undercuts min(w1 + w2).
    const auto p = MomentProfile::from_vertices({{2, 0}, {0.5, 0.5}, {0.5, 2.5}, {0, 3}});
    const auto c = classify(p);
    REQUIRE(c.monotone.value);
    REQUIRE_FALSE(c.strictly_monotone.value);
    const double t = t_min(p).action;
    const double g = gromov_width_monotone(p);
    MESSAGE("non-strict monotone profile: t_min = " << t << ", min(w1 + w2) = " << g);
    CHECK(t <= g);
  }

  TEST_CASE("property: scaling") {
    Rng rng(9);
    for (int i = 0; i < 20; ++i) {
      const auto p = random_star_polygon(rng);
      const auto r = report(p);
      for (double s : {0.1, 3.0, 10.0}) {
        const auto q = report(p.scaled(s));
        CHECK(q.area == doctest::Approx(s * s * r.area).epsilon(1e-12));
        CHECK(q.ruelle == doctest::Approx(s * r.ruelle).epsilon(1e-12));
        CHECK(q.t_min == doctest::Approx(s * r.t_min).epsilon(1e-12));
        CHECK(std::abs(q.product - r.product) <= 1e-10 * std::max(1.0, r.product));
      }
    }
  }
}
