#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>

#include "toric/corpus.hpp"
#include "toric/io.hpp"
#include "toric/svg.hpp"

using namespace toric;

namespace {

void check_same(const MomentProfile& a, const MomentProfile& b) {
  REQUIRE(a.vertex_count() == b.vertex_count());
  for (std::size_t i = 0; i < a.vertex_count(); ++i) CHECK(a.vertex(i) == b.vertex(i));
  for (std::size_t s = 0; s < a.segment_count(); ++s) CHECK(a.tag(s) == b.tag(s));
  CHECK(a.family() == b.family());
  CHECK(std::vector<double>(a.params().begin(), a.params().end()) ==
        std::vector<double>(b.params().begin(), b.params().end()));
}

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("profile text round-trips bit-exactly") {
    check_same(ellipsoid(1, 4, 3), read_profile(write_profile(ellipsoid(1, 4, 3))));
    check_same(fc_domain(2, 0.75, 9), read_profile(write_profile(fc_domain(2, 0.75, 9))));
    const auto sm = smooth_corners(polydisk(1.1, 2.3), 0.17);
    check_same(sm, read_profile(write_profile(sm)));
    Rng rng(4);
    for (int i = 0; i < 50; ++i) {
      const auto p = random_star_polygon(rng).scaled(std::numbers::pi);
      check_same(p, read_profile(write_profile(p)));
    }
  }

  TEST_CASE("reader details") {
    const auto p = read_profile(
        "# a rectangle\n"
        "family: polydisk\n"
        "params: 1 2\n"
        "vertex: 1 0\n"
        "vertex: 1 2   # corner\n"
        "vertex: 0 2\n");
    CHECK(p.family() == "polydisk");
    CHECK(p.vertex(1) == Point{1, 2});
    CHECK_THROWS_AS(read_profile("vertex: 1 0\nvertex: 0 x\n"), Error);
    CHECK_THROWS_AS(read_profile("vertex: 1 0\nvertex: 0 1\nsegment_tag: 3 arc 0 0 1\n"), Error);
    CHECK_THROWS_AS(read_profile("vertex: 1 0\nvertex: 0 1\nsegment_tag: 0 spline\n"), Error);
    CHECK_THROWS_AS(read_profile("colour: red\n"), Error);
    try {
      read_profile("vertex: 1 0\nvertex: 0.2 0.8\nvertex: 0.8 0.9\nvertex: 0 1\n");
      FAIL("expected NotStarShaped");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotStarShaped);
    }
  }

  TEST_CASE("files and family specs") {
    const std::string path = temp_path("toric_io_test_profile.txt");
    save_profile(fc_domain(1, 0.5, 4), path);
    check_same(fc_domain(1, 0.5, 4), load_profile(path));
    check_same(fc_domain(1, 0.5, 4), resolve_profile(path));
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_profile(path), Error);

    check_same(parse_family_spec("ellipsoid:1,4"), ellipsoid(1, 4, 1));
    check_same(parse_family_spec("ellipsoid:1,4,8"), ellipsoid(1, 4, 8));
    check_same(parse_family_spec("ball:2"), ball(2));
    check_same(parse_family_spec("polydisk:1, 2"), polydisk(1, 2));
    check_same(parse_family_spec("fc:1,0.5"), fc_domain(1, 0.5, 32));
    CHECK_THROWS_AS(parse_family_spec("polydisk:2"), Error);
    CHECK_THROWS_AS(parse_family_spec("torus:1,2"), Error);
    CHECK_THROWS_AS(parse_family_spec("ellipsoid:1,4,2.5"), Error);
    CHECK_THROWS_AS(resolve_profile("no/such/file"), Error);
  }

  TEST_CASE("orbit csv") {
    const auto csv = orbits_csv(orbits_at_vertex(polydisk(1, 2), 1, 2.0));
    CHECK(csv ==
          "m,n,w1,w2,action,location_kind,location_index\n"
          "1,0,1,2,1,vertex,1\n"
          "0,1,1,2,2,vertex,1\n");
  }

  TEST_CASE("svg output") {
    const std::string s = profile_svg(ball(1));
    auto count = [&](const std::string& text, const std::string& needle) {
      std::size_t n = 0;
      for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
      return n;
    };
    CHECK(count(s, "<path") == 1);
    CHECK(count(s, "class=\"endpoint\"") == 2);

    const auto st = strangulate(ball(2), 0.1);
    const std::string with_sector = profile_svg(st.profile, {sector_overlay(*st.strangulation, 1.0)});
    CHECK(count(with_sector, "<polygon class=\"sector\"") == 1);
    const auto sp = strain(ellipsoid(1, 4), 0.01);
    CHECK(count(profile_svg(sp.profile, {triangle_overlay(*sp.strain)}), "<polygon class=\"triangle\"") == 1);
    CHECK(count(profile_svg(fc_domain(1, 0.5, 8), {gc_overlay(1, 0.5)}), "<polyline class=\"gc\"") == 1);

    const std::string plot = loglog_svg({{"product", {1e-2, 1e-3}, {3.4, 8.8}}}, "eps", "product");
    CHECK(count(plot, "<polyline") == 1);

    CHECK_THROWS_AS(emit_profile_svg(ball(1), "/nonexistent-dir/x.svg"), Error);
  }
}
