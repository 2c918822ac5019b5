#include <doctest.h>

#include <cmath>
#include <vector>

#include "gabor/grid.hpp"

using namespace gabor;

TEST_CASE("regular lattice") {
  auto g = regular_lattice(1.0, 1.0);
  CHECK(g.product() == doctest::Approx(1.0));
  CHECK(g.admissible());

  auto g2 = regular_lattice(0.5, 1.5);
  CHECK(g2.product() == doctest::Approx(0.75));
  CHECK(g2.admissible());

  auto g3 = regular_lattice(1.2, 1.0);
  CHECK(g3.product() == doctest::Approx(1.2));
  CHECK_FALSE(g3.admissible());

  CHECK_THROWS(regular_lattice(0.0, 1.0));
  CHECK_THROWS(regular_lattice(1.0, -1.0));
}

TEST_CASE("validate_semi_irregular examples") {
  std::vector<double> p1 = {0.0, 0.5, 1.0, 1.5, 2.0};
  auto r1 = validate_semi_irregular(p1, 0.5);
  CHECK(r1.gap_ok);
  REQUIRE(r1.separation_m.has_value());
  CHECK(*r1.separation_m == 2);

  std::vector<double> p2 = {0.0, 0.4, 0.8, 1.2, 1.6, 2.0};
  auto r2 = validate_semi_irregular(p2, 0.5);
  CHECK(r2.gap_ok);
  REQUIRE(r2.separation_m.has_value());
  CHECK(*r2.separation_m == 3);

  std::vector<double> p3 = {0.0, 0.6, 1.2};
  auto r3 = validate_semi_irregular(p3, 0.5);
  CHECK_FALSE(r3.gap_ok);
  CHECK(r3.max_gap == doctest::Approx(0.6));

  std::vector<double> bad = {0.0, 0.5, 0.5};
  CHECK_THROWS(validate_semi_irregular(bad, 1.0));
  std::vector<double> one = {0.0};
  CHECK_THROWS(validate_semi_irregular(one, 1.0));
}

TEST_CASE("separation index on the regular lattice") {
  for (double alpha : {0.25, 0.3, 0.5, 1.0}) {
    std::vector<double> pts;
    for (int n = 0; n <= 40; ++n) pts.push_back(alpha * n);
    auto rep = validate_semi_irregular(pts, alpha);
    CHECK(rep.gap_ok);
    REQUIRE(rep.separation_m.has_value());
    CHECK(*rep.separation_m == static_cast<int>(std::ceil(1.0 / alpha)));
  }
}

TEST_CASE("jittered lattice") {
  auto zero = jittered_lattice(1.0, 0.0, 0, 5);
  REQUIRE(zero.size() == 5);
  for (int n = 0; n < 5; ++n) CHECK(zero[static_cast<std::size_t>(n)] == doctest::Approx(n));

  auto a = jittered_lattice(0.9, 0.2, 7, 64);
  auto b = jittered_lattice(0.9, 0.2, 7, 64);
  CHECK(a == b);

  auto rep = validate_semi_irregular(a, 0.9);
  CHECK(rep.gap_ok);
  CHECK(rep.separation_m.has_value());

  CHECK_THROWS(jittered_lattice(1.0, 0.3, 0, 5));  // jitter >= alpha/4
}

TEST_CASE("jittered lattices always validate after rescaling") {
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    auto pts = jittered_lattice(0.8, 0.15, seed, 48);
    auto rep = validate_semi_irregular(pts, 0.8);
    CHECK(rep.gap_ok);
    CHECK(rep.min_gap > 0.0);
  }
}

TEST_CASE("points csv round trip") {
  const char* path = "points_test.csv";
  auto pts = jittered_lattice(0.9, 0.1, 3, 16);
  save_points_csv(path, pts);
  auto loaded = load_points_csv(path);
  REQUIRE(loaded.size() == pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    CHECK(loaded[i] == doctest::Approx(pts[i]).epsilon(1e-15));
  std::remove(path);
}
