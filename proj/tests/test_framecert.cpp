#include <doctest.h>

#include <cmath>

#include "gabor/framecert.hpp"
#include "gabor/quadrature.hpp"
#include "gabor/report_json.hpp"
#include "gabor/spectral.hpp"

using namespace gabor;

TEST_CASE("classification truth table") {
  auto exp1 = Window::one_sided_exponential(1.0);
  auto texp = Window::truncated_exponential(1.0, 1.0);
  auto lin = Window::truncated_linear(1.0);

  CHECK(classify(exp1, 1.0, 1.0).verdict == Verdict::Frame);
  CHECK(classify(texp, 1.0, 1.0).verdict == Verdict::Frame);

  auto c3 = classify(lin, 1.0, 0.5);
  CHECK(c3.verdict == Verdict::NotFrame);
  CHECK(c3.reason == Reason::BoundaryRule);

  auto c4 = classify(exp1, 1.2, 1.0);
  CHECK(c4.verdict == Verdict::NotFrame);
  CHECK(c4.reason == Reason::ProductRule);

  auto c5 = classify(lin, 1.5, 0.5);
  CHECK(c5.verdict == Verdict::NotFrame);
  CHECK(c5.reason == Reason::SupportRule);

  CHECK(classify(lin, 0.5, 1.0).verdict == Verdict::Frame);  // alpha < x0

  auto increasing = Window::tabulated({0.0, 1.0, 2.0}, {0.5, 1.0, 0.2});
  CHECK(classify(increasing, 0.5, 0.5).verdict == Verdict::Unsupported);
}

TEST_CASE("certification pipeline on the exponential window") {
  auto w = Window::one_sided_exponential(1.0);
  GridSpec grid = regular_lattice(1.0, 1.0);
  auto rep = certify_lower_frame_bound(w, grid, 8, 32);
  CHECK(rep.verdict == Verdict::Frame);
  CHECK(rep.reason == Reason::Certified);
  REQUIRE(rep.certified_epsilon.has_value());
  CHECK(*rep.certified_epsilon > 0.0);
  REQUIRE(rep.certified_A.has_value());
  CHECK(*rep.certified_A > 0.0);
  REQUIRE(rep.empirical_A.has_value());
  REQUIRE(rep.empirical_B.has_value());
  CHECK(*rep.empirical_A <= *rep.empirical_B);
  CHECK(*rep.certified_A <= *rep.empirical_A + 1e-9);
  CHECK(rep.failing_x.empty());
  // certificate inputs are the analytic floors
  REQUIRE(rep.cert.has_value());
  CHECK(rep.cert->delta == doctest::Approx(std::exp(-1.0)));
  CHECK(rep.cert->lambda == doctest::Approx(std::exp(-1.0)));
  CHECK(rep.cert->C == doctest::Approx(std::exp(1.0)));

  auto j = to_json(rep);
  CHECK(j["verdict"] == "Frame");
  CHECK(j["certificate"]["epsilon"].get<double>() > 0.0);
}

TEST_CASE("certification refuses non-frame configurations") {
  auto lin = Window::truncated_linear(1.0);
  GridSpec grid = regular_lattice(1.0, 1.0);
  CHECK_THROWS(certify_lower_frame_bound(lin, grid, 8, 16));
}

TEST_CASE("semi-irregular certification") {
  auto w = Window::one_sided_exponential(1.0);
  SemiIrregularGrid irr{jittered_lattice(0.9, 0.1, 3, 64), 1.0, {}, 0.9};
  auto rep = certify_lower_frame_bound(w, GridSpec{irr}, 8, 24);
  REQUIRE(rep.certified_epsilon.has_value());
  CHECK(*rep.certified_epsilon > 0.0);
  CHECK(rep.failing_x.empty());
}

TEST_CASE("soundness chain: sigma_min of every fiber dominates the certificate") {
  auto w = Window::one_sided_exponential(1.0);
  GridSpec grid = regular_lattice(0.7, 1.0);
  auto rep = certify_lower_frame_bound(w, grid, 8, 24);
  REQUIRE(rep.certified_epsilon.has_value());
  double q = rep.q;
  for (int i = 0; i < 8; ++i) {
    double x = (i + 0.5) / 8.0;
    for (long M : {8L, 16L, 24L}) {
      auto D = u_transform(reduced_upper_triangular(w, 0.7, 1.0, x, -M, M), q);
      auto sr = extreme_singular_values(D.matrix);
      CHECK(sr.sigma_min >= *rep.certified_epsilon - 1e-10);
    }
  }
}

TEST_CASE("empirical bounds collapse when the support leaves gaps") {
  auto lin = Window::truncated_linear(1.0);
  GridSpec grid = regular_lattice(1.5, 0.5);
  auto [ea, eb] = empirical_frame_bounds(lin, grid, 8, 16);
  CHECK(ea <= 1e-20);  // a fully zero column forces a kernel vector
  CHECK(eb > 0.0);
}

TEST_CASE("incompleteness witness") {
  auto lin = Window::truncated_linear(1.0);
  auto res = incompleteness_witness(lin, 1.5, 0.5);
  CHECK(res.h_lo == doctest::Approx(1.125));
  CHECK(res.h_hi == doctest::Approx(1.375));
  CHECK(res.residual <= 1e-12);

  auto texp = Window::truncated_exponential(1.0, 1.0);
  CHECK(incompleteness_witness(texp, 2.0, 0.5).residual <= 1e-12);

  CHECK_THROWS(incompleteness_witness(lin, 1.0, 0.5));  // alpha = x0
  auto exp1 = Window::one_sided_exponential(1.0);
  CHECK_THROWS(incompleteness_witness(exp1, 2.0, 0.25));  // infinite support
}

TEST_CASE("boundary degeneration") {
  auto lin = Window::truncated_linear(1.0);
  std::vector<double> eps = {0.2, 0.1, 0.05, 0.025};
  auto r = boundary_degeneration_demo(lin, 1.0, eps);
  REQUIRE(r.size() == 4);
  for (std::size_t i = 1; i < r.size(); ++i) CHECK(r[i] < r[i - 1]);
  CHECK(r[3] / r[0] <= 0.1);

  auto texp = Window::truncated_exponential(1.0, 1.0);
  CHECK_THROWS(boundary_degeneration_demo(texp, 1.0, eps));  // boundary limit > 0
}

TEST_CASE("direct frame sum vanishes for a witness in the coverage gap") {
  auto lin = Window::truncated_linear(1.0);
  GridSpec grid = regular_lattice(1.5, 0.5);
  auto f = TestFunction::indicator(1.2, 1.3);
  auto res = frame_operator_quadratic_form(lin, grid, f, 8);
  CHECK(res.direct <= 1e-18);
  CHECK(res.fiber <= 1e-18);
}

TEST_CASE("adaptive quadrature sanity on a window norm") {
  auto w = Window::one_sided_exponential(1.0);
  double norm2 = adaptive_simpson([&](double u) { return w.value(u) * w.value(u); }, 0.0,
                                  40.0, 1e-12);
  CHECK(norm2 == doctest::Approx(0.5).epsilon(1e-10));
  // the (0,0) term of the frame sum for f = g is then ||g||^4
  CHECK(norm2 * norm2 == doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("fiberization identity at modest truncation") {
  auto w = Window::one_sided_exponential(1.0);
  GridSpec grid = regular_lattice(1.0, 1.0);
  auto f = TestFunction::gaussian(3.0, 0.5);
  auto res = frame_operator_quadratic_form(w, grid, f, 16);
  CHECK(res.direct > 0.0);
  CHECK(res.rel_discrepancy <= 1e-4);
}
