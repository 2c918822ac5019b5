#include <doctest.h>

#include <cmath>
#include <fstream>
#include <vector>

#include "gabor/window.hpp"

using gabor::CauchyAtom;
using gabor::Window;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("window_value basics") {
  auto exp1 = Window::one_sided_exponential(1.0);
  CHECK(exp1.value(0.0) == doctest::Approx(1.0));
  CHECK(exp1.value(-0.5) == 0.0);
  CHECK(exp1.value(2.0) == doctest::Approx(std::exp(-2.0)));

  auto lin = Window::truncated_linear(1.0);
  CHECK(lin.value(0.25) == doctest::Approx(0.75));
  CHECK(lin.value(1.5) == 0.0);
  CHECK(lin.value(-0.1) == 0.0);
}

TEST_CASE("decay_ratio analytic values") {
  auto exp1 = Window::one_sided_exponential(1.0);
  CHECK(exp1.decay_ratio(1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));

  auto lin = Window::truncated_linear(1.0);
  CHECK(lin.decay_ratio(0.25) == doctest::Approx(0.75).epsilon(1e-12));

  auto cauchy = Window::cauchy_fourier({{1.0, 1.0}});
  CHECK(cauchy.decay_ratio(0.5) == doctest::Approx(std::exp(-kPi)).epsilon(1e-12));
}

TEST_CASE("decay_ratio floor past compact support") {
  auto lin = Window::truncated_linear(1.0);
  CHECK(lin.decay_ratio(1.5) == Window::kQFloor);
  auto texp = Window::truncated_exponential(1.0, 1.0);
  CHECK(texp.decay_ratio(2.0) == Window::kQFloor);
}

TEST_CASE("boundary profile") {
  auto exp1 = Window::one_sided_exponential(1.0);
  CHECK(exp1.support_sup() == std::numeric_limits<double>::infinity());

  auto texp = Window::truncated_exponential(1.0, 1.0);
  CHECK(texp.support_sup() == doctest::Approx(1.0));
  CHECK(texp.boundary_limit() == doctest::Approx(std::exp(-1.0)));

  auto lin = Window::truncated_linear(1.0);
  CHECK(lin.support_sup() == doctest::Approx(1.0));
  CHECK(lin.boundary_limit() == 0.0);
}

TEST_CASE("cauchy transform window") {
  auto w = gabor::cauchy_transform_window({{1.0, 1.0}});
  CHECK(w.value(0.0) == doctest::Approx(1.0));
  CHECK(w.value(0.5) == doctest::Approx(std::exp(-kPi)).epsilon(1e-12));
  CHECK(w.value(-0.1) == 0.0);

  auto w2 = gabor::cauchy_transform_window({{1.0, 1.0}, {1.0, 2.0}});
  CHECK(w2.value(0.0) == doctest::Approx(2.0));

  CHECK_THROWS(gabor::cauchy_transform_window({}));
  CHECK_THROWS(gabor::cauchy_transform_window({{-1.0, 1.0}}));
  CHECK_THROWS(gabor::cauchy_transform_window({{1.0, 0.0}}));
}

TEST_CASE("decay ratio submultiplicativity") {
  std::vector<Window> windows = {
      Window::one_sided_exponential(1.0),
      Window::one_sided_exponential(0.4),
      Window::truncated_linear(1.0),
      Window::truncated_exponential(2.0, 1.0),
      Window::cauchy_fourier({{1.0, 1.0}, {0.5, 2.0}}),
  };
  std::vector<double> ts = {0.1, 0.2, 0.3};
  for (const auto& w : windows)
    for (double t1 : ts)
      for (double t2 : ts)
        CHECK(w.decay_ratio(t1 + t2) <= w.decay_ratio(t1) * w.decay_ratio(t2) + 1e-12);
}

TEST_CASE("monotone on the support") {
  std::vector<Window> windows = {
      Window::one_sided_exponential(2.0),
      Window::truncated_linear(0.7),
      Window::truncated_exponential(1.0, 2.0),
      Window::cauchy_fourier({{1.0, 1.0}, {2.0, 3.0}}),
  };
  for (const auto& w : windows) {
    double hi = std::min(w.support_sup(), 10.0);
    double prev = w.value(0.0);
    for (int i = 1; i < 200; ++i) {
      double v = w.value(hi * i / 199.0);
      CHECK(v <= prev + 1e-14);
      prev = v;
    }
  }
}

TEST_CASE("exponential decay ratio exact") {
  auto w = Window::one_sided_exponential(1.7);
  for (double t : {0.1, 0.5, 1.0, 2.5})
    CHECK(w.decay_ratio(t) == doctest::Approx(std::exp(-1.7 * t)).epsilon(1e-12));
}

TEST_CASE("cauchy decay ratio bounded by slowest atom") {
  auto w = Window::cauchy_fourier({{1.0, 1.5}, {0.3, 4.0}});
  for (double t : {0.1, 0.25, 0.5, 0.75, 1.0})
    CHECK(w.decay_ratio(t) <= std::exp(-2.0 * kPi * t * 1.5) + 1e-12);
}

TEST_CASE("tabulated window") {
  // Samples of e^{-x} on a uniform grid.
  std::vector<double> xs, vs;
  for (int i = 0; i <= 400; ++i) {
    xs.push_back(i * 0.025);
    vs.push_back(std::exp(-xs.back()));
  }
  auto w = Window::tabulated(xs, vs);
  CHECK(w.value(1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-4));
  CHECK(w.decay_ratio(1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-3));
  CHECK(w.value(-1.0) == 0.0);
  CHECK(w.value(11.0) == 0.0);

  // A non-decreasing table is not stably decreasing.
  auto bad = Window::tabulated({0.0, 1.0, 2.0}, {1.0, 0.5, 0.9});
  CHECK_THROWS_AS((void)bad.decay_ratio(1.0), std::domain_error);

  CHECK_THROWS(Window::tabulated({0.5, 1.0}, {1.0, 0.5}));   // must start at 0
  CHECK_THROWS(Window::tabulated({0.0, 0.0}, {1.0, 0.5}));   // strictly increasing
}

TEST_CASE("tabulated csv round trip") {
  const char* path = "tab_window_test.csv";
  {
    std::ofstream out(path);
    out << "0.0,1.0\n0.5,0.5\n1.0,0.0\n";
  }
  auto w = gabor::load_window_csv(path);
  CHECK(w.value(0.25) == doctest::Approx(0.75));
  CHECK(w.support_sup() == doctest::Approx(1.0));
  std::remove(path);
}
