#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gabor/dominance.hpp"
#include "gabor/grid.hpp"
#include "gabor/ronshen.hpp"
#include "gabor/window.hpp"

namespace gabor {

enum class Verdict { Frame, NotFrame, Unsupported };

enum class Reason {
  ProductRule,   // alpha*beta > 1
  SupportRule,   // alpha > x0
  BoundaryRule,  // alpha = x0 with vanishing boundary limit
  Certified,     // dominance pipeline succeeded
};

std::string to_string(Verdict v);
std::string to_string(Reason r);

struct Classification {
  Verdict verdict;
  std::optional<Reason> reason;  // absent for a Frame verdict before certification
};

/// Three-case frame classification plus the product rule; Unsupported when
/// the window fails the hypothesis scan (monotone, stably decreasing).
Classification classify(const Window& w, double alpha, double beta);

struct FrameReport {
  Verdict verdict = Verdict::Unsupported;
  std::optional<Reason> reason;
  std::optional<double> certified_epsilon;
  std::optional<double> certified_A;
  std::optional<double> empirical_A;
  std::optional<double> empirical_B;
  std::optional<DominanceCertificate> cert;
  double q = 0.0;
  int x_grid_size = 0;
  long truncation = 0;
  std::vector<double> delta_obs_per_x;
  std::vector<double> failing_x;  // fibers whose dominance report failed
  std::string window_desc;
  std::string notes;
};

/// Full certification pipeline: per-fiber reduced D matrices, dominance
/// reports, one dominance certificate from the analytic floors
/// delta = g(alpha-), C = g(0)/q, lambda = q = q(1/beta), and the implied
/// lower frame bound certified_A = beta (epsilon/(1+q))^2.
FrameReport certify_lower_frame_bound(const Window& w, const GridSpec& grid,
                                      int x_grid_size, long truncation);

/// beta * (min_x sigma_min)^2 and beta * (max_x sigma_max)^2 over the fiber
/// grid, using the full (unreduced) slice.
std::pair<double, double> empirical_frame_bounds(const Window& w, const GridSpec& grid,
                                                 int x_grid_size, long truncation);

struct TestFunction {
  enum class Shape { GaussianBump, Indicator };
  Shape shape;
  double p0;  // center (Gaussian) or left end (indicator)
  double p1;  // width (Gaussian) or right end (indicator)

  static TestFunction gaussian(double center, double width) {
    return {Shape::GaussianBump, center, width};
  }
  static TestFunction indicator(double lo, double hi) { return {Shape::Indicator, lo, hi}; }

  double operator()(double u) const;
  double lo() const;
  double hi() const;
};

struct QuadFormResult {
  double direct;            // sum_gamma |<f, pi_gamma g>|^2 over the truncated set
  double fiber;             // (1/beta) int_0^{1/beta} ||G_x v_f(x)||^2 dx
  int modulation_range;     // final half-range of modulations on the direct side
  double rel_discrepancy;   // |direct - fiber| / direct
};

/// Two independent evaluations of the frame-operator quadratic form; their
/// agreement realizes the Poisson-summation fiberization numerically.
QuadFormResult frame_operator_quadratic_form(const Window& w, const GridSpec& grid,
                                             const TestFunction& f, long trunc);

struct WitnessResult {
  double h_lo, h_hi;  // indicator interval inside the uncovered gap
  double residual;    // max |<h, pi_gamma g>| over the truncated set
};

/// Completeness failure witness for alpha > x0.
WitnessResult incompleteness_witness(const Window& w, double alpha, double beta,
                                     long trunc = 32);

/// Normalized frame sums R(eps) for h = chi_[x0-eps, x0] at alpha = x0;
/// must decrease to 0 when the boundary limit vanishes.
std::vector<double> boundary_degeneration_demo(const Window& w, double beta,
                                               std::span<const double> eps_list,
                                               long trunc = 32);

}  // namespace gabor
