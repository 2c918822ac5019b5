#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace gabor {

struct CauchyAtom {
  double mass;      // > 0
  double location;  // >= a > 0
};

/// One-sided stably decreasing window: g(x) = 0 for x < 0, g non-increasing
/// on [0, inf) with g(x+t) <= q(t) g(x), q(t) < 1, for every t > 0.
class Window {
public:
  enum class Kind {
    OneSidedExponential,
    TruncatedLinear,
    TruncatedExponential,
    CauchyFourier,
    Tabulated,
  };

  static Window one_sided_exponential(double rate);
  static Window truncated_linear(double x0);
  static Window truncated_exponential(double rate, double x0);
  // Fourier-side window of a finite atomic measure on [a, inf), a > 0:
  // g(xi) = sum_k mass_k exp(-2 pi xi t_k) for xi >= 0.
  static Window cauchy_fourier(std::vector<CauchyAtom> atoms);
  // Piecewise linear through (x_i, v_i); x strictly increasing from 0.
  static Window tabulated(std::vector<double> x, std::vector<double> values);

  Kind kind() const { return kind_; }

  /// g(x); exactly 0 for x < 0 and for x > support_sup().
  double value(double x) const;

  /// Smallest valid q(t) = sup_{g(x)>0} g(x+t)/g(x), floored at 1e-6.
  /// Throws std::domain_error if the supremum is >= 1.
  double decay_ratio(double t) const;

  /// Supremum of {x >= 0 : g(x) > 0}; +inf for full half-line support.
  double support_sup() const { return support_sup_; }

  /// lim_{x -> x0-} g(x) when support_sup() is finite; 0 otherwise.
  double boundary_limit() const { return boundary_limit_; }

  bool compactly_supported() const {
    return support_sup_ < std::numeric_limits<double>::infinity();
  }

  std::string describe() const;

  // Positive value below which q(t) is never reported; keeps geometric
  // series in downstream certificates well conditioned when the true
  // supremum ratio is 0 (t past the support of a compact window).
  static constexpr double kQFloor = 1e-6;

private:
  Window() = default;

  Kind kind_ = Kind::OneSidedExponential;
  double rate_ = 1.0;
  double x0_ = 0.0;
  double support_sup_ = std::numeric_limits<double>::infinity();
  double boundary_limit_ = 0.0;
  std::vector<CauchyAtom> atoms_;
  std::vector<double> tab_x_;
  std::vector<double> tab_v_;

  double tabulated_value(double x) const;
  double tabulated_decay_ratio(double t) const;
};

/// Builds the Fourier-side window of Corollary-type atomic measures.
/// Frame analysis of the time-side window at (alpha, beta) runs on this
/// window at swapped parameters (beta, alpha).
Window cauchy_transform_window(const std::vector<CauchyAtom>& atoms);

/// Loads a tabulated window from two-column CSV (x, g(x)).
Window load_window_csv(const std::string& path);

}  // namespace gabor
