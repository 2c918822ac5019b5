#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace gabor {

/// Adaptive composite Simpson rule with absolute error target.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth = 40);

/// Gauss-Legendre nodes/weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre(int order);  // supported orders: 10, 16

/// Samples phi on uniform Gauss-Legendre panels over [a, b], sized so that
/// integrals against e^{-2 pi i omega u} stay accurate for |omega| up to
/// max_abs_freq, then evaluates those integrals for many omega by
/// incremental phase rotation (one dot product per panel).
class OscillatorySampler {
public:
  OscillatorySampler(const std::function<double(double)>& phi, double a, double b,
                     double max_abs_freq);

  /// integral of phi(u) e^{-2 pi i omega u} du over [a, b].
  std::complex<double> coefficient(double omega) const;

  double plain_integral() const;  // omega = 0, real part

private:
  double a_, half_width_;
  int order_;
  std::vector<double> panel_mid_;
  std::vector<double> values_;  // phi * weight, panel-major
};

}  // namespace gabor
