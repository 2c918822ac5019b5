#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <vector>

namespace gabor {

struct SpectralResult {
  double sigma_min;
  double sigma_max;
  int iterations;
  double residual;  // max over the two extremes of | ||Mv|| - sigma |
};

/// Extreme singular values of a dense matrix (dimensions <= 2048).
/// For rectangular M, sigma_min is that of the full matrix: 0 when
/// rows < cols. Deterministic for identical inputs.
SpectralResult extreme_singular_values(const Eigen::MatrixXcd& M, double tol = 1e-8);
SpectralResult extreme_singular_values(const Eigen::MatrixXd& M, double tol = 1e-8);

struct SweepRow {
  int size;
  SpectralResult result;
};

/// One spectral decomposition per requested truncation size.
std::vector<SweepRow> truncation_sweep(
    const std::function<Eigen::MatrixXcd(int)>& builder, std::span<const int> sizes);

}  // namespace gabor
