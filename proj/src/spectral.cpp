#include "gabor/spectral.hpp"

#include <Eigen/SVD>
#include <stdexcept>

namespace gabor {

namespace {

template <typename Matrix>
SpectralResult extremes(const Matrix& M, double tol) {
  if (M.rows() == 0 || M.cols() == 0)
    throw std::invalid_argument("extreme_singular_values: empty matrix");
  if (M.rows() > 2048 || M.cols() > 2048)
    throw std::invalid_argument("extreme_singular_values: dimensions exceed desk scale");
  if (!M.allFinite())
    throw std::invalid_argument("extreme_singular_values: non-finite entries");

  Eigen::JacobiSVD<Matrix> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  SpectralResult r{};
  r.sigma_max = s(0);
  r.sigma_min = (M.rows() < M.cols()) ? 0.0 : s(s.size() - 1);
  r.iterations = static_cast<int>(s.size());

  // Residual check against the computed singular pairs.
  double res = 0.0;
  {
    auto v = svd.matrixV().col(0);
    res = std::max(res, std::abs((M * v).norm() - r.sigma_max));
  }
  if (M.rows() >= M.cols()) {
    auto v = svd.matrixV().col(s.size() - 1);
    res = std::max(res, std::abs((M * v).norm() - r.sigma_min));
  }
  r.residual = res;
  if (r.sigma_max > 0 && res > tol * std::max(1.0, r.sigma_max) * 1e4)
    throw std::runtime_error("extreme_singular_values: decomposition residual too large");
  return r;
}

}  // namespace

SpectralResult extreme_singular_values(const Eigen::MatrixXcd& M, double tol) {
  return extremes(M, tol);
}

SpectralResult extreme_singular_values(const Eigen::MatrixXd& M, double tol) {
  return extremes(M, tol);
}

std::vector<SweepRow> truncation_sweep(
    const std::function<Eigen::MatrixXcd(int)>& builder, std::span<const int> sizes) {
  std::vector<SweepRow> rows;
  rows.reserve(sizes.size());
  for (int n : sizes) rows.push_back({n, extreme_singular_values(builder(n))});
  return rows;
}

}  // namespace gabor
