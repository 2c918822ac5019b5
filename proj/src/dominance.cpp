#include "gabor/dominance.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gabor/spectral.hpp"

namespace gabor {

DominanceCertificate certificate(double delta, double C, double lambda) {
  if (delta <= 0 || C <= 0) throw std::invalid_argument("certificate: delta, C must be positive");
  if (!(lambda > 0 && lambda < 1))
    throw std::invalid_argument("certificate: lambda must lie in (0, 1)");
  // The decay constant cannot sit below the diagonal scale.
  const double c_eff = std::max(C, delta * lambda);
  const double c_norm = c_eff / delta;  // after dividing each row by its diagonal

  DominanceCertificate best{};
  best.epsilon = -1.0;
  double best_q_seen = std::numeric_limits<double>::infinity();
  for (int n0 = 1; n0 <= 60; ++n0) {
    for (int j = 1; j <= 50; ++j) {
      double kappa = 1.0 - std::pow(2.0, -j);
      double r = lambda / kappa;
      if (r >= 1.0) continue;
      // Geometric tail in closed form.
      double q_val = lambda * std::pow(kappa, -n0) +
                     2.0 * c_norm * std::pow(r, n0 + 1) / (1.0 - r);
      best_q_seen = std::min(best_q_seen, q_val);
      if (q_val >= 1.0) continue;
      double k2 = kappa * kappa;
      double eps = delta * (1.0 - q_val) / std::sqrt(1.0 + 2.0 * k2 / (1.0 - k2));
      if (eps > best.epsilon) {
        best = DominanceCertificate{delta, c_eff, lambda, n0, kappa, q_val, eps};
      }
    }
  }
  if (best.epsilon <= 0) {
    std::ostringstream os;
    os << "certificate: no admissible (n0, kappa) pair on the grid; best q_val = "
       << best_q_seen;
    throw std::runtime_error(os.str());
  }
  return best;
}

HypothesisScan scan_hypotheses(const Eigen::MatrixXcd& D, double delta, double C,
                               double lambda, double tol) {
  const long n = D.rows();
  if (n != D.cols()) return {false, "matrix is not square"};
  std::ostringstream os;
  for (long i = 0; i < n; ++i) {
    double diag = std::abs(D(i, i));
    if (diag < delta - tol) {
      os << "row " << i << ": |diagonal| " << diag << " < delta " << delta;
      return {false, os.str()};
    }
    double row_sum = 0.0;
    for (long j = 0; j < n; ++j) {
      if (j == i) continue;
      double a = std::abs(D(i, j));
      row_sum += a;
      if (a > C * std::pow(lambda, std::abs(static_cast<double>(j - i))) + tol) {
        os << "entry (" << i << "," << j << ") magnitude " << a << " exceeds decay bound";
        return {false, os.str()};
      }
    }
    if (row_sum > lambda * diag + tol) {
      os << "row " << i << ": off-diagonal sum " << row_sum << " exceeds lambda*|diag| "
         << lambda * diag;
      return {false, os.str()};
    }
  }
  return {true, ""};
}

bool certified_sigma_min_check(const Eigen::MatrixXcd& D, const DominanceCertificate& cert) {
  auto scan = scan_hypotheses(D, cert.delta, cert.C, cert.lambda);
  if (!scan.ok)
    throw std::invalid_argument("certified_sigma_min_check: hypothesis scan failed: " +
                                scan.detail);
  auto sr = extreme_singular_values(D);
  return sr.sigma_min >= cert.epsilon - 1e-10;
}

Eigen::MatrixXcd random_conforming_matrix(double delta, double C, double lambda, int size,
                                          std::uint64_t seed, bool complex_phases) {
  if (size < 1) throw std::invalid_argument("random_conforming_matrix: size must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto random_phase = [&]() -> std::complex<double> {
    if (complex_phases) {
      double th = 2.0 * 3.14159265358979323846 * unit(rng);
      return {std::cos(th), std::sin(th)};
    }
    return {unit(rng) < 0.5 ? -1.0 : 1.0, 0.0};
  };
  Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(size, size);
  for (int i = 0; i < size; ++i) {
    double diag_mag = delta * (1.0 + unit(rng));
    D(i, i) = diag_mag * random_phase();
    // Row budget lambda*|diag| spent left to right with random fractions.
    double budget = lambda * diag_mag;
    for (int j = 0; j < size; ++j) {
      if (j == i) continue;
      double cap = std::min(C * std::pow(lambda, std::abs(j - i)), budget);
      double mag = cap * unit(rng);
      budget -= mag;
      D(i, j) = mag * random_phase();
    }
  }
  return D;
}

}  // namespace gabor
