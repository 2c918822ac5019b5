#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>

namespace gabor {

/// Explicit lower bound for the smallest singular value of any matrix with
/// diagonal >= delta, off-diagonal decay C*lambda^|m-n| and row sums
/// bounded by lambda times the diagonal: ||Dv|| >= epsilon ||v||.
struct DominanceCertificate {
  double delta;
  double C;
  double lambda;
  int n0;
  double kappa;
  double q_val;   // lambda*kappa^-n0 + 2(C/delta) sum_{l>n0} (lambda/kappa)^l
  double epsilon; // delta (1 - q_val) (1 + 2 kappa^2/(1-kappa^2))^{-1/2}
};

/// Deterministic grid search over n0 in {1..60} and kappa in {1 - 2^-j},
/// maximizing epsilon among admissible pairs (q_val < 1). Throws
/// std::runtime_error when no grid pair is admissible.
DominanceCertificate certificate(double delta, double C, double lambda);

struct HypothesisScan {
  bool ok;
  std::string detail;
};

/// Checks the three dominance hypotheses entrywise (with tolerance).
HypothesisScan scan_hypotheses(const Eigen::MatrixXcd& D, double delta, double C,
                               double lambda, double tol = 1e-9);

/// True iff sigma_min(D) >= cert.epsilon - 1e-10. Throws when the
/// hypothesis scan fails (which is a different event from returning false).
bool certified_sigma_min_check(const Eigen::MatrixXcd& D, const DominanceCertificate& cert);

/// Seeded generator of matrices satisfying all three hypotheses by
/// construction; complex_phases switches entry phases from +-1 to e^{i theta}.
Eigen::MatrixXcd random_conforming_matrix(double delta, double C, double lambda, int size,
                                          std::uint64_t seed, bool complex_phases);

}  // namespace gabor
