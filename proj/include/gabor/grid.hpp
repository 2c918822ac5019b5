#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace gabor {

/// Regular time-frequency lattice alpha*Z x beta*Z.
struct RegularGrid {
  double alpha;
  double beta;

  double product() const { return alpha * beta; }
  bool admissible() const { return product() <= 1.0; }
};

/// Translation set Lambda x beta*Z with optional per-point phase offsets;
/// gap_bound is the alpha of the gap hypothesis 0 < gap <= alpha.
struct SemiIrregularGrid {
  std::vector<double> points;  // strictly increasing
  double beta;
  std::vector<double> phases;  // c_lambda, one per point; empty means all 0
  double gap_bound;

  double phase(std::size_t i) const { return phases.empty() ? 0.0 : phases[i]; }
};

using GridSpec = std::variant<RegularGrid, SemiIrregularGrid>;

struct ValidationReport {
  bool gap_ok;
  double max_gap;
  double min_gap;
  // Smallest m with min_n (lambda_{n+m} - lambda_n) >= 1, if any exists
  // within the finite list.
  std::optional<int> separation_m;
  // Number of points the (finite) separation check covered.
  std::size_t checked_points;
};

RegularGrid regular_lattice(double alpha, double beta);

ValidationReport validate_semi_irregular(std::span<const double> points, double alpha);

/// lambda_n = alpha*n + u_n, u_n uniform in [-jitter, jitter], deterministic
/// in the seed; rescaled afterwards so all consecutive gaps are <= alpha.
std::vector<double> jittered_lattice(double alpha, double jitter, std::uint64_t seed,
                                     std::size_t count);

std::vector<double> load_points_csv(const std::string& path);
void save_points_csv(const std::string& path, std::span<const double> points);

}  // namespace gabor
