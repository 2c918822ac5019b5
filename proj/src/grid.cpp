#include "gabor/grid.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace gabor {

RegularGrid regular_lattice(double alpha, double beta) {
  if (alpha <= 0 || beta <= 0)
    throw std::invalid_argument("regular_lattice: alpha and beta must be positive");
  return RegularGrid{alpha, beta};
}

ValidationReport validate_semi_irregular(std::span<const double> points, double alpha) {
  if (points.size() < 2)
    throw std::invalid_argument("validate_semi_irregular: need at least 2 points");
  double max_gap = 0.0;
  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < points.size(); ++i) {
    double gap = points[i] - points[i - 1];
    if (gap <= 0)
      throw std::invalid_argument("validate_semi_irregular: points must be strictly increasing");
    max_gap = std::max(max_gap, gap);
    min_gap = std::min(min_gap, gap);
  }
  ValidationReport rep;
  // A few ulps of slack: an exact alpha-lattice must validate even when
  // alpha*n - alpha*(n-1) rounds one ulp above alpha.
  rep.gap_ok = max_gap <= alpha * (1.0 + 1e-12);
  rep.max_gap = max_gap;
  rep.min_gap = min_gap;
  rep.checked_points = points.size();
  rep.separation_m = std::nullopt;
  for (std::size_t m = 1; m < points.size(); ++m) {
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n + m < points.size(); ++n)
      worst = std::min(worst, points[n + m] - points[n]);
    if (worst >= 1.0) {
      rep.separation_m = static_cast<int>(m);
      break;
    }
  }
  return rep;
}

std::vector<double> jittered_lattice(double alpha, double jitter, std::uint64_t seed,
                                     std::size_t count) {
  if (alpha <= 0) throw std::invalid_argument("jittered_lattice: alpha must be positive");
  if (jitter < 0 || jitter >= alpha / 4)
    throw std::invalid_argument("jittered_lattice: jitter must lie in [0, alpha/4)");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-jitter, jitter);
  std::vector<double> pts(count);
  for (std::size_t n = 0; n < count; ++n)
    pts[n] = alpha * static_cast<double>(n) + (jitter > 0 ? u(rng) : 0.0);
  // Gaps lie in (alpha - 2 jitter, alpha + 2 jitter]; rescale so none exceeds alpha.
  double max_gap = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) max_gap = std::max(max_gap, pts[i] - pts[i - 1]);
  if (max_gap > alpha) {
    // Aim slightly below alpha so rounding cannot push the worst gap back over.
    double scale = alpha * (1.0 - 1e-12) / max_gap;
    double origin = pts.front();
    for (double& p : pts) p = origin + (p - origin) * scale;
  }
  return pts;
}

std::vector<double> load_points_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_points_csv: cannot open " + path);
  std::vector<double> pts;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    double v;
    if (!(ls >> v)) throw std::runtime_error("load_points_csv: bad line: " + line);
    pts.push_back(v);
  }
  return pts;
}

void save_points_csv(const std::string& path, std::span<const double> points) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_points_csv: cannot open " + path);
  out.precision(17);
  for (double p : points) out << p << "\n";
}

}  // namespace gabor
