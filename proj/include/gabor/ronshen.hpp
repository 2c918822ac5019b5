#pragma once

#include <Eigen/Dense>
#include <complex>
#include <ostream>
#include <vector>

#include "gabor/grid.hpp"
#include "gabor/window.hpp"

namespace gabor {

/// Row selection bookkeeping: for each column offset m the unique shift
/// index n with 0 <= x - alpha*n + m/beta < alpha, and the offset tau.
struct FiberOffset {
  long m;
  long n;
  double tau;  // in [0, alpha)
};

std::vector<FiberOffset> fiber_offsets(double x, double alpha, double beta, long m_lo,
                                       long m_hi);

/// Finite truncation of the fiber matrix G_x.
/// Regular grid: entry(i, j) = g(x - alpha*n_i + m_j/beta), rows n in
/// [-n_trunc, n_trunc], columns m in [-m_trunc, m_trunc].
/// Semi-irregular grid: entry(i, j) = g(x + n_j/beta - lambda_i)
/// * exp(2 pi i c_i n_j / beta), rows over the points of Lambda.
struct RonShenSlice {
  double x;
  Eigen::MatrixXcd entries;
  std::vector<long> row_ids;        // n indices (regular) or point indices (general)
  std::vector<long> col_ids;        // m (regular) or n (general)
  std::vector<double> row_points;   // translation per row: alpha*n or lambda
};

RonShenSlice build_slice(const Window& w, const GridSpec& grid, double x, long n_trunc,
                         long m_trunc);

/// Square triangular slice with its diagonal offsets. q == 0 marks the
/// G* form; after u_transform, q is the ratio that was applied.
struct ReducedSlice {
  Eigen::MatrixXd matrix;
  std::vector<double> tau;  // diagonal offsets, one per row
  double beta;
  double q;
  Window window;
};

/// Keeps one row per column m in [m_lo, m_hi]: row i has entries
/// g(tau_i + (j - i)/beta) for j >= i and 0 below the diagonal.
ReducedSlice reduced_upper_triangular(const Window& w, double alpha, double beta, double x,
                                      long m_lo, long m_hi);

/// Semi-irregular counterpart: column n is served by the largest
/// lambda <= x + n/beta, giving tau_n = x + n/beta - lambda in [0, alpha).
/// Columns start at the first admissible n >= 0 relative to the point list.
ReducedSlice reduced_semi_irregular(const Window& w, const SemiIrregularGrid& grid,
                                    double x, long cols);

/// D = G* (Id - qS), written analytically entry by entry:
/// d(i,i) = g(tau_i), d(i,j) = g(tau_i + (j-i)/beta) - q g(tau_i + (j-i-1)/beta)
/// for j > i, 0 below. Every finite principal block then satisfies the
/// dominance hypotheses exactly, not only in the infinite limit.
ReducedSlice u_transform(const ReducedSlice& gstar, double q);

struct DominanceReport {
  double delta_obs;       // min diagonal entry
  bool sign_ok;           // diagonal > 0, off-diagonal <= tolerance
  bool row_dominance_ok;  // row sums within q*diag + truncation allowance
  double worst_row_slack;
  double decay_C;         // max |d(i,j)| / q^{|i-j|}
};

DominanceReport dominance_report(const ReducedSlice& D, double q);

/// CSV dump (row, col, real, imag).
void dump_slice_csv(const RonShenSlice& slice, std::ostream& out);

}  // namespace gabor
