#include "gabor/ronshen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gabor {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::vector<FiberOffset> fiber_offsets(double x, double alpha, double beta, long m_lo,
                                       long m_hi) {
  if (alpha <= 0 || beta <= 0)
    throw std::invalid_argument("fiber_offsets: alpha and beta must be positive");
  if (alpha * beta > 1.0 + 1e-12)
    throw std::invalid_argument("fiber_offsets: row selection requires alpha*beta <= 1");
  if (m_lo > m_hi) throw std::invalid_argument("fiber_offsets: empty column range");
  std::vector<FiberOffset> out;
  out.reserve(static_cast<std::size_t>(m_hi - m_lo + 1));
  for (long m = m_lo; m <= m_hi; ++m) {
    double pos = x + static_cast<double>(m) / beta;
    long n = static_cast<long>(std::floor(pos / alpha));
    double tau = pos - alpha * static_cast<double>(n);
    // guard against floating boundary cases
    if (tau < 0) {
      --n;
      tau = pos - alpha * static_cast<double>(n);
    }
    if (tau >= alpha) {
      ++n;
      tau = pos - alpha * static_cast<double>(n);
      if (tau < 0) tau = 0.0;
    }
    out.push_back({m, n, tau});
  }
  return out;
}

RonShenSlice build_slice(const Window& w, const GridSpec& grid, double x, long n_trunc,
                         long m_trunc) {
  if (n_trunc < 0 || m_trunc < 0) throw std::invalid_argument("build_slice: empty truncation");
  RonShenSlice slice;
  slice.x = x;
  if (const auto* reg = std::get_if<RegularGrid>(&grid)) {
    const double alpha = reg->alpha, beta = reg->beta;
    long rows = 2 * n_trunc + 1, cols = 2 * m_trunc + 1;
    slice.entries.resize(rows, cols);
    slice.row_ids.resize(static_cast<std::size_t>(rows));
    slice.col_ids.resize(static_cast<std::size_t>(cols));
    slice.row_points.resize(static_cast<std::size_t>(rows));
    for (long i = 0; i < rows; ++i) {
      long n = i - n_trunc;
      slice.row_ids[static_cast<std::size_t>(i)] = n;
      slice.row_points[static_cast<std::size_t>(i)] = alpha * static_cast<double>(n);
      for (long j = 0; j < cols; ++j) {
        long m = j - m_trunc;
        slice.entries(i, j) =
            w.value(x - alpha * static_cast<double>(n) + static_cast<double>(m) / beta);
      }
    }
    for (long j = 0; j < cols; ++j) slice.col_ids[static_cast<std::size_t>(j)] = j - m_trunc;
  } else {
    const auto& irr = std::get<SemiIrregularGrid>(grid);
    auto val = validate_semi_irregular(irr.points, irr.gap_bound);
    if (!val.gap_ok)
      throw std::invalid_argument("build_slice: semi-irregular grid fails the gap hypothesis");
    const double beta = irr.beta;
    long rows = static_cast<long>(irr.points.size());
    long cols = 2 * m_trunc + 1;
    slice.entries.resize(rows, cols);
    slice.row_ids.resize(static_cast<std::size_t>(rows));
    slice.col_ids.resize(static_cast<std::size_t>(cols));
    slice.row_points = irr.points;
    for (long i = 0; i < rows; ++i) {
      slice.row_ids[static_cast<std::size_t>(i)] = i;
      double lambda = irr.points[static_cast<std::size_t>(i)];
      double c = irr.phase(static_cast<std::size_t>(i));
      for (long j = 0; j < cols; ++j) {
        long n = j - m_trunc;
        double arg = x + static_cast<double>(n) / beta - lambda;
        double g = w.value(arg);
        double phase = 2.0 * kPi * c * static_cast<double>(n) / beta;
        slice.entries(i, j) = g * std::complex<double>(std::cos(phase), std::sin(phase));
      }
    }
    for (long j = 0; j < cols; ++j) slice.col_ids[static_cast<std::size_t>(j)] = j - m_trunc;
  }
  return slice;
}

ReducedSlice reduced_upper_triangular(const Window& w, double alpha, double beta, double x,
                                      long m_lo, long m_hi) {
  auto offs = fiber_offsets(x, alpha, beta, m_lo, m_hi);
  long n = static_cast<long>(offs.size());
  ReducedSlice rs{Eigen::MatrixXd::Zero(n, n), {}, beta, 0.0, w};
  rs.tau.reserve(offs.size());
  for (const auto& o : offs) rs.tau.push_back(o.tau);
  for (long i = 0; i < n; ++i)
    for (long j = i; j < n; ++j)
      rs.matrix(i, j) = w.value(rs.tau[static_cast<std::size_t>(i)] +
                                static_cast<double>(j - i) / beta);
  return rs;
}

ReducedSlice reduced_semi_irregular(const Window& w, const SemiIrregularGrid& grid,
                                    double x, long cols) {
  if (cols < 1) throw std::invalid_argument("reduced_semi_irregular: empty truncation");
  auto val = validate_semi_irregular(grid.points, grid.gap_bound);
  if (!val.gap_ok)
    throw std::invalid_argument("reduced_semi_irregular: grid fails the gap hypothesis");
  const double beta = grid.beta;
  const auto& pts = grid.points;

  // First column n with a point lambda <= x + n/beta; subsequent columns are
  // served by strictly increasing points because gaps are <= alpha <= 1/beta.
  long n0 = static_cast<long>(std::ceil((pts.front() - x) * beta - 1e-12));
  if (n0 < 0) n0 = 0;
  ReducedSlice rs{Eigen::MatrixXd::Zero(cols, cols), {}, beta, 0.0, w};
  rs.tau.reserve(static_cast<std::size_t>(cols));
  for (long j = 0; j < cols; ++j) {
    double pos = x + static_cast<double>(n0 + j) / beta;
    auto it = std::upper_bound(pts.begin(), pts.end(), pos);
    if (it == pts.begin())
      throw std::invalid_argument("reduced_semi_irregular: no point below column position");
    double lambda = *(it - 1);
    if (it == pts.end())
      throw std::invalid_argument(
          "reduced_semi_irregular: point list too short for requested truncation");
    double tau = pos - lambda;
    rs.tau.push_back(tau);
  }
  for (long i = 0; i < cols; ++i)
    for (long j = i; j < cols; ++j)
      rs.matrix(i, j) = w.value(rs.tau[static_cast<std::size_t>(i)] +
                                static_cast<double>(j - i) / beta);
  return rs;
}

ReducedSlice u_transform(const ReducedSlice& gstar, double q) {
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("u_transform: q must lie in (0, 1)");
  const long n = gstar.matrix.rows();
  ReducedSlice d{Eigen::MatrixXd::Zero(n, n), gstar.tau, gstar.beta, q, gstar.window};
  const Window& w = gstar.window;
  for (long i = 0; i < n; ++i) {
    double tau = gstar.tau[static_cast<std::size_t>(i)];
    d.matrix(i, i) = w.value(tau);
    for (long j = i + 1; j < n; ++j) {
      double l = static_cast<double>(j - i);
      d.matrix(i, j) =
          w.value(tau + l / gstar.beta) - q * w.value(tau + (l - 1.0) / gstar.beta);
    }
  }
  return d;
}

DominanceReport dominance_report(const ReducedSlice& D, double q) {
  const auto& M = D.matrix;
  const long n = M.rows();
  DominanceReport rep{};
  rep.delta_obs = std::numeric_limits<double>::infinity();
  rep.sign_ok = true;
  rep.row_dominance_ok = true;
  rep.worst_row_slack = std::numeric_limits<double>::infinity();
  rep.decay_C = 0.0;
  constexpr double kSignTol = 1e-12;
  const double g0 = D.window.value(0.0);
  for (long i = 0; i < n; ++i) {
    double diag = M(i, i);
    rep.delta_obs = std::min(rep.delta_obs, diag);
    if (diag <= 0) rep.sign_ok = false;
    double row_sum = 0.0;
    for (long j = i + 1; j < n; ++j) {
      double e = M(i, j);
      if (e > kSignTol) rep.sign_ok = false;
      row_sum += std::abs(e);
      rep.decay_C = std::max(rep.decay_C, std::abs(e) / std::pow(q, static_cast<double>(j - i)));
    }
    // Columns past the truncation hold at most a geometric tail of mass.
    double tail_allowance = g0 * std::pow(q, static_cast<double>(n - i)) / (1.0 - q);
    double slack = q * diag + tail_allowance - row_sum;
    rep.worst_row_slack = std::min(rep.worst_row_slack, slack);
    if (slack < -kSignTol) rep.row_dominance_ok = false;
  }
  return rep;
}

void dump_slice_csv(const RonShenSlice& slice, std::ostream& out) {
  out << "row,col,real,imag\n";
  out.precision(17);
  for (long i = 0; i < slice.entries.rows(); ++i)
    for (long j = 0; j < slice.entries.cols(); ++j) {
      const auto& e = slice.entries(i, j);
      out << slice.row_ids[static_cast<std::size_t>(i)] << ","
          << slice.col_ids[static_cast<std::size_t>(j)] << "," << e.real() << "," << e.imag()
          << "\n";
    }
}

}  // namespace gabor
