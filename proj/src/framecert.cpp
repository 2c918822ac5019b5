#include "gabor/framecert.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gabor/quadrature.hpp"
#include "gabor/spectral.hpp"

namespace gabor {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;
constexpr double kEqTol = 1e-12;

bool hypothesis_scan_ok(const Window& w) {
  double hi = std::min(w.support_sup(), 10.0);
  double prev = w.value(0.0);
  if (prev <= 0) return false;
  for (int i = 1; i < 200; ++i) {
    double v = w.value(hi * i / 199.0);
    if (v > prev + kEqTol) return false;
    prev = v;
  }
  try {
    (void)w.decay_ratio(0.25);
    (void)w.decay_ratio(1.0);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

// g(alpha-): the uniform diagonal floor of the reduced slices.
double analytic_floor(const Window& w, double alpha) {
  double x0 = w.support_sup();
  if (alpha < x0 - kEqTol) return w.value(alpha);
  if (alpha <= x0 + kEqTol) return w.boundary_limit();
  return 0.0;
}

std::vector<double> fiber_grid(double beta, int size) {
  // Half-step offsets avoid measure-zero lattice coincidences.
  std::vector<double> xs(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i)
    xs[static_cast<std::size_t>(i)] = (i + 0.5) / (beta * size);
  return xs;
}

struct GammaRow {
  double t;  // translation
  double c;  // phase offset of the modulation progression
};

std::vector<GammaRow> gamma_rows(const GridSpec& grid, long trunc) {
  std::vector<GammaRow> rows;
  if (const auto* reg = std::get_if<RegularGrid>(&grid)) {
    for (long k = -trunc; k <= trunc; ++k)
      rows.push_back({reg->alpha * static_cast<double>(k), 0.0});
  } else {
    const auto& irr = std::get<SemiIrregularGrid>(grid);
    for (std::size_t i = 0; i < irr.points.size(); ++i)
      rows.push_back({irr.points[i], irr.phase(i)});
  }
  return rows;
}

double grid_beta(const GridSpec& grid) {
  if (const auto* reg = std::get_if<RegularGrid>(&grid)) return reg->beta;
  return std::get<SemiIrregularGrid>(grid).beta;
}

// Row range wide enough that every column m in [-trunc, trunc] keeps the
// rows carrying its leading support; a square truncation would leave the
// edge columns numerically zero whenever alpha < 1/beta.
long row_truncation(const GridSpec& grid, long trunc) {
  const auto* reg = std::get_if<RegularGrid>(&grid);
  if (!reg) return trunc;
  double span = (static_cast<double>(trunc) + 1.0) / (reg->beta * reg->alpha);
  return static_cast<long>(std::ceil(span)) + 1;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Frame: return "Frame";
    case Verdict::NotFrame: return "NotFrame";
    case Verdict::Unsupported: return "Unsupported";
  }
  return "?";
}

std::string to_string(Reason r) {
  switch (r) {
    case Reason::ProductRule: return "product_rule";
    case Reason::SupportRule: return "support_rule";
    case Reason::BoundaryRule: return "boundary_rule";
    case Reason::Certified: return "certified";
  }
  return "?";
}

Classification classify(const Window& w, double alpha, double beta) {
  if (alpha <= 0 || beta <= 0)
    throw std::invalid_argument("classify: alpha and beta must be positive");
  if (!hypothesis_scan_ok(w)) return {Verdict::Unsupported, std::nullopt};
  if (alpha * beta > 1.0 + kEqTol) return {Verdict::NotFrame, Reason::ProductRule};
  double x0 = w.support_sup();
  if (x0 == std::numeric_limits<double>::infinity()) return {Verdict::Frame, std::nullopt};
  if (alpha > x0 + kEqTol) return {Verdict::NotFrame, Reason::SupportRule};
  if (alpha < x0 - kEqTol) return {Verdict::Frame, std::nullopt};
  // alpha == x0: frame exactly when the boundary limit survives
  if (w.boundary_limit() > 0) return {Verdict::Frame, std::nullopt};
  return {Verdict::NotFrame, Reason::BoundaryRule};
}

FrameReport certify_lower_frame_bound(const Window& w, const GridSpec& grid,
                                      int x_grid_size, long truncation) {
  if (x_grid_size < 1 || truncation < 1)
    throw std::invalid_argument("certify_lower_frame_bound: grid and truncation must be positive");
  FrameReport rep;
  rep.window_desc = w.describe();
  rep.x_grid_size = x_grid_size;
  rep.truncation = truncation;

  double beta = grid_beta(grid);
  double alpha;
  const SemiIrregularGrid* irr = nullptr;
  if (const auto* reg = std::get_if<RegularGrid>(&grid)) {
    alpha = reg->alpha;
    auto cls = classify(w, alpha, beta);
    if (cls.verdict != Verdict::Frame) {
      std::ostringstream os;
      os << "certify_lower_frame_bound: classification is " << to_string(cls.verdict);
      if (cls.reason) os << " (" << to_string(*cls.reason) << ")";
      throw std::invalid_argument(os.str());
    }
  } else {
    irr = &std::get<SemiIrregularGrid>(grid);
    alpha = irr->gap_bound;
    auto val = validate_semi_irregular(irr->points, alpha);
    if (!val.gap_ok)
      throw std::invalid_argument("certify_lower_frame_bound: gap hypothesis fails");
    if (alpha * beta > 1.0 + kEqTol)
      throw std::invalid_argument("certify_lower_frame_bound: alpha*beta must be <= 1");
  }

  double q = w.decay_ratio(1.0 / beta);
  double delta = analytic_floor(w, alpha);
  if (delta <= 0)
    throw std::invalid_argument(
        "certify_lower_frame_bound: diagonal floor g(alpha-) vanishes");
  double C = w.value(0.0) / q;
  rep.q = q;

  bool all_ok = true;
  for (double x : fiber_grid(beta, x_grid_size)) {
    ReducedSlice gstar = irr ? reduced_semi_irregular(w, *irr, x, truncation)
                             : reduced_upper_triangular(w, alpha, beta, x, -truncation,
                                                        truncation);
    ReducedSlice D = u_transform(gstar, q);
    auto dom = dominance_report(D, q);
    rep.delta_obs_per_x.push_back(dom.delta_obs);
    bool ok = dom.sign_ok && dom.row_dominance_ok && dom.delta_obs >= delta - 1e-9;
    if (!ok) {
      all_ok = false;
      rep.failing_x.push_back(x);
    }
  }

  if (all_ok) {
    auto cert = certificate(delta, C, q);
    rep.cert = cert;
    rep.certified_epsilon = cert.epsilon;
    rep.certified_A = beta * std::pow(cert.epsilon / (1.0 + q), 2);
    rep.reason = Reason::Certified;
  } else {
    std::ostringstream os;
    os << "dominance verification failed on " << rep.failing_x.size()
       << " fiber(s); report downgraded to empirical bounds only";
    rep.notes = os.str();
  }
  rep.verdict = Verdict::Frame;

  auto [ea, eb] = empirical_frame_bounds(w, grid, x_grid_size, truncation);
  rep.empirical_A = ea;
  rep.empirical_B = eb;
  return rep;
}

std::pair<double, double> empirical_frame_bounds(const Window& w, const GridSpec& grid,
                                                 int x_grid_size, long truncation) {
  double beta = grid_beta(grid);
  double min_smin = std::numeric_limits<double>::infinity();
  double max_smax = 0.0;
  long n_trunc = row_truncation(grid, truncation);
  for (double x : fiber_grid(beta, x_grid_size)) {
    auto slice = build_slice(w, grid, x, n_trunc, truncation);
    auto sr = extreme_singular_values(slice.entries);
    min_smin = std::min(min_smin, sr.sigma_min);
    max_smax = std::max(max_smax, sr.sigma_max);
  }
  return {beta * min_smin * min_smin, beta * max_smax * max_smax};
}

double TestFunction::operator()(double u) const {
  if (shape == Shape::GaussianBump) {
    double z = (u - p0) / p1;
    return std::exp(-0.5 * z * z);
  }
  return (u >= p0 && u <= p1) ? 1.0 : 0.0;
}

double TestFunction::lo() const {
  return shape == Shape::GaussianBump ? p0 - 8.0 * p1 : p0;
}

double TestFunction::hi() const {
  return shape == Shape::GaussianBump ? p0 + 8.0 * p1 : p1;
}

QuadFormResult frame_operator_quadratic_form(const Window& w, const GridSpec& grid,
                                             const TestFunction& f, long trunc) {
  const double beta = grid_beta(grid);
  const double period = 1.0 / beta;
  const double flo = f.lo(), fhi = f.hi();
  if (fhi > static_cast<double>(trunc) * period ||
      flo < -static_cast<double>(trunc) * period)
    throw std::invalid_argument(
        "frame_operator_quadratic_form: test function support exceeds the truncation window");
  auto rows = gamma_rows(grid, trunc);

  // ---- fiber side: (1/beta) int_0^{1/beta} ||G_x v_f(x)||^2 dx ----
  // Gauss panels split at the support-edge crossings of every row.
  std::vector<double> breaks{0.0, period};
  for (const auto& r : rows) {
    double b1 = r.t - period * std::floor(r.t / period);
    if (b1 > 0 && b1 < period) breaks.push_back(b1);
    if (w.compactly_supported()) {
      double te = r.t + w.support_sup();
      double b2 = te - period * std::floor(te / period);
      if (b2 > 0 && b2 < period) breaks.push_back(b2);
    }
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end(),
                           [](double a, double b) { return b - a < 1e-13; }),
               breaks.end());

  auto fiber_integrand = [&](double x) {
    double total = 0.0;
    std::vector<double> v(static_cast<std::size_t>(2 * trunc + 1));
    for (long n = -trunc; n <= trunc; ++n)
      v[static_cast<std::size_t>(n + trunc)] = f(x + static_cast<double>(n) * period);
    for (const auto& r : rows) {
      std::complex<double> s = 0.0;
      for (long n = -trunc; n <= trunc; ++n) {
        double vn = v[static_cast<std::size_t>(n + trunc)];
        if (vn == 0.0) continue;
        double g = w.value(x + static_cast<double>(n) * period - r.t);
        if (g == 0.0) continue;
        if (r.c != 0.0) {
          double th = kTwoPi * r.c * static_cast<double>(n) * period;
          s += g * vn * std::complex<double>(std::cos(th), std::sin(th));
        } else {
          s += g * vn;
        }
      }
      total += std::norm(s);
    }
    return total;
  };

  double fiber = 0.0;
  const auto& rule = gauss_legendre(10);
  for (std::size_t bi = 0; bi + 1 < breaks.size(); ++bi) {
    double a = breaks[bi], b = breaks[bi + 1];
    int sub = std::max(1, static_cast<int>(std::ceil((b - a) / (period / 64.0))));
    for (int s = 0; s < sub; ++s) {
      double pa = a + (b - a) * s / sub, pb = a + (b - a) * (s + 1) / sub;
      double mid = 0.5 * (pa + pb), hw = 0.5 * (pb - pa);
      for (int l = 0; l < 10; ++l)
        fiber += hw * rule.weights[static_cast<std::size_t>(l)] *
                 fiber_integrand(mid + hw * rule.nodes[static_cast<std::size_t>(l)]);
    }
  }
  fiber /= beta;

  // ---- direct side: sum over gamma of |<f, pi_gamma g>|^2 ----
  // The translation rows match the fiber side exactly; only the modulation
  // range is truncated, so it is extended until the 1/m^2 coefficient tail
  // is negligible against the running total.
  const long m_cap = std::max<long>(2048, trunc);
  double max_phase = 0.0;
  for (const auto& r : rows) max_phase = std::max(max_phase, std::abs(r.c));
  const double max_freq = beta * static_cast<double>(m_cap) + max_phase;

  struct ActiveRow {
    double c;
    OscillatorySampler sampler;
  };
  std::vector<ActiveRow> active;
  for (const auto& r : rows) {
    double a = std::max(r.t, flo);
    double b = std::min(fhi, w.compactly_supported() ? r.t + w.support_sup() : fhi);
    if (b - a < 1e-12) continue;
    // Cheap row bound: rows whose peak product is negligible cannot move
    // the squared sum.
    double peak = 0.0;
    for (int i = 0; i <= 256; ++i) {
      double u = a + (b - a) * i / 256.0;
      peak = std::max(peak, f(u) * w.value(u - r.t));
    }
    double copies = (fhi - flo) * beta + 2.0;
    if (copies * copies / beta * peak * peak < 1e-14) continue;
    const Window* wp = &w;
    const TestFunction* fp = &f;
    double t = r.t;
    active.push_back(
        {r.c, OscillatorySampler([wp, fp, t](double u) { return (*fp)(u)*wp->value(u - t); },
                                 a, b, max_freq)});
  }

  double direct = 0.0;
  long m_cur = 0;
  long m_next = std::max<long>(256, trunc);
  double tail_est = 0.0;
  while (true) {
    m_next = std::min(m_next, m_cap);
    // Rows are independent; sum each one's new modulation block in parallel.
    std::vector<std::future<std::pair<double, double>>> futs;
    for (const auto& ar : active) {
      long lo = m_cur, hi = m_next;
      futs.push_back(std::async(std::launch::async, [&ar, lo, hi, beta]() {
        double sum = 0.0, edge = 0.0;
        for (long m = lo + (lo == 0 ? 0 : 1); m <= hi; ++m) {
          double cp = std::norm(ar.sampler.coefficient(beta * static_cast<double>(m) + ar.c));
          double cn = (m == 0)
                          ? 0.0
                          : std::norm(ar.sampler.coefficient(-beta * static_cast<double>(m) +
                                                             ar.c));
          sum += cp + cn;
          if (m == hi) edge = cp + cn;
        }
        return std::make_pair(sum, edge);
      }));
    }
    tail_est = 0.0;
    for (auto& fu : futs) {
      auto [sum, edge] = fu.get();
      direct += sum;
      tail_est += edge * static_cast<double>(m_next);
    }
    m_cur = m_next;
    if (m_cur >= m_cap || tail_est <= 1e-5 * direct) break;
    m_next = m_cur * 2;
  }

  QuadFormResult res;
  res.direct = direct;
  res.fiber = fiber;
  res.modulation_range = static_cast<int>(m_cur);
  res.rel_discrepancy = direct > 0 ? std::abs(direct - fiber) / direct
                                   : std::abs(direct - fiber);
  return res;
}

WitnessResult incompleteness_witness(const Window& w, double alpha, double beta,
                                     long trunc) {
  double x0 = w.support_sup();
  if (!(x0 < std::numeric_limits<double>::infinity()) || alpha <= x0 + kEqTol)
    throw std::invalid_argument("incompleteness_witness: requires alpha > x0 < inf");
  double margin = (alpha - x0) / 4.0;
  WitnessResult res;
  res.h_lo = x0 + margin;
  res.h_hi = alpha - margin;
  double residual = 0.0;
  for (long k = -trunc; k <= trunc; ++k) {
    double t = alpha * static_cast<double>(k);
    OscillatorySampler sampler([&w, t](double u) { return w.value(u - t); }, res.h_lo,
                               res.h_hi, beta * static_cast<double>(trunc));
    for (long m = -trunc; m <= trunc; ++m)
      residual = std::max(residual,
                          std::abs(sampler.coefficient(beta * static_cast<double>(m))));
  }
  res.residual = residual;
  return res;
}

std::vector<double> boundary_degeneration_demo(const Window& w, double beta,
                                               std::span<const double> eps_list,
                                               long trunc) {
  double x0 = w.support_sup();
  if (!(x0 < std::numeric_limits<double>::infinity()) || w.boundary_limit() > 0)
    throw std::invalid_argument(
        "boundary_degeneration_demo: requires compact support with vanishing boundary limit");
  double alpha = x0;  // the degenerate configuration
  if (alpha * beta > 1.0 + kEqTol)
    throw std::invalid_argument("boundary_degeneration_demo: alpha*beta must be <= 1");
  std::vector<double> out;
  for (double eps : eps_list) {
    if (eps <= 0 || eps >= x0)
      throw std::invalid_argument("boundary_degeneration_demo: eps out of range");
    double lo = x0 - eps;
    double sum = 0.0;
    for (long k = -trunc; k <= trunc; ++k) {
      double t = alpha * static_cast<double>(k);
      if (t >= x0 - 1e-15 || t + x0 <= lo + 1e-15) continue;  // no support overlap
      double a = std::max(lo, t), b = std::min(x0, t + x0);
      OscillatorySampler sampler([&w, t](double u) { return w.value(u - t); }, a, b,
                                 beta * static_cast<double>(trunc));
      for (long m = -trunc; m <= trunc; ++m)
        sum += std::norm(sampler.coefficient(beta * static_cast<double>(m)));
    }
    out.push_back(sum / eps);
  }
  return out;
}

}  // namespace gabor
