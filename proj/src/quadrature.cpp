#include "gabor/quadrature.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace gabor {

namespace {
constexpr double kTwoPi = 6.283185307179586476925287;

double simpson(const std::function<double(double)>& f, double a, double fa, double m,
               double fm, double b, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double fa, double b,
                     double fb, double m, double fm, double whole, double tol, int depth) {
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = simpson(f, a, fa, lm, flm, m, fm);
  double right = simpson(f, m, fm, rm, frm, b, fb);
  double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

GaussRule make_gauss(int order) {
  // Newton iteration on the Legendre polynomial; standard construction.
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(order));
  rule.weights.resize(static_cast<std::size_t>(order));
  const int n = order;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return rule;
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth) {
  if (a >= b) return 0.0;
  double m = 0.5 * (a + b);
  double fa = f(a), fb = f(b), fm = f(m);
  double whole = simpson(f, a, fa, m, fm, b, fb);
  return adaptive_step(f, a, fa, b, fb, m, fm, whole, abs_tol, max_depth);
}

const GaussRule& gauss_legendre(int order) {
  static std::map<int, GaussRule> cache;
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, make_gauss(order)).first;
  return it->second;
}

OscillatorySampler::OscillatorySampler(const std::function<double(double)>& phi, double a,
                                       double b, double max_abs_freq) {
  if (b <= a) throw std::invalid_argument("OscillatorySampler: empty interval");
  order_ = 16;
  // Roughly two oscillation periods per 16-point panel.
  int npan = std::max(8, static_cast<int>(std::ceil((b - a) * std::max(max_abs_freq, 1.0) / 2.0)));
  double h = (b - a) / npan;
  a_ = a;
  half_width_ = 0.5 * h;
  const auto& rule = gauss_legendre(order_);
  panel_mid_.resize(static_cast<std::size_t>(npan));
  values_.resize(static_cast<std::size_t>(npan * order_));
  for (int i = 0; i < npan; ++i) {
    double mid = a + (i + 0.5) * h;
    panel_mid_[static_cast<std::size_t>(i)] = mid;
    for (int l = 0; l < order_; ++l) {
      double u = mid + half_width_ * rule.nodes[static_cast<std::size_t>(l)];
      values_[static_cast<std::size_t>(i * order_ + l)] =
          phi(u) * rule.weights[static_cast<std::size_t>(l)] * half_width_;
    }
  }
}

std::complex<double> OscillatorySampler::coefficient(double omega) const {
  const auto& rule = gauss_legendre(order_);
  const int npan = static_cast<int>(panel_mid_.size());
  // Node phases relative to the panel midpoint are shared by every panel.
  std::complex<double> node_phase[32];
  for (int l = 0; l < order_; ++l) {
    double th = -kTwoPi * omega * half_width_ * rule.nodes[static_cast<std::size_t>(l)];
    node_phase[l] = {std::cos(th), std::sin(th)};
  }
  double H = 2.0 * half_width_;
  std::complex<double> step = {std::cos(-kTwoPi * omega * H), std::sin(-kTwoPi * omega * H)};
  std::complex<double> acc = 0.0;
  std::complex<double> rot = 1.0;
  for (int i = 0; i < npan; ++i) {
    if ((i & 255) == 0) {  // resync the incremental rotation
      double th = -kTwoPi * omega * panel_mid_[static_cast<std::size_t>(i)];
      rot = {std::cos(th), std::sin(th)};
    }
    std::complex<double> panel = 0.0;
    const double* v = &values_[static_cast<std::size_t>(i * order_)];
    for (int l = 0; l < order_; ++l) panel += v[l] * node_phase[l];
    acc += rot * panel;
    rot *= step;
  }
  return acc;
}

double OscillatorySampler::plain_integral() const {
  double s = 0.0;
  for (double v : values_) s += v;
  return s;
}

}  // namespace gabor
