#include "gabor/window.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gabor {

namespace {
constexpr double kPi = 3.14159265358979323846;

double floored(double q) { return std::max(q, Window::kQFloor); }
}  // namespace

Window Window::one_sided_exponential(double rate) {
  if (rate <= 0) throw std::invalid_argument("one_sided_exponential: rate must be positive");
  Window w;
  w.kind_ = Kind::OneSidedExponential;
  w.rate_ = rate;
  w.support_sup_ = std::numeric_limits<double>::infinity();
  return w;
}

Window Window::truncated_linear(double x0) {
  if (x0 <= 0) throw std::invalid_argument("truncated_linear: x0 must be positive");
  Window w;
  w.kind_ = Kind::TruncatedLinear;
  w.x0_ = x0;
  w.support_sup_ = x0;
  w.boundary_limit_ = 0.0;
  return w;
}

Window Window::truncated_exponential(double rate, double x0) {
  if (rate <= 0 || x0 <= 0)
    throw std::invalid_argument("truncated_exponential: rate and x0 must be positive");
  Window w;
  w.kind_ = Kind::TruncatedExponential;
  w.rate_ = rate;
  w.x0_ = x0;
  w.support_sup_ = x0;
  w.boundary_limit_ = std::exp(-rate * x0);
  return w;
}

Window Window::cauchy_fourier(std::vector<CauchyAtom> atoms) {
  if (atoms.empty()) throw std::invalid_argument("cauchy_fourier: empty atom list");
  for (const auto& a : atoms) {
    if (a.mass <= 0 || a.location <= 0)
      throw std::invalid_argument("cauchy_fourier: masses and locations must be positive");
  }
  Window w;
  w.kind_ = Kind::CauchyFourier;
  w.atoms_ = std::move(atoms);
  w.support_sup_ = std::numeric_limits<double>::infinity();
  return w;
}

Window Window::tabulated(std::vector<double> x, std::vector<double> values) {
  if (x.size() != values.size() || x.size() < 2)
    throw std::invalid_argument("tabulated: need at least two matching samples");
  if (x.front() != 0.0) throw std::invalid_argument("tabulated: grid must start at 0");
  for (std::size_t i = 1; i < x.size(); ++i)
    if (x[i] <= x[i - 1]) throw std::invalid_argument("tabulated: grid must be strictly increasing");
  for (double v : values)
    if (v < 0) throw std::invalid_argument("tabulated: negative sample value");

  Window w;
  w.kind_ = Kind::Tabulated;
  w.tab_x_ = std::move(x);
  w.tab_v_ = std::move(values);

  // Support ends where the samples reach 0 (or at the last sample).
  std::size_t last_pos = 0;
  for (std::size_t i = 0; i < w.tab_v_.size(); ++i)
    if (w.tab_v_[i] > 0) last_pos = i;
  if (w.tab_v_[last_pos] <= 0) throw std::invalid_argument("tabulated: window is identically zero");
  if (last_pos + 1 < w.tab_v_.size())
    w.support_sup_ = w.tab_x_[last_pos + 1];  // linear interpolation hits 0 here or before
  else
    w.support_sup_ = w.tab_x_.back();
  // Left-limit semantics under linear interpolation: last positive sample.
  w.boundary_limit_ = (last_pos + 1 < w.tab_v_.size()) ? 0.0 : w.tab_v_[last_pos];
  return w;
}

double Window::tabulated_value(double x) const {
  if (x < tab_x_.front() || x > tab_x_.back()) return 0.0;
  auto it = std::upper_bound(tab_x_.begin(), tab_x_.end(), x);
  if (it == tab_x_.begin()) return tab_v_.front();
  std::size_t hi = static_cast<std::size_t>(it - tab_x_.begin());
  if (hi == tab_x_.size()) return tab_v_.back();
  std::size_t lo = hi - 1;
  double s = (x - tab_x_[lo]) / (tab_x_[hi] - tab_x_[lo]);
  return tab_v_[lo] + s * (tab_v_[hi] - tab_v_[lo]);
}

double Window::value(double x) const {
  if (x < 0.0 || x > support_sup_) return 0.0;
  switch (kind_) {
    case Kind::OneSidedExponential:
      return std::exp(-rate_ * x);
    case Kind::TruncatedLinear:
      return 1.0 - x / x0_;
    case Kind::TruncatedExponential:
      return std::exp(-rate_ * x);
    case Kind::CauchyFourier: {
      double s = 0.0;
      for (const auto& a : atoms_) s += a.mass * std::exp(-2.0 * kPi * x * a.location);
      return s;
    }
    case Kind::Tabulated:
      return tabulated_value(x);
  }
  return 0.0;
}

double Window::tabulated_decay_ratio(double t) const {
  // Grid supremum of g(x+t)/g(x) over the positive part of the support.
  constexpr int kGridPoints = 10000;
  double hi = std::min(support_sup_, tab_x_.back());
  double sup = 0.0;
  for (int i = 0; i < kGridPoints; ++i) {
    double x = hi * (i + 0.5) / kGridPoints;
    double gx = value(x);
    if (gx <= 0) continue;
    sup = std::max(sup, value(x + t) / gx);
  }
  return sup;
}

double Window::decay_ratio(double t) const {
  if (t <= 0) throw std::invalid_argument("decay_ratio: t must be positive");
  double q = 0.0;
  switch (kind_) {
    case Kind::OneSidedExponential:
      q = std::exp(-rate_ * t);
      break;
    case Kind::TruncatedLinear:
      // Ratio (1 - (x+t)/x0)/(1 - x/x0) is decreasing in x; supremum at x = 0.
      q = (t < x0_) ? 1.0 - t / x0_ : 0.0;
      break;
    case Kind::TruncatedExponential:
      q = (t < x0_) ? std::exp(-rate_ * t) : 0.0;
      break;
    case Kind::CauchyFourier: {
      // Weighted mean of exp(-2 pi t t_k) is bounded by the slowest atom and
      // attains it in the xi -> inf limit.
      double a = atoms_.front().location;
      for (const auto& at : atoms_) a = std::min(a, at.location);
      q = std::exp(-2.0 * kPi * t * a);
      break;
    }
    case Kind::Tabulated:
      q = tabulated_decay_ratio(t);
      break;
  }
  if (q >= 1.0)
    throw std::domain_error("decay_ratio: window is not stably decreasing at t=" + std::to_string(t));
  return floored(q);
}

std::string Window::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::OneSidedExponential:
      os << "one-sided-exp:" << rate_;
      break;
    case Kind::TruncatedLinear:
      os << "trunc-linear:" << x0_;
      break;
    case Kind::TruncatedExponential:
      os << "trunc-exp:" << rate_ << "," << x0_;
      break;
    case Kind::CauchyFourier:
      os << "cauchy:";
      for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (i) os << ",";
        os << atoms_[i].mass << "@" << atoms_[i].location;
      }
      break;
    case Kind::Tabulated:
      os << "tabulated[" << tab_x_.size() << " samples]";
      break;
  }
  return os.str();
}

Window cauchy_transform_window(const std::vector<CauchyAtom>& atoms) {
  return Window::cauchy_fourier(atoms);
}

Window load_window_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_window_csv: cannot open " + path);
  std::vector<double> xs, vs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    double x, v;
    if (!(ls >> x >> v)) throw std::runtime_error("load_window_csv: bad line: " + line);
    xs.push_back(x);
    vs.push_back(v);
  }
  return Window::tabulated(std::move(xs), std::move(vs));
}

}  // namespace gabor
