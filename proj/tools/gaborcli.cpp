// Batch front end: certification, empirical bounds, parameter sweeps,
// semi-irregular pipelines, non-frame demos, and dominance-test campaigns.
// Exit codes: 0 success, 2 NotFrame verdict from `certify`, 1 error.

#include <CLI11.hpp>
#include <Eigen/Eigenvalues>
#include <atomic>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <mutex>
#include <sstream>
#include <thread>

#include "gabor/dominance.hpp"
#include "gabor/framecert.hpp"
#include "gabor/grid.hpp"
#include "gabor/report_json.hpp"
#include "gabor/ronshen.hpp"
#include "gabor/spectral.hpp"
#include "gabor/window.hpp"

namespace {

using namespace gabor;

Window parse_window(const std::string& spec) {
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, sep)) out.push_back(tok);
    return out;
  };
  if (kind == "one-sided-exp") return Window::one_sided_exponential(std::stod(args));
  if (kind == "trunc-linear") return Window::truncated_linear(std::stod(args));
  if (kind == "trunc-exp") {
    auto p = split(args, ',');
    if (p.size() != 2) throw CLI::ValidationError("--window", "trunc-exp needs rate,x0");
    return Window::truncated_exponential(std::stod(p[0]), std::stod(p[1]));
  }
  if (kind == "cauchy") {
    std::vector<CauchyAtom> atoms;
    for (const auto& a : split(args, ',')) {
      auto at = split(a, '@');
      if (at.size() != 2) throw CLI::ValidationError("--window", "cauchy atoms are mass@location");
      atoms.push_back({std::stod(at[0]), std::stod(at[1])});
    }
    return cauchy_transform_window(atoms);
  }
  if (kind == "tabulated") return load_window_csv(args);
  throw CLI::ValidationError("--window", "unknown window kind: " + kind);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << text;
}

struct CommonOpts {
  std::string window_spec;
  double alpha = 1.0;
  double beta = 1.0;
  int x_grid = 32;
  long truncation = 64;
  std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool need_lattice = true) {
  cmd->add_option("--window", o.window_spec,
                  "window spec: one-sided-exp:R | trunc-linear:X0 | trunc-exp:R,X0 | "
                  "cauchy:M@T,... | tabulated:PATH")
      ->required();
  if (need_lattice) {
    cmd->add_option("--alpha", o.alpha, "translation step")->check(CLI::PositiveNumber);
    cmd->add_option("--beta", o.beta, "modulation step")->check(CLI::PositiveNumber);
  }
  cmd->add_option("--x-grid", o.x_grid, "fiber grid size")->check(CLI::PositiveNumber);
  cmd->add_option("--truncation", o.truncation, "matrix truncation")->check(CLI::PositiveNumber);
  cmd->add_option("--output,-o", o.output, "output file (default stdout)");
  cmd->configurable();
}

int run_certify(const CommonOpts& o) {
  Window w = parse_window(o.window_spec);
  auto cls = classify(w, o.alpha, o.beta);
  FrameReport rep;
  if (cls.verdict == Verdict::Frame) {
    rep = certify_lower_frame_bound(w, regular_lattice(o.alpha, o.beta), o.x_grid,
                                    o.truncation);
  } else {
    rep.verdict = cls.verdict;
    rep.reason = cls.reason;
    rep.window_desc = w.describe();
    rep.x_grid_size = o.x_grid;
    rep.truncation = o.truncation;
  }
  auto j = to_json(rep);
  j["alpha"] = o.alpha;
  j["beta"] = o.beta;
  write_text(o.output, j.dump(2) + "\n");
  if (rep.verdict == Verdict::NotFrame) return 2;
  return rep.verdict == Verdict::Frame ? 0 : 1;
}

int run_bounds(const CommonOpts& o) {
  Window w = parse_window(o.window_spec);
  GridSpec grid = regular_lattice(o.alpha, o.beta);
  std::ostringstream csv;
  csv << "x,sigma_min,sigma_max,residual\n";
  csv.precision(12);
  double min_smin = std::numeric_limits<double>::infinity(), max_smax = 0.0;
  // Rows must reach the leading support of the edge columns when alpha < 1/beta.
  long n_trunc =
      static_cast<long>(std::ceil((static_cast<double>(o.truncation) + 1.0) /
                                  (o.beta * o.alpha))) +
      1;
  for (int i = 0; i < o.x_grid; ++i) {
    double x = (i + 0.5) / (o.beta * o.x_grid);
    auto slice = build_slice(w, grid, x, n_trunc, o.truncation);
    auto sr = extreme_singular_values(slice.entries);
    csv << x << "," << sr.sigma_min << "," << sr.sigma_max << "," << sr.residual << "\n";
    min_smin = std::min(min_smin, sr.sigma_min);
    max_smax = std::max(max_smax, sr.sigma_max);
  }
  csv << "# empirical_A," << o.beta * min_smin * min_smin << "\n";
  csv << "# empirical_B," << o.beta * max_smax * max_smax << "\n";
  write_text(o.output, csv.str());
  return 0;
}

int run_sweep(const CommonOpts& o, double a_min, double a_max, double step, int workers) {
  Window w = parse_window(o.window_spec);
  std::vector<std::pair<double, double>> cells;
  for (double a = a_min; a <= a_max + 1e-9; a += step)
    for (double b = a_min; b <= a_max + 1e-9; b += step) cells.emplace_back(a, b);

  std::vector<std::string> lines(cells.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) break;
      auto [a, b] = cells[i];
      std::ostringstream ln;
      ln.precision(10);
      ln << a << "," << b << ",";
      try {
        auto cls = classify(w, a, b);
        if (cls.verdict != Verdict::Frame) {
          ln << to_string(cls.verdict) << ",,,";
        } else {
          auto rep = certify_lower_frame_bound(w, regular_lattice(a, b), o.x_grid,
                                               o.truncation);
          ln << to_string(rep.verdict) << ",";
          if (rep.certified_A) ln << *rep.certified_A;
          ln << ",";
          if (rep.empirical_A) ln << *rep.empirical_A;
          ln << ",";
          if (rep.empirical_B) ln << *rep.empirical_B;
        }
      } catch (const std::exception& e) {
        ln << "error,,,";
      }
      lines[i] = ln.str();
    }
  };
  std::vector<std::thread> pool;
  int nworkers = std::max(1, workers);
  for (int t = 0; t < nworkers; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();

  std::ostringstream csv;
  csv << "alpha,beta,verdict,certified_A,empirical_A,empirical_B\n";
  for (const auto& ln : lines) csv << ln << "\n";
  write_text(o.output, csv.str());
  return 0;
}

int run_irregular(const CommonOpts& o, const std::string& points_path, double jitter,
                  std::uint64_t seed, std::size_t count, const std::string& export_path) {
  Window w = parse_window(o.window_spec);
  std::vector<double> pts;
  if (!points_path.empty())
    pts = load_points_csv(points_path);
  else
    pts = jittered_lattice(o.alpha, jitter, seed, count);
  if (!export_path.empty()) save_points_csv(export_path, pts);

  auto val = validate_semi_irregular(pts, o.alpha);
  nlohmann::json j;
  j["validation"] = to_json(val);
  j["alpha"] = o.alpha;
  j["beta"] = o.beta;
  j["points"] = pts.size();
  int rc = 0;
  if (val.gap_ok) {
    SemiIrregularGrid irr{pts, o.beta, {}, o.alpha};
    auto rep = certify_lower_frame_bound(w, GridSpec{irr}, o.x_grid, o.truncation);
    j["report"] = to_json(rep);
  } else {
    j["report"] = nullptr;
    rc = 2;
  }
  write_text(o.output, j.dump(2) + "\n");
  return rc;
}

int run_demo(const CommonOpts& o, const std::string& kind) {
  Window w = parse_window(o.window_spec);
  std::ostringstream csv;
  csv.precision(12);
  if (kind == "incompleteness") {
    auto res = incompleteness_witness(w, o.alpha, o.beta, o.truncation);
    csv << "h_lo,h_hi,residual\n";
    csv << res.h_lo << "," << res.h_hi << "," << res.residual << "\n";
  } else if (kind == "boundary") {
    std::vector<double> eps = {0.2, 0.1, 0.05, 0.025};
    auto r = boundary_degeneration_demo(w, o.beta, eps, o.truncation);
    csv << "eps,ratio\n";
    for (std::size_t i = 0; i < eps.size(); ++i) csv << eps[i] << "," << r[i] << "\n";
  } else {
    throw CLI::ValidationError("--kind", "expected incompleteness or boundary");
  }
  write_text(o.output, csv.str());
  return 0;
}

int run_dominance_test(double delta, double C, double lambda, int count,
                       std::uint64_t seed, int max_size, const std::string& output) {
  auto cert = certificate(delta, C, lambda);
  int violations = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  for (int t = 0; t < count; ++t) {
    int size = 2 + t % (max_size - 1);
    auto D = random_conforming_matrix(delta, C, lambda, size, seed + static_cast<std::uint64_t>(t),
                                      t % 2 == 0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(D.adjoint() * D);
    double smin = std::sqrt(std::max(0.0, es.eigenvalues()(0)));
    worst_margin = std::min(worst_margin, smin - cert.epsilon);
    if (smin < cert.epsilon) ++violations;
  }
  std::ostringstream os;
  os << "certificate epsilon: " << cert.epsilon << "\n"
     << "matrices tested: " << count << "\n"
     << "violations: " << violations << "\n"
     << "worst margin: " << worst_margin << "\n";
  write_text(output, os.str());
  return violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gabor frame certification toolkit"};
  app.require_subcommand(1);
  // Keys live in a section named after the subcommand, e.g. [certify].
  app.set_config("--config", "", "flat key-value config file; pass before the subcommand");

  CommonOpts certify_o, bounds_o, sweep_o, irr_o, demo_o;
  sweep_o.x_grid = 8;
  sweep_o.truncation = 24;
  irr_o.alpha = 0.9;
  irr_o.truncation = 48;

  auto* certify = app.add_subcommand("certify", "classify and certify a lattice configuration");
  add_common(certify, certify_o);

  auto* bounds = app.add_subcommand("bounds", "per-fiber singular value table");
  add_common(bounds, bounds_o);

  auto* sweep = app.add_subcommand("sweep", "scan an (alpha, beta) rectangle");
  add_common(sweep, sweep_o);
  double a_min = 0.05, a_max = 1.50, a_step = 0.05;
  int workers = static_cast<int>(std::thread::hardware_concurrency());
  sweep->add_option("--min", a_min, "smallest alpha and beta");
  sweep->add_option("--max", a_max, "largest alpha and beta");
  sweep->add_option("--step", a_step, "grid step")->check(CLI::PositiveNumber);
  sweep->add_option("--workers", workers, "concurrent cells");

  auto* irregular = app.add_subcommand("irregular", "semi-irregular pipeline");
  add_common(irregular, irr_o);
  std::string points_path, export_path;
  double jitter = 0.1;
  std::uint64_t ir_seed = 3;
  std::size_t ir_count = 128;
  irregular->add_option("--points", points_path, "one-column CSV of translation points");
  irregular->add_option("--jitter", jitter, "jitter amplitude for generated lattices");
  irregular->add_option("--seed", ir_seed, "generator seed");
  irregular->add_option("--count", ir_count, "number of generated points");
  irregular->add_option("--export-points", export_path, "write the point list to CSV");

  auto* demo = app.add_subcommand("demo", "non-frame evidence generators");
  add_common(demo, demo_o);
  std::string demo_kind = "incompleteness";
  demo->add_option("--kind", demo_kind, "incompleteness | boundary");

  auto* domtest = app.add_subcommand("dominance-test", "random conforming matrix campaign");
  double dt_delta = 1.0, dt_C = 1.0, dt_lambda = 0.5;
  int dt_count = 200, dt_max_size = 40;
  std::uint64_t dt_seed = 1;
  std::string dt_output;
  domtest->add_option("--delta", dt_delta)->check(CLI::PositiveNumber);
  domtest->add_option("--C", dt_C)->check(CLI::PositiveNumber);
  domtest->add_option("--lambda", dt_lambda)->check(CLI::Range(1e-9, 0.999999));
  domtest->add_option("--count", dt_count)->check(CLI::PositiveNumber);
  domtest->add_option("--seed", dt_seed);
  domtest->add_option("--max-size", dt_max_size)->check(CLI::Range(2, 2048));
  domtest->add_option("--output,-o", dt_output);
  domtest->configurable();

  CLI11_PARSE(app, argc, argv);

  try {
    if (certify->parsed()) return run_certify(certify_o);
    if (bounds->parsed()) return run_bounds(bounds_o);
    if (sweep->parsed()) return run_sweep(sweep_o, a_min, a_max, a_step, workers);
    if (irregular->parsed())
      return run_irregular(irr_o, points_path, jitter, ir_seed, ir_count, export_path);
    if (demo->parsed()) return run_demo(demo_o, demo_kind);
    if (domtest->parsed())
      return run_dominance_test(dt_delta, dt_C, dt_lambda, dt_count, dt_seed, dt_max_size,
                                dt_output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
