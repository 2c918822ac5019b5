#include "gabor/report_json.hpp"

namespace gabor {

nlohmann::json to_json(const DominanceCertificate& cert) {
  return {
      {"delta", cert.delta},   {"C", cert.C},         {"lambda", cert.lambda},
      {"n0", cert.n0},         {"kappa", cert.kappa}, {"q_val", cert.q_val},
      {"epsilon", cert.epsilon},
  };
}

nlohmann::json to_json(const FrameReport& report) {
  nlohmann::json j;
  j["verdict"] = to_string(report.verdict);
  j["reason"] = report.reason ? nlohmann::json(to_string(*report.reason)) : nullptr;
  j["certified_epsilon"] =
      report.certified_epsilon ? nlohmann::json(*report.certified_epsilon) : nullptr;
  j["certified_A"] = report.certified_A ? nlohmann::json(*report.certified_A) : nullptr;
  j["empirical_A"] = report.empirical_A ? nlohmann::json(*report.empirical_A) : nullptr;
  j["empirical_B"] = report.empirical_B ? nlohmann::json(*report.empirical_B) : nullptr;
  j["certificate"] = report.cert ? to_json(*report.cert) : nlohmann::json(nullptr);
  j["q"] = report.q;
  j["diagnostics"] = {
      {"x_grid_size", report.x_grid_size},
      {"truncation", report.truncation},
      {"delta_obs_per_x", report.delta_obs_per_x},
      {"failing_x", report.failing_x},
  };
  j["window"] = report.window_desc;
  if (!report.notes.empty()) j["notes"] = report.notes;
  return j;
}

nlohmann::json to_json(const ValidationReport& report) {
  nlohmann::json j;
  j["gap_ok"] = report.gap_ok;
  j["max_gap"] = report.max_gap;
  j["min_gap"] = report.min_gap;
  j["separation_m"] = report.separation_m ? nlohmann::json(*report.separation_m) : nullptr;
  j["checked_points"] = report.checked_points;
  return j;
}

}  // namespace gabor
