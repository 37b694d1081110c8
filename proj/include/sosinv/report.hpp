#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sosinv/cert.hpp"

namespace sosinv {

// One hierarchy step of an analysis run.  alpha_verdict is one of
// "holds", "holds_bounded", "inconclusive", "failed".
struct DegreeRecord {
  int m = 0;
  std::string status;
  bool has_w = false;
  double w = 0.0;
  std::string alpha_verdict = "failed";
  double identity_residual_max = 0.0;
  double lambda_min_min = 0.0;
  int solver_iterations = 0;
  double wall_time_s = 0.0;
};

struct AnalysisReport {
  std::string program_hash;
  std::string kappa_text;  // canonical rendering over x1..xd
  double alpha = 0.0;
  std::vector<DegreeRecord> degrees;  // ascending m
  std::optional<Certificate> best;    // smallest verified w across degrees
};

std::string report_to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const std::string& text);

}  // namespace sosinv
