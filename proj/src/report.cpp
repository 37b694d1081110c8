#include "sosinv/report.hpp"

#include "json_parse.hpp"
#include "sosinv/jsonio.hpp"
#include "sosinv/util.hpp"

namespace sosinv {

std::string report_to_json(const AnalysisReport& report) {
  JsonWriter w;
  w.begin_object();
  w.key("tool").begin_object();
  w.key("name").value(std::string(kToolName));
  w.key("version").value(std::string(kToolVersion));
  w.end_object();
  w.key("program_hash").value(report.program_hash);
  w.key("property").begin_object();
  w.key("kappa").value(report.kappa_text);
  w.key("alpha").value(report.alpha);
  w.end_object();
  w.key("degrees").begin_array();
  for (const auto& rec : report.degrees) {
    w.begin_object();
    w.key("m").value(rec.m);
    w.key("status").value(rec.status);
    if (rec.has_w)
      w.key("w").value(rec.w);
    else
      w.key("w").raw("null");
    w.key("alpha_verdict").value(rec.alpha_verdict);
    w.key("identity_residual_max").value(rec.identity_residual_max);
    w.key("lambda_min_min").value(rec.lambda_min_min);
    w.key("solver_iterations").value(rec.solver_iterations);
    w.key("wall_time_s").value(rec.wall_time_s);
    w.end_object();
  }
  w.end_array();
  if (report.best) {
    w.key("best").begin_object();
    w.key("m").value(report.best->m);
    w.key("certificate").raw(certificate_to_json(*report.best));
    w.end_object();
  }
  w.end_object();
  return w.take();
}

AnalysisReport report_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  AnalysisReport report;
  report.program_hash = j.at("program_hash").get<std::string>();
  report.kappa_text = j.at("property").at("kappa").get<std::string>();
  report.alpha = detail::alpha_from_json(j.at("property").at("alpha"));
  for (const auto& rec : j.at("degrees")) {
    DegreeRecord r;
    r.m = rec.at("m").get<int>();
    r.status = rec.at("status").get<std::string>();
    if (!rec.at("w").is_null()) {
      r.has_w = true;
      r.w = rec.at("w").get<double>();
    }
    r.alpha_verdict = rec.at("alpha_verdict").get<std::string>();
    r.identity_residual_max = rec.at("identity_residual_max").get<double>();
    r.lambda_min_min = rec.at("lambda_min_min").get<double>();
    r.solver_iterations = rec.at("solver_iterations").get<int>();
    r.wall_time_s = rec.at("wall_time_s").get<double>();
    report.degrees.push_back(std::move(r));
  }
  if (j.contains("best"))
    report.best = certificate_from_json(j.at("best").at("certificate").dump());
  return report;
}

}  // namespace sosinv
