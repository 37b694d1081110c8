#include "sosinv/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "sosinv/cert.hpp"
#include "sosinv/jsonio.hpp"
#include "sosinv/model.hpp"
#include "sosinv/report.hpp"
#include "sosinv/sdp.hpp"
#include "sosinv/sim.hpp"
#include "sosinv/synth.hpp"
#include "sosinv/util.hpp"

namespace sosinv {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitValidation = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitIo = 4;

class CliError : public std::runtime_error {
 public:
  CliError(int code, const std::string& msg) : std::runtime_error(msg), code(code) {}
  int code;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(kExitIo, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError(kExitIo, "cannot open " + path + " for writing");
  out << data;
  out.flush();
  if (!out) throw CliError(kExitIo, "write failed: " + path);
}

Pps load_program(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_program(text);
  } catch (const ParseError& e) {
    throw CliError(kExitValidation, path + ": " + e.what());
  }
}

double parse_alpha(const std::string& text) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw CliError(kExitValidation, "bad --alpha value '" + text + "' (number or 'inf')");
  }
}

std::pair<int, int> parse_degrees(const std::string& text) {
  int lo = 0, hi = 0;
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw CliError(kExitValidation, "bad --degrees value '" + text + "' (use m or m1..m2)");
  }
  if (lo < 1 || hi < lo)
    throw CliError(kExitValidation, "bad --degrees range " + std::to_string(lo) + ".." +
                                        std::to_string(hi));
  return {lo, hi};
}

std::vector<Interval> parse_box(const std::string& text, int dim) {
  // e.g. [-2,2]x[-2,2]
  std::vector<Interval> box;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw CliError(kExitValidation, "bad --box value '" + text + "'");
    ++pos;
  };
  auto number = [&] {
    skip_ws();
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(text.substr(pos), &used);
    } catch (const std::exception&) {
      throw CliError(kExitValidation, "bad --box value '" + text + "'");
    }
    pos += used;
    return v;
  };
  while (true) {
    expect('[');
    Interval iv;
    iv.lo = number();
    expect(',');
    iv.hi = number();
    expect(']');
    box.push_back(iv);
    skip_ws();
    if (pos < text.size() && (text[pos] == 'x' || text[pos] == 'X')) {
      ++pos;
      continue;
    }
    break;
  }
  skip_ws();
  if (pos != text.size() || static_cast<int>(box.size()) != dim)
    throw CliError(kExitValidation, "bad --box value '" + text + "'");
  return box;
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw CliError(kExitIo, "cannot create directory " + dir);
}

struct ToleranceFlags {
  SolveOptions solve;
  VerifyTolerances verify;
  CompileOptions compile;
};

void add_tolerance_flags(CLI::App* cmd, ToleranceFlags& tol) {
  cmd->add_option("--eps-primal", tol.solve.eps_primal, "solver primal tolerance");
  cmd->add_option("--eps-dual", tol.solve.eps_dual, "solver dual tolerance");
  cmd->add_option("--eps-gap", tol.solve.eps_gap, "solver gap tolerance");
  cmd->add_option("--max-iter", tol.solve.max_iter, "solver iteration limit");
  cmd->add_option("--eps-residual", tol.verify.eps_residual,
                  "certificate identity residual tolerance");
  cmd->add_option("--eps-psd", tol.verify.eps_psd, "certificate eigenvalue tolerance");
  cmd->add_option("--coeff-bound", tol.compile.coeff_bound,
                  "box on template coefficients (<=0 disables)");
}

int cmd_analyze(const std::string& program_path, const std::string& kappa_text,
                const std::string& alpha_text, const std::string& degrees_text,
                const std::string& solver, const std::string& out_path,
                const std::string& export_dir, const ToleranceFlags& tol, bool emit_timings,
                bool verbose) {
  const Pps pps = load_program(program_path);
  SublevelProperty prop;
  try {
    prop.kappa = parse_polyexpr(kappa_text, pps.vars);
  } catch (const ParseError& e) {
    throw CliError(kExitValidation, std::string("--kappa: ") + e.what());
  }
  prop.alpha = parse_alpha(alpha_text);
  const auto [m_lo, m_hi] = parse_degrees(degrees_text);
  if (prop.kappa.degree() > 2 * m_lo)
    throw CliError(kExitValidation,
                   "kappa degree " + std::to_string(prop.kappa.degree()) + " requires m >= " +
                       std::to_string((prop.kappa.degree() + 1) / 2));

  {
    const auto diag = partition_diagnostic(pps, pps.init_box, 10000, 1);
    if (diag.unmatched > 0)
      std::fprintf(stderr, "warning: %d of %d probe points in the initial box match no cell\n",
                   diag.unmatched, diag.samples);
  }

  AnalysisReport report;
  report.program_hash = program_hash(pps);
  report.kappa_text = to_string(prop.kappa);
  report.alpha = prop.alpha;

  if (solver == "export") {
    ensure_dir(export_dir);
    JsonWriter manifest;
    manifest.begin_object();
    manifest.key("program_hash").value(report.program_hash);
    manifest.key("kappa").value(report.kappa_text);
    manifest.key("alpha").value(prop.alpha);
    manifest.key("instances").begin_array();
    for (int m = m_lo; m <= m_hi; ++m) {
      const SosProgram sos = build_sos_program(pps, prop, m);
      const SdpInstance inst = compile(sos, tol.compile);
      const std::string file = export_dir + "/instance_m" + std::to_string(m) + ".dat-s";
      try {
        export_sdpa(inst, file);
      } catch (const std::exception& e) {
        throw CliError(kExitIo, e.what());
      }
      manifest.begin_object();
      manifest.key("m").value(m);
      manifest.key("file").value(file);
      manifest.key("rows").value(inst.num_rows());
      manifest.key("free_vars").value(inst.num_free);
      manifest.key("blocks").begin_array();
      for (int s : inst.block_sizes) manifest.value(s);
      manifest.end_array();
      manifest.end_object();
    }
    manifest.end_array();
    manifest.end_object();
    write_file(export_dir + "/manifest.json", manifest.take());
    return kExitOk;
  }
  if (solver != "internal")
    throw CliError(kExitValidation, "unknown --solver '" + solver + "' (internal|export)");

  bool any_holds = false;
  double best_w = std::numeric_limits<double>::infinity();
  for (int m = m_lo; m <= m_hi; ++m) {
    DegreeRecord rec;
    rec.m = m;
    const SosProgram sos = build_sos_program(pps, prop, m);
    const SdpInstance inst = compile(sos, tol.compile);
    SolveOptions sopts = tol.solve;
    sopts.verbose = verbose;
    const SdpSolution sol = solve(inst, sopts);
    rec.status = to_string(sol.status);
    rec.solver_iterations = sol.iterations;
    rec.wall_time_s = emit_timings ? sol.wall_seconds : 0.0;
    if (sol.usable()) {
      const Recovered recov = recover(sol, sos, inst);
      Certificate cert = make_certificate(pps, prop, m, recov.p, recov.w, recov.grams);
      const VerificationReport vr = verify(cert, pps, tol.verify);
      rec.has_w = true;
      rec.w = recov.w;
      rec.identity_residual_max = vr.max_identity_residual();
      rec.lambda_min_min = vr.min_gram_eigenvalue();
      if (vr.verdict == Verdict::Rejected) {
        rec.alpha_verdict = "failed";
      } else if (vr.verdict == Verdict::Certified) {
        rec.alpha_verdict = prop.alpha_is_infinite() ? "holds_bounded" : "holds";
        any_holds = true;
      } else {
        rec.alpha_verdict = "inconclusive";
      }
      if (vr.verdict != Verdict::Rejected && recov.w < best_w) {
        best_w = recov.w;
        report.best = std::move(cert);
      }
    }
    const std::string w_note = rec.has_w ? " w=" + format_double(rec.w) : std::string();
    std::fprintf(stderr, "m=%d status=%s%s verdict=%s iters=%d (%.2fs)\n", m, rec.status.c_str(),
                 w_note.c_str(), rec.alpha_verdict.c_str(), rec.solver_iterations,
                 sol.wall_seconds);
    report.degrees.push_back(std::move(rec));
  }

  write_file(out_path, report_to_json(report));
  return any_holds ? kExitOk : kExitInconclusive;
}

int cmd_simulate(const std::string& program_path, int n, int steps, std::uint64_t seed,
                 const std::string& out_dir) {
  const Pps pps = load_program(program_path);
  if (n < 1) throw CliError(kExitValidation, "--n must be >= 1");
  if (steps < 0) throw CliError(kExitValidation, "--steps must be >= 0");
  ensure_dir(out_dir);
  const SampledReachSet reach = sample_reach(pps, n, steps, seed);
  try {
    write_points_csv(reach, pps.dim, out_dir + "/points.csv");
  } catch (const std::exception& e) {
    throw CliError(kExitIo, e.what());
  }
  return kExitOk;
}

int cmd_plot(const std::string& input_path, const std::string& box_text, int resolution,
             const std::string& out_dir) {
  const std::string text = read_file(input_path);
  Certificate cert;
  try {
    if (text.find("\"grams\"") != std::string::npos &&
        text.find("\"degrees\"") == std::string::npos) {
      cert = certificate_from_json(text);
    } else {
      const AnalysisReport report = report_from_json(text);
      if (!report.best)
        throw CliError(kExitValidation, input_path + ": no certified degree in report");
      cert = *report.best;
    }
  } catch (const CliError&) {
    throw;
  } catch (const std::exception& e) {
    throw CliError(kExitValidation, input_path + ": " + e.what());
  }
  if (cert.dim != 2)
    throw CliError(kExitValidation, "plot requires a 2-dimensional system");
  if (resolution < 2) throw CliError(kExitValidation, "--resolution must be >= 2");
  const std::vector<Interval> box = parse_box(box_text, 2);
  ensure_dir(out_dir);
  const GridEval grid = grid_eval(cert.p, box, resolution);
  const std::string suffix = "_m" + std::to_string(cert.m);
  try {
    write_grid_csv(grid, out_dir + "/grid" + suffix + ".csv");
    write_region_pgm(grid, out_dir + "/region" + suffix + ".pgm");
  } catch (const std::exception& e) {
    throw CliError(kExitIo, e.what());
  }
  return kExitOk;
}

int cmd_complete(const std::string& cert_path, const std::string& candidates_text,
                 const std::string& out_path, const ToleranceFlags& tol) {
  Certificate cert;
  try {
    cert = certificate_from_json(read_file(cert_path));
  } catch (const CliError&) {
    throw;
  } catch (const std::exception& e) {
    throw CliError(kExitValidation, cert_path + ": " + e.what());
  }

  std::vector<std::string> names;
  for (int k = 0; k < cert.dim; ++k) names.push_back("x" + std::to_string(k + 1));

  std::vector<Polynomial> candidates;
  if (candidates_text == "builtin:squares") {
    for (int k = 0; k < cert.dim; ++k) {
      Polynomial q = Polynomial::variable(cert.dim, k) * Polynomial::variable(cert.dim, k);
      q.add_term(Monomial::unit(cert.dim), -cert.w);
      candidates.push_back(q);
    }
  } else {
    std::istringstream in(read_file(candidates_text));
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      try {
        candidates.push_back(parse_polyexpr(line, names));
      } catch (const ParseError& e) {
        throw CliError(kExitValidation,
                       candidates_text + ":" + std::to_string(lineno) + ": " + e.what());
      }
    }
    if (candidates.empty())
      throw CliError(kExitValidation, candidates_text + ": no candidates found");
  }

  const auto results = complete_basis(cert.p, candidates, tol.solve);

  JsonWriter w;
  w.begin_object();
  w.key("pps_hash").value(cert.pps_hash);
  w.key("m").value(cert.m);
  w.key("w").value(cert.w);
  w.key("p");
  write_poly_terms(w, cert.p);
  w.key("candidates").begin_array();
  int accepted = 0;
  for (const auto& res : results) {
    w.begin_object();
    w.key("q");
    write_poly_terms(w, res.q);
    w.key("status").value(to_string(res.status));
    if (res.status == CandidateStatus::Accepted) {
      ++accepted;
      w.key("gram").begin_object();
      w.key("basis_degree").value(res.gram.basis.half_degree);
      w.key("upper_triangle").begin_array();
      for (int i = 0; i < res.gram.basis.size(); ++i)
        for (int j = i; j < res.gram.basis.size(); ++j) w.value(res.gram.matrix(i, j));
      w.end_array();
      w.end_object();
    }
    w.end_object();
    std::fprintf(stderr, "candidate %s: %s\n", to_string(res.q).c_str(),
                 to_string(res.status).c_str());
  }
  w.end_array();
  w.end_object();
  write_file(out_path, w.take());
  return accepted > 0 ? kExitOk : kExitInconclusive;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"polynomial invariant synthesis via sums-of-squares programming"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "synthesize and verify an invariant");
  std::string program_path, kappa_text, alpha_text = "inf", degrees_text = "2..3";
  std::string solver = "internal", out_path = "report.json", export_dir = "export";
  ToleranceFlags tol;
  bool emit_timings = false, verbose = false;
  analyze->add_option("program", program_path, "program file")->required();
  analyze->add_option("--kappa", kappa_text, "property polynomial over the program variables")
      ->required();
  analyze->add_option("--alpha", alpha_text, "property level (number or 'inf')");
  analyze->add_option("--degrees", degrees_text, "hierarchy steps, m or m1..m2");
  analyze->add_option("--solver", solver, "internal | export");
  analyze->add_option("--out", out_path, "report path");
  analyze->add_option("--export-dir", export_dir, "directory for exported instances");
  analyze->add_flag("--emit-timings", emit_timings, "record wall time in the report");
  analyze->add_flag("--verbose", verbose, "solver iteration log");
  add_tolerance_flags(analyze, tol);

  // simulate
  auto* simulate = app.add_subcommand("simulate", "sample trajectories to CSV");
  std::string sim_program, sim_out = "sim";
  int sim_n = 100, sim_steps = 6;
  std::uint64_t sim_seed = 0;
  simulate->add_option("program", sim_program, "program file")->required();
  simulate->add_option("--n", sim_n, "number of initial points");
  simulate->add_option("--steps", sim_steps, "iterations per trajectory");
  simulate->add_option("--seed", sim_seed, "sampling seed");
  simulate->add_option("--out", sim_out, "output directory");

  // plot
  auto* plot = app.add_subcommand("plot", "rasterize the invariant sublevel set");
  std::string plot_input, plot_box = "[-2,2]x[-2,2]", plot_out = "plot";
  int plot_res = 200;
  plot->add_option("input", plot_input, "report.json or certificate.json")->required();
  plot->add_option("--box", plot_box, "plot window, [a,b]x[c,d]");
  plot->add_option("--resolution", plot_res, "grid points per axis");
  plot->add_option("--out", plot_out, "output directory");

  // complete
  auto* complete = app.add_subcommand("complete", "template-basis completion for a certificate");
  std::string comp_cert, comp_candidates = "builtin:squares", comp_out = "completed.json";
  ToleranceFlags comp_tol;
  complete->add_option("certificate", comp_cert, "certificate.json")->required();
  complete->add_option("--candidates", comp_candidates, "candidate file or builtin:squares");
  complete->add_option("--out", comp_out, "output path");
  add_tolerance_flags(complete, comp_tol);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (analyze->parsed())
      return cmd_analyze(program_path, kappa_text, alpha_text, degrees_text, solver, out_path,
                         export_dir, tol, emit_timings, verbose);
    if (simulate->parsed()) return cmd_simulate(sim_program, sim_n, sim_steps, sim_seed, sim_out);
    if (plot->parsed()) return cmd_plot(plot_input, plot_box, plot_res, plot_out);
    if (complete->parsed()) return cmd_complete(comp_cert, comp_candidates, comp_out, comp_tol);
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return e.code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace sosinv
