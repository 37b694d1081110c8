#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace sosinv {

// One coefficient of a symmetric constraint matrix; represents both (i,j)
// and (j,i).  Always stored with i <= j.
struct MatEntry {
  int block = 0;
  int i = 0;
  int j = 0;
  double value = 0.0;
  friend bool operator==(const MatEntry&, const MatEntry&) = default;
};

struct LinEntry {
  int var = 0;
  double value = 0.0;
  friend bool operator==(const LinEntry&, const LinEntry&) = default;
};

// sum_b <A_b, X_b> + sum_f lin_f * y_f = rhs
struct SdpRow {
  std::vector<MatEntry> mat;
  std::vector<LinEntry> lin;
  double rhs = 0.0;
  friend bool operator==(const SdpRow&, const SdpRow&) = default;
};

// Linear SDP with PSD blocks X_b and free scalars y:
//   minimize    objective . y
//   subject to  rows (equalities), X_b >= 0.
// Every row must reference at least one block entry.
struct SdpInstance {
  std::vector<int> block_sizes;
  int num_free = 0;
  std::vector<SdpRow> rows;
  std::vector<LinEntry> objective;
  std::vector<std::string> block_names;  // optional; parallel to block_sizes
  std::vector<std::string> free_names;   // optional; length num_free

  int num_blocks() const { return static_cast<int>(block_sizes.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }

  bool structurally_equal(const SdpInstance& other) const {
    return block_sizes == other.block_sizes && num_free == other.num_free && rows == other.rows &&
           objective == other.objective;
  }
};

enum class SolveStatus {
  Optimal,
  Feasible,
  Infeasible,
  Unbounded,
  NumericalFailure,
  IterationLimit,
};

std::string to_string(SolveStatus status);

struct SolveOptions {
  double eps_primal = 1e-8;
  double eps_dual = 1e-8;
  double eps_gap = 1e-8;
  int max_iter = 200;
  bool verbose = false;
};

struct SdpSolution {
  SolveStatus status = SolveStatus::NumericalFailure;
  std::vector<Eigen::MatrixXd> blocks;  // primal PSD block values
  Eigen::VectorXd free_values;
  Eigen::VectorXd dual;  // one multiplier per row
  double objective = 0.0;
  double primal_residual = 0.0;  // max abs equality violation
  double dual_residual = 0.0;
  double gap = 0.0;
  double min_eigenvalue = 0.0;  // over all blocks
  int iterations = 0;
  double wall_seconds = 0.0;

  bool usable() const { return status == SolveStatus::Optimal || status == SolveStatus::Feasible; }
};

// Primal-dual path-following interior point (HKM direction, Mehrotra
// predictor-corrector), dense per-block kernels.  Deterministic: fixed
// iteration schedule, no time-based state.
SdpSolution solve(const SdpInstance& inst, const SolveOptions& opts = {});

// Recomputes objective, residuals, and the minimum block eigenvalue from
// the stored values; downgrades Optimal/Feasible to NumericalFailure when
// a block dips below -eps_psd.
void evaluate_solution(const SdpInstance& inst, SdpSolution& sol, double eps_psd);

// Canonical flat indexing of the decision entries: per block the upper
// triangle in row-major order, then the free scalars.
int decision_count(const SdpInstance& inst);
int decision_index(const SdpInstance& inst, int block, int i, int j);
int decision_index_free(const SdpInstance& inst, int f);
Eigen::VectorXd flatten_solution(const SdpInstance& inst, const SdpSolution& sol);

// SDPA sparse (.dat-s) interchange.  Free scalars are split into a trailing
// diagonal block of paired nonnegative entries (x+ at 2f+1, x- at 2f+2,
// 1-based).  Deterministic output.
void export_sdpa(const SdpInstance& inst, const std::string& path);
SdpInstance import_sdpa(const std::string& path);

// Plain-text solution interchange in the CSDP style: first line the dual
// vector, then "matno block i j value" entries with matno 1 for the dual
// slack and 2 for the primal blocks.
void write_solution(const SdpSolution& sol, const SdpInstance& inst, const std::string& path);
// Residuals and eigenvalues are recomputed locally, never trusted from the
// file; eps_psd = 10 * eps_primal governs the PSD downgrade.
SdpSolution import_solution(const std::string& path, const SdpInstance& inst,
                            double eps_primal = 1e-8);

}  // namespace sosinv
