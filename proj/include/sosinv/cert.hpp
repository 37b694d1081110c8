#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sosinv/model.hpp"
#include "sosinv/poly.hpp"

namespace sosinv {

// Everything needed to re-check a solution of the synthesis problem without
// the solver: the invariant template, the bound, and the full multiplier
// Gram set, tied to a system fingerprint.
struct Certificate {
  int dim = 0;
  int m = 0;
  Polynomial p;
  double w = 0.0;
  std::vector<std::pair<std::string, GramTerm>> grams;
  SublevelProperty property;
  std::string pps_hash;

  const GramTerm* find_gram(const std::string& name) const;
};

struct VerifyTolerances {
  double eps_residual = 1e-6;  // coefficient infinity-norm per identity
  double eps_psd = 1e-6;       // minimum Gram eigenvalue >= -eps_psd
};

enum class Verdict { Certified, CertifiedUpToAlphaGap, Rejected };

std::string to_string(Verdict verdict);

struct VerificationReport {
  std::vector<std::pair<std::string, double>> identity_residuals;
  std::vector<std::pair<std::string, double>> min_eigenvalues;
  bool psd_ok = false;
  bool identity_ok = false;
  bool alpha_ok = false;
  Verdict verdict = Verdict::Rejected;

  double max_identity_residual() const;
  double min_gram_eigenvalue() const;
};

// Recomputes the init/step/level identities symbolically (including the
// composition with every update map from scratch), expands every Gram, and
// checks eigenvalues with a symmetric eigensolve.  Solver-independent.
VerificationReport verify(const Certificate& cert, const Pps& pps, VerifyTolerances tol = {});

struct PointAudit {
  int n_points = 0;
  int n_in_init = 0;        // points inside X_in
  int n_inductive = 0;      // points inside X0 with a matching cell
  int n_not_applicable = 0; // outside X0 or no cell: inductive check skipped
  int fail_init = 0;        // x in X_in but p(x) > eps
  int fail_level = 0;       // kappa(x) > w + p(x) + eps
  int fail_step = 0;        // p(T(x)) > p(x) + eps on the selected cell

  bool clean() const { return fail_init == 0 && fail_level == 0 && fail_step == 0; }
};

// Necessary-condition spot check of the certificate on concrete points; not
// a proof, a cross-check against simulated trajectories.
PointAudit point_audit(const Certificate& cert, const Pps& pps,
                       const std::vector<Eigen::VectorXd>& points, double eps = 1e-6);

Certificate make_certificate(const Pps& pps, const SublevelProperty& prop, int m,
                             const Polynomial& p, double w,
                             std::vector<std::pair<std::string, GramTerm>> grams);

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

// Term-list helpers shared with the report writer.
void write_poly_terms(class JsonWriter& w, const Polynomial& p);

}  // namespace sosinv
