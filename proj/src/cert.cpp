#include "sosinv/cert.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sosinv/jsonio.hpp"
#include "sosinv/sos_names.hpp"

namespace sosinv {

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Certified: return "certified";
    case Verdict::CertifiedUpToAlphaGap: return "certified_up_to_alpha_gap";
    case Verdict::Rejected: return "rejected";
  }
  return "unknown";
}

const GramTerm* Certificate::find_gram(const std::string& name) const {
  for (const auto& [n, g] : grams)
    if (n == name) return &g;
  return nullptr;
}

double VerificationReport::max_identity_residual() const {
  double r = 0.0;
  for (const auto& [name, v] : identity_residuals) r = std::max(r, v);
  return r;
}

double VerificationReport::min_gram_eigenvalue() const {
  double r = std::numeric_limits<double>::infinity();
  for (const auto& [name, v] : min_eigenvalues) r = std::min(r, v);
  return r;
}

namespace {

const GramTerm& require_gram(const Certificate& cert, const std::string& name) {
  const GramTerm* g = cert.find_gram(name);
  if (!g) throw std::invalid_argument("verify: missing multiplier '" + name + "'");
  return *g;
}

}  // namespace

VerificationReport verify(const Certificate& cert, const Pps& pps, VerifyTolerances tol) {
  if (cert.pps_hash != program_hash(pps))
    throw std::invalid_argument("verify: certificate fingerprint does not match the system");
  if (cert.dim != pps.dim) throw std::invalid_argument("verify: dimension mismatch");

  VerificationReport report;

  // init: -p = sigma0 - sum_j sigma_j r_j^in
  {
    Polynomial residual = -cert.p - expand_gram(require_gram(cert, sigma0_name()));
    for (std::size_t j = 0; j < pps.x_in.constraints.size(); ++j) {
      const GramTerm& g = require_gram(cert, sigma_in_name(static_cast<int>(j)));
      residual = residual + expand_gram(g) * pps.x_in.constraints[j].poly;
    }
    report.identity_residuals.emplace_back("init", residual.max_abs_coefficient());
  }

  // step: p - p o T^i = sigma^i - sum mu r^i - sum gamma r^0
  for (std::size_t i = 0; i < pps.cells.size(); ++i) {
    const Cell& cell = pps.cells[i];
    Polynomial residual = cert.p - compose(cert.p, cell.update);
    residual = residual - expand_gram(require_gram(cert, cell_sigma_name(static_cast<int>(i))));
    for (std::size_t j = 0; j < cell.guard.constraints.size(); ++j) {
      const GramTerm& g =
          require_gram(cert, cell_mu_name(static_cast<int>(i), static_cast<int>(j)));
      residual = residual + expand_gram(g) * cell.guard.constraints[j].poly;
    }
    for (std::size_t j = 0; j < pps.x0.constraints.size(); ++j) {
      const GramTerm& g =
          require_gram(cert, cell_gamma_name(static_cast<int>(i), static_cast<int>(j)));
      residual = residual + expand_gram(g) * pps.x0.constraints[j].poly;
    }
    report.identity_residuals.emplace_back("step_cell" + std::to_string(i),
                                           residual.max_abs_coefficient());
  }

  // level: w + p - kappa = psi
  {
    Polynomial residual = cert.p - cert.property.kappa - expand_gram(require_gram(cert, psi_name()));
    residual.add_term(Monomial::unit(cert.dim), cert.w);
    report.identity_residuals.emplace_back("level", residual.max_abs_coefficient());
  }

  for (const auto& [name, gram] : cert.grams) {
    Eigen::MatrixXd sym = 0.5 * (gram.matrix + gram.matrix.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
    report.min_eigenvalues.emplace_back(name, es.eigenvalues().minCoeff());
  }

  report.identity_ok = report.max_identity_residual() <= tol.eps_residual;
  report.psd_ok = report.min_gram_eigenvalue() >= -tol.eps_psd;
  report.alpha_ok = cert.property.alpha_is_infinite() ? std::isfinite(cert.w)
                                                      : cert.w <= cert.property.alpha;
  if (report.identity_ok && report.psd_ok)
    report.verdict = report.alpha_ok ? Verdict::Certified : Verdict::CertifiedUpToAlphaGap;
  else
    report.verdict = Verdict::Rejected;
  return report;
}

PointAudit point_audit(const Certificate& cert, const Pps& pps,
                       const std::vector<Eigen::VectorXd>& points, double eps) {
  PointAudit audit;
  audit.n_points = static_cast<int>(points.size());
  for (const auto& x : points) {
    const double px = eval(cert.p, x);
    if (membership(pps.x_in, x)) {
      ++audit.n_in_init;
      if (px > eps) ++audit.fail_init;
    }
    if (eval(cert.property.kappa, x) > cert.w + px + eps) ++audit.fail_level;
    if (membership(pps.x0, x)) {
      const int cell = select_cell(pps, x);
      if (cell >= 0) {
        ++audit.n_inductive;
        const Eigen::VectorXd next = pps.cells[cell].update(x);
        if (eval(cert.p, next) > px + eps) ++audit.fail_step;
      } else {
        ++audit.n_not_applicable;
      }
    } else {
      ++audit.n_not_applicable;
    }
  }
  return audit;
}

Certificate make_certificate(const Pps& pps, const SublevelProperty& prop, int m,
                             const Polynomial& p, double w,
                             std::vector<std::pair<std::string, GramTerm>> grams) {
  Certificate cert;
  cert.dim = pps.dim;
  cert.m = m;
  cert.p = p;
  cert.w = w;
  cert.grams = std::move(grams);
  cert.property = prop;
  cert.pps_hash = program_hash(pps);
  return cert;
}

void write_poly_terms(JsonWriter& w, const Polynomial& p) {
  w.begin_array();
  for (const auto& [mono, c] : p.terms()) {
    w.begin_object();
    w.key("exps").begin_array();
    for (int e : mono.exps) w.value(e);
    w.end_array();
    w.key("c").value(c);
    w.end_object();
  }
  w.end_array();
}

std::string certificate_to_json(const Certificate& cert) {
  JsonWriter w;
  w.begin_object();
  w.key("dim").value(cert.dim);
  w.key("m").value(cert.m);
  w.key("w").value(cert.w);
  w.key("p");
  write_poly_terms(w, cert.p);
  w.key("grams").begin_object();
  for (const auto& [name, gram] : cert.grams) {
    w.key(name).begin_object();
    w.key("basis_degree").value(gram.basis.half_degree);
    w.key("upper_triangle").begin_array();
    for (int i = 0; i < gram.basis.size(); ++i)
      for (int j = i; j < gram.basis.size(); ++j) w.value(gram.matrix(i, j));
    w.end_array();
    w.end_object();
  }
  w.end_object();
  w.key("property").begin_object();
  w.key("kappa");
  write_poly_terms(w, cert.property.kappa);
  w.key("alpha").value(cert.property.alpha);
  w.end_object();
  w.key("pps_hash").value(cert.pps_hash);
  w.end_object();
  return w.take();
}

}  // namespace sosinv
