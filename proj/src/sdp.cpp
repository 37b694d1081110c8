#include "sosinv/sdp.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace sosinv {

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Feasible: return "feasible";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Unbounded: return "unbounded";
    case SolveStatus::NumericalFailure: return "numerical_failure";
    case SolveStatus::IterationLimit: return "iteration_limit";
  }
  return "unknown";
}

int decision_count(const SdpInstance& inst) {
  int n = inst.num_free;
  for (int k : inst.block_sizes) n += k * (k + 1) / 2;
  return n;
}

int decision_index(const SdpInstance& inst, int block, int i, int j) {
  if (i > j) std::swap(i, j);
  int base = 0;
  for (int b = 0; b < block; ++b) base += inst.block_sizes[b] * (inst.block_sizes[b] + 1) / 2;
  const int k = inst.block_sizes[block];
  // upper triangle, row-major: row i starts after i*k - i*(i-1)/2 entries
  return base + i * k - i * (i - 1) / 2 + (j - i);
}

int decision_index_free(const SdpInstance& inst, int f) {
  int base = 0;
  for (int k : inst.block_sizes) base += k * (k + 1) / 2;
  return base + f;
}

Eigen::VectorXd flatten_solution(const SdpInstance& inst, const SdpSolution& sol) {
  Eigen::VectorXd v(decision_count(inst));
  int pos = 0;
  for (int b = 0; b < inst.num_blocks(); ++b)
    for (int i = 0; i < inst.block_sizes[b]; ++i)
      for (int j = i; j < inst.block_sizes[b]; ++j) v[pos++] = sol.blocks[b](i, j);
  for (int f = 0; f < inst.num_free; ++f) v[pos++] = sol.free_values[f];
  return v;
}

namespace {

// <A, X> for symmetric X given the upper-triangle entry list.
double dot_sym(const std::vector<MatEntry>& entries, const std::vector<Eigen::MatrixXd>& mats) {
  double s = 0.0;
  for (const auto& e : entries) {
    const auto& X = mats[e.block];
    s += e.i == e.j ? e.value * X(e.i, e.i) : 2.0 * e.value * X(e.i, e.j);
  }
  return s;
}

// tr(A * G) for symmetric A (entry list) and general square G.
double trace_with(const std::vector<MatEntry>& entries, int block,
                  const Eigen::MatrixXd& G) {
  double s = 0.0;
  for (const auto& e : entries) {
    if (e.block != block) continue;
    s += e.i == e.j ? e.value * G(e.i, e.i) : e.value * (G(e.i, e.j) + G(e.j, e.i));
  }
  return s;
}

struct BlockRowEntries {
  int row = 0;
  std::vector<MatEntry> entries;  // entries of this row in one block
  double frob2 = 0.0;             // squared Frobenius norm of the symmetric matrix
};

}  // namespace

void evaluate_solution(const SdpInstance& inst, SdpSolution& sol, double eps_psd) {
  double obj = 0.0;
  for (const auto& e : inst.objective) obj += e.value * sol.free_values[e.var];
  sol.objective = obj;

  double pres = 0.0;
  for (const auto& row : inst.rows) {
    double v = dot_sym(row.mat, sol.blocks);
    for (const auto& l : row.lin) v += l.value * sol.free_values[l.var];
    pres = std::max(pres, std::abs(v - row.rhs));
  }
  sol.primal_residual = pres;

  double lam = std::numeric_limits<double>::infinity();
  for (int b = 0; b < inst.num_blocks(); ++b) {
    Eigen::MatrixXd sym = 0.5 * (sol.blocks[b] + sol.blocks[b].transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
    lam = std::min(lam, es.eigenvalues().minCoeff());
  }
  if (inst.num_blocks() == 0) lam = 0.0;
  sol.min_eigenvalue = lam;

  if (sol.usable() && lam < -eps_psd) sol.status = SolveStatus::NumericalFailure;
}

namespace {

class InteriorPointSolver {
 public:
  InteriorPointSolver(const SdpInstance& inst, const SolveOptions& opts)
      : inst_(inst), opts_(opts) {}

  SdpSolution run() {
    const auto t0 = std::chrono::steady_clock::now();
    validate();
    prepare();
    initialize_point();

    SdpSolution best;
    double best_merit = std::numeric_limits<double>::infinity();
    SolveStatus exit_status = SolveStatus::IterationLimit;
    int stalled = 0;

    int iter = 0;
    for (; iter < opts_.max_iter; ++iter) {
      compute_residuals();
      const double mu = duality_mu();

      if (opts_.verbose)
        std::fprintf(stderr, "it %3d  mu %.3e  relP %.3e  relD %.3e  relG %.3e  obj %+.9e\n",
                     iter, mu, relP_, relD_, relG_, primal_obj_);

      const double merit = std::max({relP_, relD_, relG_});
      if (merit < best_merit) {
        best_merit = merit;
        capture(best);
      }

      if (relP_ <= opts_.eps_primal && relD_ <= opts_.eps_dual && relG_ <= opts_.eps_gap) {
        exit_status = SolveStatus::Optimal;
        capture(best);
        break;
      }
      if (pure_feasibility_ && relP_ <= opts_.eps_primal && relD_ <= opts_.eps_dual) {
        exit_status = SolveStatus::Feasible;
        capture(best);
        break;
      }
      if (auto ray = detect_rays()) {
        exit_status = *ray;
        capture(best);
        break;
      }
      if (mu < 1e-30) {
        exit_status = classify_exit();
        break;
      }

      if (!factorize()) {
        exit_status = classify_exit();
        break;
      }

      // predictor
      for (int b = 0; b < nb_; ++b) {
        G_[b].noalias() = X_[b] * Rd_[b];
        G_[b] = Sfact_[b].solve(G_[b].transpose()).transpose();  // X Rd S^{-1}
        G_[b] += X_[b];
      }
      if (!solve_newton()) {
        exit_status = classify_exit();
        break;
      }
      compute_deltas();
      double ap = step_length_primal();
      double ad = step_length_dual();

      // Mehrotra centering from the affine trial point
      double mu_aff = 0.0;
      for (int b = 0; b < nb_; ++b)
        mu_aff += (X_[b] + ap * dX_[b]).cwiseProduct(S_[b] + ad * dS_[b]).sum();
      mu_aff = std::max(mu_aff / total_dim_, 0.0);
      double sigma = mu > 0 ? std::pow(mu_aff / mu, 3.0) : 0.0;
      sigma = std::min(std::max(sigma, 0.0), 1.0);

      // corrector
      for (int b = 0; b < nb_; ++b) {
        Eigen::MatrixXd extra = dX_[b] * dS_[b];
        extra -= (sigma * mu) * Eigen::MatrixXd::Identity(dims_[b], dims_[b]);
        G_[b] += Sfact_[b].solve(extra.transpose()).transpose();
      }
      if (!solve_newton()) {
        exit_status = classify_exit();
        break;
      }
      compute_deltas();
      ap = step_length_primal();
      ad = step_length_dual();

      if (ap < 1e-10 && ad < 1e-10) {
        if (++stalled >= 3) {
          exit_status = classify_exit();
          break;
        }
      } else {
        stalled = 0;
      }

      for (int b = 0; b < nb_; ++b) {
        X_[b] += ap * dX_[b];
        X_[b] = 0.5 * (X_[b] + X_[b].transpose()).eval();
        S_[b] += ad * dS_[b];
        S_[b] = 0.5 * (S_[b] + S_[b].transpose()).eval();
      }
      y_ += ap * dy_;
      z_ += ad * dz_;
    }
    if (iter >= opts_.max_iter) exit_status = SolveStatus::IterationLimit;

    best.status = exit_status;
    best.iterations = iter;
    best.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    evaluate_solution(inst_, best, 10.0 * opts_.eps_primal);
    return best;
  }

 private:
  void validate() {
    if (inst_.rows.empty()) throw std::invalid_argument("sdp: instance has no constraints");
    for (const auto& row : inst_.rows) {
      if (row.mat.empty())
        throw std::invalid_argument("sdp: every row must reference a PSD block entry");
      for (const auto& e : row.mat) {
        if (e.block < 0 || e.block >= inst_.num_blocks() || e.i > e.j || e.i < 0 ||
            e.j >= inst_.block_sizes[e.block])
          throw std::invalid_argument("sdp: matrix entry out of range");
      }
      for (const auto& l : row.lin)
        if (l.var < 0 || l.var >= inst_.num_free)
          throw std::invalid_argument("sdp: free entry out of range");
    }
    for (const auto& e : inst_.objective)
      if (e.var < 0 || e.var >= inst_.num_free)
        throw std::invalid_argument("sdp: objective entry out of range");
    std::vector<bool> seen(inst_.num_free, false);
    for (const auto& row : inst_.rows)
      for (const auto& l : row.lin) seen[l.var] = true;
    for (int f = 0; f < inst_.num_free; ++f)
      if (!seen[f]) throw std::invalid_argument("sdp: free variable not referenced by any row");
  }

  void prepare() {
    nb_ = inst_.num_blocks();
    m_ = inst_.num_rows();
    nf_ = inst_.num_free;
    dims_ = inst_.block_sizes;
    total_dim_ = std::accumulate(dims_.begin(), dims_.end(), 0);

    // row scaling to unit Frobenius norm of the full coefficient vector
    row_scale_.assign(m_, 1.0);
    scaled_rows_ = inst_.rows;
    g_.resize(m_);
    for (int r = 0; r < m_; ++r) {
      double n2 = 0.0;
      for (const auto& e : scaled_rows_[r].mat)
        n2 += (e.i == e.j ? 1.0 : 2.0) * e.value * e.value;
      for (const auto& l : scaled_rows_[r].lin) n2 += l.value * l.value;
      const double s = std::sqrt(n2);
      row_scale_[r] = s > 0 ? s : 1.0;
      for (auto& e : scaled_rows_[r].mat) e.value /= row_scale_[r];
      for (auto& l : scaled_rows_[r].lin) l.value /= row_scale_[r];
      g_[r] = inst_.rows[r].rhs / row_scale_[r];
    }

    // free-column scaling
    col_scale_.assign(nf_, 0.0);
    for (const auto& row : scaled_rows_)
      for (const auto& l : row.lin) col_scale_[l.var] += l.value * l.value;
    for (int f = 0; f < nf_; ++f) {
      col_scale_[f] = col_scale_[f] > 0 ? std::sqrt(col_scale_[f]) : 1.0;
    }
    for (auto& row : scaled_rows_)
      for (auto& l : row.lin) l.value /= col_scale_[l.var];
    c_ = Eigen::VectorXd::Zero(std::max(nf_, 1));
    for (const auto& e : inst_.objective) c_[e.var] += e.value / col_scale_[e.var];
    pure_feasibility_ = true;
    for (const auto& e : inst_.objective)
      if (e.value != 0.0) pure_feasibility_ = false;

    // per-block row entry lists
    by_block_.assign(nb_, {});
    for (int r = 0; r < m_; ++r) {
      std::vector<std::vector<MatEntry>> split(nb_);
      for (const auto& e : scaled_rows_[r].mat) split[e.block].push_back(e);
      for (int b = 0; b < nb_; ++b) {
        if (split[b].empty()) continue;
        BlockRowEntries bre;
        bre.row = r;
        bre.entries = std::move(split[b]);
        for (const auto& e : bre.entries)
          bre.frob2 += (e.i == e.j ? 1.0 : 2.0) * e.value * e.value;
        by_block_[b].push_back(std::move(bre));
      }
    }

    // group rows into components connected through shared blocks, so the
    // Schur complement factors block-by-block
    std::vector<int> parent(m_);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (int b = 0; b < nb_; ++b)
      for (std::size_t k = 1; k < by_block_[b].size(); ++k) {
        int ra = find(by_block_[b][0].row), rb = find(by_block_[b][k].row);
        if (ra != rb) parent[ra] = rb;
      }
    std::vector<int> comp_of(m_);
    std::vector<int> comp_ids;
    for (int r = 0; r < m_; ++r) {
      int root = find(r);
      auto it = std::find(comp_ids.begin(), comp_ids.end(), root);
      if (it == comp_ids.end()) {
        comp_ids.push_back(root);
        comp_of[r] = static_cast<int>(comp_ids.size()) - 1;
      } else {
        comp_of[r] = static_cast<int>(it - comp_ids.begin());
      }
    }
    components_.assign(comp_ids.size(), {});
    local_index_.assign(m_, 0);
    for (int r = 0; r < m_; ++r) {
      local_index_[r] = static_cast<int>(components_[comp_of[r]].size());
      components_[comp_of[r]].push_back(r);
    }
    comp_of_row_ = std::move(comp_of);
    block_comp_.assign(nb_, -1);
    for (int b = 0; b < nb_; ++b)
      if (!by_block_[b].empty()) block_comp_[b] = comp_of_row_[by_block_[b][0].row];

    B_ = Eigen::MatrixXd::Zero(m_, std::max(nf_, 1));
    for (int r = 0; r < m_; ++r)
      for (const auto& l : scaled_rows_[r].lin) B_(r, l.var) += l.value;
  }

  void initialize_point() {
    X_.resize(nb_);
    S_.resize(nb_);
    Rd_.resize(nb_);
    G_.resize(nb_);
    dX_.resize(nb_);
    dS_.resize(nb_);
    Easm_.resize(nb_);
    Sfact_.resize(nb_);
    Xfact_.resize(nb_);

    double scale_p = 10.0, scale_d = 10.0;
    const double n_sqrt = std::sqrt(std::max(total_dim_, 1));
    scale_p = std::max(scale_p, n_sqrt);
    scale_d = std::max(scale_d, n_sqrt);
    for (int r = 0; r < m_; ++r) scale_p = std::max(scale_p, std::abs(g_[r]));
    for (int f = 0; f < nf_; ++f) scale_d = std::max(scale_d, std::abs(c_[f]));
    for (int b = 0; b < nb_; ++b) {
      X_[b] = scale_p * Eigen::MatrixXd::Identity(dims_[b], dims_[b]);
      S_[b] = scale_d * Eigen::MatrixXd::Identity(dims_[b], dims_[b]);
    }
    y_ = Eigen::VectorXd::Zero(std::max(nf_, 1));
    z_ = Eigen::VectorXd::Zero(m_);
    dy_ = y_;
    dz_ = z_;
  }

  void compute_residuals() {
    rp_ = g_;
    for (int r = 0; r < m_; ++r) rp_[r] -= dot_sym(scaled_rows_[r].mat, X_);
    if (nf_ > 0) rp_ -= B_ * y_.head(nf_);

    double pres_unscaled = 0.0, gmax = 0.0;
    for (int r = 0; r < m_; ++r) {
      pres_unscaled = std::max(pres_unscaled, std::abs(rp_[r]) * row_scale_[r]);
      gmax = std::max(gmax, std::abs(inst_.rows[r].rhs));
    }
    relP_ = pres_unscaled / (1.0 + gmax);

    double dres = 0.0;
    for (int b = 0; b < nb_; ++b) {
      Rd_[b] = -S_[b];
      for (const auto& bre : by_block_[b])
        for (const auto& e : bre.entries) {
          const double v = z_[bre.row] * e.value;
          Rd_[b](e.i, e.j) -= v;
          if (e.i != e.j) Rd_[b](e.j, e.i) -= v;
        }
      dres = std::max(dres, Rd_[b].cwiseAbs().maxCoeff());
    }
    rf_ = c_;
    if (nf_ > 0) rf_.head(nf_) -= B_.transpose() * z_;
    double fres = 0.0, cmax = 0.0;
    for (int f = 0; f < nf_; ++f) {
      fres = std::max(fres, std::abs(rf_[f]) * col_scale_[f]);
      cmax = std::max(cmax, std::abs(c_[f] * col_scale_[f]));
    }
    relD_ = std::max(dres, fres / (1.0 + cmax));

    primal_obj_ = nf_ > 0 ? c_.head(nf_).dot(y_.head(nf_)) : 0.0;
    dual_obj_ = g_.dot(z_);
    relG_ = std::abs(primal_obj_ - dual_obj_) /
            (1.0 + std::abs(primal_obj_) + std::abs(dual_obj_));
  }

  double duality_mu() const {
    double s = 0.0;
    // tr(X S) = <X, S> for symmetric blocks
    for (int b = 0; b < nb_; ++b) s += X_[b].cwiseProduct(S_[b]).sum();
    return s / std::max(total_dim_, 1);
  }

  std::optional<SolveStatus> detect_rays() const {
    // Farkas-style ray tests: a diverging dual with vanishing relative dual
    // residual certifies primal infeasibility, and symmetrically for the
    // primal objective.
    const double znorm = z_.lpNorm<Eigen::Infinity>();
    if (dual_obj_ > 1e7 && znorm > 0) {
      double viol = 0.0;
      for (int b = 0; b < nb_; ++b) viol = std::max(viol, (Rd_[b] + S_[b]).cwiseAbs().maxCoeff());
      double bviol = nf_ > 0 ? (B_.transpose() * z_).lpNorm<Eigen::Infinity>() : 0.0;
      if (std::max(viol, bviol) / dual_obj_ < 1e-9) return SolveStatus::Infeasible;
    }
    if (primal_obj_ < -1e7) {
      double viol = 0.0;
      for (int r = 0; r < m_; ++r) viol = std::max(viol, std::abs(rp_[r] - g_[r]));
      if (viol / -primal_obj_ < 1e-9) return SolveStatus::Unbounded;
    }
    return std::nullopt;
  }

  bool factorize() {
    for (int b = 0; b < nb_; ++b) {
      Sfact_[b].compute(S_[b]);
      if (Sfact_[b].info() != Eigen::Success) return false;
      Xfact_[b].compute(X_[b]);
      if (Xfact_[b].info() != Eigen::Success) return false;
    }

    // Schur complement M_{rr'} = sum_b tr(S^-1 A_r X A_r'), assembled per
    // connected component, plus the free-variable coupling.
    M_.assign(components_.size(), {});
    for (std::size_t cidx = 0; cidx < components_.size(); ++cidx)
      M_[cidx] = Eigen::MatrixXd::Zero(components_[cidx].size(), components_[cidx].size());

    Eigen::MatrixXd P, W;
    for (int b = 0; b < nb_; ++b) {
      const auto& rows = by_block_[b];
      if (rows.empty()) continue;
      auto& M = M_[block_comp_[b]];
      const int k = dims_[b];
      P.resize(k, k);
      for (std::size_t a = 0; a < rows.size(); ++a) {
        // W = S^{-1} A_r X
        P.setZero();
        for (const auto& e : rows[a].entries) {
          P.row(e.i) += e.value * X_[b].row(e.j);
          if (e.i != e.j) P.row(e.j) += e.value * X_[b].row(e.i);
        }
        W = Sfact_[b].solve(P);
        const int la = local_index_[rows[a].row];
        for (std::size_t o = a; o < rows.size(); ++o) {
          const int lo = local_index_[rows[o].row];
          const double v = trace_with(rows[o].entries, b, W);
          M(la, lo) += v;
          if (lo != la) M(lo, la) += v;
        }
      }
    }

    Mfact_.resize(components_.size());
    for (std::size_t cidx = 0; cidx < components_.size(); ++cidx) {
      Mfact_[cidx].compute(M_[cidx]);
      if (Mfact_[cidx].info() != Eigen::Success) {
        // small static regularization, then give up honestly
        const double delta = 1e-13 * (1.0 + M_[cidx].diagonal().maxCoeff());
        M_[cidx] += delta * Eigen::MatrixXd::Identity(M_[cidx].rows(), M_[cidx].cols());
        Mfact_[cidx].compute(M_[cidx]);
        if (Mfact_[cidx].info() != Eigen::Success) return false;
      }
    }

    if (nf_ > 0) {
      U_ = apply_Minv(B_);
      F_ = B_.transpose() * U_;
      Ffact_.compute(F_);
      if (Ffact_.info() != Eigen::Success) return false;
    }
    return true;
  }

  Eigen::MatrixXd apply_Minv(const Eigen::MatrixXd& rhs) const {
    Eigen::MatrixXd out(rhs.rows(), rhs.cols());
    for (std::size_t cidx = 0; cidx < components_.size(); ++cidx) {
      const auto& rows = components_[cidx];
      Eigen::MatrixXd sub(rows.size(), rhs.cols());
      for (std::size_t i = 0; i < rows.size(); ++i) sub.row(i) = rhs.row(rows[i]);
      sub = Mfact_[cidx].solve(sub);
      for (std::size_t i = 0; i < rows.size(); ++i) out.row(rows[i]) = sub.row(i);
    }
    return out;
  }

  // Solves the augmented system for (dz, dy) given the current G_.
  bool solve_newton() {
    h_ = rp_;
    for (int r = 0; r < m_; ++r) {
      double acc = 0.0;
      for (const auto& e : scaled_rows_[r].mat) {
        const auto& G = G_[e.block];
        acc += e.i == e.j ? e.value * G(e.i, e.i) : e.value * (G(e.i, e.j) + G(e.j, e.i));
      }
      h_[r] += acc;
    }
    if (nf_ > 0) {
      Eigen::VectorXd uh = apply_Minv(h_);
      dy_.head(nf_) = Ffact_.solve(U_.transpose() * h_ - rf_.head(nf_));
      dz_ = uh - U_ * dy_.head(nf_);
    } else {
      dz_ = apply_Minv(h_);
      dy_.setZero();
    }
    return dz_.allFinite() && dy_.allFinite();
  }

  void compute_deltas() {
    for (int b = 0; b < nb_; ++b) {
      Easm_[b].setZero(dims_[b], dims_[b]);
      for (const auto& bre : by_block_[b])
        for (const auto& e : bre.entries) {
          const double v = dz_[bre.row] * e.value;
          Easm_[b](e.i, e.j) += v;
          if (e.i != e.j) Easm_[b](e.j, e.i) += v;
        }
      dS_[b] = Rd_[b] - Easm_[b];
      // dX = -G + X (A* dz) S^{-1}
      Eigen::MatrixXd T = X_[b] * Easm_[b];
      dX_[b] = Sfact_[b].solve(T.transpose()).transpose();
      dX_[b] -= G_[b];
      dX_[b] = 0.5 * (dX_[b] + dX_[b].transpose()).eval();
    }
  }

  static double max_step(const Eigen::LLT<Eigen::MatrixXd>& fact, const Eigen::MatrixXd& D) {
    // largest a with M + a D psd, via lambda_min of L^-1 D L^-T
    Eigen::MatrixXd W = fact.matrixL().solve(D);
    W = fact.matrixL().solve(W.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(W, Eigen::EigenvaluesOnly);
    const double lam = es.eigenvalues().minCoeff();
    if (lam >= -1e-14) return std::numeric_limits<double>::infinity();
    return -1.0 / lam;
  }

  double step_length_primal() const {
    double a = std::numeric_limits<double>::infinity();
    for (int b = 0; b < nb_; ++b) a = std::min(a, max_step(Xfact_[b], dX_[b]));
    return std::min(1.0, 0.95 * a);
  }

  double step_length_dual() const {
    double a = std::numeric_limits<double>::infinity();
    for (int b = 0; b < nb_; ++b) a = std::min(a, max_step(Sfact_[b], dS_[b]));
    return std::min(1.0, 0.95 * a);
  }

  SolveStatus classify_exit() const {
    if (relP_ <= opts_.eps_primal && relD_ <= opts_.eps_dual) return SolveStatus::Feasible;
    return SolveStatus::NumericalFailure;
  }

  void capture(SdpSolution& out) const {
    out.blocks = X_;
    out.free_values = Eigen::VectorXd::Zero(nf_);
    for (int f = 0; f < nf_; ++f) out.free_values[f] = y_[f] / col_scale_[f];
    out.dual = Eigen::VectorXd::Zero(m_);
    for (int r = 0; r < m_; ++r) out.dual[r] = z_[r] / row_scale_[r];
    out.gap = relG_;
    out.dual_residual = relD_;
  }

  const SdpInstance& inst_;
  const SolveOptions& opts_;

  int nb_ = 0, m_ = 0, nf_ = 0, total_dim_ = 0;
  std::vector<int> dims_;
  std::vector<SdpRow> scaled_rows_;
  std::vector<double> row_scale_, col_scale_;
  Eigen::VectorXd g_, c_;
  bool pure_feasibility_ = false;

  std::vector<std::vector<BlockRowEntries>> by_block_;
  std::vector<std::vector<int>> components_;
  std::vector<int> comp_of_row_, local_index_, block_comp_;
  Eigen::MatrixXd B_;

  std::vector<Eigen::MatrixXd> X_, S_, Rd_, G_, dX_, dS_, Easm_;
  std::vector<Eigen::LLT<Eigen::MatrixXd>> Sfact_, Xfact_;
  std::vector<Eigen::MatrixXd> M_;
  std::vector<Eigen::LLT<Eigen::MatrixXd>> Mfact_;
  Eigen::MatrixXd U_, F_;
  Eigen::LLT<Eigen::MatrixXd> Ffact_;
  Eigen::VectorXd y_, z_, dy_, dz_, rp_, rf_, h_;
  double relP_ = 0, relD_ = 0, relG_ = 0, primal_obj_ = 0, dual_obj_ = 0;
};

}  // namespace

SdpSolution solve(const SdpInstance& inst, const SolveOptions& opts) {
  InteriorPointSolver solver(inst, opts);
  return solver.run();
}

}  // namespace sosinv
