#include "sosinv/synth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sosinv/sos_names.hpp"

namespace sosinv {

std::string to_string(CandidateStatus status) {
  switch (status) {
    case CandidateStatus::Accepted: return "accepted";
    case CandidateStatus::Rejected: return "rejected";
    case CandidateStatus::Undecided: return "undecided";
  }
  return "unknown";
}

namespace {

int gram_half_degree(int cap, int factor_degree) {
  const int room = cap - factor_degree;
  return room <= 0 ? 0 : room / 2;  // SOS polynomials have even degree
}

// x^beta composed with T for every beta in the template basis, via dynamic
// programming over the graded-lex enumeration.
std::vector<Polynomial> composed_basis(const MonomialBasis& basis, const PolyMap& T) {
  std::vector<Polynomial> out(basis.monomials.size());
  out[0] = Polynomial::constant(basis.dim, 1.0);
  for (std::size_t idx = 1; idx < basis.monomials.size(); ++idx) {
    const Monomial& mono = basis.monomials[idx];
    int k = 0;
    while (mono.exps[k] == 0) ++k;
    Monomial prev = mono;
    prev.exps[k] -= 1;
    const int prev_idx = basis.index_of(prev);
    out[idx] = mul(out[prev_idx], T.components[k]);
  }
  return out;
}

}  // namespace

SosProgram build_sos_program(const Pps& pps, const SublevelProperty& prop, int m) {
  if (m < 1) throw std::invalid_argument("build_sos_program: m must be >= 1");
  if (pps.dim < 1 || pps.cells.empty())
    throw std::invalid_argument("build_sos_program: empty system");
  if (prop.kappa.dim() != pps.dim)
    throw std::invalid_argument("build_sos_program: property dimension mismatch");
  const int kdeg = prop.kappa.degree();
  if (kdeg > 2 * m)
    throw std::invalid_argument("build_sos_program: kappa degree " + std::to_string(kdeg) +
                                " requires m >= " + std::to_string((kdeg + 1) / 2));

  const int d = pps.dim;
  SosProgram sos;
  sos.dim = d;
  sos.m = m;
  sos.p_basis = MonomialBasis(d, 2 * m);

  auto add_unknown = [&](const std::string& name, const std::string& role, int half, int cap) {
    sos.unknowns.push_back({name, role, MonomialBasis(d, half), cap});
    return static_cast<int>(sos.unknowns.size()) - 1;
  };

  const Polynomial one = Polynomial::constant(d, 1.0);

  // init: -p = sigma0 - sum_j sigma_j r_j^in
  {
    SosIdentity id;
    id.name = "init";
    id.constant = Polynomial(d);
    for (int k = 0; k < sos.p_basis.size(); ++k)
      id.free_terms.emplace_back(1 + k, -Polynomial::term(sos.p_basis.monomials[k], 1.0));
    const int s0 = add_unknown(sigma0_name(), "initial-set Positivstellensatz slack", m, 2 * m);
    id.gram_terms.push_back({s0, -1.0, one});
    for (std::size_t j = 0; j < pps.x_in.constraints.size(); ++j) {
      const Polynomial& r = pps.x_in.constraints[j].poly;
      const int half = gram_half_degree(2 * m, r.degree());
      const int u = add_unknown(sigma_in_name(static_cast<int>(j)), "initial-set multiplier",
                                half, 2 * half + r.degree());
      id.gram_terms.push_back({u, +1.0, r});
    }
    int cap = 2 * m;
    for (const auto& g : id.gram_terms) cap = std::max(cap, sos.unknowns[g.unknown].cap);
    id.cap = cap;
    sos.identities.push_back(std::move(id));
  }

  // step, per cell: p - p o T^i = sigma^i - sum_j mu^i_j r^i_j - sum_j gamma^i_j r^0_j
  for (std::size_t i = 0; i < pps.cells.size(); ++i) {
    const Cell& cell = pps.cells[i];
    const int ti = std::max(1, cell.update.degree());
    const int capB = 2 * m * ti;

    SosIdentity id;
    id.name = "step_cell" + std::to_string(i);
    id.constant = Polynomial(d);
    const auto composed = composed_basis(sos.p_basis, cell.update);
    for (int k = 0; k < sos.p_basis.size(); ++k) {
      Polynomial mult = Polynomial::term(sos.p_basis.monomials[k], 1.0) - composed[k];
      id.free_terms.emplace_back(1 + k, std::move(mult));
    }
    const int si = add_unknown(cell_sigma_name(static_cast<int>(i)), "step slack", capB / 2, capB);
    id.gram_terms.push_back({si, -1.0, one});
    for (std::size_t j = 0; j < cell.guard.constraints.size(); ++j) {
      const Polynomial& r = cell.guard.constraints[j].poly;
      const int half = gram_half_degree(capB, r.degree());
      const int u = add_unknown(cell_mu_name(static_cast<int>(i), static_cast<int>(j)),
                                "cell-guard multiplier", half, 2 * half + r.degree());
      id.gram_terms.push_back({u, +1.0, r});
    }
    for (std::size_t j = 0; j < pps.x0.constraints.size(); ++j) {
      const Polynomial& r = pps.x0.constraints[j].poly;
      const int half = gram_half_degree(capB, r.degree());
      const int u = add_unknown(cell_gamma_name(static_cast<int>(i), static_cast<int>(j)),
                                "loop-guard multiplier", half, 2 * half + r.degree());
      id.gram_terms.push_back({u, +1.0, r});
    }
    int cap = std::max(2 * m, capB);
    for (const auto& g : id.gram_terms) cap = std::max(cap, sos.unknowns[g.unknown].cap);
    for (const auto& [var, mult] : id.free_terms) cap = std::max(cap, mult.degree());
    id.cap = cap;
    sos.identities.push_back(std::move(id));
  }

  // level: w + p - kappa = psi
  {
    SosIdentity id;
    id.name = "level";
    id.constant = -prop.kappa;
    id.free_terms.emplace_back(0, one);
    for (int k = 0; k < sos.p_basis.size(); ++k)
      id.free_terms.emplace_back(1 + k, Polynomial::term(sos.p_basis.monomials[k], 1.0));
    const int u = add_unknown(psi_name(), "level-set slack", m, 2 * m);
    id.gram_terms.push_back({u, -1.0, one});
    id.cap = std::max(2 * m, kdeg);
    sos.identities.push_back(std::move(id));
  }

  return sos;
}

SdpInstance compile(const SosProgram& sos, const CompileOptions& opts) {
  SdpInstance inst;
  inst.num_free = sos.num_free();
  inst.free_names.push_back("w");
  for (int k = 0; k < sos.p_basis.size(); ++k)
    inst.free_names.push_back("p" + std::to_string(k));
  for (const auto& u : sos.unknowns) {
    inst.block_sizes.push_back(u.basis.size());
    inst.block_names.push_back(u.name);
  }

  for (const auto& id : sos.identities) {
    const MonomialBasis rows_basis(sos.dim, id.cap);
    const int row0 = inst.num_rows();
    inst.rows.resize(row0 + rows_basis.size());
    for (int r = 0; r < rows_basis.size(); ++r)
      inst.rows[row0 + r].rhs = -id.constant.coefficient(rows_basis.monomials[r]);

    for (const auto& [var, mult] : id.free_terms)
      for (const auto& [mono, c] : mult.terms()) {
        const int r = rows_basis.index_of(mono);
        if (r < 0) throw std::logic_error("compile: free multiplier exceeds identity cap");
        inst.rows[row0 + r].lin.push_back({var, c});
      }
    // keep free entries ordered by variable within each row
    for (int r = 0; r < rows_basis.size(); ++r) {
      auto& lin = inst.rows[row0 + r].lin;
      std::sort(lin.begin(), lin.end(),
                [](const LinEntry& a, const LinEntry& b) { return a.var < b.var; });
    }

    for (const auto& g : id.gram_terms) {
      const MonomialBasis& basis = sos.unknowns[g.unknown].basis;
      for (int u = 0; u < basis.size(); ++u)
        for (int v = u; v < basis.size(); ++v) {
          const Monomial uv = basis.monomials[u] * basis.monomials[v];
          for (const auto& [beta, c] : g.factor.terms()) {
            const int r = rows_basis.index_of(uv * beta);
            if (r < 0) throw std::logic_error("compile: gram term exceeds identity cap");
            const double value = g.sign * c;
            if (value != 0.0) inst.rows[row0 + r].mat.push_back({g.unknown, u, v, value});
          }
        }
    }
  }

  if (opts.coeff_bound > 0) {
    for (int k = 0; k < sos.p_basis.size(); ++k) {
      for (int side = 0; side < 2; ++side) {
        const int blk = inst.num_blocks();
        inst.block_sizes.push_back(1);
        inst.block_names.push_back("box_p" + std::to_string(k) + (side ? "_lo" : "_hi"));
        SdpRow row;
        row.lin.push_back({1 + k, side ? -1.0 : 1.0});
        row.mat.push_back({blk, 0, 0, 1.0});
        row.rhs = opts.coeff_bound;
        inst.rows.push_back(std::move(row));
      }
    }
  }

  inst.objective.push_back({0, 1.0});  // minimize w
  return inst;
}

Recovered recover(const SdpSolution& sol, const SosProgram& sos, const SdpInstance& inst) {
  if (!sol.usable())
    throw std::runtime_error("recover: no solution to recover (solver status: " +
                             to_string(sol.status) + ")");
  Recovered rec;
  rec.w = sol.free_values[0];
  rec.p = Polynomial(sos.dim);
  for (int k = 0; k < sos.p_basis.size(); ++k)
    rec.p.add_term(sos.p_basis.monomials[k], sol.free_values[1 + k]);
  for (std::size_t u = 0; u < sos.unknowns.size(); ++u) {
    Eigen::MatrixXd Q = sol.blocks[u];
    Q = 0.5 * (Q + Q.transpose()).eval();
    rec.grams.emplace_back(sos.unknowns[u].name, GramTerm(sos.unknowns[u].basis, std::move(Q)));
  }
  return rec;
}

std::vector<CompletionResult> complete_basis(const Polynomial& p,
                                             const std::vector<Polynomial>& candidates,
                                             const SolveOptions& opts, double eps_witness) {
  std::vector<CompletionResult> results;
  for (const Polynomial& q : candidates) {
    CompletionResult res;
    res.q = q;
    const Polynomial diff = p - q;
    if (diff.is_zero()) {
      res.status = CandidateStatus::Accepted;
      res.gram = GramTerm(MonomialBasis(p.dim(), 0), Eigen::MatrixXd::Zero(1, 1));
      results.push_back(std::move(res));
      continue;
    }

    int deg = std::max(p.degree(), q.degree());
    if (deg % 2 != 0) deg += 1;
    if (diff.degree() % 2 != 0) {
      // odd leading degree is never a sum of squares
      res.status = CandidateStatus::Rejected;
      results.push_back(std::move(res));
      continue;
    }
    const MonomialBasis basis(p.dim(), deg / 2);

    SdpInstance inst;
    inst.block_sizes.push_back(basis.size());
    inst.block_names.push_back("witness");
    const MonomialBasis rows_basis(p.dim(), deg);
    inst.rows.resize(rows_basis.size());
    for (int r = 0; r < rows_basis.size(); ++r)
      inst.rows[r].rhs = diff.coefficient(rows_basis.monomials[r]);
    for (int u = 0; u < basis.size(); ++u)
      for (int v = u; v < basis.size(); ++v) {
        const int r = rows_basis.index_of(basis.monomials[u] * basis.monomials[v]);
        inst.rows[r].mat.push_back({0, u, v, 1.0});
      }

    SdpSolution sol = solve(inst, opts);
    if (sol.status == SolveStatus::Infeasible) {
      res.status = CandidateStatus::Rejected;
    } else if (sol.usable()) {
      Eigen::MatrixXd Q = 0.5 * (sol.blocks[0] + sol.blocks[0].transpose());
      GramTerm witness(basis, Q);
      const double resid = (expand_gram(witness) - diff).max_abs_coefficient();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Q, Eigen::EigenvaluesOnly);
      if (resid <= eps_witness && es.eigenvalues().minCoeff() >= -eps_witness) {
        res.status = CandidateStatus::Accepted;
        res.gram = std::move(witness);
      } else {
        res.status = CandidateStatus::Undecided;
      }
    } else {
      res.status = CandidateStatus::Undecided;
    }
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace sosinv
