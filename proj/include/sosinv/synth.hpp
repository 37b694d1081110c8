#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sosinv/model.hpp"
#include "sosinv/sdp.hpp"

namespace sosinv {

// One SOS multiplier: an unknown Gram matrix over `basis`, entering an
// identity multiplied by a factor polynomial.
struct SosUnknown {
  std::string name;
  std::string role;
  MonomialBasis basis;
  int cap = 0;  // degree cap of the multiplier times its factor
};

struct GramFactorRef {
  int unknown = 0;
  double sign = 1.0;
  Polynomial factor;
};

// Polynomial equality, linear in the free scalars and Gram entries:
//   constant + sum_f multiplier_f * y_f + sum_u sign_u * factor_u * expand(Q_u) = 0,
// matched coefficient-wise on every monomial of degree <= cap.
struct SosIdentity {
  std::string name;
  int cap = 0;
  Polynomial constant;
  std::vector<std::pair<int, Polynomial>> free_terms;
  std::vector<GramFactorRef> gram_terms;
};

// The degree-m member of the hierarchy for a given system and sublevel
// property.  Free scalar 0 is the bound w; scalars 1..|p_basis| are the
// coefficients of the invariant template p in graded-lex order.  There are
// exactly 2 + #cells identities: init, one step identity per cell, level.
// Objective: minimize w.
struct SosProgram {
  int dim = 0;
  int m = 0;
  MonomialBasis p_basis;
  std::vector<SosUnknown> unknowns;
  std::vector<SosIdentity> identities;

  int num_free() const { return 1 + p_basis.size(); }
};

SosProgram build_sos_program(const Pps& pps, const SublevelProperty& prop, int m);

struct CompileOptions {
  // |c_alpha| <= coeff_bound on the template coefficients, as 1x1 slack
  // blocks; non-binding on the bundled benchmarks.  <= 0 disables.
  double coeff_bound = 1e6;
};

// Lowers the program to a block SDP: one PSD block per unknown (in order),
// one equality row per matched monomial per identity (in order), then the
// optional coefficient-box rows and slack blocks.
SdpInstance compile(const SosProgram& sos, const CompileOptions& opts = {});

struct Recovered {
  Polynomial p;
  double w = 0.0;
  std::vector<std::pair<std::string, GramTerm>> grams;
};

// Requires a usable (optimal or feasible) solution; Gram matrices are
// symmetrized on extraction.
Recovered recover(const SdpSolution& sol, const SosProgram& sos, const SdpInstance& inst);

enum class CandidateStatus { Accepted, Rejected, Undecided };

std::string to_string(CandidateStatus status);

struct CompletionResult {
  Polynomial q;
  CandidateStatus status = CandidateStatus::Undecided;
  GramTerm gram;  // SOS witness for p - q when accepted
};

// Decides p - q in Sigma[x] for each candidate by a feasibility solve at
// degree max(deg p, deg q) rounded up to even.
std::vector<CompletionResult> complete_basis(const Polynomial& p,
                                             const std::vector<Polynomial>& candidates,
                                             const SolveOptions& opts = {},
                                             double eps_witness = 1e-7);

}  // namespace sosinv
