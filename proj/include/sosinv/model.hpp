#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "sosinv/poly.hpp"

namespace sosinv {

// r(x) <= 0, or r(x) < 0 when strict.
struct Constraint {
  Polynomial poly;
  bool strict = false;
};

// Conjunction of polynomial constraints.
struct SemialgebraicSet {
  std::vector<Constraint> constraints;
};

bool membership(const SemialgebraicSet& set, const Eigen::VectorXd& x);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// One branch of the loop body: guard X^i and parallel update T^i.
struct Cell {
  SemialgebraicSet guard;
  PolyMap update;
};

// Quadruple (X_in, X0, {X^i}, {T^i}) plus the declared variable names and
// the initialization box X_in also comes from.
struct Pps {
  int dim = 0;
  std::vector<std::string> vars;
  std::vector<Interval> init_box;
  SemialgebraicSet x_in;
  SemialgebraicSet x0;
  std::vector<Cell> cells;

  // max over cells of deg T^i, clamped to >= 1
  int max_update_degree() const;
};

// {x | kappa(x) << alpha}; alpha = +infinity requests a finite bound on
// kappa without prescribing one.
struct SublevelProperty {
  Polynomial kappa;
  double alpha = std::numeric_limits<double>::infinity();

  bool alpha_is_infinite() const { return std::isinf(alpha); }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(col) +
                           ": " + msg),
        line(line),
        col(col) {}
  int line;
  int col;
};

Pps parse_program(const std::string& text);

// Expression-only entry point, used for property polynomials and candidate
// template files; `vars` gives the identifier-to-coordinate mapping.
Polynomial parse_polyexpr(const std::string& text, const std::vector<std::string>& vars);

// Index of the first declared cell whose guard contains x, or -1.
int select_cell(const Pps& pps, const Eigen::VectorXd& x);

// Canonical DSL text; reparsing yields a structurally identical Pps.
std::string render_program(const Pps& pps);

// FNV-1a fingerprint of the canonical rendering, as 16 hex digits.
std::string program_hash(const Pps& pps);

struct PartitionDiagnostic {
  int samples = 0;
  int unmatched = 0;   // points covered by no guard
  int multimatch = 0;  // points covered by more than one guard
};

// Sampling check of the cell-cover assumption over a probe box; advisory
// only, gaps and overlaps are reported rather than rejected.
PartitionDiagnostic partition_diagnostic(const Pps& pps, const std::vector<Interval>& probe_box,
                                         int samples, std::uint64_t seed);

}  // namespace sosinv
