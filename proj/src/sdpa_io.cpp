#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sosinv/sdp.hpp"
#include "sosinv/util.hpp"

namespace sosinv {

namespace {

[[noreturn]] void io_fail(const std::string& path, const std::string& what) {
  throw std::runtime_error("sdpa: " + path + ": " + what);
}

// SDPA allows ',', '(', ')', '{', '}' as separators in header lines.
std::string desep(std::string line) {
  for (char& c : line)
    if (c == ',' || c == '(' || c == ')' || c == '{' || c == '}') c = ' ';
  return line;
}

std::string next_data_line(std::istream& in, const std::string& path) {
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '"' || line[0] == '*') continue;  // comments
    return line;
  }
  io_fail(path, "unexpected end of file");
}

}  // namespace

void export_sdpa(const SdpInstance& inst, const std::string& path) {
  if (inst.rows.empty()) throw std::invalid_argument("export_sdpa: no constraints");
  std::ofstream out(path);
  if (!out) io_fail(path, "cannot open for writing");

  const int npsd = inst.num_blocks();
  const int nblk = npsd + (inst.num_free > 0 ? 1 : 0);
  out << inst.num_rows() << "\n";
  out << nblk << "\n";
  for (int b = 0; b < npsd; ++b) out << (b ? " " : "") << inst.block_sizes[b];
  if (inst.num_free > 0) out << (npsd ? " " : "") << -(2 * inst.num_free);
  out << "\n";
  for (int r = 0; r < inst.num_rows(); ++r)
    out << (r ? " " : "") << format_double(inst.rows[r].rhs);
  out << "\n";

  char buf[160];
  // F0 carries the objective: the free split maximizes tr(F0 Y) = -obj
  for (const auto& e : inst.objective) {
    if (e.value == 0.0) continue;
    std::snprintf(buf, sizeof(buf), "0 %d %d %d %s\n", npsd + 1, 2 * e.var + 1, 2 * e.var + 1,
                  format_double(-e.value).c_str());
    out << buf;
    std::snprintf(buf, sizeof(buf), "0 %d %d %d %s\n", npsd + 1, 2 * e.var + 2, 2 * e.var + 2,
                  format_double(e.value).c_str());
    out << buf;
  }
  for (int r = 0; r < inst.num_rows(); ++r) {
    for (const auto& e : inst.rows[r].mat) {
      std::snprintf(buf, sizeof(buf), "%d %d %d %d %s\n", r + 1, e.block + 1, e.i + 1, e.j + 1,
                    format_double(e.value).c_str());
      out << buf;
    }
    for (const auto& l : inst.rows[r].lin) {
      std::snprintf(buf, sizeof(buf), "%d %d %d %d %s\n", r + 1, npsd + 1, 2 * l.var + 1,
                    2 * l.var + 1, format_double(l.value).c_str());
      out << buf;
      std::snprintf(buf, sizeof(buf), "%d %d %d %d %s\n", r + 1, npsd + 1, 2 * l.var + 2,
                    2 * l.var + 2, format_double(-l.value).c_str());
      out << buf;
    }
  }
  out.flush();
  if (!out) io_fail(path, "write failed");
}

SdpInstance import_sdpa(const std::string& path) {
  std::ifstream in(path);
  if (!in) io_fail(path, "cannot open");

  int m = 0, nblk = 0;
  {
    std::istringstream ls(next_data_line(in, path));
    if (!(ls >> m)) io_fail(path, "bad constraint count");
  }
  {
    std::istringstream ls(next_data_line(in, path));
    if (!(ls >> nblk)) io_fail(path, "bad block count");
  }
  std::vector<int> raw_sizes;
  {
    std::istringstream ls(desep(next_data_line(in, path)));
    int s;
    while (ls >> s) raw_sizes.push_back(s);
  }
  if (static_cast<int>(raw_sizes.size()) != nblk) io_fail(path, "block size list mismatch");

  SdpInstance inst;
  int free_block = -1;  // 1-based SDPA block index of the trailing free split
  for (int b = 0; b < nblk; ++b) {
    if (raw_sizes[b] > 0) {
      if (free_block != -1) io_fail(path, "diagonal block before a matrix block is unsupported");
      inst.block_sizes.push_back(raw_sizes[b]);
    } else {
      if (b != nblk - 1) io_fail(path, "only a trailing diagonal block is supported");
      const int sz = -raw_sizes[b];
      if (sz % 2 != 0) io_fail(path, "free-variable block must have even size");
      inst.num_free = sz / 2;
      free_block = b + 1;
    }
  }
  inst.rows.resize(m);

  {
    std::istringstream ls(desep(next_data_line(in, path)));
    for (int r = 0; r < m; ++r)
      if (!(ls >> inst.rows[r].rhs)) io_fail(path, "bad rhs vector");
  }

  // entry lines; free-split pairs are folded back to signed coefficients
  std::vector<std::vector<double>> free_acc_obj(inst.num_free, std::vector<double>(2, 0.0));
  std::vector<std::vector<std::vector<double>>> free_acc(
      m, std::vector<std::vector<double>>(inst.num_free, std::vector<double>(2, 0.0)));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '"' || line[0] == '*') continue;
    std::istringstream ls(desep(line));
    int k, blk, i, j;
    double v;
    if (!(ls >> k >> blk >> i >> j >> v)) io_fail(path, "bad entry line: " + line);
    if (k < 0 || k > m || blk < 1 || blk > nblk) io_fail(path, "entry indices out of range");
    if (blk == free_block) {
      if (i != j) io_fail(path, "off-diagonal entry in diagonal block");
      const int f = (i - 1) / 2;
      const int side = (i - 1) % 2;  // 0 = plus, 1 = minus
      if (f >= inst.num_free) io_fail(path, "free entry out of range");
      if (k == 0)
        free_acc_obj[f][side] += v;
      else
        free_acc[k - 1][f][side] += v;
    } else {
      const int size = inst.block_sizes[blk - 1];
      if (i < 1 || j < 1 || i > size || j > size) io_fail(path, "matrix entry out of range");
      if (k == 0) io_fail(path, "nonzero objective on a PSD block is unsupported");
      int ii = i - 1, jj = j - 1;
      if (ii > jj) std::swap(ii, jj);
      inst.rows[k - 1].mat.push_back({blk - 1, ii, jj, v});
    }
  }

  for (int f = 0; f < inst.num_free; ++f) {
    const double plus = free_acc_obj[f][0], minus = free_acc_obj[f][1];
    if (plus != -minus) io_fail(path, "objective free-split entries are not paired");
    if (plus != 0.0) inst.objective.push_back({f, -plus});
    for (int r = 0; r < m; ++r) {
      const double p = free_acc[r][f][0], q = free_acc[r][f][1];
      if (p != -q) io_fail(path, "free-split entries are not paired");
      if (p != 0.0) inst.rows[r].lin.push_back({f, p});
    }
  }
  // keep free entries sorted per row for structural comparisons
  for (auto& row : inst.rows)
    std::sort(row.lin.begin(), row.lin.end(),
              [](const LinEntry& a, const LinEntry& b) { return a.var < b.var; });
  return inst;
}

void write_solution(const SdpSolution& sol, const SdpInstance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) io_fail(path, "cannot open for writing");
  for (int r = 0; r < inst.num_rows(); ++r)
    out << (r ? " " : "") << format_double(r < sol.dual.size() ? -sol.dual[r] : 0.0);
  out << "\n";

  const int npsd = inst.num_blocks();
  char buf[160];
  // dual slack Z = -A*(z) on the PSD blocks
  std::vector<Eigen::MatrixXd> Z(npsd);
  for (int b = 0; b < npsd; ++b)
    Z[b] = Eigen::MatrixXd::Zero(inst.block_sizes[b], inst.block_sizes[b]);
  for (int r = 0; r < inst.num_rows() && r < sol.dual.size(); ++r)
    for (const auto& e : inst.rows[r].mat) {
      Z[e.block](e.i, e.j) -= sol.dual[r] * e.value;
      if (e.i != e.j) Z[e.block](e.j, e.i) -= sol.dual[r] * e.value;
    }
  for (int b = 0; b < npsd; ++b)
    for (int i = 0; i < inst.block_sizes[b]; ++i)
      for (int j = i; j < inst.block_sizes[b]; ++j) {
        if (Z[b](i, j) == 0.0) continue;
        std::snprintf(buf, sizeof(buf), "1 %d %d %d %s\n", b + 1, i + 1, j + 1,
                      format_double(Z[b](i, j)).c_str());
        out << buf;
      }
  for (int b = 0; b < npsd; ++b)
    for (int i = 0; i < inst.block_sizes[b]; ++i)
      for (int j = i; j < inst.block_sizes[b]; ++j) {
        if (sol.blocks[b](i, j) == 0.0) continue;
        std::snprintf(buf, sizeof(buf), "2 %d %d %d %s\n", b + 1, i + 1, j + 1,
                      format_double(sol.blocks[b](i, j)).c_str());
        out << buf;
      }
  for (int f = 0; f < inst.num_free; ++f) {
    const double y = sol.free_values[f];
    const double plus = y > 0 ? y : 0.0, minus = y < 0 ? -y : 0.0;
    if (plus != 0.0) {
      std::snprintf(buf, sizeof(buf), "2 %d %d %d %s\n", npsd + 1, 2 * f + 1, 2 * f + 1,
                    format_double(plus).c_str());
      out << buf;
    }
    if (minus != 0.0) {
      std::snprintf(buf, sizeof(buf), "2 %d %d %d %s\n", npsd + 1, 2 * f + 2, 2 * f + 2,
                    format_double(minus).c_str());
      out << buf;
    }
  }
  out.flush();
  if (!out) io_fail(path, "write failed");
}

SdpSolution import_solution(const std::string& path, const SdpInstance& inst, double eps_primal) {
  std::ifstream in(path);
  if (!in) io_fail(path, "cannot open");

  SdpSolution sol;
  sol.status = SolveStatus::Feasible;
  sol.blocks.resize(inst.num_blocks());
  for (int b = 0; b < inst.num_blocks(); ++b)
    sol.blocks[b] = Eigen::MatrixXd::Zero(inst.block_sizes[b], inst.block_sizes[b]);
  sol.free_values = Eigen::VectorXd::Zero(inst.num_free);
  sol.dual = Eigen::VectorXd::Zero(inst.num_rows());

  std::string line = next_data_line(in, path);
  {
    std::istringstream ls(line);
    for (int r = 0; r < inst.num_rows(); ++r) {
      double v;
      if (!(ls >> v)) io_fail(path, "shape mismatch: dual vector has fewer entries than rows");
      sol.dual[r] = -v;
    }
    double extra;
    if (ls >> extra) io_fail(path, "shape mismatch: dual vector has more entries than rows");
  }

  Eigen::VectorXd free_plus = Eigen::VectorXd::Zero(inst.num_free);
  Eigen::VectorXd free_minus = Eigen::VectorXd::Zero(inst.num_free);
  const int npsd = inst.num_blocks();
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '"' || line[0] == '*') continue;
    std::istringstream ls(line);
    int mat, blk, i, j;
    double v;
    if (!(ls >> mat >> blk >> i >> j >> v)) io_fail(path, "bad entry line: " + line);
    if (mat != 1 && mat != 2) io_fail(path, "matno must be 1 or 2");
    if (mat == 1) continue;  // dual slack; recomputed locally
    if (blk == npsd + 1 && inst.num_free > 0) {
      if (i != j) io_fail(path, "off-diagonal entry in free block");
      const int f = (i - 1) / 2;
      if (f < 0 || f >= inst.num_free) io_fail(path, "shape mismatch: free entry out of range");
      if ((i - 1) % 2 == 0)
        free_plus[f] = v;
      else
        free_minus[f] = v;
    } else {
      if (blk < 1 || blk > npsd) io_fail(path, "shape mismatch: block index out of range");
      const int size = inst.block_sizes[blk - 1];
      if (i < 1 || j < 1 || i > size || j > size)
        io_fail(path, "shape mismatch: entry exceeds block size");
      sol.blocks[blk - 1](i - 1, j - 1) = v;
      sol.blocks[blk - 1](j - 1, i - 1) = v;
    }
  }
  sol.free_values = free_plus - free_minus;
  evaluate_solution(inst, sol, 10.0 * eps_primal);
  return sol;
}

}  // namespace sosinv
