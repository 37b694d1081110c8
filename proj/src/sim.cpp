#include "sosinv/sim.hpp"

#include <fstream>
#include <stdexcept>

#include "sosinv/rng.hpp"
#include "sosinv/util.hpp"

namespace sosinv {

StepResult step(const Pps& pps, const Eigen::VectorXd& x) {
  if (x.size() != pps.dim) throw std::invalid_argument("step: point dimension mismatch");
  StepResult res;
  if (!membership(pps.x0, x)) {
    res.stopped = true;
    return res;
  }
  const int cell = select_cell(pps, x);
  if (cell < 0) {
    res.stopped = true;
    return res;
  }
  res.cell = cell;
  res.next = pps.cells[cell].update(x);
  return res;
}

Trajectory simulate(const Pps& pps, const Eigen::VectorXd& x0, int horizon) {
  Trajectory traj;
  traj.points.push_back(x0);
  for (int k = 0; k < horizon; ++k) {
    const StepResult s = step(pps, traj.points.back());
    if (s.stopped) {
      traj.stopped_early = true;
      break;
    }
    traj.points.push_back(s.next);
    traj.cells_taken.push_back(s.cell);
    if (s.next.lpNorm<Eigen::Infinity>() > 1e12) {
      traj.diverged = true;
      break;
    }
  }
  return traj;
}

SampledReachSet sample_reach(const Pps& pps, int n_init, int horizon, std::uint64_t seed) {
  if (n_init < 1) throw std::invalid_argument("sample_reach: need at least one initial point");
  if (horizon < 0) throw std::invalid_argument("sample_reach: horizon must be >= 0");
  if (static_cast<int>(pps.init_box.size()) != pps.dim)
    throw std::invalid_argument("sample_reach: initial set is not a box");

  SampledReachSet reach;
  reach.seed = seed;
  reach.n_init = n_init;
  reach.horizon = horizon;
  CounterRng rng{seed};
  for (int i = 0; i < n_init; ++i) {
    Eigen::VectorXd x0(pps.dim);
    for (int k = 0; k < pps.dim; ++k)
      x0[k] = rng.uniform(static_cast<std::uint64_t>(i) * pps.dim + k, pps.init_box[k].lo,
                          pps.init_box[k].hi);
    const Trajectory traj = simulate(pps, x0, horizon);
    for (std::size_t s = 0; s < traj.points.size(); ++s)
      reach.points.push_back({i, static_cast<int>(s), traj.points[s]});
  }
  return reach;
}

GridEval grid_eval(const Polynomial& p, const std::vector<Interval>& box, int resolution) {
  if (p.dim() != 2) throw std::invalid_argument("grid_eval: raster output requires dimension 2");
  if (box.size() != 2) throw std::invalid_argument("grid_eval: box must have two intervals");
  if (resolution < 2) throw std::invalid_argument("grid_eval: resolution must be >= 2");
  GridEval grid;
  grid.box = box;
  grid.resolution = resolution;
  grid.values.resize(static_cast<std::size_t>(resolution) * resolution);
  Eigen::VectorXd x(2);
  for (int i1 = 0; i1 < resolution; ++i1) {
    x[0] = box[0].lo + (box[0].hi - box[0].lo) * i1 / (resolution - 1);
    for (int i2 = 0; i2 < resolution; ++i2) {
      x[1] = box[1].lo + (box[1].hi - box[1].lo) * i2 / (resolution - 1);
      grid.values[static_cast<std::size_t>(i1) * resolution + i2] = eval(p, x);
    }
  }
  return grid;
}

void write_points_csv(const SampledReachSet& reach, int dim, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "traj,step";
  for (int k = 0; k < dim; ++k) out << ",x" << k + 1;
  out << "\n";
  for (const auto& pt : reach.points) {
    out << pt.trajectory << "," << pt.step;
    for (int k = 0; k < dim; ++k) out << "," << format_double(pt.x[k]);
    out << "\n";
  }
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_grid_csv(const GridEval& grid, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "x1,x2,value\n";
  const int res = grid.resolution;
  for (int i1 = 0; i1 < res; ++i1) {
    const double x1 = grid.box[0].lo + (grid.box[0].hi - grid.box[0].lo) * i1 / (res - 1);
    for (int i2 = 0; i2 < res; ++i2) {
      const double x2 = grid.box[1].lo + (grid.box[1].hi - grid.box[1].lo) * i2 / (res - 1);
      out << format_double(x1) << "," << format_double(x2) << ","
          << format_double(grid.values[static_cast<std::size_t>(i1) * res + i2]) << "\n";
    }
  }
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_region_pgm(const GridEval& grid, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  const int res = grid.resolution;
  out << "P5\n" << res << " " << res << "\n255\n";
  // row 0 = max x2
  for (int row = 0; row < res; ++row) {
    const int i2 = res - 1 - row;
    for (int i1 = 0; i1 < res; ++i1) {
      const unsigned char pix =
          grid.values[static_cast<std::size_t>(i1) * res + i2] <= 0.0 ? 0 : 255;
      out.put(static_cast<char>(pix));
    }
  }
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace sosinv
