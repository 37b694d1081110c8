#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sosinv/model.hpp"

namespace sosinv {

struct StepResult {
  bool stopped = false;  // x left X0 or no guard matched
  int cell = -1;
  Eigen::VectorXd next;
};

// One transition of the system: stopped outside X0, otherwise the first
// matching cell's update applied to x.
StepResult step(const Pps& pps, const Eigen::VectorXd& x);

struct Trajectory {
  std::vector<Eigen::VectorXd> points;  // always contains the initial state
  std::vector<int> cells_taken;
  bool stopped_early = false;
  bool diverged = false;
};

// Iterates up to `horizon` steps; aborts and tags the trajectory when the
// sup-norm exceeds 1e12.
Trajectory simulate(const Pps& pps, const Eigen::VectorXd& x0, int horizon);

struct TaggedPoint {
  int trajectory = 0;
  int step = 0;
  Eigen::VectorXd x;
};

struct SampledReachSet {
  std::uint64_t seed = 0;
  int n_init = 0;
  int horizon = 0;
  std::vector<TaggedPoint> points;
};

// n_init uniform initial points from the (box) initial set, each iterated
// `horizon` steps or until stopped.  Point i, coordinate k draws stream
// counter i*d + k, so extending the horizon or adding trajectories never
// perturbs earlier samples.
SampledReachSet sample_reach(const Pps& pps, int n_init, int horizon, std::uint64_t seed);

struct GridEval {
  std::vector<Interval> box;  // two axes
  int resolution = 0;
  std::vector<double> values;  // indexed [i1 * resolution + i2]
};

// Evaluations of p over a regular grid on a 2-d box.
GridEval grid_eval(const Polynomial& p, const std::vector<Interval>& box, int resolution);

// Plot emission; all files are deterministic for fixed inputs.
void write_points_csv(const SampledReachSet& reach, int dim, const std::string& path);
void write_grid_csv(const GridEval& grid, const std::string& path);
// Binary P5 raster: pixel 0 where p <= 0, 255 otherwise, row 0 at max x2.
void write_region_pgm(const GridEval& grid, const std::string& path);

}  // namespace sosinv
