#pragma once

#include <vector>

#include "atlas/qubit/structure.hpp"

namespace atlas::expt {

// Quantity whose level set is traced over the (alpha, beta) plane at fixed q.
enum class ContourQuantity { pi_tangle, neg_ac };

struct TrajectoryPoint {
  double phi = 0.0;  // arc-length parameter, scaled to [0, 2pi]
  double alpha = 0.0;
  double beta = 0.0;
  qubit::CorrelationValues values;
};

struct ContourMeta {
  ContourQuantity quantity{};
  double level = 0.0;
  double q = 0.0;
  bool closed = true;
  int chosen = 0;                   // index into all_lengths
  double length = 0.0;              // polished arc length of the chosen contour
  std::vector<double> all_lengths;  // every contour found at this level
  double worst_level_error = 0.0;   // max |quantity - level| over emitted points
  bool converged = true;            // all per-point measurement optimizations
};

struct Trajectory {
  std::vector<TrajectoryPoint> points;
  ContourMeta meta;
};

// Level-set trace: marching squares over an inclusive [0, 2pi]^2 node grid
// (saddle cells split by the corner average), crossings chained into
// contours, the longest closed one kept (longest open as fallback), every
// vertex Newton-polished along the finite-difference gradient until
// |quantity - level| <= 1e-6, then resampled to `samples` arc-length-uniform
// points. Closed contours start at the smallest-alpha point (ties: smallest
// beta) and run counterclockwise; phi grows proportionally to arc length.
// Throws std::invalid_argument when the grid never brackets the level.
Trajectory contour_trajectory(ContourQuantity quantity, double level, double q,
                              int samples, const qubit::OptimizerConfig& cfg = {},
                              int grid_nodes = 256);

}  // namespace atlas::expt
