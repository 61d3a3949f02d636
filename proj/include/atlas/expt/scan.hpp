#pragma once

#include <vector>

#include "atlas/qubit/structure.hpp"

namespace atlas::expt {

// Rectangular sweep of the rank-2 family at fixed q; both angles run over
// [0, 2pi), n nodes each, so no row is duplicated by periodicity.
struct ScanGrid {
  double q = 0.5;
  int n_alpha = 65;
  int n_beta = 65;
};

struct ScanRow {
  double alpha = 0.0, beta = 0.0;
  double d_ab = 0.0, d_ba = 0.0;
  double neg_ac = 0.0, neg_bc = 0.0;
  double pi_tangle = 0.0;
  bool converged = true;  // optimizer failures mark the row, never abort
};

// One row per node, row-major in (alpha, beta), computed in parallel but
// assembled in index order.
std::vector<ScanRow> grid_scan(const ScanGrid& grid, const qubit::OptimizerConfig& cfg = {});

}  // namespace atlas::expt
