#include "atlas/expt/scan.hpp"

#include <numbers>
#include <stdexcept>

#include "atlas/expt/parallel.hpp"

namespace atlas::expt {

std::vector<ScanRow> grid_scan(const ScanGrid& grid, const qubit::OptimizerConfig& cfg) {
  if (grid.n_alpha < 3 || grid.n_beta < 3)
    throw std::invalid_argument("grid_scan: need at least 3 nodes per axis");
  if (!(grid.q > 0.0 && grid.q < 1.0))
    throw std::invalid_argument("grid_scan: q must lie strictly inside (0, 1)");

  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::vector<ScanRow> rows(static_cast<size_t>(grid.n_alpha) * grid.n_beta);

  parallel_for(static_cast<int>(rows.size()), [&](int idx) {
    const int i = idx / grid.n_beta;
    const int j = idx % grid.n_beta;
    ScanRow& row = rows[idx];
    row.alpha = two_pi * i / grid.n_alpha;
    row.beta = two_pi * j / grid.n_beta;

    const auto v = qubit::correlation_values(
        qubit::purify_rank2({grid.q, row.alpha, row.beta}), cfg);
    row.d_ab = v.discord_ab;
    row.d_ba = v.discord_ba;
    row.neg_ac = v.neg_ac;
    row.neg_bc = v.neg_bc;
    row.pi_tangle = v.pi_tangle;
    row.converged = v.converged;
  });
  return rows;
}

}  // namespace atlas::expt
