#pragma once

#include <stdexcept>

#include "atlas/core/ops.hpp"

// Quantum discord of two-qubit states under rank-1 projective measurements.
// The measurement minimization runs in two stages: a (theta, phi) grid over
// the Bloch sphere that includes both poles (so sigma_z measurements are hit
// exactly), then Nelder-Mead refinement from the best grid point.

namespace atlas::qubit {

// Which subsystem the projectors act on.
enum class Measured { A, B };

struct OptimizerConfig {
  int grid_theta = 64;        // polar samples, endpoints included
  int grid_phi = 64;          // azimuthal samples over [0, 2pi)
  double tolerance = 1e-10;   // simplex spread |f_worst - f_best| to stop at
  int max_iterations = 500;
};

// Unit Bloch vector selecting the projector pair (I +- n.sigma)/2.
class MeasurementBasis {
 public:
  explicit MeasurementBasis(const Eigen::Vector3d& bloch);
  const Eigen::Vector3d& bloch() const { return bloch_; }

 private:
  Eigen::Vector3d bloch_;
};

struct OptimizationOutcome {
  double min_conditional_entropy = 0.0;
  Eigen::Vector3d basis = Eigen::Vector3d::UnitZ();  // argmin Bloch vector
  bool converged = false;
  int iterations = 0;  // Nelder-Mead iterations consumed
};

struct DiscordResult {
  double discord = 0.0;
  double classical = 0.0;
  double mutual_information = 0.0;
  OptimizationOutcome optimization;
};

// Thrown by the throwing wrappers when the simplex fails to collapse within
// max_iterations; callers that can tolerate it use discord_analysis and
// inspect the outcome instead.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// sum_k p_k S(rho_unmeasured | outcome k) for one fixed basis.
double conditional_entropy(const core::DensityMatrix& rho, Measured m,
                           const MeasurementBasis& basis);

// Full analysis: discord, classical correlation and mutual information plus
// the optimizer outcome. Never throws on non-convergence.
DiscordResult discord_analysis(const core::DensityMatrix& rho, Measured m,
                               const OptimizerConfig& cfg = {});

// Convenience wrappers; throw ConvergenceError if the optimizer gives up.
double discord(const core::DensityMatrix& rho, Measured m, const OptimizerConfig& cfg = {});
double classical_correlation(const core::DensityMatrix& rho, Measured m,
                             const OptimizerConfig& cfg = {});

}  // namespace atlas::qubit
