#pragma once

#include <vector>

#include "atlas/core/ops.hpp"

// Entanglement measures for few-qubit states. All logarithms are base 2 and
// negativities use the trace-norm convention ||rho^T||_1 - 1 unless the
// halved variant is requested explicitly.

namespace atlas::qubit {

const Eigen::Matrix2cd& sigma_x();
const Eigen::Matrix2cd& sigma_y();
const Eigen::Matrix2cd& sigma_z();

enum class NegativityConvention {
  trace_norm_minus_one,  // ||rho^T||_1 - 1; GHZ one-vs-rest gives 1
  halved,                // (||rho^T||_1 - 1) / 2
};

// Negativity across the cut separating `side` from the rest. `side` must be
// a non-empty proper subset of the subsystems. Clamped at 0.
double negativity(const core::DensityMatrix& rho, const std::vector<int>& side,
                  NegativityConvention conv = NegativityConvention::trace_norm_minus_one);

// Smallest eigenvalue of the partial transpose across the same cut
// (negative exactly when the cut carries distillable entanglement here).
double min_pt_eigenvalue(const core::DensityMatrix& rho, const std::vector<int>& side);

// Wootters concurrence and the entanglement of formation it determines.
double concurrence(const core::DensityMatrix& rho);
double eof_two_qubit(const core::DensityMatrix& rho);

double binary_entropy(double p);

// S(A) + S(B) - S(AB) for a bipartite state.
double mutual_information(const core::DensityMatrix& rho);

// Residual tripartite entanglement of a pure three-qubit state: the average
// over parties of N^2(one|rest) - N^2(pair) - N^2(pair). 1 for GHZ, 0 for
// any product of a pair with a singleton.
double pi_tangle(const core::PureState& psi);

}  // namespace atlas::qubit
