#pragma once

#include "atlas/qubit/discord.hpp"

// Exact identities tying the discord of a reduction of a pure tripartite
// state to pairwise entanglement of formation. Both return |lhs - rhs|
// residuals; the only error source is the measurement optimizer, whose
// failures propagate as ConvergenceError.

namespace atlas::qubit {

// | D(A,B) - [E_F(rho_AC) - S(C) + S(B)] | for a pure three-qubit ABC state.
double koashi_winter_residual(const core::PureState& psi, const OptimizerConfig& cfg = {});

// | D(A,B) + D(A,C) - [E_F(rho_AC) + E_F(rho_AB)] |, the two-sided
// consequence of the same identity.
double discord_sum_rule_residual(const core::PureState& psi, const OptimizerConfig& cfg = {});

}  // namespace atlas::qubit
