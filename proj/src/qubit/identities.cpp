#include "atlas/qubit/identities.hpp"

#include <cmath>
#include <stdexcept>

#include "atlas/qubit/measures.hpp"

namespace atlas::qubit {

namespace {

void require_three_qubits(const core::PureState& psi, const char* what) {
  if (psi.dims() != core::Dims{2, 2, 2})
    throw std::invalid_argument(std::string(what) + ": expected a three-qubit pure state");
}

}  // namespace

double koashi_winter_residual(const core::PureState& psi, const OptimizerConfig& cfg) {
  require_three_qubits(psi, "koashi_winter_residual");
  const auto rho = core::density(psi);
  const auto rho_ab = core::partial_trace(rho, {0, 1});
  const auto rho_ac = core::partial_trace(rho, {0, 2});

  const double d_ab = discord(rho_ab, Measured::B, cfg);
  const double e_ac = eof_two_qubit(rho_ac);
  const double s_b = core::von_neumann_entropy(core::partial_trace(rho, {1}));
  const double s_c = core::von_neumann_entropy(core::partial_trace(rho, {2}));
  return std::abs(d_ab - (e_ac - s_c + s_b));
}

double discord_sum_rule_residual(const core::PureState& psi, const OptimizerConfig& cfg) {
  require_three_qubits(psi, "discord_sum_rule_residual");
  const auto rho = core::density(psi);
  const auto rho_ab = core::partial_trace(rho, {0, 1});
  const auto rho_ac = core::partial_trace(rho, {0, 2});

  const double d_ab = discord(rho_ab, Measured::B, cfg);
  const double d_ac = discord(rho_ac, Measured::B, cfg);
  return std::abs(d_ab + d_ac - (eof_two_qubit(rho_ac) + eof_two_qubit(rho_ab)));
}

}  // namespace atlas::qubit
