#include "atlas/expt/demos.hpp"

#include <stdexcept>

#include "atlas/core/ops.hpp"
#include "atlas/qubit/discord.hpp"
#include "atlas/qubit/measures.hpp"

namespace atlas::expt {

NonconverseReport nonconverse_demo(double p_a, double p_b) {
  if (!(p_a > 0.0 && p_a < 1.0) || !(p_b > 0.0 && p_b < 1.0))
    throw std::invalid_argument("nonconverse_demo: weights must lie strictly inside (0, 1)");

  auto mixed = [](double p) {
    Eigen::Matrix2cd m;
    m << p, 0.0, 0.0, 1.0 - p;
    return core::DensityMatrix(m, {2});
  };

  // Each factor gets its own ancilla; subsystem order is (A, A', B, B').
  const auto psi_a = core::purify(mixed(p_a));
  const auto psi_b = core::purify(mixed(p_b));
  const auto full = core::tensor(psi_a, psi_b);
  const auto rho = core::density(full);
  const auto rho_ab = core::partial_trace(rho, {0, 2});

  NonconverseReport rep;
  rep.p_a = p_a;
  rep.p_b = p_b;
  rep.s_a = core::von_neumann_entropy(core::partial_trace(rho, {0}));
  rep.s_b = core::von_neumann_entropy(core::partial_trace(rho, {2}));
  rep.entropy_ab = core::von_neumann_entropy(rho_ab);
  rep.mutual_information = qubit::mutual_information(rho_ab);
  rep.discord_ab = qubit::discord(rho_ab, qubit::Measured::B);
  rep.discord_ba = qubit::discord(rho_ab, qubit::Measured::A);
  rep.neg_a_ancilla = qubit::negativity(core::density(psi_a), {0});
  rep.neg_b_ancilla = qubit::negativity(core::density(psi_b), {0});
  rep.neg_ab_cut = qubit::negativity(rho, {0, 2});
  return rep;
}

}  // namespace atlas::expt
