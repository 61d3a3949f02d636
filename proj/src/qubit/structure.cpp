#include "atlas/qubit/structure.hpp"

#include <cmath>
#include <stdexcept>

#include "atlas/qubit/measures.hpp"

namespace atlas::qubit {

CorrelationValues correlation_values(const core::PureState& psi,
                                     const OptimizerConfig& cfg) {
  if (psi.dims() != core::Dims{2, 2, 2})
    throw std::invalid_argument("correlation_values: expected a three-qubit pure state");

  const auto rho = core::density(psi);
  const auto rho_ab = core::partial_trace(rho, {0, 1});
  const auto rho_ac = core::partial_trace(rho, {0, 2});
  const auto rho_bc = core::partial_trace(rho, {1, 2});

  const auto ab = discord_analysis(rho_ab, Measured::B, cfg);
  const auto ba = discord_analysis(rho_ab, Measured::A, cfg);

  CorrelationValues v;
  v.discord_ab = ab.discord;
  v.discord_ba = ba.discord;
  v.classical_ab = ab.classical;
  v.classical_ba = ba.classical;
  v.mutual_information = ab.mutual_information;
  v.eof_ab = eof_two_qubit(rho_ab);
  v.neg_ab = negativity(rho_ab, {0});
  v.neg_ac = negativity(rho_ac, {0});
  v.neg_bc = negativity(rho_bc, {0});
  v.neg_a_rest = negativity(rho, {0});
  v.neg_b_rest = negativity(rho, {1});
  v.neg_c_rest = negativity(rho, {2});

  const double pi_a = v.neg_a_rest * v.neg_a_rest - v.neg_ab * v.neg_ab - v.neg_ac * v.neg_ac;
  const double pi_b = v.neg_b_rest * v.neg_b_rest - v.neg_ab * v.neg_ab - v.neg_bc * v.neg_bc;
  const double pi_c = v.neg_c_rest * v.neg_c_rest - v.neg_ac * v.neg_ac - v.neg_bc * v.neg_bc;
  v.pi_tangle = (pi_a + pi_b + pi_c) / 3.0;

  v.min_pt_eig_ac = min_pt_eigenvalue(rho_ac, {0});
  v.min_pt_eig_bc = min_pt_eigenvalue(rho_bc, {0});
  v.converged = ab.optimization.converged && ba.optimization.converged;
  return v;
}

namespace {

bool in_band(double magnitude, const StructureThresholds& t) {
  const double a = std::abs(magnitude);
  return a >= t.band_low && a <= t.band_high;
}

}  // namespace

StructureFlags classify(const CorrelationValues& v, const StructureThresholds& t) {
  StructureFlags f;
  f.discord_ab_zero = v.discord_ab < t.value;
  f.discord_ba_zero = v.discord_ba < t.value;
  f.ac_separable = v.neg_ac < t.value;
  f.bc_separable = v.neg_bc < t.value;
  const double weakest_cut =
      std::min({v.neg_a_rest, v.neg_b_rest, v.neg_c_rest});
  f.tripartite = weakest_cut > t.value;
  f.boundary = in_band(v.discord_ab, t) || in_band(v.discord_ba, t) ||
               in_band(v.neg_ac, t) || in_band(v.neg_bc, t) || in_band(weakest_cut, t);
  return f;
}

StructureReport structure_classify(const Rank2Params& p, const StructureThresholds& t,
                                   const OptimizerConfig& cfg) {
  StructureReport rep;
  rep.params = p;
  rep.values = correlation_values(purify_rank2(p), cfg);
  rep.numeric = classify(rep.values, t);

  rep.predicted.discord_ab_zero = zero_discord_predicate(p, DiscordDirection::ab);
  rep.predicted.discord_ba_zero = zero_discord_predicate(p, DiscordDirection::ba);
  rep.predicted.ac_separable = separability_predicate(p, Pair::ac);
  rep.predicted.bc_separable = separability_predicate(p, Pair::bc);
  rep.predicted.tripartite = tripartite_predicate(p);
  rep.predicted.boundary = false;

  rep.agree = rep.numeric.discord_ab_zero == rep.predicted.discord_ab_zero &&
              rep.numeric.discord_ba_zero == rep.predicted.discord_ba_zero &&
              rep.numeric.ac_separable == rep.predicted.ac_separable &&
              rep.numeric.bc_separable == rep.predicted.bc_separable &&
              rep.numeric.tripartite == rep.predicted.tripartite;
  return rep;
}

Eigen::Matrix2cd coherence_injection_filter() {
  Eigen::Matrix2cd m;
  const double r = 1.0 / std::sqrt(2.0);
  m << 1.0, r, 0.0, r;
  return m;
}

ActivationReport remote_activation_demo(const Eigen::Matrix2cd& filter_on_b,
                                        const OptimizerConfig& cfg) {
  // GHZ purifies the even classical mixture of |00> and |11>.
  core::Vec ghz = core::Vec::Zero(8);
  ghz(0) = ghz(7) = 1.0 / std::sqrt(2.0);
  const core::PureState before(ghz, {2, 2, 2});

  const core::Mat eye = core::Mat::Identity(2, 2);
  core::Mat op = core::kron(core::kron(eye, core::Mat(filter_on_b)), eye);
  core::Vec filtered = op * before.amplitudes();
  const double norm = filtered.norm();
  if (norm <= 1e-12)
    throw std::invalid_argument("remote_activation_demo: filter annihilates the state");
  const core::PureState after(filtered / norm, {2, 2, 2});

  ActivationReport rep;
  rep.before = correlation_values(before, cfg);
  rep.after = correlation_values(after, cfg);
  rep.before_flags = classify(rep.before);
  rep.after_flags = classify(rep.after);
  return rep;
}

}  // namespace atlas::qubit
