#pragma once

namespace atlas::expt {

// Product of two mixed qubits: zero correlations between A and B, yet the
// joint purification (one ancilla per factor) is entangled across A|ancilla,
// B|ancilla and the (AB)|(ancillas) cut. Purification entanglement therefore
// cannot certify correlations in the reduction.
struct NonconverseReport {
  double p_a = 0.5, p_b = 0.5;  // Bernoulli weights of the two marginals
  double s_a = 0.0, s_b = 0.0;  // marginal entropies, both positive
  double entropy_ab = 0.0;      // S(rho_AB) = s_a + s_b
  double mutual_information = 0.0;  // = 0: A and B are independent
  double discord_ab = 0.0, discord_ba = 0.0;  // = 0 for a product state
  double neg_a_ancilla = 0.0;  // each factor forms an entangled pair
  double neg_b_ancilla = 0.0;
  double neg_ab_cut = 0.0;  // (A B) against both ancillas
};

// p outside (0, 1) is rejected: the demo needs genuinely mixed marginals.
NonconverseReport nonconverse_demo(double p_a = 0.5, double p_b = 0.5);

}  // namespace atlas::expt
