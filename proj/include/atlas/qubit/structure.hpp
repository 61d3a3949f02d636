#pragma once

#include "atlas/qubit/discord.hpp"
#include "atlas/qubit/rank2.hpp"

// Bundled correlation profile of a pure three-qubit state and threshold
// classification of its entanglement structure, with the analytic branch
// predicates of the rank-2 family as ground truth.

namespace atlas::qubit {

struct CorrelationValues {
  double discord_ab = 0.0;  // measurement on B
  double discord_ba = 0.0;  // measurement on A
  double classical_ab = 0.0;
  double classical_ba = 0.0;
  double mutual_information = 0.0;
  double eof_ab = 0.0;
  double neg_ab = 0.0;  // pairwise negativities, trace-norm convention
  double neg_ac = 0.0;
  double neg_bc = 0.0;
  double neg_a_rest = 0.0;  // one-vs-rest cuts
  double neg_b_rest = 0.0;
  double neg_c_rest = 0.0;
  double pi_tangle = 0.0;
  double min_pt_eig_ac = 0.0;
  double min_pt_eig_bc = 0.0;
  bool converged = false;  // both measurement optimizations collapsed
};

CorrelationValues correlation_values(const core::PureState& psi,
                                     const OptimizerConfig& cfg = {});

struct StructureThresholds {
  double value = 1e-6;      // magnitudes below this count as zero
  double band_low = 1e-8;   // guard band: magnitudes inside [band_low,
  double band_high = 1e-4;  // band_high] flag the verdict as boundary-fragile
};

struct StructureFlags {
  bool discord_ab_zero = false;
  bool discord_ba_zero = false;
  bool ac_separable = false;
  bool bc_separable = false;
  bool tripartite = false;  // entangled across every one-vs-rest cut
  bool boundary = false;    // some classified magnitude fell in the guard band
};

// Threshold the numeric profile. boundary never participates in equality
// checks; it marks that the verdict is within noise of flipping.
StructureFlags classify(const CorrelationValues& v, const StructureThresholds& t = {});

struct StructureReport {
  Rank2Params params{};
  CorrelationValues values;
  StructureFlags numeric;    // thresholded measurements
  StructureFlags predicted;  // analytic branch predicates
  bool agree = false;        // all five classification bits match
};

StructureReport structure_classify(const Rank2Params& p,
                                   const StructureThresholds& t = {},
                                   const OptimizerConfig& cfg = {});

// Local filtering demo: apply a (generally non-unitary) 2x2 filter to qubit B
// of the GHZ purification of the even classical mixture of |00> and |11>,
// renormalize, and profile the state before and after. The default filter
// sends |0> -> |0> and |1> -> (|0> + |1>)/sqrt(2).
Eigen::Matrix2cd coherence_injection_filter();

struct ActivationReport {
  CorrelationValues before;
  CorrelationValues after;
  StructureFlags before_flags;
  StructureFlags after_flags;
};

ActivationReport remote_activation_demo(
    const Eigen::Matrix2cd& filter_on_b = coherence_injection_filter(),
    const OptimizerConfig& cfg = {});

}  // namespace atlas::qubit
