#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "atlas/gauss/covariance.hpp"
#include "atlas/qubit/discord.hpp"
#include "atlas/qubit/rank2.hpp"

namespace atlas::expt {

struct FuzzViolation {
  int sample = 0;            // index within the run, reproducible from seed
  std::string claim;         // which implication or residual failed
  std::vector<double> params;  // enough to rebuild the sample
  std::vector<double> values;  // the offending measurements
};

struct FuzzReport {
  uint64_t seed = 0;
  int samples = 0;
  int checked = 0;  // antecedents that fired (qubit) / in-hypothesis triples (gauss)
  std::vector<FuzzViolation> violations;
  bool converged = true;  // all measurement optimizations collapsed
};

// Randomized falsification of the separable-state claims: samples
//   rho_AB = w P(a) (x) P(b) + (1-w) P(c) (x) P(d),   w in (0.05, 0.95),
// from Haar-distributed single-qubit kets (phases included), purifies with a
// flag qubit, and records violations of
//   (i)   mutual information > 1e-4  =>  pi-tangle > 1e-6,
//   (ii)  D(A,B) > 1e-4             =>  neg_ac > 1e-6,
//   (iii) D(B,A) > 1e-4             =>  neg_bc > 1e-6.
FuzzReport qubit_fuzz(uint64_t seed, int samples, const qubit::OptimizerConfig& cfg = {});

// Randomized verification of the pure-Gaussian structure: samples valid
// NuTriples and records violations of construction purity, the saturation /
// purity-matching / det-sigma identities (residuals > 1e-8), the
// separability equivalences, and the no-classical-without-quantum rule
// (gamma_AB != 0 with det gamma_AB >= 0 forces both AC and BC entangled).
FuzzReport gaussian_fuzz(uint64_t seed, int samples);

// nu = 1 + |N(0, 1.5)| per mode, rejection-sampled until the triple is valid.
gauss::NuTriple sample_nu_triple(std::mt19937_64& rng);

// q in (0.05, 0.95), both angles uniform over [0, 2pi); the generic sampler
// behind the identity-residual suites.
qubit::Rank2Params sample_rank2_params(std::mt19937_64& rng);

}  // namespace atlas::expt
