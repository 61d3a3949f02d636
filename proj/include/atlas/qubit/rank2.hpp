#pragma once

#include "atlas/core/ops.hpp"

namespace atlas::qubit {

// Two-parameter family of rank-2 two-qubit states,
//   rho_AB = q |00><00| + (1-q) |a b><a b|,
// with real product ket |a b>, |a> = cos(alpha)|0> + sin(alpha)|1> and |b>
// likewise with beta. Its canonical purification lifts the two branches onto
// an orthonormal flag qubit C:
//   |psi> = sqrt(q)|0 0 0> + sqrt(1-q)|a b 1>.
struct Rank2Params {
  double q;      // branch weight, strictly inside (0, 1)
  double alpha;  // A-side ket angle
  double beta;   // B-side ket angle
};

core::DensityMatrix make_rank2_state(const Rank2Params& p);
core::PureState purify_rank2(const Rank2Params& p);

// rho_AC of the canonical purification, assembled from its closed form (the
// |10> row and column vanish identically) instead of tracing the 8x8 state.
core::DensityMatrix reduced_ac(const Rank2Params& p);

enum class DiscordDirection { ab, ba };  // ab measures B, ba measures A
enum class Pair { ac, bc };

// Exact zero-measure branch classification for the family. All angle tests
// are modular (alpha = 0 mod pi etc.) with absolute tolerance `tol` on the
// angle itself, not on derived trigonometric values.
bool zero_discord_predicate(const Rank2Params& p, DiscordDirection dir, double tol = 1e-9);
bool separability_predicate(const Rank2Params& p, Pair pair, double tol = 1e-9);
// True when the purification is entangled across all three one-vs-rest cuts.
bool tripartite_predicate(const Rank2Params& p, double tol = 1e-9);

}  // namespace atlas::qubit
