#include "atlas/qubit/rank2.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace atlas::qubit {

namespace {

constexpr double pi = std::numbers::pi;

void validate(const Rank2Params& p) {
  if (!std::isfinite(p.q) || !(p.q > 0.0 && p.q < 1.0))
    throw std::invalid_argument("rank-2 family: q must lie strictly inside (0, 1)");
  if (!std::isfinite(p.alpha) || !std::isfinite(p.beta))
    throw std::invalid_argument("rank-2 family: angles must be finite");
}

// Distance from x to the nearest integer multiple of m.
double mod_dist(double x, double m) { return std::abs(std::remainder(x, m)); }

}  // namespace

core::DensityMatrix make_rank2_state(const Rank2Params& p) {
  validate(p);
  const core::Vec v00 = core::kron(core::basis_ket(2, 0), core::basis_ket(2, 0));
  const core::Vec vab =
      core::kron(core::real_qubit_ket(p.alpha), core::real_qubit_ket(p.beta));
  core::Mat m = p.q * v00 * v00.adjoint() + (1.0 - p.q) * vab * vab.adjoint();
  return core::DensityMatrix(std::move(m), {2, 2});
}

core::PureState purify_rank2(const Rank2Params& p) {
  validate(p);
  const double ca = std::cos(p.alpha), sa = std::sin(p.alpha);
  const double cb = std::cos(p.beta), sb = std::sin(p.beta);
  const double w0 = std::sqrt(p.q), w1 = std::sqrt(1.0 - p.q);

  core::Vec psi = core::Vec::Zero(8);  // flat index a*4 + b*2 + c
  psi(0) = w0;                         // |000>
  psi(1) = w1 * ca * cb;               // |001>
  psi(3) = w1 * ca * sb;               // |011>
  psi(5) = w1 * sa * cb;               // |101>
  psi(7) = w1 * sa * sb;               // |111>
  return core::PureState(std::move(psi), {2, 2, 2});
}

core::DensityMatrix reduced_ac(const Rank2Params& p) {
  validate(p);
  const double ca = std::cos(p.alpha), sa = std::sin(p.alpha);
  const double cb = std::cos(p.beta);
  const double q = p.q, r = 1.0 - p.q;
  const double x = std::sqrt(q * r);

  // Basis order |ac>: 00, 01, 10, 11. Tracing out B couples the branches
  // only through <b|0> = cos(beta); the |10> row/column is exactly zero.
  Eigen::Matrix4d m;
  m << q, x * ca * cb, 0.0, x * sa * cb,
      x * ca * cb, r * ca * ca, 0.0, r * ca * sa,
      0.0, 0.0, 0.0, 0.0,
      x * sa * cb, r * ca * sa, 0.0, r * sa * sa;
  return core::DensityMatrix(m.cast<core::Complex>(), {2, 2});
}

bool zero_discord_predicate(const Rank2Params& p, DiscordDirection dir, double tol) {
  validate(p);
  // Measuring B sees a classical mixture when the B-side kets are parallel
  // or orthogonal (beta = 0 mod pi/2), or when the branches coincide on A
  // (alpha = 0 mod pi, the |00> branch is absorbed). Swap roles for ba.
  const double own = dir == DiscordDirection::ab ? p.beta : p.alpha;
  const double other = dir == DiscordDirection::ab ? p.alpha : p.beta;
  return mod_dist(own, pi / 2.0) <= tol || mod_dist(other, pi) <= tol;
}

bool separability_predicate(const Rank2Params& p, Pair pair, double tol) {
  validate(p);
  // rho_AC separates when the A-side branches coincide (alpha = 0 mod pi) or
  // the traced-out B-side kets are orthogonal (beta = pi/2 mod pi), which
  // decoheres the flag. Mirrored for rho_BC.
  const double own = pair == Pair::ac ? p.alpha : p.beta;
  const double other = pair == Pair::ac ? p.beta : p.alpha;
  return mod_dist(own, pi) <= tol || mod_dist(other - pi / 2.0, pi) <= tol;
}

bool tripartite_predicate(const Rank2Params& p, double tol) {
  validate(p);
  // If either ket pair coincides (angle = 0 mod pi) the purification factors
  // across that party's cut; otherwise all three cuts are entangled.
  return mod_dist(p.alpha, pi) > tol && mod_dist(p.beta, pi) > tol;
}

}  // namespace atlas::qubit
