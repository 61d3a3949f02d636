#include "atlas/qubit/discord.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace atlas::qubit {

namespace {

using core::Complex;

constexpr double pi = std::numbers::pi;

// p_+ S(rho|+) + p_- S(rho|-) for projectors (I +- n.sigma)/2 on the measured
// qubit. The unmeasured qubit's conditional block is only 2x2, so its entropy
// comes from the closed-form eigenvalue pair (t +- sqrt(t^2 - 4 det))/2;
// no eigensolver in the hot path.
double conditional_entropy_raw(const Eigen::Matrix4cd& r, Measured m, double nx,
                               double ny, double nz) {
  double total = 0.0;
  for (double s : {1.0, -1.0}) {
    // Projector entries P = (I + s n.sigma)/2.
    const Complex p00(0.5 * (1.0 + s * nz), 0.0);
    const Complex p01(0.5 * s * nx, -0.5 * s * ny);
    const Complex p10(0.5 * s * nx, 0.5 * s * ny);
    const Complex p11(0.5 * (1.0 - s * nz), 0.0);

    // Unnormalized conditional state of the other qubit:
    //   measured B: A[a,a'] = sum_{b,b'} rho[(a b),(a' b')] P[b',b]
    //   measured A: C[b,b'] = sum_{a,a'} rho[(a b),(a' b')] P[a',a]
    Complex c00, c01, c10, c11;
    if (m == Measured::B) {
      auto cell = [&](int a, int ap) {
        return r(a * 2 + 0, ap * 2 + 0) * p00 + r(a * 2 + 0, ap * 2 + 1) * p10 +
               r(a * 2 + 1, ap * 2 + 0) * p01 + r(a * 2 + 1, ap * 2 + 1) * p11;
      };
      c00 = cell(0, 0); c01 = cell(0, 1); c10 = cell(1, 0); c11 = cell(1, 1);
    } else {
      auto cell = [&](int b, int bp) {
        return r(0 + b, 0 + bp) * p00 + r(0 + b, 2 + bp) * p10 +
               r(2 + b, 0 + bp) * p01 + r(2 + b, 2 + bp) * p11;
      };
      c00 = cell(0, 0); c01 = cell(0, 1); c10 = cell(1, 0); c11 = cell(1, 1);
    }

    const double t = c00.real() + c11.real();  // outcome probability
    if (t <= 1e-15) continue;                  // branch never clicks
    const double det = (c00 * c11 - c01 * c10).real();
    const double disc = std::max(0.0, t * t - 4.0 * det);
    const double root = std::sqrt(disc);
    const double lp = 0.5 * (t + root), lm = 0.5 * (t - root);
    // t * S(state/t) expanded so the normalization never divides by t twice.
    if (lp > 1e-15) total -= lp * std::log2(lp / t);
    if (lm > 1e-15) total -= lm * std::log2(lm / t);
  }
  return total;
}

struct SpherePoint {
  double theta, phi;
};

double objective(const Eigen::Matrix4cd& r, Measured m, const SpherePoint& x) {
  const double st = std::sin(x.theta);
  return conditional_entropy_raw(r, m, st * std::cos(x.phi), st * std::sin(x.phi),
                                 std::cos(x.theta));
}

struct NelderMeadResult {
  SpherePoint x;
  double f = 0.0;
  bool converged = false;
  int iterations = 0;
};

// Plain 2-d Nelder-Mead with the textbook coefficients (reflect 1, expand 2,
// contract 1/2, shrink 1/2). The objective is 2pi-periodic in both angles,
// so the simplex may wander out of the fundamental domain freely.
template <typename F>
NelderMeadResult nelder_mead(F f, SpherePoint start, double step, double tol,
                             int max_iterations) {
  std::array<SpherePoint, 3> x{start,
                               SpherePoint{start.theta + step, start.phi},
                               SpherePoint{start.theta, start.phi + step}};
  std::array<double, 3> fx{f(x[0]), f(x[1]), f(x[2])};

  auto order = [&] {
    if (fx[0] > fx[1]) { std::swap(fx[0], fx[1]); std::swap(x[0], x[1]); }
    if (fx[1] > fx[2]) { std::swap(fx[1], fx[2]); std::swap(x[1], x[2]); }
    if (fx[0] > fx[1]) { std::swap(fx[0], fx[1]); std::swap(x[0], x[1]); }
  };
  order();

  NelderMeadResult out;
  int it = 0;
  for (; it < max_iterations; ++it) {
    if (fx[2] - fx[0] < tol) {
      out.converged = true;
      break;
    }
    const SpherePoint c{0.5 * (x[0].theta + x[1].theta), 0.5 * (x[0].phi + x[1].phi)};
    const SpherePoint xr{c.theta + (c.theta - x[2].theta), c.phi + (c.phi - x[2].phi)};
    const double fr = f(xr);

    if (fr < fx[0]) {
      const SpherePoint xe{c.theta + 2.0 * (xr.theta - c.theta),
                           c.phi + 2.0 * (xr.phi - c.phi)};
      const double fe = f(xe);
      if (fe < fr) { x[2] = xe; fx[2] = fe; } else { x[2] = xr; fx[2] = fr; }
    } else if (fr < fx[1]) {
      x[2] = xr;
      fx[2] = fr;
    } else {
      // Contract toward the better of the reflected and worst points.
      const SpherePoint& towards = fr < fx[2] ? xr : x[2];
      const SpherePoint xc{c.theta + 0.5 * (towards.theta - c.theta),
                           c.phi + 0.5 * (towards.phi - c.phi)};
      const double fc = f(xc);
      if (fc < std::min(fr, fx[2])) {
        x[2] = xc;
        fx[2] = fc;
      } else {
        for (int i = 1; i < 3; ++i) {
          x[i] = SpherePoint{x[0].theta + 0.5 * (x[i].theta - x[0].theta),
                             x[0].phi + 0.5 * (x[i].phi - x[0].phi)};
          fx[i] = f(x[i]);
        }
      }
    }
    order();
  }
  out.x = x[0];
  out.f = fx[0];
  out.iterations = it;
  return out;
}

void require_two_qubits(const core::DensityMatrix& rho, const char* what) {
  if (rho.dims() != core::Dims{2, 2})
    throw std::invalid_argument(std::string(what) + ": expected a two-qubit state");
}

}  // namespace

MeasurementBasis::MeasurementBasis(const Eigen::Vector3d& bloch) : bloch_(bloch) {
  if (std::abs(bloch_.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("MeasurementBasis: Bloch vector must have unit norm");
}

double conditional_entropy(const core::DensityMatrix& rho, Measured m,
                           const MeasurementBasis& basis) {
  require_two_qubits(rho, "conditional_entropy");
  const Eigen::Matrix4cd r = rho.entries();
  const auto& n = basis.bloch();
  return conditional_entropy_raw(r, m, n.x(), n.y(), n.z());
}

DiscordResult discord_analysis(const core::DensityMatrix& rho, Measured m,
                               const OptimizerConfig& cfg) {
  require_two_qubits(rho, "discord_analysis");
  if (cfg.grid_theta < 2 || cfg.grid_phi < 1)
    throw std::invalid_argument("discord_analysis: grid must be at least 2 x 1");

  const Eigen::Matrix4cd r = rho.entries();
  auto f = [&](const SpherePoint& x) { return objective(r, m, x); };

  // Stage 1: exhaustive grid with the poles included; ties keep the lowest
  // index so the result is deterministic.
  SpherePoint best{0.0, 0.0};
  double fbest = f(best);
  for (int i = 0; i < cfg.grid_theta; ++i) {
    const double theta = pi * i / (cfg.grid_theta - 1);
    for (int j = 0; j < cfg.grid_phi; ++j) {
      if (i == 0 && j == 0) continue;
      const SpherePoint x{theta, 2.0 * pi * j / cfg.grid_phi};
      const double v = f(x);
      if (v < fbest) {
        fbest = v;
        best = x;
      }
    }
  }

  // Stage 2: local refinement, seeded with a half-grid-cell simplex.
  const double step = 0.5 * pi / (cfg.grid_theta - 1);
  const auto nm = nelder_mead(f, best, step, cfg.tolerance, cfg.max_iterations);

  DiscordResult out;
  const double st = std::sin(nm.x.theta);
  out.optimization.min_conditional_entropy = nm.f;
  out.optimization.basis = Eigen::Vector3d(st * std::cos(nm.x.phi),
                                           st * std::sin(nm.x.phi), std::cos(nm.x.theta));
  out.optimization.converged = nm.converged;
  out.optimization.iterations = nm.iterations;

  const double s_a = core::entropy_of_spectrum(
      core::eigenvalues_hermitian_raw(core::partial_trace_raw(r, {2, 2}, {0})));
  const double s_b = core::entropy_of_spectrum(
      core::eigenvalues_hermitian_raw(core::partial_trace_raw(r, {2, 2}, {1})));
  const double s_ab = core::von_neumann_entropy(rho);

  const double s_measured = m == Measured::B ? s_b : s_a;
  const double s_other = m == Measured::B ? s_a : s_b;
  out.discord = s_measured - s_ab + nm.f;
  out.classical = s_other - nm.f;
  out.mutual_information = s_a + s_b - s_ab;
  return out;
}

namespace {

DiscordResult analysis_or_throw(const core::DensityMatrix& rho, Measured m,
                                const OptimizerConfig& cfg) {
  auto res = discord_analysis(rho, m, cfg);
  if (!res.optimization.converged)
    throw ConvergenceError("measurement optimization did not converge within " +
                           std::to_string(cfg.max_iterations) + " iterations");
  return res;
}

}  // namespace

double discord(const core::DensityMatrix& rho, Measured m, const OptimizerConfig& cfg) {
  return analysis_or_throw(rho, m, cfg).discord;
}

double classical_correlation(const core::DensityMatrix& rho, Measured m,
                             const OptimizerConfig& cfg) {
  return analysis_or_throw(rho, m, cfg).classical;
}

}  // namespace atlas::qubit
