#pragma once

// Independent verification routes for the test suites. Nothing here shares
// algorithms with the library: eigenvalues come from cyclic Jacobi rotations
// on a real symmetric embedding (the library uses Eigen's tridiagonal QR),
// and the discord oracle minimizes over a brute-force shrinking dense grid
// with full projector sandwiches (the library uses a closed-form conditional
// entropy under Nelder-Mead refinement).

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <vector>

#include "atlas/core/ops.hpp"
#include "atlas/qubit/discord.hpp"

namespace oracles {

// Eigenvalues of a Hermitian matrix, ascending, via cyclic Jacobi sweeps on
// the real symmetric embedding [[Re, -Im], [Im, Re]], whose spectrum is that
// of the original matrix with every eigenvalue doubled.
inline std::vector<double> jacobi_spectrum(const Eigen::MatrixXcd& h) {
  const int n = static_cast<int>(h.rows());
  const int m = 2 * n;
  Eigen::MatrixXd a(m, m);
  a.topLeftCorner(n, n) = h.real();
  a.topRightCorner(n, n) = -h.imag();
  a.bottomLeftCorner(n, n) = h.imag();
  a.bottomRightCorner(n, n) = h.real();

  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < m; ++p)
      for (int q = p + 1; q < m; ++q) off += a(p, q) * a(p, q);
    if (std::sqrt(off) < 1e-14 * (1.0 + a.cwiseAbs().maxCoeff())) break;

    for (int p = 0; p < m; ++p) {
      for (int q = p + 1; q < m; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        const double phi = 0.5 * std::atan2(2.0 * a(p, q), a(q, q) - a(p, p));
        const double c = std::cos(phi), s = std::sin(phi);
        for (int k = 0; k < m; ++k) {  // columns: a <- a G
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < m; ++k) {  // rows: a <- G^T a
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }

  std::vector<double> diag(m);
  for (int i = 0; i < m; ++i) diag[i] = a(i, i);
  std::sort(diag.begin(), diag.end());
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = 0.5 * (diag[2 * i] + diag[2 * i + 1]);
  return out;
}

inline double spectrum_entropy(const std::vector<double>& lambda) {
  double s = 0.0;
  for (double l : lambda)
    if (l > 1e-15) s -= l * std::log2(l);
  return s;
}

inline double oracle_entropy(const Eigen::MatrixXcd& rho) {
  return spectrum_entropy(jacobi_spectrum(rho));
}

// sum_k p_k S(rho_unmeasured|k) for the projector pair along (theta, phi),
// computed the long way: embed the projector, sandwich the state, trace out
// the measured qubit by explicit index sums, diagonalize with Jacobi.
inline double oracle_conditional_entropy(const Eigen::Matrix4cd& rho,
                                         atlas::qubit::Measured m, double theta,
                                         double phi) {
  using C = std::complex<double>;
  Eigen::Vector2cd ket;
  ket << C(std::cos(theta / 2.0), 0.0),
      std::polar(std::sin(theta / 2.0), phi);
  const Eigen::Matrix2cd plus = ket * ket.adjoint();
  const Eigen::Matrix2cd minus = Eigen::Matrix2cd::Identity() - plus;
  const Eigen::Matrix2cd eye = Eigen::Matrix2cd::Identity();

  double total = 0.0;
  for (const Eigen::Matrix2cd& p : {plus, minus}) {
    Eigen::Matrix4cd op = Eigen::Matrix4cd::Zero();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const Eigen::Matrix2cd& left = (m == atlas::qubit::Measured::A) ? p : eye;
        const Eigen::Matrix2cd& right = (m == atlas::qubit::Measured::A) ? eye : p;
        op.block<2, 2>(2 * i, 2 * j) = left(i, j) * right;
      }
    const Eigen::Matrix4cd cond = op * rho * op;
    const double prob = cond.trace().real();
    if (prob <= 1e-15) continue;

    Eigen::Matrix2cd red = Eigen::Matrix2cd::Zero();
    for (int u = 0; u < 2; ++u)
      for (int v = 0; v < 2; ++v)
        for (int t = 0; t < 2; ++t)
          red(u, v) += (m == atlas::qubit::Measured::B) ? cond(2 * u + t, 2 * v + t)
                                                        : cond(2 * t + u, 2 * t + v);
    total += prob * oracle_entropy(red / prob);
  }
  return total;
}

// Dense-grid minimization: a 101x100 sphere sweep followed by four rounds of
// 21x21 refinement over a window that shrinks 5x per round.
inline double oracle_min_conditional_entropy(const Eigen::Matrix4cd& rho,
                                             atlas::qubit::Measured m) {
  const double pi = std::acos(-1.0);
  double best = std::numeric_limits<double>::infinity();
  double best_theta = 0.0, best_phi = 0.0;
  for (int i = 0; i <= 100; ++i) {
    for (int j = 0; j < 100; ++j) {
      const double theta = pi * i / 100.0;
      const double phi = 2.0 * pi * j / 100.0;
      const double f = oracle_conditional_entropy(rho, m, theta, phi);
      if (f < best) best = f, best_theta = theta, best_phi = phi;
    }
  }
  double w_theta = 2.0 * pi / 100.0, w_phi = 2.0 * 2.0 * pi / 100.0;
  for (int round = 0; round < 4; ++round) {
    const double ct = best_theta, cp = best_phi;
    for (int i = -10; i <= 10; ++i) {
      for (int j = -10; j <= 10; ++j) {
        const double theta =
            std::clamp(ct + w_theta * i / 10.0, 0.0, pi);
        const double phi = cp + w_phi * j / 10.0;
        const double f = oracle_conditional_entropy(rho, m, theta, phi);
        if (f < best) best = f, best_theta = theta, best_phi = phi;
      }
    }
    w_theta /= 5.0;
    w_phi /= 5.0;
  }
  return best;
}

inline double oracle_discord(const atlas::core::DensityMatrix& rho,
                             atlas::qubit::Measured m) {
  const Eigen::Matrix4cd r = rho.entries();
  const std::vector<int> keep_measured{m == atlas::qubit::Measured::A ? 0 : 1};
  const auto measured =
      atlas::core::partial_trace_raw(r, {2, 2}, keep_measured);
  return oracle_entropy(measured) - oracle_entropy(r) +
         oracle_min_conditional_entropy(r, m);
}

// Full-rank random density matrix: G G^dag normalized, Gaussian entries.
inline atlas::core::DensityMatrix random_density(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = {gauss(rng), gauss(rng)};
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace().real();
  atlas::core::Dims dims;
  for (int d = dim; d > 1; d /= 2) dims.push_back(2);
  return atlas::core::DensityMatrix(rho, dims);
}

}  // namespace oracles
