#include "atlas/qubit/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace atlas::qubit {

namespace {

using core::Complex;

void require_two_qubits(const core::DensityMatrix& rho, const char* what) {
  if (rho.dims() != core::Dims{2, 2})
    throw std::invalid_argument(std::string(what) + ": expected a two-qubit state");
}

std::vector<int> checked_side(const core::DensityMatrix& rho, std::vector<int> side,
                              const char* what) {
  std::sort(side.begin(), side.end());
  side.erase(std::unique(side.begin(), side.end()), side.end());
  const int n = static_cast<int>(rho.dims().size());
  if (side.empty() || static_cast<int>(side.size()) >= n)
    throw std::invalid_argument(std::string(what) + ": side must be a non-empty proper subset");
  if (side.front() < 0 || side.back() >= n)
    throw std::invalid_argument(std::string(what) + ": subsystem index out of range");
  return side;
}

std::vector<double> pt_spectrum(const core::DensityMatrix& rho, const std::vector<int>& side) {
  core::Mat pt = rho.entries();
  for (int s : side) pt = core::partial_transpose_raw(pt, rho.dims(), s);
  return core::eigenvalues_hermitian_raw(pt);
}

}  // namespace

const Eigen::Matrix2cd& sigma_x() {
  static const Eigen::Matrix2cd m = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
  return m;
}

const Eigen::Matrix2cd& sigma_y() {
  static const Eigen::Matrix2cd m =
      (Eigen::Matrix2cd() << 0, Complex(0, -1), Complex(0, 1), 0).finished();
  return m;
}

const Eigen::Matrix2cd& sigma_z() {
  static const Eigen::Matrix2cd m = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
  return m;
}

double negativity(const core::DensityMatrix& rho, const std::vector<int>& side,
                  NegativityConvention conv) {
  const auto s = checked_side(rho, side, "negativity");
  double trace_norm = 0.0;
  for (double l : pt_spectrum(rho, s)) trace_norm += std::abs(l);
  const double neg = std::max(0.0, trace_norm - 1.0);
  return conv == NegativityConvention::halved ? 0.5 * neg : neg;
}

double min_pt_eigenvalue(const core::DensityMatrix& rho, const std::vector<int>& side) {
  const auto s = checked_side(rho, side, "min_pt_eigenvalue");
  return pt_spectrum(rho, s).front();
}

double concurrence(const core::DensityMatrix& rho) {
  require_two_qubits(rho, "concurrence");
  const core::Mat yy = core::kron(core::Mat(sigma_y()), core::Mat(sigma_y()));
  const core::Mat r = rho.entries() * yy * rho.entries().conjugate() * yy;

  Eigen::ComplexEigenSolver<core::Mat> es(r);
  std::vector<double> lambda(4);
  for (int i = 0; i < 4; ++i)
    lambda[i] = std::sqrt(std::max(0.0, es.eigenvalues()(i).real()));
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double eof_two_qubit(const core::DensityMatrix& rho) {
  const double c = concurrence(rho);
  return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
}

double mutual_information(const core::DensityMatrix& rho) {
  if (rho.dims().size() != 2)
    throw std::invalid_argument("mutual_information: expected a bipartite state");
  const double s_a = core::von_neumann_entropy(core::partial_trace(rho, {0}));
  const double s_b = core::von_neumann_entropy(core::partial_trace(rho, {1}));
  return s_a + s_b - core::von_neumann_entropy(rho);
}

double pi_tangle(const core::PureState& psi) {
  if (psi.dims() != core::Dims{2, 2, 2})
    throw std::invalid_argument("pi_tangle: expected a three-qubit pure state");
  const auto rho = core::density(psi);

  const double n_a = negativity(rho, {0});
  const double n_b = negativity(rho, {1});
  const double n_c = negativity(rho, {2});
  const double n_ab = negativity(core::partial_trace(rho, {0, 1}), {0});
  const double n_ac = negativity(core::partial_trace(rho, {0, 2}), {0});
  const double n_bc = negativity(core::partial_trace(rho, {1, 2}), {0});

  const double pi_a = n_a * n_a - n_ab * n_ab - n_ac * n_ac;
  const double pi_b = n_b * n_b - n_ab * n_ab - n_bc * n_bc;
  const double pi_c = n_c * n_c - n_ac * n_ac - n_bc * n_bc;
  return (pi_a + pi_b + pi_c) / 3.0;
}

}  // namespace atlas::qubit
