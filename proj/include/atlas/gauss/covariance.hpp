#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

// Pure three-mode Gaussian states in covariance-matrix language. Quadrature
// ordering is (x_A, p_A, x_B, p_B, x_C, p_C) with symplectic form
// Omega = diag_blocks([[0,1],[-1,0]]); vacuum has sigma = I.

namespace atlas::gauss {

using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;
using Mat6 = Eigen::Matrix<double, 6, 6>;

// Local symplectic eigenvalues (nu_a, nu_b, nu_c), each >= 1, fixing a pure
// three-mode state up to local operations.
struct NuTriple {
  double nu_a, nu_b, nu_c;
};

enum class ModePair { ab, ac, bc };
// (first, second, bystander) mode indices of a pair.
struct PairIndices {
  int i, j, k;
};
PairIndices indices_of(ModePair pair);

// A consistent triple must keep both coupling radicands nonnegative for
// every pair choice; equivalently each nu_k obeys the triangle-like bounds
// |nu_i - nu_j| + 1 <= nu_k <= nu_i + nu_j - 1. On failure `why` (if given)
// names the violated inequality. Radicands within 1e-12 of zero count as 0.
bool valid_triple(const NuTriple& t, std::string* why = nullptr);

// 6x6 covariance matrix. Validates symmetry (1e-12) and the bona fide
// condition sigma + i Omega >= 0, i.e. all symplectic eigenvalues >= 1 - 1e-9.
class CovMat3 {
 public:
  explicit CovMat3(Mat6 entries);
  const Mat6& entries() const { return entries_; }
  Mat2 sigma(int mode) const;          // diagonal block of one mode
  Mat2 gamma(int mode_i, int mode_j) const;  // off-diagonal coupling block

 private:
  Mat6 entries_;
};

// Two-mode reduction, same validation.
class CovMat2 {
 public:
  explicit CovMat2(Mat4 entries);
  const Mat4& entries() const { return entries_; }
  Mat2 sigma_first() const;
  Mat2 sigma_second() const;
  Mat2 gamma() const;

 private:
  Mat4 entries_;
};

// Standard form of the pure state with local spectrum `t`: sigma_i = nu_i I,
// gamma_ij = diag(e+_ij, e-_ij) with
//   e+-_ij = [sqrt(r1) +- sqrt(r2)] / (4 sqrt(nu_i nu_j)),
//   r1 = [(ni-nj)^2 - (nk-1)^2] [(ni-nj)^2 - (nk+1)^2],
//   r2 = [(ni+nj)^2 - (nk-1)^2] [(ni+nj)^2 - (nk+1)^2].
// Throws std::invalid_argument (with the violated inequality) on bad triples.
CovMat3 standard_form_pure(const NuTriple& t);

// Moduli of the eigenvalues of i Omega sigma, one per mode, descending.
std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& cov);

// max |nu - 1| over the global symplectic spectrum; ~0 certifies purity.
double pure_state_residual(const CovMat3& cov);

CovMat2 two_mode(const CovMat3& cov, ModePair pair);

// det sigma_i + det sigma_j + 2 det gamma for the pair.
double delta_invariant(const CovMat2& pair);

// Reduced pairs of a pure three-mode state saturate the uncertainty bound
// delta = det sigma_pair + 1. Returns |lhs - rhs|.
double uncertainty_saturation_residual(const CovMat2& pair);

// The pair's global purity mirrors the bystander: det sigma_pair = nu_k^2.
double purity_matching_residual(const CovMat3& cov, ModePair pair);

// 1 - det sigma_A = det gamma_AB + det gamma_AC. Returns |lhs - rhs|.
double identity_residual(const CovMat3& cov);

// For pairs reduced from a pure three-mode state (saturation holds), the
// partial-transpose test reduces to the sign of det gamma.
bool ppt_separable(const CovMat2& pair);

// True when the coupling block vanishes entirely (max |gamma| <= 1e-10).
bool is_product(const CovMat3& cov, ModePair pair);

struct GaussianPairReport {
  ModePair pair{};
  double det_gamma = 0.0;
  double det_sigma_pair = 0.0;
  double delta = 0.0;
  double saturation_residual = 0.0;
  double purity_residual = 0.0;
  bool separable = false;
  bool product = false;
};

GaussianPairReport pair_report(const CovMat3& cov, ModePair pair);

// Consequences of AB-pair separability for the standard form:
//   (a) AC separable  <=>  det sigma_A = 1
//   (b) BC separable  <=>  det sigma_B = 1
//   (c) gamma_AB = 0   <=>  det sigma_A = 1 or det sigma_B = 1
// checked with tolerance 1e-8 on the determinant conditions. When the
// hypothesis det gamma_AB >= -1e-10 fails the claims are vacuous.
struct EquivalenceReport {
  bool in_hypothesis = false;
  bool a_holds = true;
  bool b_holds = true;
  bool c_holds = true;
  double det_gamma_ab = 0.0, det_gamma_ac = 0.0, det_gamma_bc = 0.0;
  double det_sigma_a = 0.0, det_sigma_b = 0.0;
  bool all_hold() const { return a_holds && b_holds && c_holds; }
};

EquivalenceReport verify_equivalences(const NuTriple& t);

}  // namespace atlas::gauss
