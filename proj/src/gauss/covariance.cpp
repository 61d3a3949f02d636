#include "atlas/gauss/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace atlas::gauss {

namespace {

constexpr double radicand_snap = 1e-12;  // |r| below this counts as exactly 0
constexpr double bona_fide_slack = 1e-9;
constexpr double symmetry_tol = 1e-12;
constexpr double separability_slack = 1e-10;
constexpr double equivalence_tol = 1e-8;

Eigen::MatrixXd symplectic_form(int n_modes) {
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (int m = 0; m < n_modes; ++m) {
    omega(2 * m, 2 * m + 1) = 1.0;
    omega(2 * m + 1, 2 * m) = -1.0;
  }
  return omega;
}

void check_bona_fide(const Eigen::MatrixXd& m, const char* what) {
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > symmetry_tol)
    throw std::invalid_argument(std::string(what) + ": covariance matrix is not symmetric");
  const auto nus = symplectic_eigenvalues(m);
  if (nus.back() < 1.0 - bona_fide_slack) {
    std::ostringstream msg;
    msg << what << ": symplectic eigenvalue " << nus.back()
        << " below 1 violates the uncertainty relation";
    throw std::invalid_argument(msg.str());
  }
}

double nu_of(const NuTriple& t, int mode) {
  switch (mode) {
    case 0: return t.nu_a;
    case 1: return t.nu_b;
    default: return t.nu_c;
  }
}

// Both coupling radicands for the (i, j) pair with bystander k; negatives
// within radicand_snap of zero are flushed to exactly 0.
struct Radicands {
  double r1, r2;
};

Radicands radicands(double ni, double nj, double nk) {
  const double dm = (ni - nj) * (ni - nj);
  const double dp = (ni + nj) * (ni + nj);
  const double km = (nk - 1.0) * (nk - 1.0);
  const double kp = (nk + 1.0) * (nk + 1.0);
  double r1 = (dm - km) * (dm - kp);
  double r2 = (dp - km) * (dp - kp);
  if (std::abs(r1) <= radicand_snap) r1 = 0.0;
  if (std::abs(r2) <= radicand_snap) r2 = 0.0;
  return {r1, r2};
}

}  // namespace

PairIndices indices_of(ModePair pair) {
  switch (pair) {
    case ModePair::ab: return {0, 1, 2};
    case ModePair::ac: return {0, 2, 1};
    default: return {1, 2, 0};
  }
}

bool valid_triple(const NuTriple& t, std::string* why) {
  const char* names[3] = {"nu_a", "nu_b", "nu_c"};
  const double nus[3] = {t.nu_a, t.nu_b, t.nu_c};
  for (int m = 0; m < 3; ++m) {
    if (!std::isfinite(nus[m]) || nus[m] < 1.0 - radicand_snap) {
      if (why) *why = std::string(names[m]) + " < 1 violates the single-mode uncertainty bound";
      return false;
    }
  }
  // The triangle bounds are the exact validity region (and imply nonnegative
  // coupling radicands); the radicand signs alone miss triples far outside
  // the upper bound, where both bracketed factors go negative together.
  for (int k = 0; k < 3; ++k) {
    const int i = k == 0 ? 1 : 0;
    const int j = k == 2 ? 1 : 2;
    if (nus[k] > nus[i] + nus[j] - 1.0 + radicand_snap) {
      if (why) {
        std::ostringstream msg;
        msg << names[k] << " + 1 > " << names[i] << " + " << names[j]
            << " (upper triangle bound violated)";
        *why = msg.str();
      }
      return false;
    }
    if (nus[k] < std::abs(nus[i] - nus[j]) + 1.0 - radicand_snap) {
      if (why) {
        std::ostringstream msg;
        msg << names[k] << " - 1 < |" << names[i] << " - " << names[j]
            << "| (lower triangle bound violated)";
        *why = msg.str();
      }
      return false;
    }
  }
  return true;
}

CovMat3::CovMat3(Mat6 entries) : entries_(std::move(entries)) {
  check_bona_fide(entries_, "CovMat3");
}

Mat2 CovMat3::sigma(int mode) const {
  if (mode < 0 || mode > 2) throw std::invalid_argument("CovMat3::sigma: mode out of range");
  return entries_.block<2, 2>(2 * mode, 2 * mode);
}

Mat2 CovMat3::gamma(int mode_i, int mode_j) const {
  if (mode_i < 0 || mode_i > 2 || mode_j < 0 || mode_j > 2 || mode_i == mode_j)
    throw std::invalid_argument("CovMat3::gamma: bad mode pair");
  return entries_.block<2, 2>(2 * mode_i, 2 * mode_j);
}

CovMat2::CovMat2(Mat4 entries) : entries_(std::move(entries)) {
  check_bona_fide(entries_, "CovMat2");
}

Mat2 CovMat2::sigma_first() const { return entries_.block<2, 2>(0, 0); }
Mat2 CovMat2::sigma_second() const { return entries_.block<2, 2>(2, 2); }
Mat2 CovMat2::gamma() const { return entries_.block<2, 2>(0, 2); }

CovMat3 standard_form_pure(const NuTriple& t) {
  if (std::string why; !valid_triple(t, &why))
    throw std::invalid_argument("standard_form_pure: " + why);

  Mat6 m = Mat6::Zero();
  for (int mode = 0; mode < 3; ++mode)
    m.block<2, 2>(2 * mode, 2 * mode) = nu_of(t, mode) * Mat2::Identity();

  for (ModePair pair : {ModePair::ab, ModePair::ac, ModePair::bc}) {
    const auto [i, j, k] = indices_of(pair);
    const double ni = nu_of(t, i), nj = nu_of(t, j), nk = nu_of(t, k);
    const auto r = radicands(ni, nj, nk);
    // valid_triple bounds carry a linear slack; quartic radicands can land a
    // hair below zero on exact boundaries, so clamp before the square roots.
    const double s1 = std::sqrt(std::max(0.0, r.r1));
    const double s2 = std::sqrt(std::max(0.0, r.r2));
    const double scale = 4.0 * std::sqrt(ni * nj);
    const double ep = (s1 + s2) / scale;
    const double em = (s1 - s2) / scale;
    Mat2 g;
    g << ep, 0.0, 0.0, em;
    m.block<2, 2>(2 * i, 2 * j) = g;
    m.block<2, 2>(2 * j, 2 * i) = g.transpose();
  }
  return CovMat3(m);
}

std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& cov) {
  if (cov.rows() != cov.cols() || cov.rows() % 2 != 0)
    throw std::invalid_argument("symplectic_eigenvalues: even-dimensional square matrix required");
  const int n = static_cast<int>(cov.rows()) / 2;

  // Eigenvalues of i Omega sigma come in pairs +-nu; take moduli of the
  // eigenvalues of Omega sigma (purely imaginary +-i nu) and keep one of each.
  Eigen::EigenSolver<Eigen::MatrixXd> es(symplectic_form(n) * cov, false);
  std::vector<double> moduli(2 * n);
  for (int i = 0; i < 2 * n; ++i) moduli[i] = std::abs(es.eigenvalues()(i));
  std::sort(moduli.begin(), moduli.end(), std::greater<>());

  std::vector<double> nus(n);
  for (int i = 0; i < n; ++i) nus[i] = 0.5 * (moduli[2 * i] + moduli[2 * i + 1]);
  return nus;
}

double pure_state_residual(const CovMat3& cov) {
  double worst = 0.0;
  for (double nu : symplectic_eigenvalues(cov.entries()))
    worst = std::max(worst, std::abs(nu - 1.0));
  return worst;
}

CovMat2 two_mode(const CovMat3& cov, ModePair pair) {
  const auto [i, j, k] = indices_of(pair);
  (void)k;
  Mat4 m;
  m.block<2, 2>(0, 0) = cov.sigma(i);
  m.block<2, 2>(2, 2) = cov.sigma(j);
  m.block<2, 2>(0, 2) = cov.gamma(i, j);
  m.block<2, 2>(2, 0) = cov.gamma(j, i);
  return CovMat2(m);
}

double delta_invariant(const CovMat2& pair) {
  return pair.sigma_first().determinant() + pair.sigma_second().determinant() +
         2.0 * pair.gamma().determinant();
}

double uncertainty_saturation_residual(const CovMat2& pair) {
  return std::abs(delta_invariant(pair) - pair.entries().determinant() - 1.0);
}

double purity_matching_residual(const CovMat3& cov, ModePair pair) {
  const auto [i, j, k] = indices_of(pair);
  (void)i;
  (void)j;
  const double det_pair = two_mode(cov, pair).entries().determinant();
  return std::abs(det_pair - cov.sigma(k).determinant());
}

double identity_residual(const CovMat3& cov) {
  const double lhs = 1.0 - cov.sigma(0).determinant();
  const double rhs = cov.gamma(0, 1).determinant() + cov.gamma(0, 2).determinant();
  return std::abs(lhs - rhs);
}

bool ppt_separable(const CovMat2& pair) {
  return pair.gamma().determinant() >= -separability_slack;
}

bool is_product(const CovMat3& cov, ModePair pair) {
  const auto [i, j, k] = indices_of(pair);
  (void)k;
  return cov.gamma(i, j).cwiseAbs().maxCoeff() <= separability_slack;
}

GaussianPairReport pair_report(const CovMat3& cov, ModePair pair) {
  const auto reduced = two_mode(cov, pair);
  GaussianPairReport rep;
  rep.pair = pair;
  rep.det_gamma = reduced.gamma().determinant();
  rep.det_sigma_pair = reduced.entries().determinant();
  rep.delta = delta_invariant(reduced);
  rep.saturation_residual = uncertainty_saturation_residual(reduced);
  rep.purity_residual = purity_matching_residual(cov, pair);
  rep.separable = ppt_separable(reduced);
  rep.product = is_product(cov, pair);
  return rep;
}

EquivalenceReport verify_equivalences(const NuTriple& t) {
  const auto cov = standard_form_pure(t);

  EquivalenceReport rep;
  rep.det_gamma_ab = cov.gamma(0, 1).determinant();
  rep.det_gamma_ac = cov.gamma(0, 2).determinant();
  rep.det_gamma_bc = cov.gamma(1, 2).determinant();
  rep.det_sigma_a = cov.sigma(0).determinant();
  rep.det_sigma_b = cov.sigma(1).determinant();
  rep.in_hypothesis = rep.det_gamma_ab >= -separability_slack;
  if (!rep.in_hypothesis) return rep;  // claims are vacuous, report as holding

  const bool a_pure = std::abs(rep.det_sigma_a - 1.0) <= equivalence_tol;
  const bool b_pure = std::abs(rep.det_sigma_b - 1.0) <= equivalence_tol;
  const bool ac_sep = rep.det_gamma_ac >= -separability_slack;
  const bool bc_sep = rep.det_gamma_bc >= -separability_slack;

  rep.a_holds = ac_sep == a_pure;
  rep.b_holds = bc_sep == b_pure;
  rep.c_holds = is_product(cov, ModePair::ab) == (a_pure || b_pure);
  return rep;
}

}  // namespace atlas::gauss
