#include "atlas/expt/fuzz.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "atlas/expt/parallel.hpp"
#include "atlas/expt/rng.hpp"
#include "atlas/qubit/measures.hpp"
#include "atlas/qubit/structure.hpp"

namespace atlas::expt {

namespace {

constexpr double antecedent_tol = 1e-4;
constexpr double consequent_tol = 1e-6;
constexpr double residual_tol = 1e-8;
constexpr double gamma_zero_tol = 1e-10;
constexpr double separability_slack = 1e-10;

struct QubitSample {
  double w;
  double theta[4], phi[4];  // kets a, b, c, d
};

QubitSample draw_qubit_sample(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  QubitSample s;
  s.w = 0.05 + 0.9 * unit(rng);
  for (int k = 0; k < 4; ++k) {
    s.theta[k] = std::acos(1.0 - 2.0 * unit(rng));  // Haar on the sphere
    s.phi[k] = 2.0 * std::numbers::pi * unit(rng);
  }
  return s;
}

// sqrt(w)|a b 0> + sqrt(1-w)|c d 1>: the flag qubit keeps the branches
// orthogonal, so the AB reduction is the intended separable mixture.
core::PureState purify_sample(const QubitSample& s) {
  const core::Vec a = core::bloch_ket(s.theta[0], s.phi[0]);
  const core::Vec b = core::bloch_ket(s.theta[1], s.phi[1]);
  const core::Vec c = core::bloch_ket(s.theta[2], s.phi[2]);
  const core::Vec d = core::bloch_ket(s.theta[3], s.phi[3]);

  core::Vec psi = core::Vec::Zero(8);
  const double w0 = std::sqrt(s.w), w1 = std::sqrt(1.0 - s.w);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      psi(x * 4 + y * 2 + 0) = w0 * a(x) * b(y);
      psi(x * 4 + y * 2 + 1) = w1 * c(x) * d(y);
    }
  return core::PureState(std::move(psi), {2, 2, 2});
}

}  // namespace

FuzzReport qubit_fuzz(uint64_t seed, int samples, const qubit::OptimizerConfig& cfg) {
  if (samples < 1) throw std::invalid_argument("qubit_fuzz: need at least one sample");

  FuzzReport rep;
  rep.seed = seed;
  rep.samples = samples;

  std::mutex merge;
  parallel_for(samples, [&](int idx) {
    auto rng = substream_engine(seed, static_cast<uint64_t>(idx));
    const QubitSample s = draw_qubit_sample(rng);
    const auto v = qubit::correlation_values(purify_sample(s), cfg);

    std::vector<double> params{s.w,
                               s.theta[0], s.phi[0], s.theta[1], s.phi[1],
                               s.theta[2], s.phi[2], s.theta[3], s.phi[3]};
    struct Claim {
      const char* id;
      double antecedent, consequent;
    };
    const Claim claims[] = {
        {"mutual-information-implies-pi-tangle", v.mutual_information, v.pi_tangle},
        {"discord-ab-implies-neg-ac", v.discord_ab, v.neg_ac},
        {"discord-ba-implies-neg-bc", v.discord_ba, v.neg_bc},
    };

    std::lock_guard<std::mutex> lock(merge);
    rep.converged = rep.converged && v.converged;
    for (const auto& c : claims) {
      if (c.antecedent <= antecedent_tol) continue;
      ++rep.checked;
      if (c.consequent <= consequent_tol)
        rep.violations.push_back({idx, c.id, params, {c.antecedent, c.consequent}});
    }
  });

  // Index-ordered assembly: the merge order above depends on scheduling.
  std::sort(rep.violations.begin(), rep.violations.end(),
            [](const FuzzViolation& a, const FuzzViolation& b) { return a.sample < b.sample; });
  return rep;
}

qubit::Rank2Params sample_rank2_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double q = 0.05 + 0.9 * unit(rng);
  const double alpha = 2.0 * std::numbers::pi * unit(rng);
  const double beta = 2.0 * std::numbers::pi * unit(rng);
  return {q, alpha, beta};
}

gauss::NuTriple sample_nu_triple(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.5);
  for (;;) {
    const gauss::NuTriple t{1.0 + std::abs(g(rng)), 1.0 + std::abs(g(rng)),
                            1.0 + std::abs(g(rng))};
    if (gauss::valid_triple(t)) return t;
  }
}

FuzzReport gaussian_fuzz(uint64_t seed, int samples) {
  if (samples < 1) throw std::invalid_argument("gaussian_fuzz: need at least one sample");

  FuzzReport rep;
  rep.seed = seed;
  rep.samples = samples;

  std::mutex merge;
  parallel_for(samples, [&](int idx) {
    auto rng = substream_engine(seed, static_cast<uint64_t>(idx));
    const auto t = sample_nu_triple(rng);
    const auto cov = gauss::standard_form_pure(t);
    const std::vector<double> params{t.nu_a, t.nu_b, t.nu_c};

    std::vector<FuzzViolation> local;
    auto flag = [&](const char* claim, std::initializer_list<double> values) {
      local.push_back({idx, claim, params, values});
    };

    if (const double r = gauss::pure_state_residual(cov); r > residual_tol)
      flag("construction-purity", {r});
    for (auto pair : {gauss::ModePair::ab, gauss::ModePair::ac, gauss::ModePair::bc}) {
      const auto pr = gauss::pair_report(cov, pair);
      if (pr.saturation_residual > residual_tol)
        flag("uncertainty-saturation", {static_cast<double>(pr.pair), pr.saturation_residual});
      if (pr.purity_residual > residual_tol)
        flag("pair-purity-matching", {static_cast<double>(pr.pair), pr.purity_residual});
    }
    if (const double r = gauss::identity_residual(cov); r > residual_tol)
      flag("det-sigma-identity", {r});

    const auto eq = gauss::verify_equivalences(t);
    if (!eq.a_holds) flag("ac-separable-iff-a-pure", {eq.det_gamma_ac, eq.det_sigma_a});
    if (!eq.b_holds) flag("bc-separable-iff-b-pure", {eq.det_gamma_bc, eq.det_sigma_b});
    if (!eq.c_holds) flag("ab-product-iff-either-pure", {eq.det_sigma_a, eq.det_sigma_b});

    // Classical correlation with no quantum side-channel is impossible here:
    // a separable but nonzero gamma_AB forces AC and BC both entangled.
    const bool ab_correlated = cov.gamma(0, 1).cwiseAbs().maxCoeff() > gamma_zero_tol;
    if (eq.in_hypothesis && ab_correlated) {
      if (eq.det_gamma_ac >= -separability_slack || eq.det_gamma_bc >= -separability_slack)
        flag("classical-without-quantum", {eq.det_gamma_ab, eq.det_gamma_ac, eq.det_gamma_bc});
    }

    std::lock_guard<std::mutex> lock(merge);
    if (eq.in_hypothesis) ++rep.checked;
    for (auto& v : local) rep.violations.push_back(std::move(v));
  });

  // Index-ordered assembly: the merge order above depends on scheduling.
  std::sort(rep.violations.begin(), rep.violations.end(),
            [](const FuzzViolation& a, const FuzzViolation& b) { return a.sample < b.sample; });
  return rep;
}

}  // namespace atlas::expt
