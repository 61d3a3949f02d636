#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "atlas/expt/fuzz.hpp"
#include "atlas/gauss/covariance.hpp"

using namespace atlas::gauss;

namespace {

// Independent PPT route: flip the second mode's momentum and test the
// smallest symplectic eigenvalue against 1 via the two-mode closed form
// nu_-^2 = (delta~ - sqrt(delta~^2 - 4 det sigma)) / 2.
double min_symplectic_after_flip(const CovMat2& pair) {
  const double det_a = pair.sigma_first().determinant();
  const double det_b = pair.sigma_second().determinant();
  const double det_g = pair.gamma().determinant();
  const double det_all = pair.entries().determinant();
  const double delta_tilde = det_a + det_b - 2.0 * det_g;
  const double disc = std::max(0.0, delta_tilde * delta_tilde - 4.0 * det_all);
  return std::sqrt(std::max(0.0, 0.5 * (delta_tilde - std::sqrt(disc))));
}

}  // namespace

TEST_CASE("frozen standard form at (2, 2, 1)") {
  const auto cov = standard_form_pure({2.0, 2.0, 1.0});
  const double root3 = std::sqrt(3.0);

  CHECK((cov.sigma(0) - 2.0 * Mat2::Identity()).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((cov.sigma(2) - Mat2::Identity()).cwiseAbs().maxCoeff() <= 1e-12);

  const Mat2 gab = cov.gamma(0, 1);
  CHECK(gab(0, 0) == doctest::Approx(root3).epsilon(1e-12));
  CHECK(gab(1, 1) == doctest::Approx(-root3).epsilon(1e-12));
  CHECK(std::abs(gab(0, 1)) <= 1e-15);
  CHECK(gab.determinant() == doctest::Approx(-3.0).epsilon(1e-12));

  CHECK(cov.gamma(0, 2).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(cov.gamma(1, 2).cwiseAbs().maxCoeff() <= 1e-12);

  const auto ab = pair_report(cov, ModePair::ab);
  CHECK_FALSE(ab.separable);
  CHECK(ab.delta == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(ab.det_sigma_pair == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ab.saturation_residual <= 1e-12);
  CHECK(ab.purity_residual <= 1e-12);

  const auto ac = pair_report(cov, ModePair::ac);
  CHECK(ac.separable);
  CHECK(ac.product);
}

TEST_CASE("the vacuum triple is the identity") {
  const auto cov = standard_form_pure({1.0, 1.0, 1.0});
  CHECK((cov.entries() - Mat6::Identity()).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(pure_state_residual(cov) <= 1e-12);
  for (auto pair : {ModePair::ab, ModePair::ac, ModePair::bc}) {
    CHECK(pair_report(cov, pair).separable);
    CHECK(pair_report(cov, pair).product);
  }
}

TEST_CASE("the (1, nu, nu) family decouples mode A") {
  for (double nu : {1.3, 2.7, 10.0}) {
    const auto cov = standard_form_pure({1.0, nu, nu});
    CHECK(cov.gamma(0, 1).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK(cov.gamma(0, 2).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK(cov.gamma(1, 2).determinant() ==
          doctest::Approx(1.0 - nu * nu).epsilon(1e-10));

    const auto eq = verify_equivalences({1.0, nu, nu});
    CHECK(eq.in_hypothesis);
    CHECK(eq.all_hold());
  }
}

TEST_CASE("coupling blocks are symmetric in the mode exchange") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const auto t = atlas::expt::sample_nu_triple(rng);
    const auto cov = standard_form_pure(t);
    CHECK((cov.entries() - cov.entries().transpose()).cwiseAbs().maxCoeff() <= 1e-12);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        CHECK((cov.gamma(i, j) - cov.gamma(j, i).transpose()).cwiseAbs().maxCoeff() <=
              1e-15);
  }
}

TEST_CASE("pure-state invariants hold on seeded random triples") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t = atlas::expt::sample_nu_triple(rng);
    const auto cov = standard_form_pure(t);
    CAPTURE(t.nu_a);
    CAPTURE(t.nu_b);
    CAPTURE(t.nu_c);

    CHECK(pure_state_residual(cov) <= 1e-8);
    CHECK(identity_residual(cov) <= 1e-8);
    for (auto pair : {ModePair::ab, ModePair::ac, ModePair::bc}) {
      const auto rep = pair_report(cov, pair);
      CHECK(rep.saturation_residual <= 1e-8);
      CHECK(rep.purity_residual <= 1e-8);
    }

    // Closed form of the AB coupling determinant in the local spectrum.
    const double expected =
        0.5 * (1.0 + t.nu_c * t.nu_c - t.nu_a * t.nu_a - t.nu_b * t.nu_b);
    CHECK(cov.gamma(0, 1).determinant() == doctest::Approx(expected).epsilon(1e-8));
  }
}

TEST_CASE("sign of det gamma reproduces the symplectic PPT test") {
  std::mt19937_64 rng(47);
  int compared = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = atlas::expt::sample_nu_triple(rng);
    const auto cov = standard_form_pure(t);
    for (auto pair : {ModePair::ab, ModePair::ac, ModePair::bc}) {
      const auto reduced = two_mode(cov, pair);
      if (std::abs(reduced.gamma().determinant()) <= 1e-8) continue;  // boundary
      const bool by_flip = min_symplectic_after_flip(reduced) >= 1.0 - 1e-9;
      CHECK(ppt_separable(reduced) == by_flip);
      ++compared;
    }
  }
  CHECK(compared > 100);
}

TEST_CASE("invalid triples are rejected with the violated bound named") {
  std::string why;

  CHECK_FALSE(valid_triple({5.0, 1.0, 1.0}, &why));
  CHECK(why.find("nu_a + 1 > nu_b + nu_c") != std::string::npos);

  CHECK_FALSE(valid_triple({1.0, 1.0, 5.0}, &why));
  CHECK(why.find("lower triangle bound") != std::string::npos);

  CHECK_FALSE(valid_triple({0.5, 1.0, 1.0}, &why));
  CHECK(why.find("single-mode uncertainty bound") != std::string::npos);

  CHECK_THROWS_AS(standard_form_pure({5.0, 1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(standard_form_pure({2.0, 2.0, 3.0 + 1e-6}), std::invalid_argument);

  // Exact boundary triples are valid.
  CHECK(valid_triple({2.0, 2.0, 3.0}));
  CHECK(valid_triple({2.0, 2.0, 1.0}));
  CHECK_NOTHROW(standard_form_pure({2.0, 2.0, 3.0}));
}

TEST_CASE("reduced pairs carry the bystander's symplectic spectrum") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    const auto t = atlas::expt::sample_nu_triple(rng);
    const auto cov = standard_form_pure(t);
    const double bystander[3] = {t.nu_c, t.nu_b, t.nu_a};
    int idx = 0;
    for (auto pair : {ModePair::ab, ModePair::ac, ModePair::bc}) {
      const auto nus = symplectic_eigenvalues(two_mode(cov, pair).entries());
      REQUIRE(nus.size() == 2);
      CHECK(nus[0] == doctest::Approx(bystander[idx]).epsilon(1e-9));
      CHECK(nus[1] == doctest::Approx(1.0).epsilon(1e-9));
      ++idx;
    }
  }
}

TEST_CASE("symplectic eigenvalues of a two-mode squeezed state") {
  // cosh/sinh standard form: pure for every squeezing parameter.
  const double r = 0.7;
  Mat4 m = Mat4::Zero();
  m.block<2, 2>(0, 0) = std::cosh(2.0 * r) * Mat2::Identity();
  m.block<2, 2>(2, 2) = std::cosh(2.0 * r) * Mat2::Identity();
  Mat2 z;
  z << std::sinh(2.0 * r), 0.0, 0.0, -std::sinh(2.0 * r);
  m.block<2, 2>(0, 2) = z;
  m.block<2, 2>(2, 0) = z;

  const auto nus = symplectic_eigenvalues(m);
  CHECK(nus[0] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(nus[1] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_NOTHROW(CovMat2{m});
  CHECK_FALSE(ppt_separable(CovMat2(m)));

  CHECK_THROWS_AS(symplectic_eigenvalues(Eigen::MatrixXd::Identity(3, 3)),
                  std::invalid_argument);
}

TEST_CASE("covariance validation rejects unphysical matrices") {
  Mat6 asym = Mat6::Identity();
  asym(0, 1) = 0.3;
  CHECK_THROWS_WITH_AS(CovMat3{asym}, doctest::Contains("not symmetric"),
                       std::invalid_argument);

  CHECK_THROWS_WITH_AS(CovMat3(Mat6(0.5 * Mat6::Identity())),
                       doctest::Contains("uncertainty"), std::invalid_argument);
  CHECK_THROWS_AS(CovMat2(Mat4(0.5 * Mat4::Identity())), std::invalid_argument);

  CHECK_NOTHROW(CovMat3(Mat6::Identity()));
}

TEST_CASE("equivalence reports expose the hypothesis") {
  // det gamma_AB = -3 < 0: out of hypothesis, vacuously holding.
  const auto out = verify_equivalences({2.0, 2.0, 1.0});
  CHECK_FALSE(out.in_hypothesis);
  CHECK(out.all_hold());
  CHECK(out.det_gamma_ab == doctest::Approx(-3.0).epsilon(1e-10));

  // (1, nu, nu): in hypothesis with AC separable and det sigma_A = 1.
  const auto in = verify_equivalences({1.0, 2.0, 2.0});
  CHECK(in.in_hypothesis);
  CHECK(in.det_sigma_a == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(in.all_hold());
}

TEST_CASE("mode pair indexing") {
  CHECK(indices_of(ModePair::ab).k == 2);
  CHECK(indices_of(ModePair::ac).k == 1);
  CHECK(indices_of(ModePair::bc).k == 0);
  const auto cov = standard_form_pure({1.5, 1.7, 2.1});
  CHECK_THROWS_AS(cov.sigma(3), std::invalid_argument);
  CHECK_THROWS_AS(cov.gamma(1, 1), std::invalid_argument);
}
