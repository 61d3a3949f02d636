#include "atlas/cli/app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "atlas/expt/contour.hpp"
#include "atlas/expt/demos.hpp"
#include "atlas/expt/fuzz.hpp"
#include "atlas/expt/rng.hpp"
#include "atlas/expt/scan.hpp"
#include "atlas/expt/stats.hpp"
#include "atlas/gauss/covariance.hpp"
#include "atlas/qubit/identities.hpp"
#include "atlas/qubit/measures.hpp"
#include "atlas/qubit/structure.hpp"

namespace atlas::cli {

namespace {

using nlohmann::json;

constexpr const char* tool_version = "0.1.0";
constexpr const char* negativity_convention = "trace-norm-minus-one";

// 12 significant digits, lowercase exponent: the CSV float contract.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

std::string join_cmdline(int argc, const char* const* argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

struct RunContext {
  std::string cmdline;
  uint64_t seed = 1;  // recorded in every CSV even when unused
};

std::string metadata_line(const RunContext& ctx) {
  return "# discord-atlas " + std::string(tool_version) + " | cmd: " + ctx.cmdline +
         " | seed=" + std::to_string(ctx.seed) + " | negativity=" + negativity_convention;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  return out;
}

void write_csv(const std::string& path, const RunContext& ctx, const std::string& header,
               const std::vector<std::vector<double>>& rows) {
  auto out = open_output(path);
  out << metadata_line(ctx) << "\n" << header << "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << fmt(row[i]);
    out << "\n";
  }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

json flags_json(const qubit::StructureFlags& f) {
  return {{"discord_ab_zero", f.discord_ab_zero}, {"discord_ba_zero", f.discord_ba_zero},
          {"ac_separable", f.ac_separable},       {"bc_separable", f.bc_separable},
          {"tripartite", f.tripartite},           {"boundary", f.boundary}};
}

json values_json(const qubit::CorrelationValues& v) {
  return {{"discord_ab", v.discord_ab},
          {"discord_ba", v.discord_ba},
          {"classical_ab", v.classical_ab},
          {"classical_ba", v.classical_ba},
          {"mutual_information", v.mutual_information},
          {"eof_ab", v.eof_ab},
          {"neg_ab", v.neg_ab},
          {"neg_ac", v.neg_ac},
          {"neg_bc", v.neg_bc},
          {"pi_tangle", v.pi_tangle},
          {"converged", v.converged}};
}

void print_values(const qubit::CorrelationValues& v, const char* indent) {
  std::cout << indent << "D(A,B) = " << fmt(v.discord_ab)
            << "   D(B,A) = " << fmt(v.discord_ba) << "\n"
            << indent << "J(A,B) = " << fmt(v.classical_ab)
            << "   J(B,A) = " << fmt(v.classical_ba) << "\n"
            << indent << "I(A:B) = " << fmt(v.mutual_information)
            << "   EoF(AB) = " << fmt(v.eof_ab) << "\n"
            << indent << "N_AB = " << fmt(v.neg_ab) << "   N_AC = " << fmt(v.neg_ac)
            << "   N_BC = " << fmt(v.neg_bc) << "\n"
            << indent << "pi-tangle = " << fmt(v.pi_tangle) << "\n";
}

void print_flags(const qubit::StructureFlags& f, const char* indent) {
  std::cout << indent << "discord(A,B) zero: " << yes_no(f.discord_ab_zero)
            << "   discord(B,A) zero: " << yes_no(f.discord_ba_zero) << "\n"
            << indent << "AC separable: " << yes_no(f.ac_separable)
            << "   BC separable: " << yes_no(f.bc_separable) << "\n"
            << indent << "tripartite entangled: " << yes_no(f.tripartite)
            << "   near threshold: " << yes_no(f.boundary) << "\n";
}

json violations_json(const expt::FuzzReport& rep) {
  json arr = json::array();
  for (const auto& v : rep.violations)
    arr.push_back({{"sample", v.sample},
                   {"claim", v.claim},
                   {"params", v.params},
                   {"values", v.values}});
  return arr;
}

// ---- subcommand bodies ----------------------------------------------------

int run_qubit_scan(const RunContext& ctx, double q, int n_alpha, int n_beta,
                   const std::string& out_path) {
  const auto rows = expt::grid_scan({q, n_alpha, n_beta});
  std::vector<std::vector<double>> data;
  data.reserve(rows.size());
  bool all_converged = true;
  for (const auto& r : rows) {
    data.push_back({r.alpha, r.beta, r.d_ab, r.d_ba, r.neg_ac, r.neg_bc, r.pi_tangle});
    all_converged = all_converged && r.converged;
  }
  write_csv(out_path, ctx, "alpha,beta,D_ab,D_ba,neg_ac,neg_bc,pi_tangle", data);
  std::cout << "wrote " << data.size() << " rows to " << out_path << "\n";
  if (!all_converged) {
    std::cerr << "warning: measurement optimization failed on some grid nodes\n";
    return 2;
  }
  return 0;
}

int run_qubit_trajectory(const RunContext& ctx, const std::string& fix, double level,
                         double q, int samples, const std::string& out_path) {
  const auto quantity = fix == "pi" ? expt::ContourQuantity::pi_tangle
                                    : expt::ContourQuantity::neg_ac;
  const auto traj = expt::contour_trajectory(quantity, level, q, samples);

  std::vector<std::vector<double>> data;
  data.reserve(traj.points.size());
  for (const auto& p : traj.points)
    data.push_back({p.phi, p.alpha, p.beta, p.values.discord_ab, p.values.discord_ba,
                    p.values.neg_ac, p.values.neg_bc, p.values.pi_tangle});
  write_csv(out_path, ctx, "phi,alpha,beta,D_ab,D_ba,neg_ac,neg_bc,pi_tangle", data);

  std::cout << "contour " << fix << " = " << level << " at q = " << q << ": "
            << (traj.meta.closed ? "closed" : "open") << ", arc length "
            << fmt(traj.meta.length) << ", " << traj.meta.all_lengths.size()
            << " contour(s) at this level, worst level error "
            << fmt(traj.meta.worst_level_error) << "\n"
            << "wrote " << data.size() << " rows to " << out_path << "\n";
  if (!traj.meta.converged) {
    std::cerr << "warning: measurement optimization failed on some trajectory points\n";
    return 2;
  }
  return 0;
}

int run_qubit_verify(const RunContext& ctx, int samples, int identity_samples,
                     bool as_json) {
  double worst_kw = 0.0, worst_sum = 0.0;
  for (int i = 0; i < identity_samples; ++i) {
    auto rng = expt::substream_engine(ctx.seed, static_cast<uint64_t>(i));
    const auto psi = qubit::purify_rank2(expt::sample_rank2_params(rng));
    worst_kw = std::max(worst_kw, qubit::koashi_winter_residual(psi));
    worst_sum = std::max(worst_sum, qubit::discord_sum_rule_residual(psi));
  }

  const auto fuzz = expt::qubit_fuzz(ctx.seed, samples);

  if (as_json) {
    json j{{"seed", ctx.seed},
           {"identity", {{"samples", identity_samples},
                         {"max_koashi_winter_residual", worst_kw},
                         {"max_sum_rule_residual", worst_sum}}},
           {"fuzz", {{"samples", fuzz.samples},
                     {"implications_checked", fuzz.checked},
                     {"violations", violations_json(fuzz)},
                     {"converged", fuzz.converged}}}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "identity suite (" << identity_samples << " samples):\n"
              << "  max |D(A,B) - [E_AC - S(C) + S(B)]| = " << fmt(worst_kw) << "\n"
              << "  max |D(A,B) + D(A,C) - E_AC - E_AB| = " << fmt(worst_sum) << "\n"
              << "separability fuzz (" << fuzz.samples << " samples, seed " << ctx.seed
              << "): " << fuzz.checked << " implications checked, "
              << fuzz.violations.size() << " violation(s)\n";
    for (const auto& v : fuzz.violations)
      std::cout << "  sample " << v.sample << ": " << v.claim << "\n";
  }
  if (!fuzz.converged) {
    std::cerr << "warning: measurement optimization failed on some fuzz samples\n";
    return 2;
  }
  return 0;
}

int run_qubit_structure(double q, double alpha, double beta, bool deg, bool as_json) {
  if (deg) {
    alpha *= std::numbers::pi / 180.0;
    beta *= std::numbers::pi / 180.0;
  }
  const auto rep = qubit::structure_classify({q, alpha, beta});

  if (as_json) {
    json j{{"params", {{"q", q}, {"alpha", alpha}, {"beta", beta}}},
           {"values", values_json(rep.values)},
           {"numeric", flags_json(rep.numeric)},
           {"predicted", flags_json(rep.predicted)},
           {"agree", rep.agree}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "rank-2 state at q = " << q << ", alpha = " << alpha
              << ", beta = " << beta << "\n";
    print_values(rep.values, "  ");
    std::cout << "numeric flags:\n";
    print_flags(rep.numeric, "  ");
    std::cout << "analytic prediction:\n";
    print_flags(rep.predicted, "  ");
    std::cout << "agreement: " << yes_no(rep.agree) << "\n";
  }
  return rep.values.converged ? 0 : 2;
}

int run_gauss_standard_form(const std::vector<double>& nu, bool as_json) {
  const gauss::NuTriple t{nu[0], nu[1], nu[2]};
  std::string why;
  if (!gauss::valid_triple(t, &why)) {
    std::cerr << "invalid triple: " << why << "\n";
    return 1;
  }
  const auto cov = gauss::standard_form_pure(t);
  const bool vacua = (cov.entries() - gauss::Mat6::Identity()).cwiseAbs().maxCoeff() <= 1e-12;

  json pairs = json::array();
  for (auto pair : {gauss::ModePair::ab, gauss::ModePair::ac, gauss::ModePair::bc}) {
    const auto pr = gauss::pair_report(cov, pair);
    const char* name = pair == gauss::ModePair::ab ? "AB"
                       : pair == gauss::ModePair::ac ? "AC" : "BC";
    pairs.push_back({{"pair", name},
                     {"det_gamma", pr.det_gamma},
                     {"det_sigma_pair", pr.det_sigma_pair},
                     {"delta", pr.delta},
                     {"saturation_residual", pr.saturation_residual},
                     {"purity_residual", pr.purity_residual},
                     {"separable", pr.separable},
                     {"product", pr.product}});
  }

  if (as_json) {
    json m = json::array();
    for (int r = 0; r < 6; ++r) {
      json row = json::array();
      for (int c = 0; c < 6; ++c) row.push_back(cov.entries()(r, c));
      m.push_back(row);
    }
    json j{{"nu", {t.nu_a, t.nu_b, t.nu_c}},
           {"covariance", m},
           {"pure_state_residual", gauss::pure_state_residual(cov)},
           {"identity_residual", gauss::identity_residual(cov)},
           {"pairs", pairs},
           {"product_of_vacua", vacua}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "standard form for nu = (" << t.nu_a << ", " << t.nu_b << ", " << t.nu_c
              << ")\n";
    for (int r = 0; r < 6; ++r) {
      std::cout << " ";
      for (int c = 0; c < 6; ++c) std::cout << " " << fmt(cov.entries()(r, c));
      std::cout << "\n";
    }
    for (const auto& p : pairs)
      std::cout << "pair " << p["pair"].get<std::string>()
                << ": det gamma = " << fmt(p["det_gamma"].get<double>())
                << ", separable: " << yes_no(p["separable"].get<bool>())
                << ", product: " << yes_no(p["product"].get<bool>()) << "\n";
    if (vacua) std::cout << "product of vacua\n";
  }
  return 0;
}

int run_gauss_verify(const RunContext& ctx, int samples, bool as_json) {
  const auto rep = expt::gaussian_fuzz(ctx.seed, samples);
  if (as_json) {
    json j{{"seed", rep.seed},
           {"samples", rep.samples},
           {"in_hypothesis", rep.checked},
           {"violations", violations_json(rep)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "gaussian fuzz (" << rep.samples << " samples, seed " << rep.seed
              << "): " << rep.checked << " triples inside the separable-AB hypothesis, "
              << rep.violations.size() << " violation(s)\n";
    for (const auto& v : rep.violations)
      std::cout << "  sample " << v.sample << ": " << v.claim << "\n";
  }
  return 0;
}

int run_activate(bool as_json) {
  const auto rep = qubit::remote_activation_demo();
  if (as_json) {
    json j{{"before", values_json(rep.before)},
           {"after", values_json(rep.after)},
           {"before_flags", flags_json(rep.before_flags)},
           {"after_flags", flags_json(rep.after_flags)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "before filtering (GHZ purification of the even classical mixture):\n";
    print_values(rep.before, "  ");
    std::cout << "after the coherence-injecting filter on B:\n";
    print_values(rep.after, "  ");
  }
  return rep.before.converged && rep.after.converged ? 0 : 2;
}

int run_nonconverse(double p_a, double p_b, bool as_json) {
  const auto rep = expt::nonconverse_demo(p_a, p_b);
  if (as_json) {
    json j{{"p_a", rep.p_a},
           {"p_b", rep.p_b},
           {"s_a", rep.s_a},
           {"s_b", rep.s_b},
           {"entropy_ab", rep.entropy_ab},
           {"mutual_information", rep.mutual_information},
           {"discord_ab", rep.discord_ab},
           {"discord_ba", rep.discord_ba},
           {"neg_a_ancilla", rep.neg_a_ancilla},
           {"neg_b_ancilla", rep.neg_b_ancilla},
           {"neg_ab_cut", rep.neg_ab_cut}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "product of mixed qubits, p_a = " << rep.p_a << ", p_b = " << rep.p_b
              << "\n"
              << "  S(A) = " << fmt(rep.s_a) << "   S(B) = " << fmt(rep.s_b)
              << "   S(AB) = " << fmt(rep.entropy_ab) << "\n"
              << "  I(A:B) = " << fmt(rep.mutual_information)
              << "   D(A,B) = " << fmt(rep.discord_ab)
              << "   D(B,A) = " << fmt(rep.discord_ba) << "\n"
              << "  N(A|ancilla) = " << fmt(rep.neg_a_ancilla)
              << "   N(B|ancilla) = " << fmt(rep.neg_b_ancilla)
              << "   N(AB|ancillas) = " << fmt(rep.neg_ab_cut) << "\n"
              << "purification entanglement without any A-B correlation\n";
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"discord-atlas: quantum discord and entanglement structure toolkit"};
  app.require_subcommand(1);

  RunContext ctx;
  ctx.cmdline = join_cmdline(argc, argv);

  int exit_code = 0;

  // ---- qubit ----
  auto* qubit_cmd = app.add_subcommand("qubit", "two-qubit rank-2 family tools");
  qubit_cmd->require_subcommand(1);

  {
    auto* scan = qubit_cmd->add_subcommand("scan", "sweep the (alpha, beta) plane");
    auto q = std::make_shared<double>(0.5);
    auto na = std::make_shared<int>(65);
    auto nb = std::make_shared<int>(65);
    auto out = std::make_shared<std::string>();
    scan->add_option("--q", *q, "branch weight")->capture_default_str();
    scan->add_option("--n-alpha", *na, "alpha nodes")->capture_default_str();
    scan->add_option("--n-beta", *nb, "beta nodes")->capture_default_str();
    scan->add_option("--out", *out, "output CSV path")->required();
    scan->callback([&, q, na, nb, out] {
      exit_code = run_qubit_scan(ctx, *q, *na, *nb, *out);
    });
  }
  {
    auto* traj = qubit_cmd->add_subcommand("trajectory", "trace a constant-level contour");
    auto fix = std::make_shared<std::string>();
    auto level = std::make_shared<double>();
    auto q = std::make_shared<double>(0.5);
    auto samples = std::make_shared<int>(400);
    auto out = std::make_shared<std::string>();
    traj->add_option("--fix", *fix, "quantity held constant: pi | neg-ac")
        ->required()
        ->check(CLI::IsMember({"pi", "neg-ac"}));
    traj->add_option("--level", *level, "contour level")->required();
    traj->add_option("--q", *q, "branch weight")->capture_default_str();
    traj->add_option("--samples", *samples, "points emitted")->capture_default_str();
    traj->add_option("--out", *out, "output CSV path")->required();
    traj->callback([&, fix, level, q, samples, out] {
      exit_code = run_qubit_trajectory(ctx, *fix, *level, *q, *samples, *out);
    });
  }
  {
    auto* verify = qubit_cmd->add_subcommand("verify", "identity residuals + separability fuzz");
    auto samples = std::make_shared<int>(1000);
    auto id_samples = std::make_shared<int>(200);
    auto as_json = std::make_shared<bool>(false);
    verify->add_option("--seed", ctx.seed, "RNG seed")->capture_default_str();
    verify->add_option("--samples", *samples, "fuzz sample count")->capture_default_str();
    verify->add_option("--identity-samples", *id_samples, "identity-suite sample count")
        ->capture_default_str();
    verify->add_flag("--json", *as_json, "emit JSON report");
    verify->callback([&, samples, id_samples, as_json] {
      exit_code = run_qubit_verify(ctx, *samples, *id_samples, *as_json);
    });
  }
  {
    auto* structure = qubit_cmd->add_subcommand("structure", "classify one family member");
    auto q = std::make_shared<double>(0.5);
    auto alpha = std::make_shared<double>();
    auto beta = std::make_shared<double>();
    auto deg = std::make_shared<bool>(false);
    auto as_json = std::make_shared<bool>(false);
    structure->add_option("--q", *q, "branch weight")->capture_default_str();
    structure->add_option("--alpha", *alpha, "A-side angle")->required();
    structure->add_option("--beta", *beta, "B-side angle")->required();
    structure->add_flag("--deg", *deg, "angles are degrees");
    structure->add_flag("--json", *as_json, "emit JSON report");
    structure->callback([&, q, alpha, beta, deg, as_json] {
      exit_code = run_qubit_structure(*q, *alpha, *beta, *deg, *as_json);
    });
  }

  // ---- gauss ----
  auto* gauss_cmd = app.add_subcommand("gauss", "pure three-mode Gaussian tools");
  gauss_cmd->require_subcommand(1);

  {
    auto* sf = gauss_cmd->add_subcommand("standard-form", "covariance matrix of a triple");
    auto nu = std::make_shared<std::vector<double>>();
    auto as_json = std::make_shared<bool>(false);
    sf->add_option("--nu", *nu, "local symplectic eigenvalues nu_a,nu_b,nu_c")
        ->required()
        ->delimiter(',')
        ->expected(3);
    sf->add_flag("--json", *as_json, "emit JSON report");
    sf->callback([&, nu, as_json] { exit_code = run_gauss_standard_form(*nu, *as_json); });
  }
  {
    auto* verify = gauss_cmd->add_subcommand("verify", "residual + equivalence fuzz");
    auto samples = std::make_shared<int>(1000);
    auto as_json = std::make_shared<bool>(false);
    verify->add_option("--seed", ctx.seed, "RNG seed")->capture_default_str();
    verify->add_option("--samples", *samples, "sample count")->capture_default_str();
    verify->add_flag("--json", *as_json, "emit JSON report");
    verify->callback([&, samples, as_json] {
      exit_code = run_gauss_verify(ctx, *samples, *as_json);
    });
  }

  // ---- demos ----
  {
    auto* act = app.add_subcommand("activate", "filtering demo: discord from none");
    auto as_json = std::make_shared<bool>(false);
    act->add_flag("--json", *as_json, "emit JSON report");
    act->callback([&, as_json] { exit_code = run_activate(*as_json); });
  }
  {
    auto* non = app.add_subcommand("nonconverse",
                                   "purification entanglement without correlations");
    auto p_a = std::make_shared<double>(0.5);
    auto p_b = std::make_shared<double>(0.5);
    auto as_json = std::make_shared<bool>(false);
    non->add_option("--p-a", *p_a, "weight of |0> in rho_A")->capture_default_str();
    non->add_option("--p-b", *p_b, "weight of |0> in rho_B")->capture_default_str();
    non->add_flag("--json", *as_json, "emit JSON report");
    non->callback([&, p_a, p_b, as_json] {
      exit_code = run_nonconverse(*p_a, *p_b, *as_json);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the usage error
    return code == 0 ? 0 : 1;
  } catch (const qubit::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace atlas::cli
