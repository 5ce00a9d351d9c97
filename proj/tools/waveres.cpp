// waveres: modal wave-resonance analysis toolbox.
//
// Subcommands emit CSV data files (figure1..figure4, amplification, infsup,
// fourier-kernel, solve, energy) or run the verification suites (verify).
// Exit codes: 0 success, 1 verification failure, 2 invalid arguments,
// 3 I/O error.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "waveres/closed_form.hpp"
#include "waveres/core.hpp"
#include "waveres/csv.hpp"
#include "waveres/energy.hpp"
#include "waveres/figures.hpp"
#include "waveres/fourier.hpp"
#include "waveres/norms.hpp"
#include "waveres/verify.hpp"

namespace {

using namespace waveres;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitIoError = 3;

struct CommonParams {
  double sqrt_mu = 2.0 * std::acos(-1.0);
  double lambda = 0.0;  // alternative to sqrt_mu
  double c = 1.0;
  double T = 1.0;
  std::size_t grid_n = 4096;
  std::string out;
};

ModeParams make_params(const CommonParams& p) {
  if (p.lambda > 0.0) return ModeParams(p.lambda, p.c, p.T);
  return ModeParams::from_omega_res(p.sqrt_mu, p.T, p.c);
}

void add_common(CLI::App* cmd, CommonParams& p, bool with_grid = true) {
  cmd->add_option("--sqrt-mu", p.sqrt_mu, "resonance frequency sqrt(mu)");
  cmd->add_option("--lambda", p.lambda, "spatial eigenvalue (overrides --sqrt-mu)");
  cmd->add_option("--c", p.c, "wave speed")->check(CLI::PositiveNumber);
  cmd->add_option("--T", p.T, "time horizon")->check(CLI::PositiveNumber);
  if (with_grid)
    cmd->add_option("--grid-n", p.grid_n, "time grid intervals (even)");
}

int run_verify(const std::string& suite) {
  const auto suites = verify::run_suite(suite);
  if (suites.empty()) {
    std::fprintf(stderr, "unknown suite '%s'\n", suite.c_str());
    return kExitBadArgs;
  }
  if (suite == "infsup") {
    const csv::Table table = figures::infsup_table(1, 50, 1.0);
    std::printf("%4s %12s %14s %14s\n", "k", "sqrt_mu", "C_resonant",
                "infsup_ratio");
    for (const auto& row : table.rows)
      std::printf("%4.0f %12.6f %14.6f %14.8f\n", row[0], row[1], row[2],
                  row[3]);
    std::printf("\n");
  }
  int failed = 0, total = 0;
  for (const auto& s : suites) {
    std::printf("== %s ==\n", s.name.c_str());
    for (const auto& c : s.checks) {
      ++total;
      if (!c.pass) ++failed;
      std::printf("[%s] %-44s measured = %-14.6g %s %-12.6g\n",
                  c.pass ? "PASS" : "FAIL", c.name.c_str(), c.measured,
                  c.relation == "in" ? "in +-" : c.relation.c_str(), c.limit);
      if (!c.detail.empty()) std::printf("       %s\n", c.detail.c_str());
    }
  }
  std::printf("%d/%d checks passed\n", total - failed, total);
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modal analysis of wave-equation resonance: closed forms, "
               "resonance-aware norms, verification oracles"};
  app.require_subcommand(1);

  // figure1
  CommonParams f1;
  f1.grid_n = 1024;
  std::vector<double> ratios{0.8, 0.95, 1.0, 1.05, 1.2};
  auto* cmd_f1 = app.add_subcommand(
      "figure1", "source and solution across the resonance (CSV)");
  add_common(cmd_f1, f1);
  cmd_f1->add_option("--ratios", ratios, "omega / sqrt(mu) ratios");
  cmd_f1->add_option("--out", f1.out, "output CSV path")->required();

  // figure2
  std::size_t f2_kmin = 1, f2_kmax = 15, f2_steps = 400;
  double f2_T = 1.0, f2_omin = 0.1, f2_omax = 0.0;
  std::string f2_out;
  auto* cmd_f2 = app.add_subcommand(
      "figure2", "amplification sweep 1 + C_k(omega), sqrt(mu_k) = 2 pi k (CSV)");
  cmd_f2->add_option("--k-min", f2_kmin);
  cmd_f2->add_option("--k-max", f2_kmax);
  cmd_f2->add_option("--T", f2_T)->check(CLI::PositiveNumber);
  cmd_f2->add_option("--omega-min", f2_omin);
  cmd_f2->add_option("--omega-max", f2_omax, "default 1.5 * 2 pi k-max");
  cmd_f2->add_option("--omega-steps", f2_steps);
  cmd_f2->add_option("--out", f2_out, "output CSV path")->required();

  // figure3
  std::size_t f3_k = 50, f3_steps = 600;
  double f3_T = 1.0, f3_omin = 0.1, f3_omax = 0.0;
  std::string f3_out;
  auto* cmd_f3 = app.add_subcommand(
      "figure3", "trial norm of u_omega vs data-norm candidates, k = 50 (CSV)");
  cmd_f3->add_option("--k", f3_k);
  cmd_f3->add_option("--T", f3_T)->check(CLI::PositiveNumber);
  cmd_f3->add_option("--omega-min", f3_omin);
  cmd_f3->add_option("--omega-max", f3_omax, "default 1.5 * 2 pi k");
  cmd_f3->add_option("--omega-steps", f3_steps);
  cmd_f3->add_option("--out", f3_out, "output CSV path")->required();

  // figure4
  CommonParams f4;
  f4.sqrt_mu = 200.0;
  std::size_t f4_J = 64;
  auto* cmd_f4 = app.add_subcommand(
      "figure4", "|W(omega_j, omega_l)| kernel matrix (CSV)");
  add_common(cmd_f4, f4, false);
  cmd_f4->add_option("--J", f4_J, "truncation size")->check(CLI::PositiveNumber);
  cmd_f4->add_option("--out", f4.out, "output CSV path")->required();

  // amplification
  CommonParams amp;
  std::size_t amp_steps = 400;
  double amp_omin = 0.1, amp_omax = 0.0;
  auto* cmd_amp = app.add_subcommand(
      "amplification", "C(omega) sweep for one mode (CSV)");
  add_common(cmd_amp, amp, false);
  cmd_amp->add_option("--omega-min", amp_omin);
  cmd_amp->add_option("--omega-max", amp_omax, "default 1.5 sqrt(mu)");
  cmd_amp->add_option("--omega-steps", amp_steps);
  cmd_amp->add_option("--out", amp.out, "output CSV path")->required();

  // infsup
  std::size_t is_kmin = 1, is_kmax = 50;
  double is_T = 1.0;
  std::string is_out;
  auto* cmd_is = app.add_subcommand(
      "infsup", "modal inf-sup ratios for sqrt(mu_k) = 2 pi k (CSV or table)");
  cmd_is->add_option("--k-min", is_kmin);
  cmd_is->add_option("--k-max", is_kmax);
  cmd_is->add_option("--T", is_T)->check(CLI::PositiveNumber);
  cmd_is->add_option("--out", is_out, "output CSV path (default: stdout table)");

  // fourier-kernel
  CommonParams fk;
  fk.sqrt_mu = 200.0;
  std::size_t fk_J = 16;
  auto* cmd_fk = app.add_subcommand(
      "fourier-kernel", "signed kernel matrix W(omega_j, omega_l) (CSV)");
  add_common(cmd_fk, fk, false);
  cmd_fk->add_option("--J", fk_J)->check(CLI::PositiveNumber);
  cmd_fk->add_option("--out", fk.out, "output CSV path")->required();

  // energy
  CommonParams en;
  en.grid_n = 8192;
  double en_omega = 0.0;
  auto* cmd_en = app.add_subcommand(
      "energy", "norms and energy-balance report for a cosine source");
  add_common(cmd_en, en);
  cmd_en->add_option("--omega", en_omega, "forcing frequency (default: resonance)");
  cmd_en->add_option("--out", en.out, "optional CSV of t, u, u', fc, fs, residual");

  // solve
  CommonParams so;
  so.grid_n = 8192;
  std::string so_eq = "wave";
  double so_omega = 0.0, so_rho = 1.0;
  auto* cmd_so = app.add_subcommand(
      "solve", "solve one mode IVP for a cosine source, write the trajectory");
  add_common(cmd_so, so);
  cmd_so->add_option("--equation", so_eq, "wave | heat | schrodinger | damped")
      ->check(CLI::IsMember({"wave", "heat", "schrodinger", "damped"}));
  cmd_so->add_option("--omega", so_omega, "forcing frequency (default: resonance)");
  cmd_so->add_option("--rho", so_rho, "damping coefficient (damped only)");
  cmd_so->add_option("--out", so.out, "output CSV path")->required();

  // verify
  std::string suite = "all";
  auto* cmd_ver = app.add_subcommand("verify", "run verification suites");
  cmd_ver->add_option("--suite", suite,
                      "all | closed-form | balances | fourier | heat | "
                      "infsup | spectral");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitBadArgs;
  }

  try {
    const double pi = std::acos(-1.0);
    if (cmd_f1->parsed()) {
      csv::write_file(f1.out,
                      figures::figure1(make_params(f1), ratios, f1.grid_n));
    } else if (cmd_f2->parsed()) {
      if (f2_omax <= 0.0)
        f2_omax = 1.5 * 2.0 * pi * static_cast<double>(f2_kmax);
      csv::write_file(f2_out, figures::figure2(f2_kmin, f2_kmax, f2_T,
                                               f2_omin, f2_omax, f2_steps));
    } else if (cmd_f3->parsed()) {
      if (f3_omax <= 0.0)
        f3_omax = 1.5 * 2.0 * pi * static_cast<double>(f3_k);
      csv::write_file(f3_out,
                      figures::figure3(f3_k, f3_T, f3_omin, f3_omax, f3_steps));
    } else if (cmd_f4->parsed()) {
      csv::write_file(f4.out, figures::figure4(make_params(f4), f4_J, true));
    } else if (cmd_amp->parsed()) {
      const ModeParams params = make_params(amp);
      if (amp_omax <= 0.0) amp_omax = 1.5 * params.omega_res();
      csv::write_file(amp.out, figures::amplification_table(
                                   params, amp_omin, amp_omax, amp_steps));
    } else if (cmd_is->parsed()) {
      const csv::Table table = figures::infsup_table(is_kmin, is_kmax, is_T);
      if (is_out.empty()) {
        std::printf("%4s %12s %14s %14s\n", "k", "sqrt_mu", "C_resonant",
                    "infsup_ratio");
        for (const auto& row : table.rows)
          std::printf("%4.0f %12.6f %14.6f %14.8f\n", row[0], row[1], row[2],
                      row[3]);
      } else {
        csv::write_file(is_out, table);
      }
    } else if (cmd_fk->parsed()) {
      csv::write_file(fk.out, figures::figure4(make_params(fk), fk_J, false));
    } else if (cmd_en->parsed()) {
      const ModeParams params = make_params(en);
      const double omega = en_omega > 0.0 ? en_omega : params.omega_res();
      const TimeGrid grid(params.horizon(), en.grid_n);
      const auto [u, up] =
          closed_form::solve_wave_cosine(params, omega).on_grid(grid);
      const Forcing forcing = Cosine{omega};
      const auto pair = energy::transforms(forcing, params.omega_res(), grid);
      const auto balance =
          energy::wave_balance_residual(params, u, up, pair);
      NormReport report;
      report.trial_norm_sq = norms::trial_norm_sq(params, u, forcing);
      report.l2l2_norm_sq = norms::l2l2_norm_sq(sample(forcing, grid));
      report.data_norm_sq = report.l2l2_norm_sq / params.lambda();
      report.energy_data_norm_sq =
          energy::resonance_aware_data_norm_sq(params, forcing, grid);
      report.amplification = norms::amplification_constant(params, omega);
      report.infsup_ratio = norms::infsup_ratio(params);
      std::printf("sqrt_mu           = %.10g\n", params.omega_res());
      std::printf("omega             = %.10g\n", omega);
      std::printf("trial_norm_sq     = %.10g\n", report.trial_norm_sq);
      std::printf("data_norm_sq      = %.10g\n", report.data_norm_sq);
      std::printf("l2l2_norm_sq      = %.10g\n", report.l2l2_norm_sq);
      std::printf("energy_data_sq    = %.10g\n", report.energy_data_norm_sq);
      std::printf("amplification C   = %.10g\n", report.amplification);
      std::printf("trial/(1+C)/data  = %.10g\n",
                  report.trial_norm_sq /
                      ((1.0 + report.amplification) * report.data_norm_sq));
      std::printf("infsup_ratio      = %.10g\n", report.infsup_ratio);
      std::printf("balance residual  = %.3e (relative %.3e)\n",
                  balance.max_abs_residual, balance.max_rel_residual);
      if (!en.out.empty()) {
        csv::Table table;
        table.headers = {"t", "u", "uprime", "fc", "fs", "residual"};
        for (std::size_t i = 0; i < grid.size(); ++i) {
          const double lhs = params.lambda() * u[i] * u[i] +
                             up[i] * up[i] / (params.c() * params.c());
          const double rhs = params.c() * params.c() *
                             (pair.fc[i] * pair.fc[i] + pair.fs[i] * pair.fs[i]);
          table.rows.push_back(
              {grid.node(i), u[i], up[i], pair.fc[i], pair.fs[i], lhs - rhs});
        }
        csv::write_file(en.out, table);
      }
    } else if (cmd_so->parsed()) {
      const TimeGrid grid(so.T, so.grid_n);
      csv::Table table;
      if (so_eq == "wave") {
        const ModeParams params = make_params(so);
        const double omega = so_omega > 0.0 ? so_omega : params.omega_res();
        const auto [u, up] =
            closed_form::solve_wave_cosine(params, omega).on_grid(grid);
        table.headers = {"t", "u", "uprime"};
        for (std::size_t i = 0; i < grid.size(); ++i)
          table.rows.push_back({grid.node(i), u[i], up[i]});
      } else if (so_eq == "heat") {
        const double lambda =
            so.lambda > 0.0 ? so.lambda : so.sqrt_mu * so.sqrt_mu;
        const double omega = so_omega > 0.0 ? so_omega : 1.0;
        const Signal u = closed_form::solve_heat(lambda, Cosine{omega}, grid);
        table.headers = {"t", "u"};
        for (std::size_t i = 0; i < grid.size(); ++i)
          table.rows.push_back({grid.node(i), u[i]});
      } else if (so_eq == "schrodinger") {
        const double lambda =
            so.lambda > 0.0 ? so.lambda : so.sqrt_mu * so.sqrt_mu;
        const double omega = so_omega > 0.0 ? so_omega : lambda;
        const ComplexSignal u =
            closed_form::solve_schrodinger(lambda, Cosine{omega}, grid);
        table.headers = {"t", "re_u", "im_u"};
        for (std::size_t i = 0; i < grid.size(); ++i)
          table.rows.push_back({grid.node(i), u[i].real(), u[i].imag()});
      } else {  // damped
        const double lambda =
            so.lambda > 0.0 ? so.lambda : so.sqrt_mu * so.sqrt_mu;
        const double omega = so_omega > 0.0 ? so_omega : std::sqrt(lambda);
        const auto [u, up] =
            closed_form::solve_damped(lambda, so_rho, Cosine{omega}, grid);
        table.headers = {"t", "u", "uprime"};
        for (std::size_t i = 0; i < grid.size(); ++i)
          table.rows.push_back({grid.node(i), u[i], up[i]});
      }
      csv::write_file(so.out, table);
    } else if (cmd_ver->parsed()) {
      return run_verify(suite);
    }
  } catch (const std::runtime_error& e) {
    std::fprintf(stderr, "I/O error: %s\n", e.what());
    return kExitIoError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitBadArgs;
  }
  return kExitOk;
}
