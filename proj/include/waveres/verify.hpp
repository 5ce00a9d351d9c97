// Verification suites: every quantitative acceptance check in one place,
// with its tolerance pinned next to it.  The CLI `verify` subcommand and
// the acceptance test binary both run these.
//
// Checks are grouped into suites:
//   closed-form   closed forms against the RK4 oracles
//   balances      energy balances (wave, initial values, damped, Schrodinger)
//                 and the energy-balance norm equivalence
//   fourier       cosine-basis kernel: quadratic form, diagonal identity,
//                 dominance audit
//   heat          heat-mode balance and critical estimate
//   infsup        amplification constant features and inf-sup decay
//   spectral      interval eigenfunction assembly
//   all           everything above
//
// Randomized draws use a fixed seed and a bit-exact uniform generator so
// every run checks the identical configurations.

#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "waveres/closed_form.hpp"
#include "waveres/core.hpp"
#include "waveres/energy.hpp"
#include "waveres/figures.hpp"
#include "waveres/fourier.hpp"
#include "waveres/norms.hpp"
#include "waveres/ode.hpp"
#include "waveres/quadrature.hpp"
#include "waveres/spectral.hpp"

namespace waveres {
namespace verify {

struct Check {
  std::string name;
  double measured = 0.0;
  double limit = 0.0;
  /// "<=", ">=", or "in" (measured must lie in [limit_lo, limit]).
  std::string relation = "<=";
  double limit_lo = 0.0;
  bool pass = false;
  std::string detail;
};

inline Check check_le(std::string name, double measured, double limit,
                      std::string detail = "") {
  return Check{std::move(name), measured, limit, "<=", 0.0,
               measured <= limit, std::move(detail)};
}

inline Check check_ge(std::string name, double measured, double limit,
                      std::string detail = "") {
  return Check{std::move(name), measured, limit, ">=", 0.0,
               measured >= limit, std::move(detail)};
}

inline Check check_in(std::string name, double measured, double lo, double hi,
                      std::string detail = "") {
  return Check{std::move(name), measured, hi, "in", lo,
               measured >= lo && measured <= hi, std::move(detail)};
}

/// Bit-exact uniform draws independent of the standard library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(eng_() >> 11) * 0x1p-53);
  }
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }
  std::uint64_t bits() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

namespace detail_verify {

inline double sup_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

/// Random band-limited forcing: `terms` cosine-basis frequencies of (0, T)
/// with coefficients in [-1, 1] \ (-0.2, 0.2).
inline CosineCombo random_combo(Rng& rng, double T, std::size_t max_j,
                                std::size_t terms) {
  const std::vector<double> freqs = fourier::basis_frequencies(T, max_j);
  CosineCombo combo;
  for (std::size_t i = 0; i < terms; ++i) {
    const std::size_t j = static_cast<std::size_t>(rng.bits() % max_j);
    const double mag = rng.uniform(0.2, 1.0);
    combo.terms.push_back({freqs[j], rng.uniform(0.0, 1.0) < 0.5 ? mag : -mag});
  }
  return combo;
}

}  // namespace detail_verify

// ---- criterion 1: closed form vs RK4 oracle -------------------------------

inline std::vector<Check> criterion_closed_form_vs_oracle() {
  Rng rng(0x5eed0001);
  const double T = 1.0, c = 1.0;
  const TimeGrid grid(T, 1 << 16);
  double worst = 0.0;
  const auto t0 = std::chrono::steady_clock::now();
  for (int draw = 0; draw < 20; ++draw) {
    const double a = rng.uniform(1.0, 300.0);
    const double w = rng.uniform(0.1, 400.0);
    const ModeParams params = ModeParams::from_omega_res(a, T, c);
    const auto sol = closed_form::solve_wave_cosine(params, w);
    const auto oracle =
        ode::integrate_second_order_ivp(params, Cosine{w}, grid);
    double sup_u = 0.0, sup_diff = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double ue = sol.u(grid.node(i));
      sup_u = std::max(sup_u, std::abs(ue));
      sup_diff = std::max(sup_diff, std::abs(ue - oracle.first[i]));
    }
    worst = std::max(worst, sup_diff / sup_u);
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return {check_le("closed_form_vs_rk4_sup_error_rel", worst, 1e-6,
                   "20 draws, sqrt_mu in [1,300], omega in [0.1,400]"),
          check_le("closed_form_vs_rk4_runtime_seconds", secs, 10.0)};
}

// ---- criterion 2: amplification identity ----------------------------------

inline std::vector<Check> criterion_amplification_identity() {
  Rng rng(0x5eed0001);  // the same draw sequence as the oracle criterion
  const double T = 1.0, c = 1.0;
  const TimeGrid grid(T, 1 << 16);
  double worst = 0.0;
  auto one_draw = [&](double a, double w) {
    const ModeParams params = ModeParams::from_omega_res(a, T, c);
    const auto [u, up] = closed_form::solve_wave_cosine(params, w).on_grid(grid);
    const double trial = norms::trial_norm_sq(params, u, Cosine{w});
    const double data = norms::data_norm_sq(params, sample(Cosine{w}, grid));
    const double C = norms::amplification_constant(params, w);
    worst = std::max(worst, std::abs(trial / ((1.0 + C) * data) - 1.0));
  };
  for (int draw = 0; draw < 20; ++draw)
    one_draw(rng.uniform(1.0, 300.0), rng.uniform(0.1, 400.0));
  // one draw pinned inside the resonant window
  const double a_pin = 2.0 * std::acos(-1.0);
  one_draw(a_pin, a_pin * (1.0 + 0.5 * closed_form::kResonantWindow));
  return {check_le("amplification_identity_rel_error", worst, 1e-6,
                   "trial = (1+C) data on 20 draws plus one in-window draw")};
}

// ---- criterion 3: pinned resonant value ------------------------------------

inline std::vector<Check> criterion_resonant_pinned_value() {
  const double pi = std::acos(-1.0);
  const ModeParams params = ModeParams::from_omega_res(2.0 * pi, 1.0, 1.0);
  const double C = norms::amplification_constant(params, 2.0 * pi);
  const double expected = 2.0 * pi * pi / 3.0 - 0.25;
  const double rel = std::abs(C - expected) / expected;
  // Quadrature cross-check of the measured constant, reported alongside.
  const TimeGrid grid(1.0, 1 << 14);
  const auto [u, up] =
      closed_form::solve_wave_cosine(params, 2.0 * pi).on_grid(grid);
  const double quad =
      norms::trial_norm_sq(params, u, Cosine{2.0 * pi}) /
          norms::data_norm_sq(params, sample(Cosine{2.0 * pi}, grid)) -
      1.0;
  return {check_le(
      "resonant_value_matches_pinned_reference", rel, 1e-8,
      "reference 2*pi^2/3 - 1/4 = " + csv::format_value(expected) +
          "; measured C = " + csv::format_value(C) +
          "; independent quadrature gives " + csv::format_value(quad) +
          " (the identity-backed value is 2*pi^2/3 + 1/4)")};
}

// ---- criterion 4: amplification sweep features -----------------------------

inline std::vector<Check> criterion_amplification_sweep() {
  const double pi = std::acos(-1.0);
  const double T = 1.0;
  const std::size_t steps = 400;
  const double omega_max = 1.5 * 2.0 * pi * 15.0;
  const std::vector<double> omegas = figures::linspace(0.1, omega_max, steps);
  const double step = omegas[1] - omegas[0];
  double worst_argmax = 0.0, worst_peak = 0.0;
  std::string offsets;
  std::vector<double> asym_dev(16, 0.0);
  for (std::size_t k = 1; k <= 15; ++k) {
    const double a = 2.0 * pi * static_cast<double>(k);
    const ModeParams params = ModeParams::from_omega_res(a, T);
    const auto curve = norms::amplification_curve(params, omegas);
    const double at_max = omegas[curve.argmax()];
    const double off = std::abs(at_max - a) / step;
    worst_argmax = std::max(worst_argmax, off);
    if (k == 1 || k == 5 || k == 10 || k == 15)
      offsets += " k" + std::to_string(k) + "=" +
                 figures::short_number(at_max - a);
    const double peak = curve.one_plus_C[curve.argmax()];
    const double mu = a * a;
    if (k >= 5)
      worst_peak =
          std::max(worst_peak, std::abs(peak / (mu / 6.0 + 0.75) - 1.0));
    asym_dev[k] = std::abs(peak / (mu * T * T / 6.0) - 1.0);
  }
  // the growth claim is asymptotic: deviation from (T sqrt(mu))^2/6 must
  // shrink along k and be small at the top of the range
  const bool asym_ok = asym_dev[15] < asym_dev[5] && asym_dev[15] <= 0.01;
  return {
      check_le("sweep_argmax_offset_steps", worst_argmax, 1.0,
               "argmax of 1+C vs 2 pi k, k = 1..15; true peaks sit below "
               "resonance at small k (offsets:" + offsets + ")"),
      check_le("sweep_peak_vs_mu_over_6_plus_3_4", worst_peak, 0.02,
               "peak vs mu/6 + 3/4 for k >= 5; measured 2.71% at k = 5, "
               "within 2% only for k >= 6"),
      check_ge("sweep_peak_asymptotic_growth", asym_ok ? 1.0 : 0.0, 1.0,
               "peak/(T sqrt(mu))^2/6 -> 1: deviation " +
                   figures::short_number(asym_dev[5]) + " at k=5 down to " +
                   figures::short_number(asym_dev[15]) + " at k=15")};
}

// ---- criterion 5: inf-sup decay ---------------------------------------------

inline std::vector<Check> criterion_infsup_decay() {
  const double pi = std::acos(-1.0);
  bool decreasing = true;
  double max_from_4 = 0.0, prev = 0.0;
  for (std::size_t k = 1; k <= 50; ++k) {
    const ModeParams params =
        ModeParams::from_omega_res(2.0 * pi * static_cast<double>(k), 1.0);
    const double r = norms::infsup_ratio(params);
    if (k > 1 && r >= prev) decreasing = false;
    if (k >= 4) max_from_4 = std::max(max_from_4, r);
    prev = r;
  }
  return {check_ge("infsup_strictly_decreasing", decreasing ? 1.0 : 0.0, 1.0,
                   "ratios for k = 1..50"),
          check_le("infsup_below_0.1_from_k4", max_from_4, 0.1)};
}

// ---- criterion 6: wave energy balance ---------------------------------------

inline std::vector<Check> criterion_wave_balance() {
  Rng rng(0x5eed0006);
  const double T = 1.0, c = 1.0;
  const TimeGrid grid(T, 1 << 16);
  double worst = 0.0;
  for (int draw = 0; draw < 10; ++draw) {
    const double a = rng.uniform(2.0, 60.0);
    const ModeParams params = ModeParams::from_omega_res(a, T, c);
    const CosineCombo combo = detail_verify::random_combo(rng, T, 12, 6);
    const auto [u, up] = closed_form::solve_wave_combo(params, combo, grid);
    const auto pair = energy::transforms(combo, a, grid);
    worst = std::max(
        worst,
        energy::wave_balance_residual(params, u, up, pair).max_rel_residual);
  }
  // analytic resonant case
  const double a = 2.0 * std::acos(-1.0);
  const ModeParams params = ModeParams::from_omega_res(a, T, c);
  const auto [u, up] = closed_form::solve_wave_cosine(params, a).on_grid(grid);
  const auto pair = energy::transforms(Cosine{a}, a, grid);
  const double res_cos =
      energy::wave_balance_residual(params, u, up, pair).max_rel_residual;
  // rotation orthogonality: sin^2 + cos^2 - 1 over the grid
  double rot = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double s = std::sin(a * grid.node(i)), co = std::cos(a * grid.node(i));
    rot = std::max(rot, std::abs(s * s + co * co - 1.0));
  }
  return {check_le("wave_balance_rel_residual_random", worst, 1e-8,
                   "10 random band-limited forcings"),
          check_le("wave_balance_rel_residual_resonant", res_cos, 1e-8),
          check_le("rotation_orthogonality", rot, 1e-15)};
}

// ---- criterion 7: energy-balance norm equivalence ---------------------------

inline std::vector<Check> criterion_norm_equivalence() {
  Rng rng(0x5eed0007);
  const double T = 1.0, c = 1.0;
  const TimeGrid grid(T, 1 << 16);
  double lo = 1e300, hi = 0.0;
  for (int p = 0; p <= 6; ++p) {
    const double lambda = std::pow(10.0, p);
    const ModeParams params(lambda, c, T);
    for (int draw = 0; draw < 3; ++draw) {
      const CosineCombo combo = detail_verify::random_combo(rng, T, 12, 6);
      const auto [u, up] = closed_form::solve_wave_combo(params, combo, grid);
      const double lhs = norms::trial_norm_sq(params, u, combo) +
                         quadrature::l2_norm_sq(up) / (c * c);
      const double rhs =
          energy::resonance_aware_data_norm_sq(params, combo, grid);
      const double ratio = lhs / rhs;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
  }
  return {check_in("norm_equivalence_ratio_range_low", lo, 1.0 / 3.0, 3.0,
                   "lambda = 10^0 .. 10^6, 3 random forcings each"),
          check_in("norm_equivalence_ratio_range_high", hi, 1.0 / 3.0, 3.0)};
}

// ---- criterion 8: Fourier quadratic form ------------------------------------

inline std::vector<Check> criterion_fourier_form() {
  Rng rng(0x5eed0008);
  const double T = 1.0, c = 1.0;
  const ModeParams params = ModeParams::from_omega_res(200.0, T, c);
  // quadratic form vs independently computed trial norm, J = 8
  const std::size_t J = 8;
  const fourier::FourierBlock block = fourier::build_block(params, J);
  std::vector<double> coeffs(J);
  for (auto& x : coeffs) x = rng.uniform(-1.0, 1.0);
  CosineCombo combo;
  for (std::size_t j = 0; j < J; ++j)
    combo.terms.push_back({block.frequencies[j], coeffs[j]});
  const TimeGrid grid(T, 1 << 15);
  const auto [u, up] = closed_form::solve_wave_combo(params, combo, grid);
  const double trial = norms::trial_norm_sq(params, u, combo);
  const double form = fourier::quadratic_form_eval(block, coeffs);
  const double rel_form = std::abs(form / trial - 1.0);
  // diagonal identity over J = 64
  const fourier::FourierBlock big = fourier::build_block(params, 64);
  double worst_diag = 0.0;
  for (std::size_t j = 0; j < 64; ++j) {
    const double id =
        (1.0 + norms::amplification_constant(params, big.frequencies[j])) *
        0.5 * T / params.lambda();
    worst_diag = std::max(worst_diag, std::abs(big.at(j, j) / id - 1.0));
  }
  const auto audit = fourier::diagonal_dominance_audit(big);
  return {check_le("fourier_form_vs_trial_norm_rel", rel_form, 1e-6,
                   "J = 8 random band-limited coefficients"),
          check_le("fourier_diagonal_identity_rel", worst_diag, 1e-10),
          check_ge("fourier_dominance_violations",
                   static_cast<double>(audit.violating_rows.size()), 1.0,
                   "sqrt_mu = 200, T = 1, J = 64; worst row ratio = " +
                       csv::format_value(audit.worst_ratio))};
}

// ---- criterion 9: heat appendix ---------------------------------------------

inline std::vector<Check> criterion_heat() {
  const double T = 1.0;
  const TimeGrid grid(T, 1 << 14);
  std::vector<double> ones(grid.size(), 1.0);
  const Forcing unit = Sampled{Signal(grid, std::move(ones))};
  const auto est = energy::heat_transform_and_estimates(1.0, unit, grid);
  // analytic decomposition for lambda = 1, f = 1
  const double e1 = std::exp(-1.0), e2 = std::exp(-2.0);
  const double usq_exact = 1.0 - 2.0 * (1.0 - e1) + 0.5 * (1.0 - e2);
  const double upsq_exact = 0.5 * (1.0 - e2);
  const double uT_exact = (1.0 - e1) * (1.0 - e1);
  const double usq = quadrature::l2_norm_sq(est.u);
  std::vector<double> up(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    up[i] = 1.0 - est.u.values[i];
  const double upsq = quadrature::l2_norm_sq(Signal(grid, std::move(up)));
  const double uT = est.u.values.back() * est.u.values.back();
  double decomposition_err = std::max(
      {std::abs(usq / usq_exact - 1.0), std::abs(upsq / upsq_exact - 1.0),
       std::abs(uT / uT_exact - 1.0)});

  // critical estimate on randomized draws
  Rng rng(0x5eed0009);
  const TimeGrid fine(T, 1 << 16);
  double worst_gap = -1e300;
  for (int draw = 0; draw < 20; ++draw) {
    const double lambda = rng.log_uniform(1.0, 1e4);
    const CosineCombo combo = detail_verify::random_combo(rng, T, 12, 6);
    const auto e = energy::heat_transform_and_estimates(lambda, combo, fine);
    worst_gap = std::max(worst_gap, e.lhs / e.rhs - 1.0);
  }
  return {check_le("heat_corrected_balance_rel_residual",
                   est.exact_balance_residual, 1e-8,
                   "||u'||^2 + lambda^2 ||u||^2 + lambda u(T)^2 = ||f||^2"),
          check_le("heat_decomposition_rel_error", decomposition_err, 1e-6,
                   "0.43233 + 0.16809 + 0.39958 = 1 at lambda = 1, f = 1"),
          check_le("heat_critical_estimate_case_lambda1", est.lhs, est.rhs,
                   "lhs / rhs = " + csv::format_value(est.lhs) + " / " +
                       csv::format_value(est.rhs) + " at lambda = 1, f = 1"),
          check_le("heat_critical_estimate_gap", worst_gap, 0.0,
                   "lhs <= rhs on 20 draws, lambda in [1, 1e4]")};
}

// ---- criterion 10: Schrodinger and damped balances --------------------------

inline std::vector<Check> criterion_schrodinger_damped() {
  Rng rng(0x5eed000a);
  const double T = 1.0;
  double worst_schro = 0.0;
  for (double lambda : {1.0, 10.0, 100.0}) {
    const TimeGrid grid(T, 1 << 17);
    // random complex band-limited source
    const CosineCombo re = detail_verify::random_combo(rng, T, 10, 4);
    const CosineCombo im = detail_verify::random_combo(rng, T, 10, 4);
    std::vector<Complex> fv(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
      fv[i] = Complex(evaluate_forcing(re, grid.node(i)),
                      evaluate_forcing(im, grid.node(i)));
    const Forcing f = ComplexSampled{ComplexSignal(grid, std::move(fv))};
    const ComplexSignal u = ode::integrate_schrodinger_ivp(lambda, f, grid);
    worst_schro = std::max(
        worst_schro,
        energy::schrodinger_balance_residual(lambda, u, f, grid)
            .max_rel_residual);
  }
  // resonant modulus |u(t)| = t for f = e^{i lambda t}
  const double lambda_res = 4.0;
  const TimeGrid grid(T, 1 << 12);
  std::vector<Complex> fv(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid.node(i);
    fv[i] = Complex(std::cos(lambda_res * t), std::sin(lambda_res * t));
  }
  const ComplexSignal u = closed_form::solve_schrodinger(
      lambda_res, ComplexSampled{ComplexSignal(grid, std::move(fv))}, grid);
  double worst_mod = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i)
    worst_mod =
        std::max(worst_mod, std::abs(std::abs(u[i]) - grid.node(i)));

  // damped balance with the shifted velocity
  const double rho = 2.0, lam = 5.0;
  const TimeGrid dgrid(T, 1 << 13);
  std::vector<double> ones(dgrid.size(), 1.0);
  const Forcing unit = Sampled{Signal(dgrid, std::move(ones))};
  const auto [du, dup] = ode::integrate_damped_ivp(lam, rho, unit, dgrid);
  const double worst_damped =
      energy::damped_balance_residual(lam, rho, du, dup, unit, dgrid)
          .max_rel_residual;
  return {check_le("schrodinger_balance_rel_residual", worst_schro, 1e-8,
                   "lambda in {1, 10, 100}, RK4 state vs transforms"),
          check_le("schrodinger_resonant_modulus_error", worst_mod, 1e-8,
                   "|u(t)| = t for f = e^{i lambda t}"),
          check_le("damped_balance_rel_residual", worst_damped, 1e-8,
                   "rho = 2, lambda = 5, shifted velocity u' + rho u/2")};
}

// ---- criterion 11: spectral assembly ----------------------------------------

inline std::vector<Check> criterion_spectral() {
  const double pi = std::acos(-1.0);
  const double L = 1.0, c = 1.0;
  const spectral::EigenBasis1D basis = spectral::build_basis(L, 6);
  const TimeGrid grid(1.0, 1 << 12);
  const auto samples = spectral::sample_space_time(
      [&](double x, double t) {
        return (2.0 + pi * pi * t * t) * std::sin(pi * x);
      },
      L, 128, grid);
  const auto forcings = spectral::project_source(samples, basis);
  const auto field =
      spectral::solve_ibvp(basis, forcings, c, spectral::Equation::wave);
  double sup1 = 0.0, sup_rest = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid.node(i);
    sup1 = std::max(sup1, std::abs(field.coefficients[0].values[i] -
                                   t * t / std::sqrt(2.0)));
  }
  for (std::size_t k = 2; k <= basis.mode_count(); ++k)
    sup_rest = std::max(
        sup_rest, detail_verify::sup_abs(field.coefficients[k - 1].values));

  // resonant single-mode source through the full spatial path, k = 3
  const std::size_t k_res = 3;
  const spectral::EigenBasis1D basis3 = spectral::build_basis(L, 3);
  const double a3 = c * std::sqrt(basis3.eigenvalue(k_res));
  const TimeGrid rgrid(1.0, 1 << 14);
  const auto rsamples = spectral::sample_space_time(
      [&](double x, double t) {
        return basis3.eigenfunction(k_res, x) * std::cos(a3 * t);
      },
      L, 128, rgrid);
  const auto rforcings = spectral::project_source(rsamples, basis3);
  const auto rfield =
      spectral::solve_ibvp(basis3, rforcings, c, spectral::Equation::wave);
  std::vector<norms::ModeCoefficient> fmodes;
  for (std::size_t k = 1; k <= basis3.mode_count(); ++k)
    fmodes.push_back({basis3.eigenvalue(k), rforcings[k - 1]});
  const double data = norms::bochner_norm_sq(fmodes, -1.0);
  const double trial = spectral::field_trial_norm_sq(rfield, rforcings, c);
  const double ratio = std::sqrt(data / trial);
  const ModeParams mp3(basis3.eigenvalue(k_res), c, 1.0);
  const double expected = norms::infsup_ratio(mp3);
  return {check_le("spectral_manufactured_mode1_sup_error", sup1, 1e-6,
                   "u = t^2 sin(pi x), recovered u_1 = t^2/sqrt(2)"),
          check_le("spectral_manufactured_other_modes", sup_rest, 1e-8),
          check_le("spectral_resonant_infsup_ratio_rel",
                   std::abs(ratio / expected - 1.0), 1e-8,
                   "single resonant mode k = 3 through the spatial path")};
}

// ---- suites -----------------------------------------------------------------

struct Suite {
  std::string name;
  std::vector<Check> checks;
};

inline std::vector<std::string> suite_names() {
  return {"closed-form", "balances", "fourier", "heat", "infsup", "spectral",
          "all"};
}

inline std::vector<Suite> run_suite(const std::string& which) {
  std::vector<Suite> out;
  auto want = [&](const char* n) { return which == "all" || which == n; };
  if (want("closed-form"))
    out.push_back({"closed-form vs oracle", criterion_closed_form_vs_oracle()});
  if (which == "all")
    out.push_back({"amplification identity", criterion_amplification_identity()});
  if (want("infsup")) {
    out.push_back({"resonant pinned value", criterion_resonant_pinned_value()});
    out.push_back({"amplification sweep", criterion_amplification_sweep()});
    out.push_back({"inf-sup decay", criterion_infsup_decay()});
  }
  if (want("balances")) {
    out.push_back({"wave energy balance", criterion_wave_balance()});
    out.push_back({"norm equivalence", criterion_norm_equivalence()});
    out.push_back({"schrodinger and damped", criterion_schrodinger_damped()});
  }
  if (want("fourier"))
    out.push_back({"fourier quadratic form", criterion_fourier_form()});
  if (want("heat")) out.push_back({"heat estimates", criterion_heat()});
  if (want("spectral"))
    out.push_back({"spectral assembly", criterion_spectral()});
  return out;
}

inline bool all_passed(const std::vector<Suite>& suites) {
  for (const auto& s : suites)
    for (const auto& c : s.checks)
      if (!c.pass) return false;
  return true;
}

}  // namespace verify
}  // namespace waveres
