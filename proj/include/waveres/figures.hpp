// Tabular data behind the CLI figure commands.  Defaults are wired to the
// reference configurations: resonance frequencies sqrt(mu_k) = 2 pi k with
// T = 1 and c = 1, k = 1..15 for the amplification sweep, k = 50 for the
// norm comparison, sqrt(mu) = 200 for the kernel heat map.

#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "waveres/closed_form.hpp"
#include "waveres/core.hpp"
#include "waveres/csv.hpp"
#include "waveres/fourier.hpp"
#include "waveres/norms.hpp"

namespace waveres {
namespace figures {

inline std::vector<double> linspace(double lo, double hi, std::size_t count) {
  detail::require(count >= 2 && hi > lo, "linspace: bad sweep bounds");
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i)
    v[i] = lo + (hi - lo) * static_cast<double>(i) /
                    static_cast<double>(count - 1);
  return v;
}

inline std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

/// Source term and solution in a progression of frequency ratios across the
/// resonance: columns t, then (f, u) per requested omega.
inline csv::Table figure1(const ModeParams& params,
                          const std::vector<double>& omega_ratios,
                          std::size_t grid_n) {
  const double a = params.omega_res();
  const TimeGrid grid(params.horizon(), grid_n);
  csv::Table table;
  table.headers.push_back("t");
  std::vector<closed_form::WaveModeSolution> solutions;
  for (double r : omega_ratios) {
    solutions.push_back(closed_form::solve_wave_cosine(params, r * a));
    table.headers.push_back("f_omega_" + short_number(r));
    table.headers.push_back("u_omega_" + short_number(r));
  }
  table.rows.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid.node(i);
    std::vector<double> row{t};
    for (const auto& sol : solutions) {
      row.push_back(std::cos(sol.omega() * t));
      row.push_back(sol.u(t));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

/// Amplification sweep 1 + C_k(omega) for sqrt(mu_k) = 2 pi k: columns
/// omega, then one column per k.
inline csv::Table figure2(std::size_t k_min, std::size_t k_max, double T,
                          double omega_min, double omega_max,
                          std::size_t steps) {
  const double pi = std::acos(-1.0);
  detail::require(k_min >= 1 && k_min <= k_max, "figure2: bad mode range");
  const std::vector<double> omegas = linspace(omega_min, omega_max, steps);
  csv::Table table;
  table.headers.push_back("omega");
  std::vector<ModeParams> params;
  for (std::size_t k = k_min; k <= k_max; ++k) {
    params.push_back(
        ModeParams::from_omega_res(2.0 * pi * static_cast<double>(k), T));
    table.headers.push_back("one_plus_C_k" + std::to_string(k));
  }
  for (double w : omegas) {
    std::vector<double> row{w};
    for (const auto& p : params)
      row.push_back(1.0 + norms::amplification_constant(p, w));
    table.rows.push_back(std::move(row));
  }
  return table;
}

/// Norm comparison for one mode: columns omega, ||u_omega||_U,
/// ||f_omega||_L2 and lambda^{-1/2} ||f_omega||_L2.
inline csv::Table figure3(std::size_t k, double T, double omega_min,
                          double omega_max, std::size_t steps) {
  const double pi = std::acos(-1.0);
  const ModeParams params =
      ModeParams::from_omega_res(2.0 * pi * static_cast<double>(k), T);
  const double lambda = params.lambda();
  csv::Table table;
  table.headers = {"omega", "trial_norm_u", "l2l2_norm_f", "l2hm1_norm_f"};
  for (double w : linspace(omega_min, omega_max, steps)) {
    const double f_l2 = std::sqrt(0.5 * T * (1.0 + sinc(2.0 * w * T)));
    const double trial =
        std::sqrt((1.0 + norms::amplification_constant(params, w)) / lambda) *
        f_l2;
    table.rows.push_back({w, trial, f_l2, f_l2 / std::sqrt(lambda)});
  }
  return table;
}

/// |W(omega_j, omega_l)| as a J x J matrix with frequency headers.
inline csv::Table figure4(const ModeParams& params, std::size_t J,
                          bool absolute = true) {
  const fourier::FourierBlock block = fourier::build_block(params, J);
  csv::Table table;
  table.headers.push_back("omega");
  for (double w : block.frequencies)
    table.headers.push_back(csv::format_value(w));
  for (std::size_t j = 0; j < J; ++j) {
    std::vector<double> row{block.frequencies[j]};
    for (std::size_t l = 0; l < J; ++l)
      row.push_back(absolute ? std::abs(block.at(j, l)) : block.at(j, l));
    table.rows.push_back(std::move(row));
  }
  return table;
}

/// Single-mode amplification sweep: columns omega, C, 1 + C.
inline csv::Table amplification_table(const ModeParams& params,
                                      double omega_min, double omega_max,
                                      std::size_t steps) {
  csv::Table table;
  table.headers = {"omega", "C", "one_plus_C"};
  for (double w : linspace(omega_min, omega_max, steps)) {
    const double C = norms::amplification_constant(params, w);
    table.rows.push_back({w, C, 1.0 + C});
  }
  return table;
}

/// Modal inf-sup ratios for sqrt(mu_k) = 2 pi k: columns k, sqrt_mu,
/// C at resonance, ratio.
inline csv::Table infsup_table(std::size_t k_min, std::size_t k_max,
                               double T) {
  const double pi = std::acos(-1.0);
  detail::require(k_min >= 1 && k_min <= k_max, "infsup: bad mode range");
  csv::Table table;
  table.headers = {"k", "sqrt_mu", "C_resonant", "infsup_ratio"};
  for (std::size_t k = k_min; k <= k_max; ++k) {
    const ModeParams p =
        ModeParams::from_omega_res(2.0 * pi * static_cast<double>(k), T);
    table.rows.push_back({static_cast<double>(k), p.omega_res(),
                          norms::resonant_amplification_constant(p),
                          norms::infsup_ratio(p)});
  }
  return table;
}

}  // namespace figures
}  // namespace waveres
