// Analytic modal solutions.
//
// Wave mode  (1/c^2) u'' + lambda u = f,  u(0) = u'(0) = 0,  mu = c^2 lambda:
//
//   cosine source f(t) = cos(omega t), a = sqrt(mu):
//     u(t)  = -2c^2/(mu - omega^2) sin((omega+a)t/2) sin((omega-a)t/2)
//           =  c^2 t sin((omega+a)t/2) sinc((omega-a)t/2) / (omega+a),
//   the second (product) form being exact in both branches and free of the
//   mu - omega^2 cancellation; at omega = a it reduces to the resonant
//   solution c^2 t sin(a t)/(2a) whose amplitude grows linearly in time.
//
//   general source, by Duhamel:
//     u(t)  = (c^2/a) int_0^t f(s) sin(a(t-s)) ds
//           = (c^2/a) [sin(at) fc(t) - cos(at) fs(t)],
//     u'(t) =  c^2    [cos(at) fc(t) + sin(at) fs(t)],
//   with fc, fs the cumulative transforms of f against cos(as), sin(as).
//
// Damped mode u'' + rho u' + lambda u = f: with f~(s) = f(s) e^{rho s/2},
//   underdamped (4 lambda > rho^2, eta = lambda - rho^2/4):
//     u = e^{-rho t/2} [sin(qt) Fc - cos(qt) Fs] / q,   q = sqrt(eta),
//   overdamped  (4 lambda < rho^2, gamma = sqrt(rho^2/4 - lambda)):
//     u = e^{-rho t/2} [sinh(gt) Fch - cosh(gt) Fsh] / g,
//   where Fc/Fs (Fch/Fsh) are cumulative transforms of f~ against the
//   (hyperbolic) phase.  Critical damping 4 lambda = rho^2 is rejected.
//
// Heat mode u' + lambda u = f: u(t) = int_0^t e^{-lambda(t-s)} f(s) ds,
// evaluated in prefix form (see energy.hpp) so e^{lambda s} never appears.
//
// Schrodinger mode i u' + lambda u = f (complex):
//     u(t) = -i e^{i lambda t} int_0^t e^{-i lambda s} f(s) ds.
// The homogeneous oscillation frequency is lambda (from the ODE), and the
// implementation is verified against the RK4 oracle at that frequency.

#pragma once

#include <cmath>
#include <utility>

#include "waveres/core.hpp"
#include "waveres/energy.hpp"
#include "waveres/sinc.hpp"

namespace waveres {
namespace closed_form {

/// Relative half-width of the resonant classification window: a forcing
/// frequency with |omega - sqrt(mu)| <= delta_res * sqrt(mu) is tagged
/// resonant.  Evaluation itself is branch-free (product form).
inline constexpr double kResonantWindow = 1e-4;

enum class Branch { resonant, nonresonant };

/// Closed-form solution of the wave mode for a single cosine source.
class WaveModeSolution {
 public:
  WaveModeSolution(const ModeParams& params, double omega)
      : params_(params), omega_(omega) {
    detail::require(omega > 0.0, "solve_wave_cosine: omega must be positive");
    const double a = params.omega_res();
    branch_ = std::abs(omega - a) <= kResonantWindow * a ? Branch::resonant
                                                         : Branch::nonresonant;
  }

  const ModeParams& params() const { return params_; }
  double omega() const { return omega_; }
  Branch branch() const { return branch_; }

  double u(double t) const {
    const double a = params_.omega_res();
    const double c2 = params_.c() * params_.c();
    const double sum = omega_ + a, diff = omega_ - a;
    return c2 * t * std::sin(0.5 * sum * t) * sinc(0.5 * diff * t) / sum;
  }

  double uprime(double t) const {
    const double a = params_.omega_res();
    const double c2 = params_.c() * params_.c();
    const double sum = omega_ + a, diff = a - omega_;
    // (a sin(at) - omega sin(omega t)) / ((a - omega)(a + omega))
    return c2 *
           (a * t * std::cos(0.5 * sum * t) * sinc(0.5 * diff * t) +
            std::sin(omega_ * t)) /
           sum;
  }

  std::pair<Signal, Signal> on_grid(const TimeGrid& grid) const {
    std::vector<double> us(grid.size()), ups(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      us[i] = u(grid.node(i));
      ups[i] = uprime(grid.node(i));
    }
    return {Signal(grid, std::move(us)), Signal(grid, std::move(ups))};
  }

 private:
  ModeParams params_;
  double omega_;
  Branch branch_;
};

inline WaveModeSolution solve_wave_cosine(const ModeParams& params,
                                          double omega) {
  return WaveModeSolution(params, omega);
}

/// Superposition of per-term cosine solutions for a finite combination;
/// exact up to rounding by linearity of the IVP.
inline std::pair<Signal, Signal> solve_wave_combo(const ModeParams& params,
                                                  const CosineCombo& combo,
                                                  const TimeGrid& grid) {
  std::vector<double> u(grid.size(), 0.0), up(grid.size(), 0.0);
  for (const auto& term : combo.terms) {
    const WaveModeSolution sol(params, term.omega);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double t = grid.node(i);
      u[i] += term.coeff * sol.u(t);
      up[i] += term.coeff * sol.uprime(t);
    }
  }
  return {Signal(grid, std::move(u)), Signal(grid, std::move(up))};
}

/// Duhamel evaluation of the wave mode for a general forcing, via the
/// angle-split sin(a(t-s)) = sin(at)cos(as) - cos(at)sin(as) and the two
/// cumulative transforms.  Enforces the oracle resolution rule.
inline std::pair<Signal, Signal> duhamel_wave(const ModeParams& params,
                                              const Forcing& forcing,
                                              const TimeGrid& grid) {
  const double a = params.omega_res();
  check_resolution(grid, std::max(a, max_frequency(forcing)),
                        "duhamel_wave");
  const double c2 = params.c() * params.c();
  const energy::TransformPair p = energy::transforms(forcing, a, grid);
  std::vector<double> u(grid.size()), up(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid.node(i);
    const double si = std::sin(a * t), co = std::cos(a * t);
    u[i] = c2 / a * (si * p.fc[i] - co * p.fs[i]);
    up[i] = c2 * (co * p.fc[i] + si * p.fs[i]);
  }
  return {Signal(grid, std::move(u)), Signal(grid, std::move(up))};
}

/// Damped mode solver; rejects critical damping 4 lambda = rho^2.
inline std::pair<Signal, Signal> solve_damped(double lambda, double rho,
                                              const Forcing& forcing,
                                              const TimeGrid& grid) {
  detail::require(lambda > 0.0 && rho > 0.0,
                  "solve_damped: lambda and rho must be positive");
  if (4.0 * lambda == rho * rho)
    throw std::domain_error("solve_damped: critical damping is unsupported");
  check_resolution(
      grid, std::max({std::sqrt(lambda), rho, max_frequency(forcing)}),
      "solve_damped");
  std::vector<double> weighted(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    weighted[i] = evaluate_forcing(forcing, grid.node(i)) *
                  std::exp(0.5 * rho * grid.node(i));
  const Signal ftilde(grid, std::move(weighted));

  std::vector<double> u(grid.size()), up(grid.size());
  if (4.0 * lambda > rho * rho) {
    const double q = std::sqrt(lambda - 0.25 * rho * rho);
    const energy::TransformPair p = energy::transform_pair(ftilde, q);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double t = grid.node(i);
      const double damp = std::exp(-0.5 * rho * t);
      const double si = std::sin(q * t), co = std::cos(q * t);
      u[i] = damp * (si * p.fc[i] - co * p.fs[i]) / q;
      const double v = damp * (co * p.fc[i] + si * p.fs[i]);
      up[i] = v - 0.5 * rho * u[i];
    }
  } else {
    const double g = std::sqrt(0.25 * rho * rho - lambda);
    std::vector<double> gch(grid.size()), gsh(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double t = grid.node(i);
      gch[i] = ftilde[i] * std::cosh(g * t);
      gsh[i] = ftilde[i] * std::sinh(g * t);
    }
    const Signal Fch =
        quadrature::cumulative_integrate(Signal(grid, std::move(gch)));
    const Signal Fsh =
        quadrature::cumulative_integrate(Signal(grid, std::move(gsh)));
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double t = grid.node(i);
      const double damp = std::exp(-0.5 * rho * t);
      const double sh = std::sinh(g * t), ch = std::cosh(g * t);
      u[i] = damp * (sh * Fch[i] - ch * Fsh[i]) / g;
      const double v = damp * (ch * Fch[i] - sh * Fsh[i]);
      up[i] = v - 0.5 * rho * u[i];
    }
  }
  return {Signal(grid, std::move(u)), Signal(grid, std::move(up))};
}

/// Heat mode solver, prefix form (overflow-safe for any lambda).
inline Signal solve_heat(double lambda, const Forcing& forcing,
                         const TimeGrid& grid) {
  detail::require(lambda > 0.0, "solve_heat: lambda must be positive");
  check_resolution(grid, std::max(lambda, max_frequency(forcing)),
                        "solve_heat");
  return energy::solve_heat_prefix(lambda, forcing, grid);
}

/// Schrodinger mode solver: u = -i e^{i lambda t} int_0^t e^{-i lambda s} f,
/// the integral split into two real cumulative quadratures per part.
inline ComplexSignal solve_schrodinger(double lambda, const Forcing& forcing,
                                       const TimeGrid& grid) {
  detail::require(lambda > 0.0, "solve_schrodinger: lambda must be positive");
  check_resolution(grid, std::max(lambda, max_frequency(forcing)),
                        "solve_schrodinger");
  const energy::ComplexTransformPair p =
      energy::transform_pair(sample_complex(forcing, grid), lambda);
  const Complex I(0.0, 1.0);
  std::vector<Complex> u(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid.node(i);
    const Complex G = p.fc[i] - I * p.fs[i];  // int_0^t e^{-i lambda s} f ds
    u[i] = -I * std::exp(I * (lambda * t)) * G;
  }
  return ComplexSignal(grid, std::move(u));
}

}  // namespace closed_form
}  // namespace waveres
