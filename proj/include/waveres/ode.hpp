// Fourth-order explicit (classical Runge-Kutta) initial-value integrators.
//
// These are the brute-force oracles for the closed-form mode solvers:
//   wave         (1/c^2) u'' + lambda u = f        u(0) = u'(0) = 0
//   heat         u' + lambda u = f                 u(0) = 0
//   schrodinger  i u' + lambda u = f               u(0) = 0   (complex)
//   damped       u'' + rho u' + lambda u = f       u(0) = u'(0) = 0
//
// Every call enforces the resolution rule n >= 50 * omega_max * T / (2 pi)
// (at least 50 steps per period of the fastest oscillation) and refuses to
// run under-resolved rather than returning silently inaccurate output.

#pragma once

#include <cmath>
#include <utility>

#include "waveres/core.hpp"

namespace waveres {
namespace ode {

/// RK4 for (1/c^2) u'' + lambda u = f with zero initial values.
/// Returns (u, u') on the grid.
inline std::pair<Signal, Signal> integrate_second_order_ivp(
    const ModeParams& params, const Forcing& forcing, const TimeGrid& grid) {
  check_resolution(grid, std::max(params.omega_res(), max_frequency(forcing)),
                   "integrate_second_order_ivp");
  const double c2 = params.c() * params.c();
  const double lambda = params.lambda();
  const std::size_t n = grid.intervals();
  const double h = grid.step();
  std::vector<double> u(n + 1), up(n + 1);
  double y = 0.0, v = 0.0;
  u[0] = up[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = grid.node(i);
    const double fm = evaluate_forcing(forcing, t + 0.5 * h);
    const double f0 = evaluate_forcing(forcing, t);
    const double f1 = evaluate_forcing(forcing, grid.node(i + 1));
    auto acc = [&](double f, double uu) { return c2 * (f - lambda * uu); };
    const double k1u = v, k1v = acc(f0, y);
    const double k2u = v + 0.5 * h * k1v, k2v = acc(fm, y + 0.5 * h * k1u);
    const double k3u = v + 0.5 * h * k2v, k3v = acc(fm, y + 0.5 * h * k2u);
    const double k4u = v + h * k3v, k4v = acc(f1, y + h * k3u);
    y += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    u[i + 1] = y;
    up[i + 1] = v;
  }
  return {Signal(grid, std::move(u)), Signal(grid, std::move(up))};
}

/// RK4 for the heat mode u' + lambda u = f, zero initial value.
inline Signal integrate_heat_ivp(double lambda, const Forcing& forcing,
                                 const TimeGrid& grid) {
  detail::require(lambda > 0.0, "integrate_heat_ivp: lambda must be positive");
  check_resolution(grid, std::max(lambda, max_frequency(forcing)),
                   "integrate_heat_ivp");
  const std::size_t n = grid.intervals();
  const double h = grid.step();
  std::vector<double> u(n + 1);
  double y = 0.0;
  u[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = grid.node(i);
    const double fm = evaluate_forcing(forcing, t + 0.5 * h);
    const double f0 = evaluate_forcing(forcing, t);
    const double f1 = evaluate_forcing(forcing, grid.node(i + 1));
    auto rhs = [&](double f, double uu) { return f - lambda * uu; };
    const double k1 = rhs(f0, y);
    const double k2 = rhs(fm, y + 0.5 * h * k1);
    const double k3 = rhs(fm, y + 0.5 * h * k2);
    const double k4 = rhs(f1, y + h * k3);
    y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    u[i + 1] = y;
  }
  return Signal(grid, std::move(u));
}

/// RK4 for the Schrodinger mode i u' + lambda u = f, complex state,
/// zero initial value.  The homogeneous solution rotates at frequency
/// lambda, which drives the resolution requirement.
inline ComplexSignal integrate_schrodinger_ivp(double lambda,
                                               const Forcing& forcing,
                                               const TimeGrid& grid) {
  detail::require(lambda > 0.0,
                  "integrate_schrodinger_ivp: lambda must be positive");
  check_resolution(grid, std::max(lambda, max_frequency(forcing)),
                   "integrate_schrodinger_ivp");
  const std::size_t n = grid.intervals();
  const double h = grid.step();
  const Complex I(0.0, 1.0);
  std::vector<Complex> u(n + 1);
  Complex y(0.0, 0.0);
  u[0] = y;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = grid.node(i);
    const Complex fm = evaluate_forcing_complex(forcing, t + 0.5 * h);
    const Complex f0 = evaluate_forcing_complex(forcing, t);
    const Complex f1 = evaluate_forcing_complex(forcing, grid.node(i + 1));
    // i u' + lambda u = f  =>  u' = -i (f - lambda u)
    auto rhs = [&](const Complex& f, const Complex& uu) {
      return -I * (f - lambda * uu);
    };
    const Complex k1 = rhs(f0, y);
    const Complex k2 = rhs(fm, y + 0.5 * h * k1);
    const Complex k3 = rhs(fm, y + 0.5 * h * k2);
    const Complex k4 = rhs(f1, y + h * k3);
    y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    u[i + 1] = y;
  }
  return ComplexSignal(grid, std::move(u));
}

/// RK4 for the damped mode u'' + rho u' + lambda u = f, zero initial values.
/// Returns (u, u').
inline std::pair<Signal, Signal> integrate_damped_ivp(double lambda,
                                                      double rho,
                                                      const Forcing& forcing,
                                                      const TimeGrid& grid) {
  detail::require(lambda > 0.0, "integrate_damped_ivp: lambda must be positive");
  detail::require(rho > 0.0, "integrate_damped_ivp: rho must be positive");
  check_resolution(
      grid, std::max({std::sqrt(lambda), rho, max_frequency(forcing)}),
      "integrate_damped_ivp");
  const std::size_t n = grid.intervals();
  const double h = grid.step();
  std::vector<double> u(n + 1), up(n + 1);
  double y = 0.0, v = 0.0;
  u[0] = up[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = grid.node(i);
    const double fm = evaluate_forcing(forcing, t + 0.5 * h);
    const double f0 = evaluate_forcing(forcing, t);
    const double f1 = evaluate_forcing(forcing, grid.node(i + 1));
    auto acc = [&](double f, double uu, double vv) {
      return f - rho * vv - lambda * uu;
    };
    const double k1u = v, k1v = acc(f0, y, v);
    const double k2u = v + 0.5 * h * k1v,
                 k2v = acc(fm, y + 0.5 * h * k1u, v + 0.5 * h * k1v);
    const double k3u = v + 0.5 * h * k2v,
                 k3v = acc(fm, y + 0.5 * h * k2u, v + 0.5 * h * k2v);
    const double k4u = v + h * k3v, k4v = acc(f1, y + h * k3u, v + h * k3v);
    y += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    u[i + 1] = y;
    up[i + 1] = v;
  }
  return {Signal(grid, std::move(u)), Signal(grid, std::move(up))};
}

}  // namespace ode
}  // namespace waveres
