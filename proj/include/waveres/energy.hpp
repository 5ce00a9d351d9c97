// Energy-balance machinery: the cumulative cosine/sine transforms of the
// source term, pointwise balance residuals for the wave / damped /
// Schrodinger modes, the resonance-aware data norm built from them, and the
// heat-mode transform with its critical estimate.
//
// The identities checked here:
//
//   wave         lambda u^2 + u'^2/c^2 = c^2 (fc^2 + fs^2)
//   with values  lambda u^2 + u'^2/c^2 = c^2 [(fc + h/c^2)^2 + (fs - sqrt(mu) g/c^2)^2]
//   damped       eta u^2 + v^2 = e^{-rho t} (Fc^2 + Fs^2),   v = u' + (rho/2) u,
//                where Fc/Fs transform f~(s) = f(s) e^{rho s/2} at sqrt(eta)
//   schrodinger  |u|^2 = (Re fc + Im fs)^2 + (Re fs - Im fc)^2   (frequency lambda)
//   heat         ||u'||^2 + lambda^2 ||u||^2 + lambda u(T)^2 = ||f||^2
//
// The damped balance closes with the shifted velocity v = u' + (rho/2) u;
// differentiating the damped solution formula produces v, not u', in the
// rotation relation, and the residual vanishes only with v.
//
// All transforms share one cumulative-quadrature path parameterized by the
// phase frequency, so the wave/damped/Schrodinger/heat variants differ only
// in frequency and weighting.

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>

#include "waveres/core.hpp"
#include "waveres/quadrature.hpp"

namespace waveres {
namespace energy {

/// Running transforms fc(t) = int_0^t f(s) cos(freq s) ds and
/// fs(t) = int_0^t f(s) sin(freq s) ds.
struct TransformPair {
  Signal fc;
  Signal fs;
  double frequency;
};

/// Complex-source version: fc, fs are complex (real and imaginary transforms
/// of the respective parts).
struct ComplexTransformPair {
  ComplexSignal fc;
  ComplexSignal fs;
  double frequency;
};

/// Transform node samples against cos/sin at the given frequency.
inline TransformPair transform_pair(const Signal& f, double frequency) {
  detail::require(frequency > 0.0, "transform_pair: frequency must be positive");
  const TimeGrid& g = f.grid;
  std::vector<double> gc(g.size()), gs(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double t = g.node(i);
    gc[i] = f.values[i] * std::cos(frequency * t);
    gs[i] = f.values[i] * std::sin(frequency * t);
  }
  return {quadrature::cumulative_integrate(Signal(g, std::move(gc))),
          quadrature::cumulative_integrate(Signal(g, std::move(gs))),
          frequency};
}

inline ComplexTransformPair transform_pair(const ComplexSignal& f,
                                           double frequency) {
  detail::require(frequency > 0.0, "transform_pair: frequency must be positive");
  const TimeGrid& g = f.grid;
  std::vector<double> rc(g.size()), rs(g.size()), ic(g.size()), is(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double t = g.node(i);
    const double co = std::cos(frequency * t), si = std::sin(frequency * t);
    rc[i] = f.values[i].real() * co;
    rs[i] = f.values[i].real() * si;
    ic[i] = f.values[i].imag() * co;
    is[i] = f.values[i].imag() * si;
  }
  Signal Rc = quadrature::cumulative_integrate(Signal(g, std::move(rc)));
  Signal Rs = quadrature::cumulative_integrate(Signal(g, std::move(rs)));
  Signal Ic = quadrature::cumulative_integrate(Signal(g, std::move(ic)));
  Signal Is = quadrature::cumulative_integrate(Signal(g, std::move(is)));
  std::vector<Complex> fc(g.size()), fs(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    fc[i] = Complex(Rc.values[i], Ic.values[i]);
    fs[i] = Complex(Rs.values[i], Is.values[i]);
  }
  return {ComplexSignal(g, std::move(fc)), ComplexSignal(g, std::move(fs)),
          frequency};
}

/// Sample a forcing and transform it.  Wave callers pass sqrt(mu); the
/// Schrodinger balance passes lambda.
inline TransformPair transforms(const Forcing& forcing, double frequency,
                                const TimeGrid& grid) {
  check_resolution(grid, std::max(frequency, max_frequency(forcing)),
                   "transforms");
  return transform_pair(sample(forcing, grid), frequency);
}

/// Sup and relative-sup residual of a pointwise balance law.
struct BalanceReport {
  double max_abs_residual = 0.0;
  /// max |residual| / sup of the total energy over the grid
  double max_rel_residual = 0.0;
  TimeGrid grid;
};

namespace detail_balance {

inline BalanceReport report_from(const TimeGrid& grid,
                                 const std::vector<double>& lhs,
                                 const std::vector<double>& rhs) {
  double sup = 0.0, res = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    sup = std::max(sup, std::max(std::abs(lhs[i]), std::abs(rhs[i])));
    res = std::max(res, std::abs(lhs[i] - rhs[i]));
  }
  BalanceReport r{res, sup > 0.0 ? res / sup : 0.0, grid};
  return r;
}

}  // namespace detail_balance

/// Residual of lambda u^2 + u'^2/c^2 = c^2 (fc^2 + fs^2) on every node.
/// u, uprime must solve the mode IVP for the forcing behind `pair`, and the
/// transforms must be at frequency sqrt(mu).
inline BalanceReport wave_balance_residual(const ModeParams& params,
                                           const Signal& u,
                                           const Signal& uprime,
                                           const TransformPair& pair) {
  if (u.grid != uprime.grid || u.grid != pair.fc.grid)
    throw std::invalid_argument("wave_balance_residual: grid mismatch");
  const double lambda = params.lambda();
  const double c2 = params.c() * params.c();
  std::vector<double> lhs(u.values.size()), rhs(u.values.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    lhs[i] = lambda * u[i] * u[i] + uprime[i] * uprime[i] / c2;
    rhs[i] = c2 * (pair.fc[i] * pair.fc[i] + pair.fs[i] * pair.fs[i]);
  }
  return detail_balance::report_from(u.grid, lhs, rhs);
}

/// Resonance-aware data norm squared:
///   (1/lambda) ||f||^2 + c^2 (||fc||^2 + ||fs||^2)
/// with the transforms at the resonance frequency sqrt(mu).
inline double resonance_aware_data_norm_sq(const ModeParams& params,
                                           const Forcing& forcing,
                                           const TimeGrid& grid) {
  check_resolution(grid,
                   std::max(params.omega_res(), max_frequency(forcing)),
                   "resonance_aware_data_norm_sq");
  const Signal f = sample(forcing, grid);
  const TransformPair p = transform_pair(f, params.omega_res());
  return quadrature::l2_norm_sq(f) / params.lambda() +
         params.c() * params.c() *
             (quadrature::l2_norm_sq(p.fc) + quadrature::l2_norm_sq(p.fs));
}

/// Balance with initial values u(0) = g, u'(0) = h: the solution gains the
/// homogeneous part g cos(sqrt(mu) t) + (h/sqrt(mu)) sin(sqrt(mu) t) and the
/// transforms shift by the initial data,
///   lambda u^2 + u'^2/c^2 = c^2 [(fc + h/c^2)^2 + (fs - sqrt(mu) g/c^2)^2].
/// `u_forced`, `uprime_forced` are the zero-initial-value solution pair.
inline BalanceReport balance_with_initial_values(const ModeParams& params,
                                                 double g, double h,
                                                 const Signal& u_forced,
                                                 const Signal& uprime_forced,
                                                 const TransformPair& pair) {
  if (u_forced.grid != uprime_forced.grid || u_forced.grid != pair.fc.grid)
    throw std::invalid_argument("balance_with_initial_values: grid mismatch");
  const double lambda = params.lambda();
  const double c2 = params.c() * params.c();
  const double a = params.omega_res();
  const TimeGrid& grid = u_forced.grid;
  std::vector<double> lhs(grid.size()), rhs(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid.node(i);
    const double u = u_forced[i] + g * std::cos(a * t) + h / a * std::sin(a * t);
    const double up = uprime_forced[i] - g * a * std::sin(a * t) + h * std::cos(a * t);
    lhs[i] = lambda * u * u + up * up / c2;
    const double vc = pair.fc[i] + h / c2;
    const double vs = pair.fs[i] - a * g / c2;
    rhs[i] = c2 * (vc * vc + vs * vs);
  }
  return detail_balance::report_from(grid, lhs, rhs);
}

/// Residual of the damped balance eta u^2 + v^2 = e^{-rho t}(Fc^2 + Fs^2)
/// with the shifted velocity v = u' + (rho/2) u and Fc/Fs the transforms of
/// f~(s) = f(s) e^{rho s/2} at frequency sqrt(eta).  Underdamped case only.
inline BalanceReport damped_balance_residual(double lambda, double rho,
                                             const Signal& u,
                                             const Signal& uprime,
                                             const Forcing& forcing,
                                             const TimeGrid& grid) {
  detail::require(4.0 * lambda > rho * rho,
                  "damped_balance_residual: requires 4 lambda > rho^2");
  if (u.grid != grid || uprime.grid != grid)
    throw std::invalid_argument("damped_balance_residual: grid mismatch");
  const double eta = lambda - 0.25 * rho * rho;
  const double sq_eta = std::sqrt(eta);
  std::vector<double> weighted(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    weighted[i] = evaluate_forcing(forcing, grid.node(i)) *
                  std::exp(0.5 * rho * grid.node(i));
  const TransformPair p =
      transform_pair(Signal(grid, std::move(weighted)), sq_eta);
  std::vector<double> lhs(grid.size()), rhs(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = uprime[i] + 0.5 * rho * u[i];
    lhs[i] = eta * u[i] * u[i] + v * v;
    rhs[i] = std::exp(-rho * grid.node(i)) *
             (p.fc[i] * p.fc[i] + p.fs[i] * p.fs[i]);
  }
  return detail_balance::report_from(grid, lhs, rhs);
}

/// Heat-mode transform and the critical estimate.  Reports
///   lhs = lambda int_0^T e^{-2 lambda t} fe(t)^2 dt   (= lambda ||u||^2)
///   rhs = (1/lambda) int_0^T f^2
///   exact_balance_residual = | ||u'||^2 + lambda^2 ||u||^2 + lambda u(T)^2
///                             - ||f||^2 | / ||f||^2
/// The weighted integrand is evaluated in prefix form e^{-lambda(t-s)} so
/// nothing overflows for large lambda; fe itself grows like e^{lambda t}
/// and is only materialized when lambda*T stays within double range.
struct HeatEstimates {
  Signal u;                  // heat solution on the grid
  std::optional<Signal> fe;  // int_0^t f e^{lambda s} ds, when representable
  double lhs = 0.0;
  double rhs = 0.0;
  double exact_balance_residual = 0.0;
};

// Exponential-integrator step weights m_k(z) = int_0^1 e^{-z(1-w)} w^k dw.
namespace detail_heat {

inline void etd_weights(double z, double& m0, double& m1, double& m2) {
  if (std::abs(z) < 1e-3) {
    // series in z, accurate to ~1e-19 at |z| = 1e-3
    m0 = 1.0 - z / 2.0 + z * z / 6.0 - z * z * z / 24.0;
    m1 = 0.5 - z / 3.0 + z * z / 8.0 - z * z * z / 30.0;
    m2 = 1.0 / 3.0 - z / 4.0 + z * z / 10.0 - z * z * z / 36.0;
  } else {
    const double e = std::exp(-z);
    m0 = -std::expm1(-z) / z;
    m1 = (z - 1.0 + e) / (z * z);
    m2 = (z * z - 2.0 * z + 2.0 - 2.0 * e) / (z * z * z);
  }
}

}  // namespace detail_heat

/// Heat solve u(t) = int_0^t e^{-lambda(t-s)} f(s) ds in prefix form with a
/// quadratic fit of f on each interval (exact for piecewise-quadratic f,
/// overflow-free for any lambda).
inline Signal solve_heat_prefix(double lambda, const Forcing& forcing,
                                const TimeGrid& grid) {
  detail::require(lambda > 0.0, "solve_heat: lambda must be positive");
  const std::size_t n = grid.intervals();
  const double h = grid.step();
  const double z = lambda * h;
  double m0, m1, m2;
  detail_heat::etd_weights(z, m0, m1, m2);
  const double decay = std::exp(-z);
  std::vector<double> u(n + 1);
  u[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = grid.node(i);
    const double f0 = evaluate_forcing(forcing, t);
    const double fm = evaluate_forcing(forcing, t + 0.5 * h);
    const double f1 = evaluate_forcing(forcing, grid.node(i + 1));
    // p(sigma) = c0 + c1 sigma + c2 sigma^2 on sigma in [0, h]
    const double c0 = f0;
    const double c1 = (-3.0 * f0 + 4.0 * fm - f1) / h;
    const double c2 = 2.0 * (f0 - 2.0 * fm + f1) / (h * h);
    const double panel =
        h * (c0 * m0 + c1 * h * m1 + c2 * h * h * m2);
    u[i + 1] = decay * u[i] + panel;
  }
  return Signal(grid, std::move(u));
}

inline HeatEstimates heat_transform_and_estimates(double lambda,
                                                  const Forcing& forcing,
                                                  const TimeGrid& grid) {
  check_resolution(grid, std::max(lambda, max_frequency(forcing)),
                   "heat_transform_and_estimates");
  Signal u = solve_heat_prefix(lambda, forcing, grid);
  const Signal f = sample(forcing, grid);
  const double lhs = lambda * quadrature::l2_norm_sq(u);
  const double f_l2_sq = quadrature::l2_norm_sq(f);
  const double rhs = f_l2_sq / lambda;
  std::vector<double> up(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    up[i] = f.values[i] - lambda * u.values[i];
  const double up_sq = quadrature::l2_norm_sq(Signal(grid, std::move(up)));
  const double uT = u.values.back();
  const double balance =
      up_sq + lambda * lambda * quadrature::l2_norm_sq(u) + lambda * uT * uT;
  const double residual =
      f_l2_sq > 0.0 ? std::abs(balance - f_l2_sq) / f_l2_sq : std::abs(balance);
  std::optional<Signal> fe;
  if (lambda * grid.horizon() <= 700.0) {
    std::vector<double> v(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
      v[i] = std::exp(lambda * grid.node(i)) * u.values[i];
    fe = Signal(grid, std::move(v));
  }
  return HeatEstimates{std::move(u), std::move(fe), lhs, rhs, residual};
}

/// Residual of |u|^2 = (Re fc + Im fs)^2 + (Re fs - Im fc)^2 with the
/// transforms of the (complex) source at frequency lambda.
inline BalanceReport schrodinger_balance_residual(double lambda,
                                                  const ComplexSignal& u,
                                                  const Forcing& forcing,
                                                  const TimeGrid& grid) {
  detail::require(lambda > 0.0,
                  "schrodinger_balance_residual: lambda must be positive");
  if (u.grid != grid)
    throw std::invalid_argument("schrodinger_balance_residual: grid mismatch");
  const ComplexTransformPair p =
      transform_pair(sample_complex(forcing, grid), lambda);
  std::vector<double> lhs(grid.size()), rhs(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    lhs[i] = std::norm(u[i]);
    const double x = p.fc[i].real() + p.fs[i].imag();
    const double y = p.fs[i].real() - p.fc[i].imag();
    rhs[i] = x * x + y * y;
  }
  return detail_balance::report_from(grid, lhs, rhs);
}

}  // namespace energy
}  // namespace waveres
