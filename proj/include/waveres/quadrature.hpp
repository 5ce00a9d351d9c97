// Composite-Simpson quadrature on the shared uniform grid, plus the running
// (cumulative) variant used by the data-norm transforms.
//
// These are oracle primitives: tests validate every closed form against
// them, so they stay deliberately simple and are never called from inside
// the closed-form implementations they check.

#pragma once

#include <cstddef>
#include <vector>

#include "waveres/core.hpp"

namespace waveres {
namespace quadrature {

/// Composite Simpson over the full grid.  Exact for polynomials of degree
/// <= 3; O(h^4) otherwise.  The grid's even interval count is enforced at
/// TimeGrid construction.
inline double integrate(const Signal& s) {
  const std::size_t n = s.grid.intervals();
  const double h = s.grid.step();
  double odd = 0.0, even = 0.0;
  for (std::size_t i = 1; i < n; i += 2) odd += s.values[i];
  for (std::size_t i = 2; i < n; i += 2) even += s.values[i];
  return (s.values.front() + s.values.back() + 4.0 * odd + 2.0 * even) * h /
         3.0;
}

/// Running integral F(t_i) ~ int_0^{t_i} f.  Even indices accumulate the
/// composite Simpson rule pairwise; odd indices add a trapezoid correction
/// on the trailing interval.  F(0) = 0 exactly.
inline Signal cumulative_integrate(const Signal& s) {
  const std::size_t n = s.grid.intervals();
  const double h = s.grid.step();
  std::vector<double> F(n + 1);
  F[0] = 0.0;
  for (std::size_t i = 2; i <= n; i += 2)
    F[i] = F[i - 2] +
           (s.values[i - 2] + 4.0 * s.values[i - 1] + s.values[i]) * h / 3.0;
  for (std::size_t i = 1; i <= n; i += 2)
    F[i] = F[i - 1] + 0.5 * h * (s.values[i - 1] + s.values[i]);
  return Signal(s.grid, std::move(F));
}

/// Pointwise product helper for norm integrands.
inline Signal pointwise_product(const Signal& a, const Signal& b) {
  if (a.grid != b.grid)
    throw std::invalid_argument("pointwise_product: grids differ");
  std::vector<double> v(a.values.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.values[i] * b.values[i];
  return Signal(a.grid, std::move(v));
}

/// int_0^T s(t)^2 dt by Simpson.
inline double l2_norm_sq(const Signal& s) {
  return integrate(pointwise_product(s, s));
}

/// int_0^T |s(t)|^2 dt by Simpson.
inline double l2_norm_sq(const ComplexSignal& s) {
  std::vector<double> v(s.values.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::norm(s.values[i]);
  return integrate(Signal(s.grid, std::move(v)));
}

}  // namespace quadrature

/// Grid plus rule tag; the rule is fixed to composite Simpson so that the
/// quadrature nodes coincide with the ODE-oracle grid and no interpolation
/// error enters cross-checks.
struct QuadratureSpec {
  TimeGrid grid;

  double step() const { return grid.step(); }
  double integrate(const Signal& s) const {
    if (s.grid != grid) throw std::invalid_argument("QuadratureSpec: grid mismatch");
    return quadrature::integrate(s);
  }
  Signal cumulative(const Signal& s) const {
    if (s.grid != grid) throw std::invalid_argument("QuadratureSpec: grid mismatch");
    return quadrature::cumulative_integrate(s);
  }
};

}  // namespace waveres
