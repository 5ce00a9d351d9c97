// Cosine-basis construction of the resonance-aware data norm.
//
// Basis on (0, T): cos(omega_j t) with omega_j = (pi/2 + j pi)/T, j >= 0.
// The family is orthogonal with ||cos(omega_j .)||^2 = T/2 and complete in
// L2(0,T); every frequency satisfies sinc(2 omega_j T) = 0.  Coefficients
// are normalized, c_j = (2/T) int_0^T f cos(omega_j t) dt, so that
// f = sum_j c_j cos(omega_j t) and Parseval reads
// ||f||^2 = (T/2) sum_j c_j^2.
//
// Kernel: for sources f = sum_j c_j cos(omega_j t) the squared trial norm
// of the wave-mode solution is the quadratic form
//   ||u||^2_U = sum_{j,l} W(omega_j, omega_l) c_j c_l
// with the symmetric kernel
//   W(w, v) = (T/(2 lambda)) [sinc((w+v)T) + sinc((w-v)T)]
//           + c^2 T / ((mu - w^2)(mu - v^2)) *
//             [ mu (1 + sinc(2aT))
//               + (w^2 + v^2)/2 (sinc((w-v)T) + sinc((w+v)T))
//               - (mu + w^2)/2 (sinc((a-w)T) + sinc((a+w)T))
//               - (mu + v^2)/2 (sinc((a-v)T) + sinc((a+v)T)) ].
// The singular factors are removable; the implementation evaluates the
// kernel through the equivalent inner-product split
//   W(w, v) = (1/lambda)(f_w, f_v) + 2 mu c^2 Phi - c^2 [Psi(w; v) + Psi(v; w)]
// where Psi and Phi are first and second divided differences of sinc, each
// computed stably (see sinc.hpp), so the kernel is accurate for every
// frequency pair including w = a and v = a.
//
// Diagonal identity: W(omega_j, omega_j) = (1 + C(omega_j)) T/(2 lambda).
//
// The quadratic form is positive definite but not diagonally dominant;
// diagonal_dominance_audit quantifies the violation.

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "waveres/core.hpp"
#include "waveres/quadrature.hpp"
#include "waveres/sinc.hpp"

namespace waveres {
namespace fourier {

/// omega_j = (pi/2 + j pi)/T for j = 0..J-1.
inline std::vector<double> basis_frequencies(double T, std::size_t J) {
  detail::require(T > 0.0, "basis_frequencies: T must be positive");
  detail::require(J >= 1, "basis_frequencies: J must be at least 1");
  const double pi = std::acos(-1.0);
  std::vector<double> w(J);
  for (std::size_t j = 0; j < J; ++j)
    w[j] = (0.5 * pi + static_cast<double>(j) * pi) / T;
  return w;
}

/// Normalized coefficients c_j = (2/T) int_0^T f(t) cos(omega_j t) dt by
/// Simpson quadrature; the grid resolves max(omega_{J-1}, forcing).
inline std::vector<double> expand_coefficients(const Forcing& f, double T,
                                               std::size_t J,
                                               std::size_t grid_n = 0) {
  const std::vector<double> freqs = basis_frequencies(T, J);
  if (grid_n == 0)
    grid_n = std::max<std::size_t>(
        2048, required_intervals(std::max(freqs.back(), max_frequency(f)), T));
  const TimeGrid grid(T, grid_n);
  const Signal fs = sample(f, grid);
  std::vector<double> coeff(J);
  for (std::size_t j = 0; j < J; ++j) {
    std::vector<double> g(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
      g[i] = fs.values[i] * std::cos(freqs[j] * grid.node(i));
    coeff[j] =
        2.0 / T * quadrature::integrate(Signal(grid, std::move(g)));
  }
  return coeff;
}

namespace detail_kernel {

// (T/2)[sinc((x-y)T) + sinc((x+y)T)] = int_0^T cos(xt) cos(yt) dt
inline double cos_inner(double x, double y, double T) {
  return 0.5 * T * (sinc((x - y) * T) + sinc((x + y) * T));
}

// Psi(z; y) = [ (f_z, u... ] := [I(z,y) - I(a,y)] / (mu - z^2), evaluated as
// -(T^2 / (2(z+a))) [dsinc((a-y)T, d) + dsinc((a+y)T, d)], d = (z-a)T.
inline double psi(double a, double z, double y, double T) {
  const double d = (z - a) * T;
  return -0.5 * T * T / (z + a) *
         (dsinc((a - y) * T, d) + dsinc((a + y) * T, d));
}

// Phi(w, v) = [I(w,v) - I(a,v) - I(w,a) + I(a,a)] / ((mu - w^2)(mu - v^2))
//           = (T^3 / (2(w+a)(v+a))) [d2sinc(2aT; dw, dv) - d2sinc(0; dw, -dv)]
inline double phi(double a, double w, double v, double T) {
  const double dw = (w - a) * T;
  const double dv = (v - a) * T;
  return 0.5 * T * T * T / ((w + a) * (v + a)) *
         (d2sinc(2.0 * a * T, dw, dv) - d2sinc(0.0, dw, -dv));
}

}  // namespace detail_kernel

/// Kernel W(omega, omega_tilde); removable singularities at the resonance
/// frequency are evaluated exactly via stable divided differences.
inline double kernel_W(const ModeParams& params, double omega,
                       double omega_tilde) {
  detail::require(omega > 0.0 && omega_tilde > 0.0,
                  "kernel_W: frequencies must be positive");
  const double T = params.horizon();
  const double a = params.omega_res();
  const double mu = params.mu();
  const double c2 = params.c() * params.c();
  const double I = detail_kernel::cos_inner(omega, omega_tilde, T);
  return I / params.lambda() +
         2.0 * mu * c2 * detail_kernel::phi(a, omega, omega_tilde, T) -
         c2 * (detail_kernel::psi(a, omega, omega_tilde, T) +
               detail_kernel::psi(a, omega_tilde, omega, T));
}

/// Truncated J x J kernel matrix on the cosine basis.
struct FourierBlock {
  ModeParams params;
  std::size_t J;
  std::vector<double> frequencies;  // omega_0 .. omega_{J-1}
  std::vector<double> W;            // row-major J x J, symmetric

  double at(std::size_t j, std::size_t l) const { return W[j * J + l]; }
};

inline FourierBlock build_block(const ModeParams& params, std::size_t J) {
  FourierBlock block{params, J, basis_frequencies(params.horizon(), J), {}};
  block.W.assign(J * J, 0.0);
  for (std::size_t j = 0; j < J; ++j)
    for (std::size_t l = j; l < J; ++l) {
      const double w = kernel_W(params, block.frequencies[j],
                                block.frequencies[l]);
      block.W[j * J + l] = w;
      block.W[l * J + j] = w;
    }
  return block;
}

/// sum_{j,l} W[j][l] c_j c_l.
inline double quadratic_form_eval(const FourierBlock& block,
                                  const std::vector<double>& coeffs) {
  if (coeffs.size() != block.J)
    throw std::invalid_argument(
        "quadratic_form_eval: coefficient count must equal J");
  double sum = 0.0;
  for (std::size_t j = 0; j < block.J; ++j) {
    double row = 0.0;
    for (std::size_t l = 0; l < block.J; ++l)
      row += block.at(j, l) * coeffs[l];
    sum += coeffs[j] * row;
  }
  return sum;
}

/// Row-wise diagonal dominance audit of a dense symmetric matrix.
struct DominanceReport {
  std::vector<std::size_t> violating_rows;  // rows with off-diagonal mass > diagonal
  double worst_ratio = 0.0;                 // max over rows of off/diag
  std::size_t worst_row = 0;
};

inline DominanceReport diagonal_dominance_audit(const std::vector<double>& W,
                                                std::size_t J) {
  if (W.size() != J * J)
    throw std::invalid_argument("diagonal_dominance_audit: matrix is not JxJ");
  DominanceReport report;
  for (std::size_t j = 0; j < J; ++j) {
    double off = 0.0;
    for (std::size_t l = 0; l < J; ++l)
      if (l != j) off += std::abs(W[j * J + l]);
    const double ratio = off / std::abs(W[j * J + j]);
    if (ratio > report.worst_ratio) {
      report.worst_ratio = ratio;
      report.worst_row = j;
    }
    if (ratio > 1.0) report.violating_rows.push_back(j);
  }
  return report;
}

inline DominanceReport diagonal_dominance_audit(const FourierBlock& block) {
  return diagonal_dominance_audit(block.W, block.J);
}

/// The heat-mode analogue of the block is a pure diagonal form with entries
/// T/(2 lambda) on the same frequency grid.
inline std::vector<double> heat_diagonal_form(double lambda, double T,
                                              std::size_t J) {
  detail::require(lambda > 0.0 && T > 0.0,
                  "heat_diagonal_form: lambda and T must be positive");
  std::vector<double> W(J * J, 0.0);
  for (std::size_t j = 0; j < J; ++j) W[j * J + j] = 0.5 * T / lambda;
  return W;
}

/// Smallest eigenvalue of a dense symmetric matrix by the cyclic Jacobi
/// method; used to certify positive definiteness of truncated blocks.
inline double smallest_eigenvalue_symmetric(std::vector<double> A,
                                            std::size_t n) {
  if (A.size() != n * n)
    throw std::invalid_argument("smallest_eigenvalue_symmetric: not n x n");
  auto idx = [n](std::size_t r, std::size_t c) { return r * n + c; };
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += A[idx(p, q)] * A[idx(p, q)];
    if (off < 1e-28) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = A[idx(p, q)];
        if (apq == 0.0) continue;
        const double app = A[idx(p, p)], aqq = A[idx(q, q)];
        const double theta = 0.5 * (aqq - app) / apq;
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = A[idx(k, p)], akq = A[idx(k, q)];
          A[idx(k, p)] = c * akp - s * akq;
          A[idx(k, q)] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = A[idx(p, k)], aqk = A[idx(q, k)];
          A[idx(p, k)] = c * apk - s * aqk;
          A[idx(q, k)] = s * apk + c * aqk;
        }
      }
  }
  double min_ev = A[0];
  for (std::size_t i = 1; i < n; ++i) min_ev = std::min(min_ev, A[idx(i, i)]);
  return min_ev;
}

}  // namespace fourier
}  // namespace waveres
