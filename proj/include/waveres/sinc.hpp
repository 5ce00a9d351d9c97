// Stable evaluation of the unnormalized sinc function and its divided
// differences.
//
// The resonance formulas in this library are ratios whose numerators are
// combinations of sinc values that cancel to first or second order when a
// forcing frequency approaches the resonance frequency.  Evaluating those
// numerators verbatim loses all significant digits near resonance, so the
// public surface here provides the cancellations in closed form:
//
//   sinc(x)            sin(x)/x, sinc(0) = 1
//   sinc_deriv(n, x)   n-th derivative, n <= 6
//   one_minus_sinc_over_sq(x)   (1 - sinc x)/x^2        -> 1/6  at 0
//   dsinc(v, d)        (sinc(v+d) - sinc(v))/d          -> sinc'(v) as d -> 0
//   d2sinc(x, u, v)    second divided difference
//                      (g(x+u+v)-g(x+u)-g(x+v)+g(x))/(uv),  g = sinc
//
// Each switches between direct evaluation and a truncated series so the
// result carries full double precision over the whole argument range.

#pragma once

#include <cmath>
#include <cstddef>

namespace waveres {

/// Unnormalized sinc: sin(x)/x with the removable singularity filled in.
inline double sinc(double x) {
  const double ax = std::abs(x);
  if (ax < 1e-1) {
    const double x2 = x * x;
    // 1 - x^2/3! + x^4/5! - x^6/7! + x^8/9!
    return 1.0 + x2 * (-1.0 / 6.0 +
                 x2 * (1.0 / 120.0 +
                 x2 * (-1.0 / 5040.0 + x2 * (1.0 / 362880.0))));
  }
  return std::sin(x) / x;
}

/// (1 - sinc(x)) / x^2, the leading cancellation of the resonant limit.
inline double one_minus_sinc_over_sq(double x) {
  const double ax = std::abs(x);
  if (ax < 2.5e-1) {
    const double x2 = x * x;
    // 1/3! - x^2/5! + x^4/7! - x^6/9! + x^8/11!
    return 1.0 / 6.0 + x2 * (-1.0 / 120.0 +
                       x2 * (1.0 / 5040.0 +
                       x2 * (-1.0 / 362880.0 + x2 * (1.0 / 39916800.0))));
  }
  return (1.0 - sinc(x)) / (x * x);
}

/// sinc(x/2)^2; equals 2(1 - cos x)/x^2.
inline double sinc_half_sq(double x) {
  const double s = sinc(0.5 * x);
  return s * s;
}

namespace detail {

// Taylor coefficients of sinc: sum_n coeff[n] * x^(2n), through x^16.
inline constexpr double kSincCoeff[9] = {
    1.0,
    -1.0 / 6.0,             // 1/3!
    1.0 / 120.0,            // 1/5!
    -1.0 / 5040.0,          // 1/7!
    1.0 / 362880.0,         // 1/9!
    -1.0 / 39916800.0,      // 1/11!
    1.0 / 6227020800.0,     // 1/13!
    -1.0 / 1307674368000.0, // 1/15!
    1.0 / 355687428096000.0 // 1/17!
};

// d^m/dx^m sin(x): cycles sin, cos, -sin, -cos.
inline double sin_deriv(int m, double x) {
  switch (m & 3) {
    case 0: return std::sin(x);
    case 1: return std::cos(x);
    case 2: return -std::sin(x);
    default: return -std::cos(x);
  }
}

}  // namespace detail

/// n-th derivative of sinc, n <= 6.  Series for small |x|, otherwise the
/// recurrence x*sinc^(n) = sin^(n) - n*sinc^(n-1) from x*sinc(x) = sin(x).
inline double sinc_deriv(int n, double x) {
  if (n == 0) return sinc(x);
  if (std::abs(x) < 0.5) {
    double sum = 0.0;
    for (int k = 8; 2 * k >= n; --k) {
      // derivative of x^(2k): (2k)!/(2k-n)! * x^(2k-n)
      double fac = 1.0;
      for (int j = 0; j < n; ++j) fac *= static_cast<double>(2 * k - j);
      sum = sum * (x * x) + detail::kSincCoeff[k] * fac;
    }
    // odd n leaves one factor of x after the even-power ladder
    return (n % 2 == 0) ? sum : sum * x;
  }
  double d = sinc(x);
  for (int m = 1; m <= n; ++m) d = (detail::sin_deriv(m, x) - m * d) / x;
  return d;
}

/// First divided difference (sinc(v + d) - sinc(v)) / d.
inline double dsinc(double v, double d) {
  if (d == 0.0) return sinc_deriv(1, v);
  if (std::abs(d) >= 0.25) return (sinc(v + d) - sinc(v)) / d;
  if (std::abs(v) <= 0.75 && std::abs(v + d) <= 0.75) {
    // divided difference of the Taylor polynomial:
    // [(v+d)^(2n) - v^(2n)]/d = sum_{i<2n} (v+d)^i v^(2n-1-i)
    const double w = v + d;
    double pw[17], pv[17];
    pw[0] = pv[0] = 1.0;
    for (int i = 1; i <= 16; ++i) {
      pw[i] = pw[i - 1] * w;
      pv[i] = pv[i - 1] * v;
    }
    double sum = 0.0;
    for (int nn = 8; nn >= 1; --nn) {
      double s = 0.0;
      for (int i = 0; i < 2 * nn; ++i) s += pw[i] * pv[2 * nn - 1 - i];
      sum += detail::kSincCoeff[nn] * s;
    }
    return sum;
  }
  // sinc(v+d) - sinc(v) = [cos(v + d/2) sinc(d/2) - sinc(v)] * d/(v+d)
  return (std::cos(v + 0.5 * d) * sinc(0.5 * d) - sinc(v)) / (v + d);
}

/// Second divided difference of sinc over the rectangle [x, x+u] x [x, x+v].
inline double d2sinc(double x, double u, double v) {
  const double au = std::abs(u), av = std::abs(v);
  if (au >= 0.125 && av >= 0.125)
    return (sinc(x + u + v) - sinc(x + u) - sinc(x + v) + sinc(x)) / (u * v);
  if (au <= 0.125 && av <= 0.125) {
    // average of sinc'' over the rectangle, expanded about its center
    const double m = x + 0.5 * (u + v);
    const double g2 = sinc_deriv(2, m);
    const double g4 = sinc_deriv(4, m);
    const double g6 = sinc_deriv(6, m);
    const double u2 = u * u, v2 = v * v;
    return g2 + (u2 + v2) / 24.0 * g4 +
           ((u2 * u2 + v2 * v2) / 80.0 + u2 * v2 / 24.0) / 24.0 * g6;
  }
  if (au < av) return (dsinc(x + v, u) - dsinc(x, u)) / v;
  return (dsinc(x + u, v) - dsinc(x, v)) / u;
}

}  // namespace waveres
