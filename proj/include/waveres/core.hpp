// Core domain types shared by every module: one spectral mode's constants,
// the uniform time grid, forcing terms, and sampled signals.
//
// All types are immutable after construction and safe to share across
// threads; every operation on them is re-entrant.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace waveres {

using Complex = std::complex<double>;

namespace detail {

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::domain_error(msg);
}

inline bool all_finite(const std::vector<double>& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

inline bool all_finite(const std::vector<Complex>& v) {
  for (const Complex& z : v)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

}  // namespace detail

/// Constants of one spectral mode: spatial eigenvalue lambda, wave speed c
/// and time horizon T.  The derived quantities are mu = c^2 * lambda and the
/// resonance frequency sqrt(mu).
class ModeParams {
 public:
  ModeParams(double lambda, double c, double T)
      : lambda_(lambda), c_(c), T_(T) {
    detail::require(std::isfinite(lambda) && lambda > 0.0,
                    "ModeParams: lambda must be positive and finite");
    detail::require(std::isfinite(c) && c > 0.0,
                    "ModeParams: wave speed must be positive and finite");
    detail::require(std::isfinite(T) && T > 0.0,
                    "ModeParams: horizon must be positive and finite");
    detail::require(std::isfinite(mu()), "ModeParams: mu overflows");
  }

  /// Build from the resonance frequency sqrt(mu) instead of lambda.
  static ModeParams from_omega_res(double omega_res, double T, double c = 1.0) {
    detail::require(std::isfinite(omega_res) && omega_res > 0.0,
                    "ModeParams: resonance frequency must be positive");
    return ModeParams(omega_res * omega_res / (c * c), c, T);
  }

  double lambda() const { return lambda_; }
  double c() const { return c_; }
  double horizon() const { return T_; }
  double mu() const { return c_ * c_ * lambda_; }
  double omega_res() const { return c_ * std::sqrt(lambda_); }

 private:
  double lambda_, c_, T_;
};

/// Uniform grid t_i = i*T/n on [0, T].  n must be even so that the composite
/// Simpson rule applies to every prefix used by the cumulative quadrature.
class TimeGrid {
 public:
  TimeGrid(double T, std::size_t n) : T_(T), n_(n) {
    detail::require(std::isfinite(T) && T > 0.0,
                    "TimeGrid: horizon must be positive and finite");
    detail::require(n >= 2, "TimeGrid: need at least two intervals");
    detail::require(n % 2 == 0, "TimeGrid: interval count must be even");
  }

  double horizon() const { return T_; }
  std::size_t intervals() const { return n_; }
  std::size_t size() const { return n_ + 1; }
  double step() const { return T_ / static_cast<double>(n_); }
  double node(std::size_t i) const {
    return T_ * static_cast<double>(i) / static_cast<double>(n_);
  }

  std::vector<double> nodes() const {
    std::vector<double> t(size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = node(i);
    return t;
  }

  bool operator==(const TimeGrid& o) const { return T_ == o.T_ && n_ == o.n_; }
  bool operator!=(const TimeGrid& o) const { return !(*this == o); }

 private:
  double T_;
  std::size_t n_;
};

/// Real values on a TimeGrid, one per node.
struct Signal {
  Signal(TimeGrid g, std::vector<double> v)
      : grid(g), values(std::move(v)) {
    if (values.size() != grid.size())
      throw std::invalid_argument("Signal: value count must equal node count");
    detail::require(detail::all_finite(values), "Signal: values must be finite");
  }

  TimeGrid grid;
  std::vector<double> values;

  double operator[](std::size_t i) const { return values[i]; }
};

/// Complex values on a TimeGrid, one per node.
struct ComplexSignal {
  ComplexSignal(TimeGrid g, std::vector<Complex> v)
      : grid(g), values(std::move(v)) {
    if (values.size() != grid.size())
      throw std::invalid_argument(
          "ComplexSignal: value count must equal node count");
    detail::require(detail::all_finite(values),
                    "ComplexSignal: values must be finite");
  }

  TimeGrid grid;
  std::vector<Complex> values;

  Complex operator[](std::size_t i) const { return values[i]; }
};

// -- Forcing terms -----------------------------------------------------------

/// f(t) = cos(omega t).
struct Cosine {
  double omega;
};

/// Finite combination f(t) = sum_j coeff_j * cos(omega_j t).
struct CosineCombo {
  struct Term {
    double omega;
    double coeff;
  };
  std::vector<Term> terms;
};

/// Real samples on a grid, read back as the piecewise-linear interpolant.
struct Sampled {
  Signal signal;
};

/// Complex samples on a grid, read back as the piecewise-linear interpolant.
struct ComplexSampled {
  ComplexSignal signal;
};

/// f(t) = exp(rho (T - t)/2) * sin(sqrt(eta) t): the source that stays
/// resonant for the damped equation u'' + rho u' + lambda u = f when
/// eta = lambda - rho^2/4 > 0.
struct DampedResonant {
  double rho;
  double eta;
  double horizon;
};

using Forcing =
    std::variant<Cosine, CosineCombo, Sampled, ComplexSampled, DampedResonant>;

namespace detail {

inline double lerp_at(const TimeGrid& g, const std::vector<double>& v,
                      double t) {
  require(t >= 0.0 && t <= g.horizon(),
          "evaluate_forcing: t outside [0, T]");
  if (t >= g.horizon()) return v.back();
  const double s = t / g.step();
  const std::size_t i =
      std::min(static_cast<std::size_t>(s), g.intervals() - 1);
  const double frac = s - static_cast<double>(i);
  return v[i] + frac * (v[i + 1] - v[i]);
}

inline Complex lerp_at(const TimeGrid& g, const std::vector<Complex>& v,
                       double t) {
  require(t >= 0.0 && t <= g.horizon(),
          "evaluate_forcing: t outside [0, T]");
  if (t >= g.horizon()) return v.back();
  const double s = t / g.step();
  const std::size_t i =
      std::min(static_cast<std::size_t>(s), g.intervals() - 1);
  const double frac = s - static_cast<double>(i);
  return v[i] + frac * (v[i + 1] - v[i]);
}

}  // namespace detail

/// Validate the cross-field invariants of a forcing.
inline void validate(const Forcing& f) {
  std::visit(
      [](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Cosine>) {
          detail::require(v.omega > 0.0, "Cosine: omega must be positive");
        } else if constexpr (std::is_same_v<V, CosineCombo>) {
          for (const auto& term : v.terms)
            detail::require(term.omega > 0.0,
                            "CosineCombo: frequencies must be positive");
        } else if constexpr (std::is_same_v<V, DampedResonant>) {
          detail::require(v.rho > 0.0 && v.eta > 0.0 && v.horizon > 0.0,
                          "DampedResonant: rho, eta, T must be positive");
        }
        // Sampled/ComplexSampled: the Signal constructors already enforce
        // count and finiteness.
      },
      f);
}

/// Evaluate a real-valued forcing at time t.  Sampled variants interpolate
/// linearly between nodes; t outside [0, T] is a domain error (analytic
/// variants without an intrinsic horizon accept any t >= 0).
inline double evaluate_forcing(const Forcing& f, double t) {
  return std::visit(
      [t](const auto& v) -> double {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Cosine>) {
          detail::require(t >= 0.0, "evaluate_forcing: t must be nonnegative");
          return std::cos(v.omega * t);
        } else if constexpr (std::is_same_v<V, CosineCombo>) {
          detail::require(t >= 0.0, "evaluate_forcing: t must be nonnegative");
          double sum = 0.0;
          for (const auto& term : v.terms)
            sum += term.coeff * std::cos(term.omega * t);
          return sum;
        } else if constexpr (std::is_same_v<V, Sampled>) {
          return detail::lerp_at(v.signal.grid, v.signal.values, t);
        } else if constexpr (std::is_same_v<V, DampedResonant>) {
          detail::require(t >= 0.0 && t <= v.horizon,
                          "evaluate_forcing: t outside [0, T]");
          return std::exp(0.5 * v.rho * (v.horizon - t)) *
                 std::sin(std::sqrt(v.eta) * t);
        } else {
          throw std::domain_error(
              "evaluate_forcing: complex forcing has no real value");
        }
      },
      f);
}

/// Evaluate any forcing at time t as a complex number.
inline Complex evaluate_forcing_complex(const Forcing& f, double t) {
  if (const auto* cs = std::get_if<ComplexSampled>(&f))
    return detail::lerp_at(cs->signal.grid, cs->signal.values, t);
  return Complex(evaluate_forcing(f, t), 0.0);
}

/// Fastest temporal scale of a forcing, used by the oracle resolution rule.
/// Sampled variants report 0: they are piecewise linear by construction and
/// the caller is responsible for sampling densely enough.
inline double max_frequency(const Forcing& f) {
  return std::visit(
      [](const auto& v) -> double {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Cosine>) {
          return v.omega;
        } else if constexpr (std::is_same_v<V, CosineCombo>) {
          double m = 0.0;
          for (const auto& term : v.terms) m = std::max(m, term.omega);
          return m;
        } else if constexpr (std::is_same_v<V, DampedResonant>) {
          return std::max(std::sqrt(v.eta), 0.5 * v.rho);
        } else {
          return 0.0;
        }
      },
      f);
}

/// Sample a real forcing on a grid.
inline Signal sample(const Forcing& f, const TimeGrid& grid) {
  validate(f);
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = evaluate_forcing(f, grid.node(i));
  return Signal(grid, std::move(v));
}

/// Sample any forcing on a grid as complex values.
inline ComplexSignal sample_complex(const Forcing& f, const TimeGrid& grid) {
  validate(f);
  std::vector<Complex> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = evaluate_forcing_complex(f, grid.node(i));
  return ComplexSignal(grid, std::move(v));
}

/// Smallest even interval count admitted by the resolution rule: at least
/// 50 grid points per period of the fastest oscillation (or per e-folding
/// of the fastest decay).
inline std::size_t required_intervals(double omega_max, double T) {
  const double pi = std::acos(-1.0);
  const double need = 50.0 * omega_max * T / (2.0 * pi);
  auto n = static_cast<std::size_t>(std::ceil(std::max(need, 2.0)));
  return n + (n % 2);
}

/// Refuse to run on an under-resolved grid; the diagnostic names the
/// offending scale and the interval count that would be admissible.
inline void check_resolution(const TimeGrid& grid, double omega_max,
                             const char* who) {
  const std::size_t need = required_intervals(omega_max, grid.horizon());
  if (grid.intervals() < need) {
    std::string msg(who);
    msg += ": grid under-resolved, n = " + std::to_string(grid.intervals()) +
           " but the fastest scale " + std::to_string(omega_max) +
           " rad/time over T = " + std::to_string(grid.horizon()) +
           " needs n >= " + std::to_string(need);
    throw std::domain_error(msg);
  }
}

/// Norm bundle for one (mode, forcing) pair.  amplification is NaN when the
/// forcing is not a single cosine (the constant is defined per frequency).
struct NormReport {
  double trial_norm_sq = 0.0;        // ||u||^2_U
  double data_norm_sq = 0.0;         // ||f||^2_V*
  double l2l2_norm_sq = 0.0;         // ||f||^2_L2(0,T)
  double energy_data_norm_sq = 0.0;  // energy-balance data norm, squared
  double amplification = std::nan("");
  double infsup_ratio = 0.0;

  bool has_amplification() const { return !std::isnan(amplification); }
};

}  // namespace waveres
