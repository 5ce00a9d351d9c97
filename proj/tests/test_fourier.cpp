#include <catch2/catch.hpp>

#include <cmath>

#include "waveres/closed_form.hpp"
#include "waveres/fourier.hpp"
#include "waveres/norms.hpp"
#include "test_util.hpp"

using namespace waveres;
using namespace waveres::fourier;

namespace {

// printed five-term kernel, evaluated verbatim; valid away from resonance
double kernel_reference(const ModeParams& p, double w, double v) {
  const double T = p.horizon(), a = p.omega_res(), mu = p.mu();
  const double c2 = p.c() * p.c(), lam = p.lambda();
  const double first = 0.5 * T / lam * (sinc((w + v) * T) + sinc((w - v) * T));
  const double br =
      mu * (1 + sinc(2 * a * T)) +
      0.5 * (w * w + v * v) * (sinc((w - v) * T) + sinc((w + v) * T)) -
      0.5 * (mu + w * w) * (sinc((a - w) * T) + sinc((a + w) * T)) -
      0.5 * (mu + v * v) * (sinc((a - v) * T) + sinc((a + v) * T));
  return first + c2 * T * br / ((mu - w * w) * (mu - v * v));
}

}  // namespace

TEST_CASE("basis frequencies") {
  const double pi = std::acos(-1.0);
  const auto w3 = basis_frequencies(1.0, 3);
  CHECK(w3[0] == Approx(0.5 * pi).epsilon(1e-15));
  CHECK(w3[1] == Approx(1.5 * pi).epsilon(1e-15));
  CHECK(w3[2] == Approx(2.5 * pi).epsilon(1e-15));
  CHECK(basis_frequencies(2.0, 1)[0] == Approx(0.25 * pi).epsilon(1e-15));
  CHECK_THROWS_AS(basis_frequencies(1.0, 0), std::domain_error);
  // sinc(2 omega_j T) = 0 for every basis frequency
  for (double T : {1.0, 2.5}) {
    for (double w : basis_frequencies(T, 64))
      CHECK(std::abs(sinc(2.0 * w * T)) < 1e-12);
  }
}

TEST_CASE("expansion coefficients") {
  const double T = 1.0;
  SECTION("a basis cosine expands to a unit vector") {
    const auto freqs = basis_frequencies(T, 6);
    const auto c = expand_coefficients(Cosine{freqs[1]}, T, 6);
    for (std::size_t j = 0; j < 6; ++j)
      CHECK(c[j] == Approx(j == 1 ? 1.0 : 0.0).margin(1e-10));
  }
  SECTION("constant source: c_j = 2 (-1)^j / omega_j") {
    const TimeGrid g(T, 4096);
    const auto c =
        expand_coefficients(Sampled{testutil::constant_signal(g, 1.0)}, T, 8);
    const auto freqs = basis_frequencies(T, 8);
    for (std::size_t j = 0; j < 8; ++j)
      CHECK(c[j] ==
            Approx(2.0 * (j % 2 ? -1.0 : 1.0) / freqs[j]).margin(1e-9));
  }
  SECTION("Parseval sum converges to ||f||^2 from below") {
    const TimeGrid g(T, 4096);
    const Forcing one = Sampled{testutil::constant_signal(g, 1.0)};
    auto partial = [&](std::size_t J) {
      double s = 0.0;
      for (double x : expand_coefficients(one, T, J)) s += 0.5 * x * x;
      return s;
    };
    const double p32 = partial(32), p64 = partial(64), p128 = partial(128);
    CHECK(p32 < p64);
    CHECK(p64 < p128);
    CHECK(p128 < 1.0);
    // measured value at J = 64: 1 - (2/pi^2) * tail of (j + 1/2)^-2
    CHECK(p64 == Approx(0.996834).margin(3e-4));
  }
}

TEST_CASE("kernel: symmetry, printed formula, quadrature") {
  const ModeParams p = ModeParams::from_omega_res(7.3, 1.0, 1.0);
  testutil::Rng rng(71);
  SECTION("symmetric under swapping the frequencies") {
    for (int i = 0; i < 40; ++i) {
      const double w = rng.uniform(0.2, 25.0), v = rng.uniform(0.2, 25.0);
      CHECK(kernel_W(p, w, v) ==
            Approx(kernel_W(p, v, w)).epsilon(1e-12).margin(1e-16));
    }
  }
  SECTION("matches the literal five-term expression away from resonance") {
    for (int i = 0; i < 40; ++i) {
      const double w = rng.uniform(0.2, 25.0), v = rng.uniform(0.2, 25.0);
      if (std::abs(w - p.omega_res()) < 0.3 ||
          std::abs(v - p.omega_res()) < 0.3)
        continue;
      CHECK(kernel_W(p, w, v) ==
            Approx(kernel_reference(p, w, v)).epsilon(1e-11).margin(1e-15));
    }
  }
  SECTION("matches the quadrature bilinear form") {
    const TimeGrid g(1.0, 1 << 14);
    const double w = 2.9, v = 11.4;
    const auto uw = closed_form::solve_wave_cosine(p, w).on_grid(g).first;
    const auto uv = closed_form::solve_wave_cosine(p, v).on_grid(g).first;
    std::vector<double> rw(g.size()), rv(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      rw[i] = std::cos(w * g.node(i)) - p.lambda() * uw.values[i];
      rv[i] = std::cos(v * g.node(i)) - p.lambda() * uv.values[i];
    }
    const double bilinear =
        p.lambda() *
            quadrature::integrate(quadrature::pointwise_product(uw, uv)) +
        quadrature::integrate(quadrature::pointwise_product(
            Signal(g, rw), Signal(g, rv))) /
            p.lambda();
    CHECK(kernel_W(p, w, v) == Approx(bilinear).epsilon(1e-9));
  }
  SECTION("rejects nonpositive frequencies") {
    CHECK_THROWS_AS(kernel_W(p, 0.0, 1.0), std::domain_error);
  }
}

TEST_CASE("kernel: diagonal identity and resonance continuity") {
  const ModeParams p = ModeParams::from_omega_res(200.0, 1.0, 1.0);
  SECTION("diagonal equals (1 + C) T/(2 lambda)") {
    const auto block = build_block(p, 64);
    for (std::size_t j = 0; j < 64; ++j) {
      const double id =
          (1.0 + norms::amplification_constant(p, block.frequencies[j])) *
          0.5 / p.lambda();
      CHECK(block.at(j, j) == Approx(id).epsilon(1e-10));
    }
  }
  SECTION("values inside the window are bracketed by the edges") {
    for (double a : {2.0 * std::acos(-1.0), 200.0}) {
      const ModeParams pa = ModeParams::from_omega_res(a, 1.0, 1.0);
      const double d = closed_form::kResonantWindow;
      for (double v : {3.0, 0.7 * a}) {
        const double w_in = a * (1.0 + 0.5 * d);
        const double W_in = kernel_W(pa, w_in, v);
        const double W_lo = kernel_W(pa, a * (1.0 - 2.0 * d), v);
        const double W_hi = kernel_W(pa, a * (1.0 + 2.0 * d), v);
        const double lo = std::min(W_lo, W_hi), hi = std::max(W_lo, W_hi);
        const double slack = 1e-4 * std::abs(W_in);
        CHECK(W_in >= lo - slack);
        CHECK(W_in <= hi + slack);
      }
    }
  }
  SECTION("exactly at the resonance the kernel stays finite and symmetric") {
    const double a = p.omega_res();
    const double w = kernel_W(p, a, 3.0);
    CHECK(std::isfinite(w));
    CHECK(kernel_W(p, 3.0, a) == Approx(w).epsilon(1e-12));
    CHECK(std::isfinite(kernel_W(p, a, a)));
  }
}

TEST_CASE("quadratic form evaluation") {
  const ModeParams p = ModeParams::from_omega_res(200.0, 1.0, 1.0);
  const auto block = build_block(p, 8);
  SECTION("zero and unit coefficient vectors") {
    CHECK(quadratic_form_eval(block, std::vector<double>(8, 0.0)) == 0.0);
    std::vector<double> e3(8, 0.0);
    e3[3] = 1.0;
    CHECK(quadratic_form_eval(block, e3) == Approx(block.at(3, 3)).epsilon(1e-15));
  }
  SECTION("single cosine: form equals the trial norm") {
    const TimeGrid g(1.0, 1 << 15);
    const double wm = block.frequencies[2];
    const auto [u, up] = closed_form::solve_wave_cosine(p, wm).on_grid(g);
    const double trial = norms::trial_norm_sq(p, u, Cosine{wm});
    CHECK(block.at(2, 2) == Approx(trial).epsilon(1e-6));
  }
  SECTION("random band-limited source: form equals the trial norm") {
    testutil::Rng rng(73);
    std::vector<double> coeffs(8);
    for (auto& x : coeffs) x = rng.uniform(-1.0, 1.0);
    CosineCombo combo;
    for (std::size_t j = 0; j < 8; ++j)
      combo.terms.push_back({block.frequencies[j], coeffs[j]});
    const TimeGrid g(1.0, 1 << 15);
    const auto [u, up] = closed_form::solve_wave_combo(p, combo, g);
    const double trial = norms::trial_norm_sq(p, u, combo);
    CHECK(quadratic_form_eval(block, coeffs) == Approx(trial).epsilon(1e-6));
  }
  SECTION("coefficient count must match") {
    CHECK_THROWS_AS(quadratic_form_eval(block, std::vector<double>(7, 0.0)),
                    std::invalid_argument);
  }
}

TEST_CASE("diagonal dominance audit") {
  SECTION("J = 1 has no off-diagonal mass") {
    const ModeParams p = ModeParams::from_omega_res(5.0, 1.0, 1.0);
    const auto report = diagonal_dominance_audit(build_block(p, 1));
    CHECK(report.violating_rows.empty());
    CHECK(report.worst_ratio == 0.0);
  }
  SECTION("the sqrt(mu) = 200 block violates dominance") {
    const ModeParams p = ModeParams::from_omega_res(200.0, 1.0, 1.0);
    const auto report = diagonal_dominance_audit(build_block(p, 64));
    CHECK(report.violating_rows.size() >= 1);
    CHECK(report.worst_ratio > 1.0);
  }
  SECTION("the heat analogue is exactly diagonal") {
    const auto W = heat_diagonal_form(3.0, 1.0, 16);
    const auto report = diagonal_dominance_audit(W, 16);
    CHECK(report.violating_rows.empty());
    CHECK(report.worst_ratio == 0.0);
  }
}

TEST_CASE("blocks are positive definite") {
  SECTION("jacobi eigensolver sanity") {
    // [[2, 1], [1, 2]] has eigenvalues 1 and 3
    CHECK(smallest_eigenvalue_symmetric({2, 1, 1, 2}, 2) ==
          Approx(1.0).epsilon(1e-12));
  }
  for (double a : {7.3, 200.0}) {
    const ModeParams p = ModeParams::from_omega_res(a, 1.0, 1.0);
    const auto block = build_block(p, 16);
    CHECK(smallest_eigenvalue_symmetric(block.W, 16) > 0.0);
  }
}
