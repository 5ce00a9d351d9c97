#include <catch2/catch.hpp>

#include <cmath>

#include "waveres/sinc.hpp"
#include "test_util.hpp"

using namespace waveres;

TEST_CASE("sinc basic values") {
  CHECK(sinc(0.0) == 1.0);
  CHECK(sinc(std::acos(-1.0)) == Approx(0.0).margin(1e-15));
  CHECK(sinc(2.0) == Approx(std::sin(2.0) / 2.0).epsilon(1e-15));
  // even function
  CHECK(sinc(-0.73) == sinc(0.73));
  // series / direct agreement at the branch boundary
  for (double x : {0.0999, 0.1001, 0.09, 0.11})
    CHECK(sinc(x) == Approx(std::sin(x) / x).epsilon(1e-14));
}

TEST_CASE("sinc vanishes at nonzero multiples of pi") {
  const double pi = std::acos(-1.0);
  for (int k = 1; k <= 40; ++k)
    CHECK(std::abs(sinc(k * pi)) < 1e-13);
}

TEST_CASE("one_minus_sinc_over_sq matches limit and direct form") {
  CHECK(one_minus_sinc_over_sq(0.0) == Approx(1.0 / 6.0).epsilon(1e-15));
  for (double x : {0.2499, 0.2501, 1.0, 3.7}) {
    const double direct = (1.0 - std::sin(x) / x) / (x * x);
    CHECK(one_minus_sinc_over_sq(x) == Approx(direct).epsilon(1e-11));
  }
}

TEST_CASE("sinc_deriv matches central differences") {
  const double h = 1e-5;
  for (double x : {0.05, 0.3, 0.49, 0.51, 1.3, 4.2, 12.0}) {
    const double d1 = (sinc(x + h) - sinc(x - h)) / (2 * h);
    CHECK(sinc_deriv(1, x) == Approx(d1).margin(1e-9));
    const double d2 = (sinc(x + h) - 2 * sinc(x) + sinc(x - h)) / (h * h);
    CHECK(sinc_deriv(2, x) == Approx(d2).margin(1e-5));
  }
  // derivative bound |sinc^(n)| <= 1/(n+1)
  testutil::Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    const double x = rng.uniform(-30.0, 30.0);
    for (int n = 0; n <= 6; ++n)
      CHECK(std::abs(sinc_deriv(n, x)) <= 1.0 / (n + 1) + 1e-12);
  }
}

TEST_CASE("dsinc equals the divided difference") {
  testutil::Rng rng(7);
  // moderate steps: straight comparison
  for (int i = 0; i < 100; ++i) {
    const double v = rng.uniform(-20.0, 20.0);
    const double d = rng.uniform(0.3, 2.0);
    CHECK(dsinc(v, d) ==
          Approx((sinc(v + d) - sinc(v)) / d).epsilon(1e-12).margin(1e-15));
  }
  // tiny steps: compare against a Taylor model of the difference quotient
  for (int i = 0; i < 100; ++i) {
    const double v = rng.uniform(-20.0, 20.0);
    const double d = rng.uniform(-1e-3, 1e-3);
    const double model = sinc_deriv(1, v) + 0.5 * d * sinc_deriv(2, v) +
                         d * d / 6.0 * sinc_deriv(3, v);
    CHECK(dsinc(v, d) == Approx(model).margin(1e-12));
  }
  CHECK(dsinc(1.3, 0.0) == Approx(sinc_deriv(1, 1.3)).epsilon(1e-15));
  // branch boundary continuity
  for (double v : {0.1, 0.74, 0.76, 5.0})
    CHECK(dsinc(v, 0.2499) == Approx(dsinc(v, 0.2501)).epsilon(1e-3));
}

TEST_CASE("d2sinc equals the second divided difference") {
  testutil::Rng rng(11);
  auto direct = [](double x, double u, double v) {
    return (sinc(x + u + v) - sinc(x + u) - sinc(x + v) + sinc(x)) / (u * v);
  };
  for (int i = 0; i < 100; ++i) {
    const double x = rng.uniform(-15.0, 15.0);
    const double u = rng.uniform(0.3, 1.5);
    const double v = rng.uniform(0.3, 1.5);
    CHECK(d2sinc(x, u, v) == Approx(direct(x, u, v)).epsilon(1e-10).margin(1e-13));
  }
  // small arguments tend to sinc''
  for (double x : {0.0, 2.0, 9.0}) {
    CHECK(d2sinc(x, 1e-8, -1e-8) == Approx(sinc_deriv(2, x)).margin(1e-10));
    CHECK(d2sinc(x, 1e-8, 0.9) ==
          Approx((sinc_deriv(1, x + 0.9) - sinc_deriv(1, x)) / 0.9)
              .margin(1e-9));
  }
  // symmetry in (u, v)
  for (int i = 0; i < 50; ++i) {
    const double x = rng.uniform(-10.0, 10.0);
    const double u = rng.uniform(-0.4, 0.4);
    const double v = rng.uniform(-0.4, 0.4);
    if (u == 0.0 || v == 0.0) continue;
    CHECK(d2sinc(x, u, v) == Approx(d2sinc(x, v, u)).margin(1e-12));
  }
}
