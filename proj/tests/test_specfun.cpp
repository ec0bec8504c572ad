#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "polytoep/quadrature.hpp"
#include "polytoep/specfun.hpp"
#include "testutil.hpp"

using namespace polytoep;

TEST_CASE("Laguerre polynomial pinned values") {
  CHECK(laguerre_poly(0, 7.3) == 1.0);
  CHECK(std::abs(laguerre_poly(1, 2.0) - (-1.0)) < 1e-15);
  CHECK(std::abs(laguerre_poly(2, 2.0) - (-1.0)) < 1e-14);  // (4-8+2)/2
  CHECK(std::abs(laguerre_poly(3, 0.0) - 1.0) < 1e-15);
}

TEST_CASE("weighted Laguerre function: value, bound, consistency") {
  for (int k : {0, 1, 2, 5, 20, 64}) {
    CHECK(std::abs(laguerre_fn(k, 0.0) - 1.0) < 1e-14);
  }
  // |e^{-x/2} L_k(x)| <= 1 on the half-line.
  for (int k : {0, 1, 2, 5, 20, 64}) {
    for (double x : log_grid(1e-8, 2000.0, 400)) {
      CHECK(std::abs(laguerre_fn(k, x)) <= 1.0 + 1e-12);
    }
  }
  // Agreement with the naive product where the polynomial is representable.
  for (int k : {1, 3, 7, 10}) {
    for (double x : {0.1, 1.0, 4.5, 17.0, 30.0}) {
      const double naive = std::exp(-0.5 * x) * laguerre_poly(k, x);
      CHECK(testutil::rel_close(laguerre_fn(k, x), naive, 1e-11));
    }
  }
  CHECK_THROWS_AS(laguerre_fn(65, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(laguerre_fn(2, -0.5), std::domain_error);
}

TEST_CASE("Laguerre function orthonormality via Gauss-Laguerre") {
  const auto& rule = gauss_laguerre(64);
  for (int k : {0, 1, 3, 5, 8}) {
    for (int m : {0, 2, 5}) {
      double s = 0.0;
      for (size_t i = 0; i < rule.nodes.size(); ++i) {
        s += rule.weights[i] * laguerre_poly(k, rule.nodes[i]) *
             laguerre_poly(m, rule.nodes[i]);
      }
      CHECK(std::abs(s - (k == m ? 1.0 : 0.0)) < 1e-11);
    }
  }
}

TEST_CASE("first-moment identity: integral of x times squared function") {
  // integral_0^inf x (e^{-x/2} L_k(x))^2 dx = 2k + 1; this is the value of
  // the model reproducing kernel on its diagonal up to a factor 1/2.
  const auto& rule = gauss_laguerre(64);
  for (int k : {0, 1, 5, 20}) {
    double s = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      const double L = laguerre_poly(k, rule.nodes[i]);
      s += rule.weights[i] * rule.nodes[i] * L * L;
    }
    CHECK(testutil::rel_close(s, 2.0 * k + 1.0, 1e-12));
  }
}

TEST_CASE("generalized weighted Laguerre function pinned values") {
  CHECK(std::abs(gen_laguerre_fn(0, 1.0, 1.0) - 0.60653065971263342) < 1e-14);
  CHECK(std::abs(gen_laguerre_fn(2, 0.5, 2.0) - (-0.38180572230600177)) < 1e-13);
  CHECK(std::abs(gen_laguerre_fn(3, 1.0, 0.8) - 0.11831168856706066) < 1e-13);
  // alpha = 0 must coincide with the plain weighted function.
  for (int k : {0, 1, 4, 9}) {
    for (double x : {0.3, 2.0, 11.0}) {
      CHECK(testutil::rel_close(gen_laguerre_fn(k, 0.0, x), laguerre_fn(k, x), 1e-12));
    }
  }
  CHECK(gen_laguerre_fn(2, 1.5, 0.0) == 0.0);
  CHECK_THROWS_AS(gen_laguerre_fn(1, -1.0, 1.0), std::domain_error);
}

TEST_CASE("Legendre polynomial values and parity") {
  CHECK(legendre_poly(0, 0.3) == 1.0);
  CHECK(std::abs(legendre_poly(2, 0.5) - (-0.125)) < 1e-15);
  CHECK(std::abs(legendre_poly(2, 0.28) - (-0.3824)) < 1e-15);
  for (int k : {1, 2, 5, 20, 64}) {
    CHECK(std::abs(legendre_poly(k, 1.0) - 1.0) < 1e-12);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    CHECK(std::abs(legendre_poly(k, -0.7) - sign * legendre_poly(k, 0.7)) < 1e-12);
  }
}

TEST_CASE("squared-Laguerre expansion coefficients") {
  CHECK(laguerre_sq_expansion_coeff(0, 0, 0) == 1.0);
  CHECK(laguerre_sq_expansion_coeff(1, 0, 1) == -1.0);
  CHECK(laguerre_sq_expansion_coeff(1, 1, 1) == 1.0);
  CHECK(laguerre_sq_expansion_coeff(2, 1, 2) == -1.0);

  // Reconstruct L_k(x)^2 from the coefficients.
  for (int k : {2, 5, 8}) {
    const double x = 0.7;
    double acc = 0.0;
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; j <= k; ++j) {
        acc += laguerre_sq_expansion_coeff(k, i, j) * std::pow(x, i + j);
      }
    }
    const double want = laguerre_poly(k, x) * laguerre_poly(k, x);
    CHECK(testutil::rel_close(acc, want, 1e-10));
  }

  // Moment identity: sum over i, j of kappa (i+j)! equals the integral of
  // L_k^2 e^{-u}, which is 1. Exercises heavy cancellation by k = 12.
  for (int k : {1, 4, 8, 12}) {
    double acc = 0.0;
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; j <= k; ++j) {
        double fact = 1.0;
        for (int t = 2; t <= i + j; ++t) fact *= t;
        acc += laguerre_sq_expansion_coeff(k, i, j) * fact;
      }
    }
    CHECK(std::abs(acc - 1.0) < 1e-8);
  }

  CHECK_THROWS_AS(laguerre_sq_expansion_coeff(21, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(laguerre_sq_expansion_coeff(3, 1, 4), std::out_of_range);
  CHECK_THROWS_AS(laguerre_sq_expansion_coeff(3, -1, 2), std::out_of_range);
}

TEST_CASE("tail truncation point") {
  for (int k : {0, 1, 5, 20, 64}) {
    const double eps = 1e-18;
    const double U = laguerre_truncation_point(k, eps);
    CHECK(U < 1e6);
    CHECK(laguerre_fn_sq(k, U) < eps);
    CHECK(laguerre_fn_sq(k, 1.25 * U) < eps);
    CHECK(laguerre_fn_sq(k, 1.6 * U) < eps);
    // The squared function genuinely lives below U: its peak is order 1.
    CHECK(laguerre_fn_sq(k, 0.1) > 1e-3);
  }
  const double u20 = laguerre_truncation_point(20, 1e-18);
  CHECK(u20 > 100.0);
  CHECK(u20 < 400.0);
  // Cached second call returns the identical value.
  CHECK(laguerre_truncation_point(20, 1e-18) == u20);
}
