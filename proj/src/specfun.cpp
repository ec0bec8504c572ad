#include "polytoep/specfun.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace polytoep {

namespace {

void check_order(int k) {
  if (k < 0 || k > kMaxPolyOrder) {
    throw std::invalid_argument("polynomial order out of range [0, 64]");
  }
}

int64_t binom64(int n, int r) {
  // Exact for the n <= 20 range used here.
  int64_t acc = 1;
  for (int t = 1; t <= r; ++t) {
    acc = acc * (n - r + t) / t;
  }
  return acc;
}

int64_t factorial64(int n) {
  int64_t acc = 1;
  for (int t = 2; t <= n; ++t) acc *= t;
  return acc;
}

}  // namespace

double laguerre_poly(int k, double x) {
  check_order(k);
  if (k == 0) return 1.0;
  double p0 = 1.0, p1 = 1.0 - x;
  for (int j = 2; j <= k; ++j) {
    const double p = ((2.0 * j - 1.0 - x) * p1 - (j - 1.0) * p0) / j;
    p0 = p1;
    p1 = p;
  }
  return p1;
}

double laguerre_fn(int k, double x) {
  check_order(k);
  if (!(x >= 0.0)) {
    throw std::domain_error("laguerre_fn: argument must be on the half-line");
  }
  if (k == 0) return std::exp(-0.5 * x);
  // Recurrence on q_j = L_j(x) e^{-j x / (2k)}: the damping accrues to the
  // full e^{-x/2} at j = k and keeps every intermediate representable.
  const double s = std::exp(-0.5 * x / k);
  double q0 = 1.0;
  double q1 = (1.0 - x) * s;
  for (int j = 2; j <= k; ++j) {
    const double q = ((2.0 * j - 1.0 - x) * q1 * s - (j - 1.0) * q0 * s * s) / j;
    q0 = q1;
    q1 = q;
  }
  return q1;
}

double laguerre_fn_sq(int k, double x) {
  const double v = laguerre_fn(k, x);
  return v * v;
}

double gen_laguerre_fn(int k, double alpha, double x) {
  check_order(k);
  if (!(alpha > -1.0)) {
    throw std::domain_error("gen_laguerre_fn: alpha must exceed -1");
  }
  if (!(x >= 0.0)) {
    throw std::domain_error("gen_laguerre_fn: argument must be on the half-line");
  }
  // Normalization sqrt(k! / Gamma(k + alpha + 1)).
  const double lognorm = 0.5 * (std::lgamma(k + 1.0) - std::lgamma(k + alpha + 1.0));
  if (x == 0.0) {
    if (alpha > 0.0) return 0.0;
    // alpha == 0 reduces to laguerre_fn; alpha < 0 diverges at 0.
    if (alpha == 0.0) return std::exp(lognorm) * 1.0 * 1.0;
    throw std::domain_error("gen_laguerre_fn: singular at 0 for alpha < 0");
  }
  double value;
  if (k == 0) {
    value = 1.0;
  } else {
    const double s = std::exp(-0.5 * x / k);
    double q0 = 1.0;
    double q1 = (1.0 + alpha - x) * s;
    for (int j = 2; j <= k; ++j) {
      const double q =
          ((2.0 * j - 1.0 + alpha - x) * q1 * s - (j - 1.0 + alpha) * q0 * s * s) / j;
      q0 = q1;
      q1 = q;
    }
    // q1 = L_k^{(alpha)}(x) e^{-x/2}; fold the rest in log space.
    return q1 * std::exp(lognorm + 0.5 * alpha * std::log(x));
  }
  return value * std::exp(lognorm + 0.5 * alpha * std::log(x) - 0.5 * x);
}

double legendre_poly(int k, double x) {
  check_order(k);
  if (k == 0) return 1.0;
  double p0 = 1.0, p1 = x;
  for (int j = 2; j <= k; ++j) {
    const double p = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
    p0 = p1;
    p1 = p;
  }
  return p1;
}

double laguerre_sq_expansion_coeff(int k, int i, int j) {
  if (k < 0 || k > 20) {
    throw std::invalid_argument("laguerre_sq_expansion_coeff: k out of range [0, 20]");
  }
  if (i < 0 || i > k || j < 0 || j > k) {
    throw std::out_of_range("laguerre_sq_expansion_coeff: indices must lie in [0, k]");
  }
  const int64_t num = binom64(k, i) * binom64(k, j);
  const __int128 den = static_cast<__int128>(factorial64(i)) * factorial64(j);
  const long double v =
      static_cast<long double>(num) / static_cast<long double>(den);
  const double signed_v = ((i + j) % 2 == 0) ? static_cast<double>(v)
                                             : -static_cast<double>(v);
  return signed_v;
}

double laguerre_truncation_point(int k, double eps) {
  check_order(k);
  if (!(eps > 0.0) || eps >= 1.0) {
    throw std::invalid_argument("laguerre_truncation_point: eps must be in (0, 1)");
  }

  static std::mutex mu;
  static std::map<std::pair<int, double>, double> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({k, eps});
    if (it != cache.end()) return it->second;
  }

  // Forward probes guard against the chance of landing near a polynomial
  // zero and declaring the tail dead too early.
  auto small_past = [&](double u) {
    return laguerre_fn_sq(k, u) < eps && laguerre_fn_sq(k, 1.25 * u) < eps &&
           laguerre_fn_sq(k, 1.6 * u) < eps;
  };

  double u = 4.0 * k + 6.0;
  while (!small_past(u) && u < 1e7) u *= 2.0;

  // Walk back down in 2^{1/16} steps; keep the last point still past the
  // tail. Resolution ~4%, which only costs a sliver of quadrature range.
  const double step = std::pow(2.0, 1.0 / 16.0);
  double best = u;
  while (best / step > 1.0 && small_past(best / step)) best /= step;

  {
    std::lock_guard<std::mutex> lock(mu);
    cache[{k, eps}] = best;
  }
  return best;
}

}  // namespace polytoep
