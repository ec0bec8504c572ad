#pragma once

#include <cmath>
#include <complex>
#include <functional>

// Small helpers shared by the test binaries. The Simpson rule here is the
// independent cross-check oracle: it shares no code with the library's
// Gauss-Kronrod engine.

namespace testutil {

inline double simpson(const std::function<double(double)>& f, double a,
                      double b, int panels) {
  if (panels % 2 != 0) ++panels;
  const double h = (b - a) / panels;
  double acc = f(a) + f(b);
  for (int i = 1; i < panels; ++i) {
    acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  }
  return acc * h / 3.0;
}

inline bool rel_close(double got, double want, double tol) {
  return std::abs(got - want) <= tol * std::max(1.0, std::abs(want));
}

inline bool rel_close(std::complex<double> got, std::complex<double> want,
                      double tol) {
  return std::abs(got - want) <= tol * std::max(1.0, std::abs(want));
}

// Deterministic pseudo-random doubles in [lo, hi] (xorshift-based, fixed
// behavior across platforms).
class Rng {
 public:
  explicit Rng(unsigned long long seed) : state_(seed ? seed : 0x9e3779b9ULL) {}
  double uniform(double lo, double hi) {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    const double u = (state_ >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

 private:
  unsigned long long state_;
};

}  // namespace testutil
