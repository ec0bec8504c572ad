#include <cmath>

#include "polytoep/kernels.hpp"
#include "polytoep/specfun.hpp"

namespace polytoep::kernels {

namespace {

void laguerre_fn_batch_scalar(int k, const double* x, double* out, std::size_t n) {
  for (std::size_t m = 0; m < n; ++m) out[m] = laguerre_fn(k, x[m]);
}

void laguerre_fn_sq_batch_scalar(int k, const double* x, double* out, std::size_t n) {
  for (std::size_t m = 0; m < n; ++m) {
    const double v = laguerre_fn(k, x[m]);
    out[m] = v * v;
  }
}

void legendre_batch_scalar(int k, const double* x, double* out, std::size_t n) {
  for (std::size_t m = 0; m < n; ++m) out[m] = legendre_poly(k, x[m]);
}

void wavelet_row_scalar(int k, double u, const double* om, double* out,
                        std::size_t n) {
  for (std::size_t m = 0; m < n; ++m) {
    const double t = 2.0 * u * om[m];
    out[m] = std::sqrt(t) * laguerre_fn(k, t);
  }
}

void scale_complex_scalar(std::complex<double>* c, const double* s, std::size_t n) {
  for (std::size_t m = 0; m < n; ++m) c[m] *= s[m];
}

double sumsq_complex_scalar(const std::complex<double>* c, std::size_t n) {
  double acc = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    acc += c[m].real() * c[m].real() + c[m].imag() * c[m].imag();
  }
  return acc;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{
      "scalar",
      laguerre_fn_batch_scalar,
      laguerre_fn_sq_batch_scalar,
      legendre_batch_scalar,
      wavelet_row_scalar,
      scale_complex_scalar,
      sumsq_complex_scalar,
  };
  return ops;
}

}  // namespace polytoep::kernels
