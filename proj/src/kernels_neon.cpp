#include <arm_neon.h>

#include <cmath>
#include <vector>

#include "polytoep/kernels.hpp"
#include "polytoep/specfun.hpp"

// NEON variants, two lanes wide. Structure mirrors the AVX2 file.

namespace polytoep::kernels {

namespace {

void lfn_block(int k, const double* x, double* out, std::size_t n) {
  std::vector<double> sbuf(n);
  const double inv2k = -0.5 / k;
  for (std::size_t m = 0; m < n; ++m) sbuf[m] = std::exp(x[m] * inv2k);

  std::size_t m = 0;
  for (; m + 2 <= n; m += 2) {
    const float64x2_t xv = vld1q_f64(x + m);
    const float64x2_t sv = vld1q_f64(sbuf.data() + m);
    const float64x2_t s2 = vmulq_f64(sv, sv);
    float64x2_t q0 = vdupq_n_f64(1.0);
    float64x2_t q1 = vmulq_f64(vsubq_f64(vdupq_n_f64(1.0), xv), sv);
    for (int j = 2; j <= k; ++j) {
      const float64x2_t a = vsubq_f64(vdupq_n_f64(2.0 * j - 1.0), xv);
      const float64x2_t t1 = vmulq_f64(q1, sv);
      const float64x2_t t0 =
          vmulq_f64(vmulq_f64(q0, s2), vdupq_n_f64(j - 1.0));
      const float64x2_t q =
          vmulq_f64(vfmaq_f64(vnegq_f64(t0), a, t1), vdupq_n_f64(1.0 / j));
      q0 = q1;
      q1 = q;
    }
    vst1q_f64(out + m, q1);
  }
  for (; m < n; ++m) out[m] = laguerre_fn(k, x[m]);
}

void laguerre_fn_batch_neon(int k, const double* x, double* out, std::size_t n) {
  if (k == 0) {
    for (std::size_t m = 0; m < n; ++m) out[m] = std::exp(-0.5 * x[m]);
    return;
  }
  lfn_block(k, x, out, n);
}

void laguerre_fn_sq_batch_neon(int k, const double* x, double* out, std::size_t n) {
  laguerre_fn_batch_neon(k, x, out, n);
  std::size_t m = 0;
  for (; m + 2 <= n; m += 2) {
    const float64x2_t v = vld1q_f64(out + m);
    vst1q_f64(out + m, vmulq_f64(v, v));
  }
  for (; m < n; ++m) out[m] *= out[m];
}

void legendre_batch_neon(int k, const double* x, double* out, std::size_t n) {
  if (k == 0) {
    for (std::size_t m = 0; m < n; ++m) out[m] = 1.0;
    return;
  }
  std::size_t m = 0;
  for (; m + 2 <= n; m += 2) {
    const float64x2_t xv = vld1q_f64(x + m);
    float64x2_t p0 = vdupq_n_f64(1.0);
    float64x2_t p1 = xv;
    for (int j = 2; j <= k; ++j) {
      const float64x2_t t1 =
          vmulq_f64(vdupq_n_f64(2.0 * j - 1.0), vmulq_f64(xv, p1));
      const float64x2_t p =
          vmulq_f64(vfmsq_f64(t1, vdupq_n_f64(j - 1.0), p0), vdupq_n_f64(1.0 / j));
      p0 = p1;
      p1 = p;
    }
    vst1q_f64(out + m, p1);
  }
  for (; m < n; ++m) out[m] = legendre_poly(k, x[m]);
}

void wavelet_row_neon(int k, double u, const double* om, double* out,
                      std::size_t n) {
  std::vector<double> t(n);
  const double two_u = 2.0 * u;
  for (std::size_t m = 0; m < n; ++m) t[m] = two_u * om[m];
  laguerre_fn_batch_neon(k, t.data(), out, n);
  std::size_t m = 0;
  for (; m + 2 <= n; m += 2) {
    const float64x2_t tv = vld1q_f64(t.data() + m);
    const float64x2_t v = vld1q_f64(out + m);
    vst1q_f64(out + m, vmulq_f64(vsqrtq_f64(tv), v));
  }
  for (; m < n; ++m) out[m] *= std::sqrt(t[m]);
}

void scale_complex_neon(std::complex<double>* c, const double* s, std::size_t n) {
  double* cd = reinterpret_cast<double*>(c);
  for (std::size_t m = 0; m < n; ++m) {
    const float64x2_t cv = vld1q_f64(cd + 2 * m);
    vst1q_f64(cd + 2 * m, vmulq_f64(cv, vdupq_n_f64(s[m])));
  }
}

double sumsq_complex_neon(const std::complex<double>* c, std::size_t n) {
  const double* cd = reinterpret_cast<const double*>(c);
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t m = 0; m < n; ++m) {
    const float64x2_t v = vld1q_f64(cd + 2 * m);
    acc = vfmaq_f64(acc, v, v);
  }
  return vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
}

}  // namespace

const Ops& neon_ops() {
  static const Ops ops{
      "neon",
      laguerre_fn_batch_neon,
      laguerre_fn_sq_batch_neon,
      legendre_batch_neon,
      wavelet_row_neon,
      scale_complex_neon,
      sumsq_complex_neon,
  };
  return ops;
}

}  // namespace polytoep::kernels
