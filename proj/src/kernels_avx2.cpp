#include <immintrin.h>

#include <cmath>
#include <vector>

#include "polytoep/kernels.hpp"
#include "polytoep/specfun.hpp"

// AVX2/FMA variants. The transcendental seeds (exp) stay scalar; the
// recurrences, which dominate for k of any size, run four lanes wide.

namespace polytoep::kernels {

namespace {

// out[m] = e^{-x/2} L_k(x) for a block of n values, k >= 1.
void lfn_block(int k, const double* x, double* out, std::size_t n) {
  std::vector<double> sbuf(n);
  const double inv2k = -0.5 / k;
  for (std::size_t m = 0; m < n; ++m) sbuf[m] = std::exp(x[m] * inv2k);

  std::size_t m = 0;
  for (; m + 4 <= n; m += 4) {
    const __m256d xv = _mm256_loadu_pd(x + m);
    const __m256d sv = _mm256_loadu_pd(sbuf.data() + m);
    const __m256d s2 = _mm256_mul_pd(sv, sv);
    __m256d q0 = _mm256_set1_pd(1.0);
    __m256d q1 = _mm256_mul_pd(_mm256_sub_pd(_mm256_set1_pd(1.0), xv), sv);
    for (int j = 2; j <= k; ++j) {
      const __m256d a = _mm256_sub_pd(_mm256_set1_pd(2.0 * j - 1.0), xv);
      const __m256d t1 = _mm256_mul_pd(q1, sv);
      const __m256d t0 = _mm256_mul_pd(_mm256_mul_pd(q0, s2),
                                       _mm256_set1_pd(j - 1.0));
      const __m256d q = _mm256_mul_pd(_mm256_fmsub_pd(a, t1, t0),
                                      _mm256_set1_pd(1.0 / j));
      q0 = q1;
      q1 = q;
    }
    _mm256_storeu_pd(out + m, q1);
  }
  for (; m < n; ++m) out[m] = laguerre_fn(k, x[m]);
}

void laguerre_fn_batch_avx2(int k, const double* x, double* out, std::size_t n) {
  if (k == 0) {
    for (std::size_t m = 0; m < n; ++m) out[m] = std::exp(-0.5 * x[m]);
    return;
  }
  lfn_block(k, x, out, n);
}

void laguerre_fn_sq_batch_avx2(int k, const double* x, double* out, std::size_t n) {
  laguerre_fn_batch_avx2(k, x, out, n);
  std::size_t m = 0;
  for (; m + 4 <= n; m += 4) {
    const __m256d v = _mm256_loadu_pd(out + m);
    _mm256_storeu_pd(out + m, _mm256_mul_pd(v, v));
  }
  for (; m < n; ++m) out[m] *= out[m];
}

void legendre_batch_avx2(int k, const double* x, double* out, std::size_t n) {
  if (k == 0) {
    for (std::size_t m = 0; m < n; ++m) out[m] = 1.0;
    return;
  }
  std::size_t m = 0;
  for (; m + 4 <= n; m += 4) {
    const __m256d xv = _mm256_loadu_pd(x + m);
    __m256d p0 = _mm256_set1_pd(1.0);
    __m256d p1 = xv;
    for (int j = 2; j <= k; ++j) {
      const __m256d t1 = _mm256_mul_pd(_mm256_set1_pd(2.0 * j - 1.0),
                                       _mm256_mul_pd(xv, p1));
      const __m256d p = _mm256_mul_pd(
          _mm256_fnmadd_pd(_mm256_set1_pd(j - 1.0), p0, t1),
          _mm256_set1_pd(1.0 / j));
      p0 = p1;
      p1 = p;
    }
    _mm256_storeu_pd(out + m, p1);
  }
  for (; m < n; ++m) out[m] = legendre_poly(k, x[m]);
}

void wavelet_row_avx2(int k, double u, const double* om, double* out,
                      std::size_t n) {
  std::vector<double> t(n);
  const double two_u = 2.0 * u;
  std::size_t m = 0;
  for (; m + 4 <= n; m += 4) {
    const __m256d o = _mm256_loadu_pd(om + m);
    _mm256_storeu_pd(t.data() + m, _mm256_mul_pd(_mm256_set1_pd(two_u), o));
  }
  for (; m < n; ++m) t[m] = two_u * om[m];

  laguerre_fn_batch_avx2(k, t.data(), out, n);

  m = 0;
  for (; m + 4 <= n; m += 4) {
    const __m256d tv = _mm256_loadu_pd(t.data() + m);
    const __m256d v = _mm256_loadu_pd(out + m);
    _mm256_storeu_pd(out + m, _mm256_mul_pd(_mm256_sqrt_pd(tv), v));
  }
  for (; m < n; ++m) out[m] *= std::sqrt(t[m]);
}

void scale_complex_avx2(std::complex<double>* c, const double* s, std::size_t n) {
  double* cd = reinterpret_cast<double*>(c);
  std::size_t m = 0;
  for (; m + 2 <= n; m += 2) {
    const __m256d cv = _mm256_loadu_pd(cd + 2 * m);
    const __m256d sv = _mm256_setr_pd(s[m], s[m], s[m + 1], s[m + 1]);
    _mm256_storeu_pd(cd + 2 * m, _mm256_mul_pd(cv, sv));
  }
  for (; m < n; ++m) c[m] *= s[m];
}

double sumsq_complex_avx2(const std::complex<double>* c, std::size_t n) {
  const double* cd = reinterpret_cast<const double*>(c);
  __m256d acc = _mm256_setzero_pd();
  std::size_t m = 0;
  for (; m + 2 <= n; m += 2) {
    const __m256d v = _mm256_loadu_pd(cd + 2 * m);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double total = (lanes[0] + lanes[2]) + (lanes[1] + lanes[3]);
  for (; m < n; ++m) {
    total += c[m].real() * c[m].real() + c[m].imag() * c[m].imag();
  }
  return total;
}

}  // namespace

const Ops& avx2_ops() {
  static const Ops ops{
      "avx2",
      laguerre_fn_batch_avx2,
      laguerre_fn_sq_batch_avx2,
      legendre_batch_avx2,
      wavelet_row_avx2,
      scale_complex_avx2,
      sumsq_complex_avx2,
  };
  return ops;
}

}  // namespace polytoep::kernels
