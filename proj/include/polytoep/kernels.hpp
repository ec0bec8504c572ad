#pragma once

#include <complex>
#include <cstddef>

namespace polytoep::kernels {

// Batch primitives behind the hot loops (model-kernel rows, wavelet rows,
// field energies). Each has a scalar reference implementation plus SIMD
// variants compiled for the ISAs available at build time and selected once
// at runtime. Variants agree with the reference to ~1e-13 relative, not bit
// for bit (fused multiply-adds round differently).
struct Ops {
  const char* name;
  // out[m] = e^{-x[m]/2} L_k(x[m]); x[m] >= 0.
  void (*laguerre_fn_batch)(int k, const double* x, double* out, std::size_t n);
  // out[m] = (e^{-x[m]/2} L_k(x[m]))^2.
  void (*laguerre_fn_sq_batch)(int k, const double* x, double* out, std::size_t n);
  // out[m] = P_k(x[m]).
  void (*legendre_batch)(int k, const double* x, double* out, std::size_t n);
  // out[m] = sqrt(2 u om[m]) e^{-u om[m]} L_k(2 u om[m]); om[m] >= 0.
  void (*wavelet_row)(int k, double u, const double* om, double* out, std::size_t n);
  // c[m] *= s[m].
  void (*scale_complex)(std::complex<double>* c, const double* s, std::size_t n);
  // Sum of |c[m]|^2 in index order.
  double (*sumsq_complex)(const std::complex<double>* c, std::size_t n);
};

// Reference implementation, always available.
const Ops& scalar_ops();

// Variant chosen for this process: best ISA the CPU supports, overridable
// with POLYTOEP_SIMD=scalar|avx2|neon (unsupported requests fall back to
// scalar). The choice is made once and then pinned.
const Ops& ops();

// Name of the variant ops() returns.
const char* active_variant();

}  // namespace polytoep::kernels
