#pragma once

namespace polytoep {

// Hard cap on polynomial degree across the library. Double-precision
// recurrences are well conditioned far beyond this, but every consumer
// (expansion coefficients, truncation search, model kernels) is tested only
// up to here.
inline constexpr int kMaxPolyOrder = 64;

// Laguerre polynomial L_k(x) by the three-term recurrence. Overflows for
// large k*x; prefer laguerre_fn for anything evaluated on the half-line.
double laguerre_poly(int k, double x);

// e^{-x/2} L_k(x): bounded by 1 in absolute value on x >= 0. Computed with a
// damped recurrence so it stays finite where the bare polynomial overflows.
double laguerre_fn(int k, double x);

// Square of laguerre_fn; underflows to 0 deep in the tail, which callers
// treat as an exact zero.
double laguerre_fn_sq(int k, double x);

// e^{-x/2} x^{alpha/2} sqrt(k! / (k+alpha)!) L_k^{(alpha)}(x) for alpha > -1:
// the weighted generalized Laguerre function, normalized to unit L2 norm on
// the half-line.
double gen_laguerre_fn(int k, double alpha, double x);

// Legendre polynomial P_k(x), |x| <= 1 in the intended use.
double legendre_poly(int k, double x);

// Coefficient kappa(k, i, j) = (-1)^{i+j} / (i! j!) * C(k,i) * C(k,j)
// appearing in the expansion of L_k(x)^2 into monomials: L_k(x)^2 =
// sum_{i,j <= k} kappa(k,i,j) x^{i+j}. Exact (integer-ratio) for k <= 20.
double laguerre_sq_expansion_coeff(int k, int i, int j);

// Smallest U (up to search resolution) past which e^{-u} L_k(u)^2 stays
// below eps, guarded against sign-change zeros of the polynomial: the
// predicate must hold at U and at two forward probe points. Results cached.
double laguerre_truncation_point(int k, double eps);

}  // namespace polytoep
