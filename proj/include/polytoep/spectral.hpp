#pragma once

#include <optional>
#include <vector>

#include "polytoep/quadrature.hpp"
#include "polytoep/symbols.hpp"

namespace polytoep {

// Spectral function of the order-k model operator: the operator with symbol a
// acts on level k as multiplication by
//   gamma(a, k, xi) = integral_0^inf a(u / (2 xi)) lfn_k(u)^2 du,  xi > 0.
// Its sup over xi is the operator norm, its endpoint limits recover the
// symbol's own endpoint values, and the double-sum expansion over weighted
// Laplace moments gives an independent evaluation route.

// Value with an honest accuracy diagnostic. A non-converged evaluation is a
// result, not a crash: near-divergent symbols are exactly the interesting
// case, and the best estimate plus its error bound is what gets reported.
struct GammaEval {
  cplx value{0.0, 0.0};
  double error = 0.0;
  long evaluations = 0;
  bool converged = true;
};

GammaEval gamma_eval(const Symbol& a, int k, double xi,
                     const QuadratureConfig& cfg = {});

// Convenience wrapper returning the best estimate.
cplx gamma_fn(const Symbol& a, int k, double xi, const QuadratureConfig& cfg = {});

// Weighted Laplace moment:
//   gamma_tilde(a, lambda, xi) = (2 xi)^{lambda+1}
//                                integral_0^inf a(u) u^lambda e^{-2 u xi} du.
GammaEval gamma_tilde(const Symbol& a, int lambda, double xi,
                      const QuadratureConfig& cfg = {});

// Expansion route: sum over s of c_s(k) * gamma_tilde(a, s, xi) where the
// coefficients collect the exact squared-polynomial expansion. Alternating
// coefficients grow with k, so the order is capped at 12 to keep the
// cancellation below the agreement tolerance with gamma_fn.
GammaEval gamma_via_expansion(const Symbol& a, int k, double xi,
                              const QuadratureConfig& cfg = {});

// Spectral curve over a frequency grid.
struct GammaCurve {
  int k = 0;
  std::string symbol;
  std::vector<double> xi_grid;
  std::vector<cplx> values;
  double sup_abs = 0.0;
};

GammaCurve gamma_curve(const Symbol& a, int k, const std::vector<double>& xi_grid,
                       const QuadratureConfig& cfg = {});

// Limits of gamma along xi -> 0+ and xi -> +inf, detected on the geometric
// sequences xi_j = 2^{-j} and 2^{+j}, j = 0..40. A coordinate is absent when
// no window of five consecutive terms settles within 1e-4 (oscillation or
// divergence); otherwise the settled tail is extrapolated.
struct EndpointLimits {
  std::optional<cplx> at_zero;
  std::optional<cplx> at_inf;
};

EndpointLimits endpoint_limits(const Symbol& a, int k,
                               const QuadratureConfig& cfg = {});

// Supremum of |gamma| over a frequency grid, sharpened by golden-section
// search around the grid argmax. A lower bound on the operator norm; the
// bracket records where the refinement looked.
struct NormEstimate {
  double value = 0.0;
  double xi_at = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  bool converged = true;
};

NormEstimate operator_norm(const Symbol& a, int k,
                           const std::vector<double>& xi_grid,
                           const QuadratureConfig& cfg = {});

// Finite-difference probe of d^n gamma / d xi^n: the plain derivative along
// geometrically increasing xi, and the xi^n-weighted derivative along
// geometrically decreasing xi. Both sequences should decay for symbols that
// are bounded or integrable.
struct DerivativeDecayReport {
  int order = 0;
  std::vector<double> xi_up;
  std::vector<double> deriv_up;      // |d^n gamma| at xi_up
  std::vector<double> xi_down;
  std::vector<double> weighted_down; // |xi^n d^n gamma| at xi_down
  bool decays_at_inf = false;
  bool decays_at_zero = false;
  bool step_noise = false;  // finite differences hit the quadrature noise floor
};

DerivativeDecayReport derivative_decay_probe(const Symbol& a, int k, int order,
                                             const QuadratureConfig& cfg = {});

}  // namespace polytoep
