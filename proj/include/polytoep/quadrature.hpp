#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace polytoep {

using cplx = std::complex<double>;

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;
  double truncation_eps = 1e-18;
  int oscillatory_min_panels_per_period = 8;
};

// Value-carrying result. A non-converged result still holds the best estimate
// and an honest error bound; callers decide whether that is fatal.
struct QuadResult {
  cplx value{0.0, 0.0};
  double error = 0.0;
  long evaluations = 0;
  bool converged = true;

  QuadResult& operator+=(const QuadResult& other) {
    value += other.value;
    error += other.error;
    evaluations += other.evaluations;
    converged = converged && other.converged;
    return *this;
  }
};

using Integrand = std::function<cplx(double)>;

// Adaptive Gauss-Kronrod (7,15) on a finite interval. Breakpoints inside
// (a, b) seed the initial partition; the worst panel (largest error estimate,
// ties to the smaller left endpoint) is bisected until the tolerance holds or
// the panel budget runs out. The final sum is accumulated in ascending panel
// order, so results are independent of the subdivision history.
QuadResult integrate(const Integrand& f, double a, double b,
                     const QuadratureConfig& cfg = {},
                     std::vector<double> breakpoints = {});

// Sums integrals over consecutive lobes [node(j), node(j+1)), j = 0, 1, ...
// Nodes must be strictly monotone (either direction). Intended for integrands
// whose sign or phase rotates once per lobe: the partial sums are then an
// (eventually) alternating sequence, and when plain summation stalls the tail
// is accelerated with iterated Aitken extrapolation.
QuadResult integrate_lobes(const Integrand& f,
                           const std::function<double(long)>& node,
                           long max_lobes, const QuadratureConfig& cfg = {});

// Iterated Aitken delta-squared limit of a sequence of partial sums.
// err_estimate receives the distance between the last two accelerated
// iterates (a practical, not rigorous, bound).
cplx aitken_limit(std::vector<cplx> partial_sums, double& err_estimate);

// Gauss-Laguerre rule: integral_0^inf f(x) e^{-x} dx ~= sum w_i f(x_i).
// Rules are computed on first use and cached; n is capped at 256.
struct GaussLaguerreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussLaguerreRule& gauss_laguerre(int n);

// Richardson extrapolation to h = 0 of samples (h_i, y_i) with h_i strictly
// decreasing, assuming an expansion y(h) = y0 + c1 h + c2 h^2 + ...
// err_estimate receives the difference between the last two diagonal entries.
cplx richardson_limit(const std::vector<double>& h, const std::vector<cplx>& y,
                      double& err_estimate);

// Geometric grid with n points from lo to hi inclusive (lo, hi > 0).
std::vector<double> log_grid(double lo, double hi, int n);

std::vector<double> linspace(double lo, double hi, int n);

// Compensated (Kahan) summation, used wherever panel or cell sums must be
// reproducible and insensitive to ordering noise.
double stable_sum(const std::vector<double>& xs);
cplx stable_sum(const std::vector<cplx>& xs);

}  // namespace polytoep
