#include "polytoep/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "polytoep/routing.hpp"
#include "polytoep/specfun.hpp"

namespace polytoep {

namespace {

void check_xi(double xi) {
  if (!(xi > 0.0)) throw std::domain_error("frequency must be positive");
}

GammaEval to_eval(const QuadResult& r) {
  return GammaEval{r.value, r.error, r.evaluations, r.converged};
}

// Gauss-Laguerre fast path for gamma: valid when the mapped symbol is smooth
// on the node range (no jumps, no oscillation descriptor). Returns false when
// the two-rule error check rejects.
bool gamma_gauss_laguerre(const Symbol& a, int k, double xi,
                          const QuadratureConfig& cfg, GammaEval& out) {
  const auto eval_rule = [&](int n) {
    const auto& rule = gauss_laguerre(n);
    std::vector<cplx> terms(rule.nodes.size());
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      const double x = rule.nodes[i];
      const double lk = laguerre_poly(k, x);
      terms[i] = rule.weights[i] * (lk * lk) * a.eval(x / (2.0 * xi));
    }
    return stable_sum(terms);
  };
  const cplx coarse = eval_rule(64);
  const cplx fine = eval_rule(128);
  const double err = std::abs(fine - coarse);
  const double tol =
      std::max(cfg.abs_tol, cfg.rel_tol * std::max(1.0, std::abs(fine)));
  if (err > 10.0 * tol) return false;
  out = GammaEval{fine, err, 192, true};
  return true;
}

}  // namespace

GammaEval gamma_eval(const Symbol& a, int k, double xi,
                     const QuadratureConfig& cfg) {
  check_xi(xi);
  if (a.axis() != Axis::Vertical) {
    throw std::invalid_argument("spectral function needs a vertical symbol");
  }

  const auto sym_bps = a.breakpoints();
  if (!a.oscillation().oscillatory() && sym_bps.empty()) {
    GammaEval fast;
    if (gamma_gauss_laguerre(a, k, xi, cfg, fast)) return fast;
  }

  const double trunc = laguerre_truncation_point(k, cfg.truncation_eps);
  if (xi >= 1.0) {
    // a(u / (2 xi)) lfn_k(u)^2 on (0, trunc).
    const double s = 1.0 / (2.0 * xi);
    Integrand f = [&a, k, s](double u) {
      const double w = laguerre_fn_sq(k, u);
      if (w == 0.0) return cplx(0.0, 0.0);
      return a.eval(u * s) * w;
    };
    std::vector<double> bps;
    for (double b : sym_bps) bps.push_back(b * 2.0 * xi);
    return to_eval(
        routed_integral(f, trunc, std::move(bps), scale_osc(a.oscillation(), s), cfg));
  }

  // 2 xi a(u) lfn_k(2 u xi)^2 on (0, trunc / (2 xi)): the symbol is sampled
  // on its own axis, so jump positions and phase rates stay fixed as xi -> 0.
  const double tx = 2.0 * xi;
  Integrand f = [&a, k, tx](double u) {
    const double w = laguerre_fn_sq(k, u * tx);
    if (w == 0.0) return cplx(0.0, 0.0);
    return tx * a.eval(u) * w;
  };
  return to_eval(
      routed_integral(f, trunc / tx, sym_bps, a.oscillation(), cfg));
}

cplx gamma_fn(const Symbol& a, int k, double xi, const QuadratureConfig& cfg) {
  return gamma_eval(a, k, xi, cfg).value;
}

GammaEval gamma_tilde(const Symbol& a, int lambda, double xi,
                      const QuadratureConfig& cfg) {
  check_xi(xi);
  if (lambda < 0 || lambda > 2 * kMaxPolyOrder) {
    throw std::invalid_argument("moment order out of range");
  }

  // Truncation for t^lambda e^{-t}: past T the weight stays below
  // eps * lambda! (the weight's own mass scale).
  double lam_fact_log = std::lgamma(lambda + 1.0);
  double T = std::max(40.0, 2.0 * lambda + 40.0);
  while (lambda * std::log(T) - T > std::log(cfg.truncation_eps) + lam_fact_log) {
    T *= 1.2;
  }

  const auto sym_bps = a.breakpoints();
  const bool osc = a.oscillation().oscillatory();

  if (xi >= 1.0 || (!osc && sym_bps.empty())) {
    const double s = 1.0 / (2.0 * xi);
    Integrand f = [&a, lambda, s](double t) {
      const double w = std::pow(t, lambda) * std::exp(-t);
      if (w == 0.0) return cplx(0.0, 0.0);
      return a.eval(t * s) * w;
    };
    std::vector<double> bps;
    for (double b : sym_bps) bps.push_back(b * 2.0 * xi);
    return to_eval(
        routed_integral(f, T, std::move(bps), scale_osc(a.oscillation(), s), cfg));
  }

  const double tx = 2.0 * xi;
  const double front = std::pow(tx, lambda + 1);
  Integrand f = [&a, lambda, tx, front](double u) {
    const double w = std::pow(u, lambda) * std::exp(-u * tx);
    if (w == 0.0) return cplx(0.0, 0.0);
    return front * a.eval(u) * w;
  };
  return to_eval(routed_integral(f, T / tx, sym_bps, a.oscillation(), cfg));
}

GammaEval gamma_via_expansion(const Symbol& a, int k, double xi,
                              const QuadratureConfig& cfg) {
  if (k < 0 || k > 12) {
    throw std::invalid_argument(
        "expansion order capped at 12: the alternating coefficients outgrow "
        "double-precision cancellation beyond that");
  }
  check_xi(xi);

  // Collect coefficients by total moment order s = i + j.
  std::vector<double> c(2 * k + 1, 0.0);
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; j <= k; ++j) {
      c[i + j] += laguerre_sq_expansion_coeff(k, i, j);
    }
  }

  GammaEval total;
  std::vector<cplx> terms;
  terms.reserve(c.size());
  for (int s = 0; s <= 2 * k; ++s) {
    GammaEval m = gamma_tilde(a, s, xi, cfg);
    terms.push_back(c[s] * m.value);
    total.error += std::abs(c[s]) * m.error;
    total.evaluations += m.evaluations;
    total.converged = total.converged && m.converged;
  }
  total.value = stable_sum(terms);
  return total;
}

GammaCurve gamma_curve(const Symbol& a, int k, const std::vector<double>& xi_grid,
                       const QuadratureConfig& cfg) {
  for (size_t i = 0; i < xi_grid.size(); ++i) {
    if (!(xi_grid[i] > 0.0) || (i > 0 && !(xi_grid[i] > xi_grid[i - 1]))) {
      throw std::invalid_argument("frequency grid must be positive increasing");
    }
  }
  GammaCurve curve;
  curve.k = k;
  curve.symbol = a.describe();
  curve.xi_grid = xi_grid;
  curve.values.reserve(xi_grid.size());
  for (double xi : xi_grid) {
    const GammaEval g = gamma_eval(a, k, xi, cfg);
    curve.values.push_back(g.value);
    curve.sup_abs = std::max(curve.sup_abs, std::abs(g.value));
  }
  return curve;
}

namespace {

std::optional<cplx> settle_limit(const Symbol& a, int k, bool toward_zero,
                                 const QuadratureConfig& cfg) {
  constexpr int kMaxJ = 40;
  constexpr int kWindow = 5;
  constexpr double kTol = 1e-4;
  std::vector<cplx> seq;
  for (int j = 0; j <= kMaxJ; ++j) {
    const double xi = toward_zero ? std::ldexp(1.0, -j) : std::ldexp(1.0, j);
    seq.push_back(gamma_eval(a, k, xi, cfg).value);
    if (static_cast<int>(seq.size()) < kWindow) continue;
    double spread = 0.0;
    for (int p = j - kWindow + 1; p <= j; ++p) {
      for (int q = p + 1; q <= j; ++q) {
        spread = std::max(spread, std::abs(seq[p] - seq[q]));
      }
    }
    if (spread <= kTol) {
      // Settled: accelerate the geometric tail toward the limit.
      const size_t take = std::min<size_t>(seq.size(), 12);
      std::vector<cplx> tail(seq.end() - take, seq.end());
      double aerr = 0.0;
      const cplx accel = aitken_limit(tail, aerr);
      if (aerr < kTol) return accel;
      cplx mean{0.0, 0.0};
      for (int p = j - kWindow + 1; p <= j; ++p) mean += seq[p];
      return mean / static_cast<double>(kWindow);
    }
  }
  return std::nullopt;
}

}  // namespace

EndpointLimits endpoint_limits(const Symbol& a, int k,
                               const QuadratureConfig& cfg) {
  EndpointLimits out;
  out.at_zero = settle_limit(a, k, true, cfg);
  out.at_inf = settle_limit(a, k, false, cfg);
  return out;
}

NormEstimate operator_norm(const Symbol& a, int k,
                           const std::vector<double>& xi_grid,
                           const QuadratureConfig& cfg) {
  if (xi_grid.size() < 8 || !(xi_grid.front() <= 1e-3) ||
      !(xi_grid.back() >= 1e3)) {
    throw std::invalid_argument(
        "norm grid must span at least [1e-3, 1e3] with several points");
  }

  NormEstimate est;
  size_t argmax = 0;
  std::vector<double> mags(xi_grid.size());
  for (size_t i = 0; i < xi_grid.size(); ++i) {
    const GammaEval g = gamma_eval(a, k, xi_grid[i], cfg);
    est.converged = est.converged && g.converged;
    mags[i] = std::abs(g.value);
    if (mags[i] > mags[argmax]) argmax = i;
  }
  est.value = mags[argmax];
  est.xi_at = xi_grid[argmax];
  est.bracket_lo = xi_grid[argmax > 0 ? argmax - 1 : 0];
  est.bracket_hi = xi_grid[std::min(argmax + 1, xi_grid.size() - 1)];

  // Golden-section maximization of |gamma| on log-frequency in the bracket.
  double lo = std::log(est.bracket_lo);
  double hi = std::log(est.bracket_hi);
  if (hi > lo) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    auto probe = [&](double t) {
      const GammaEval g = gamma_eval(a, k, std::exp(t), cfg);
      est.converged = est.converged && g.converged;
      return std::abs(g.value);
    };
    double x1 = hi - gr * (hi - lo);
    double x2 = lo + gr * (hi - lo);
    double f1 = probe(x1);
    double f2 = probe(x2);
    for (int it = 0; it < 60 && hi - lo > 1e-10; ++it) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + gr * (hi - lo);
        f2 = probe(x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - gr * (hi - lo);
        f1 = probe(x1);
      }
    }
    const double best = std::max(f1, f2);
    if (best > est.value) {
      est.value = best;
      est.xi_at = std::exp(0.5 * (lo + hi));
    }
  }
  return est;
}

namespace {

struct Stencil {
  std::vector<int> offsets;
  std::vector<double> coeffs;
};

Stencil central_stencil(int order) {
  switch (order) {
    case 1:
      return {{-1, 1}, {-0.5, 0.5}};
    case 2:
      return {{-1, 0, 1}, {1.0, -2.0, 1.0}};
    case 3:
      return {{-2, -1, 1, 2}, {-0.5, 1.0, -1.0, 0.5}};
    case 4:
      return {{-2, -1, 0, 1, 2}, {1.0, -4.0, 6.0, -4.0, 1.0}};
    default:
      throw std::invalid_argument("derivative order must be 1..4");
  }
}

}  // namespace

DerivativeDecayReport derivative_decay_probe(const Symbol& a, int k, int order,
                                             const QuadratureConfig& cfg) {
  const Stencil st = central_stencil(order);
  DerivativeDecayReport rep;
  rep.order = order;

  const double h_rel = std::pow(1e-10, 1.0 / (order + 2));
  double coeff_mass = 0.0;
  for (double c : st.coeffs) coeff_mass += std::abs(c);

  auto finite_diff = [&](double xi, double& noise_floor) {
    const double h = xi * h_rel;
    cplx acc{0.0, 0.0};
    double scale = 0.0;
    for (size_t i = 0; i < st.offsets.size(); ++i) {
      const GammaEval g = gamma_eval(a, k, xi + st.offsets[i] * h, cfg);
      acc += st.coeffs[i] * g.value;
      scale = std::max(scale, std::abs(g.value));
    }
    const double hn = std::pow(h, order);
    noise_floor = coeff_mass * (cfg.abs_tol + cfg.rel_tol * scale) / hn;
    return std::abs(acc) / hn;
  };

  auto verdict = [](const std::vector<double>& seq,
                    const std::vector<double>& floors, bool& noisy) {
    const double peak = *std::max_element(seq.begin(), seq.end());
    const double worst_floor = *std::max_element(floors.begin(), floors.end());
    if (peak <= 3.0 * worst_floor) {
      noisy = true;  // identically zero within quadrature noise
      return true;
    }
    double tail = 0.0, tail_floor = 0.0;
    for (size_t i = seq.size() - 3; i < seq.size(); ++i) {
      tail = std::max(tail, seq[i]);
      tail_floor = std::max(tail_floor, floors[i]);
    }
    if (tail_floor > 0.5 * tail) noisy = true;
    return tail <= std::max(0.1 * peak, 3.0 * tail_floor);
  };

  std::vector<double> floors_up, floors_down;
  for (int j = 0; j <= 12; ++j) {
    const double xi = std::ldexp(1.0, j);
    double nf = 0.0;
    rep.xi_up.push_back(xi);
    rep.deriv_up.push_back(finite_diff(xi, nf));
    floors_up.push_back(nf);
  }
  for (int j = 0; j <= 12; ++j) {
    const double xi = std::ldexp(1.0, -j);
    double nf = 0.0;
    rep.xi_down.push_back(xi);
    const double d = finite_diff(xi, nf);
    const double wn = std::pow(xi, order);
    rep.weighted_down.push_back(wn * d);
    floors_down.push_back(wn * nf);
  }

  bool noisy = false;
  rep.decays_at_inf = verdict(rep.deriv_up, floors_up, noisy);
  rep.decays_at_zero = verdict(rep.weighted_down, floors_down, noisy);
  rep.step_noise = noisy;
  return rep;
}

}  // namespace polytoep
