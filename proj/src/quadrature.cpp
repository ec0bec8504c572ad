#include "polytoep/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

namespace polytoep {

namespace {

// Gauss-Kronrod (7,15): Kronrod abscissae on [0,1] half-interval; odd indices
// are the embedded 7-point Gauss abscissae.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEstimate {
  cplx integral;
  double error;       // QUADPACK-style sharpened estimate
  double abs_integral;
};

PanelEstimate gk15(const Integrand& f, double a, double b, long& evals) {
  const double centr = 0.5 * (a + b);
  const double hlgth = 0.5 * (b - a);

  cplx fv_pos[7], fv_neg[7];
  const cplx fc = f(centr);
  for (int j = 0; j < 7; ++j) {
    const double dx = hlgth * kXgk[j];
    fv_pos[j] = f(centr + dx);
    fv_neg[j] = f(centr - dx);
  }
  evals += 15;

  cplx resg = fc * kWg[3];
  cplx resk = fc * kWgk[7];
  double resabs = std::abs(fc) * kWgk[7];
  for (int j = 0; j < 3; ++j) {
    const int jtw = 2 * j + 1;
    const cplx fsum = fv_pos[jtw] + fv_neg[jtw];
    resg += kWg[j] * fsum;
    resk += kWgk[jtw] * fsum;
    resabs += kWgk[jtw] * (std::abs(fv_pos[jtw]) + std::abs(fv_neg[jtw]));
  }
  for (int j = 0; j < 4; ++j) {
    const int jtwm1 = 2 * j;
    const cplx fsum = fv_pos[jtwm1] + fv_neg[jtwm1];
    resk += kWgk[jtwm1] * fsum;
    resabs += kWgk[jtwm1] * (std::abs(fv_pos[jtwm1]) + std::abs(fv_neg[jtwm1]));
  }

  const cplx reskh = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(fv_pos[j] - reskh) + std::abs(fv_neg[j] - reskh));
  }

  const double ahl = std::abs(hlgth);
  resabs *= ahl;
  resasc *= ahl;
  double err = std::abs(resk - resg) * ahl;
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double uflow = std::numeric_limits<double>::min();
  if (resabs > uflow / (50.0 * eps)) {
    err = std::max(err, 50.0 * eps * resabs);
  }
  return {resk * hlgth, err, resabs};
}

struct Panel {
  double a, b;
  cplx value;
  double error;
};

}  // namespace

QuadResult integrate(const Integrand& f, double a, double b,
                     const QuadratureConfig& cfg,
                     std::vector<double> breakpoints) {
  QuadResult out;
  if (!(std::isfinite(a) && std::isfinite(b))) {
    throw std::invalid_argument("integrate: endpoints must be finite");
  }
  double sign = 1.0;
  if (a == b) return out;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }

  std::vector<double> edges;
  edges.push_back(a);
  std::sort(breakpoints.begin(), breakpoints.end());
  for (double p : breakpoints) {
    if (p > edges.back() && p < b) edges.push_back(p);
  }
  edges.push_back(b);

  std::vector<Panel> panels;
  panels.reserve(edges.size() - 1);
  for (size_t i = 0; i + 1 < edges.size(); ++i) {
    const PanelEstimate e = gk15(f, edges[i], edges[i + 1], out.evaluations);
    panels.push_back({edges[i], edges[i + 1], e.integral, e.error});
  }

  auto tolerance = [&](double total_mag) {
    return std::max(cfg.abs_tol, cfg.rel_tol * total_mag);
  };

  while (true) {
    cplx total{0.0, 0.0};
    double toterr = 0.0;
    for (const Panel& p : panels) {
      total += p.value;
      toterr += p.error;
    }
    if (toterr <= tolerance(std::abs(total))) break;
    if ((int)panels.size() >= cfg.max_subdivisions) {
      out.converged = false;
      break;
    }
    // Worst panel first; ties resolved toward the smaller left endpoint so
    // the refinement path is deterministic.
    size_t worst = 0;
    for (size_t i = 1; i < panels.size(); ++i) {
      if (panels[i].error > panels[worst].error ||
          (panels[i].error == panels[worst].error && panels[i].a < panels[worst].a)) {
        worst = i;
      }
    }
    const Panel p = panels[worst];
    const double mid = 0.5 * (p.a + p.b);
    if (!(mid > p.a && mid < p.b)) {
      // Interval at the resolution floor; nothing further to gain.
      out.converged = false;
      break;
    }
    const PanelEstimate left = gk15(f, p.a, mid, out.evaluations);
    const PanelEstimate right = gk15(f, mid, p.b, out.evaluations);
    panels[worst] = {p.a, mid, left.integral, left.error};
    panels.push_back({mid, p.b, right.integral, right.error});
  }

  std::sort(panels.begin(), panels.end(),
            [](const Panel& x, const Panel& y) { return x.a < y.a; });
  std::vector<cplx> values;
  values.reserve(panels.size());
  double toterr = 0.0;
  for (const Panel& p : panels) {
    values.push_back(p.value);
    toterr += p.error;
  }
  out.value = sign * stable_sum(values);
  out.error = toterr;
  return out;
}

cplx aitken_limit(std::vector<cplx> s, double& err_estimate) {
  if (s.empty()) {
    err_estimate = std::numeric_limits<double>::infinity();
    return {0.0, 0.0};
  }
  cplx best = s.back();
  double best_err = s.size() >= 2 ? std::abs(s[s.size() - 1] - s[s.size() - 2])
                                  : std::numeric_limits<double>::infinity();
  const double tiny = 1e-300;
  int sweeps = 0;
  while (s.size() >= 3 && sweeps < 12) {
    std::vector<cplx> t;
    t.reserve(s.size() - 2);
    bool degenerate = false;
    for (size_t i = 0; i + 2 < s.size(); ++i) {
      const cplx d1 = s[i + 1] - s[i];
      const cplx d2 = s[i + 2] - s[i + 1];
      const cplx den = d2 - d1;
      if (std::abs(den) < tiny) {
        degenerate = true;
        break;
      }
      t.push_back(s[i + 2] - d2 * d2 / den);
    }
    if (degenerate || t.empty()) break;
    s = std::move(t);
    ++sweeps;
    if (s.size() >= 2) {
      const double e = std::abs(s.back() - s[s.size() - 2]);
      if (e < best_err) {
        best_err = e;
        best = s.back();
      }
    } else {
      const double e = std::abs(s.back() - best);
      if (e < best_err) {
        best_err = e;
        best = s.back();
      }
    }
  }
  err_estimate = best_err;
  return best;
}

QuadResult integrate_lobes(const Integrand& f,
                           const std::function<double(long)>& node,
                           long max_lobes, const QuadratureConfig& cfg) {
  QuadResult out;
  if (max_lobes <= 0) return out;

  // Each lobe is a single smooth hump, so a shallow adaptive pass suffices.
  QuadratureConfig lobe_cfg = cfg;
  lobe_cfg.rel_tol = std::min(cfg.rel_tol, 1e-12);
  lobe_cfg.abs_tol = cfg.abs_tol * 0.01;
  lobe_cfg.max_subdivisions = 12;

  std::vector<cplx> partial;
  partial.reserve(std::min<long>(max_lobes, 4096));
  cplx running{0.0, 0.0};
  double prev_term_mag = std::numeric_limits<double>::infinity();
  double carried_err = 0.0;

  double x0 = node(0);
  for (long j = 0; j < max_lobes; ++j) {
    const double x1 = node(j + 1);
    if (!(std::isfinite(x0) && std::isfinite(x1)) || x0 == x1) break;
    QuadResult lobe = integrate(f, x0, x1, lobe_cfg);
    out.evaluations += lobe.evaluations;
    carried_err += lobe.error;
    running += lobe.value;
    partial.push_back(running);
    x0 = x1;

    const double term_mag = std::abs(lobe.value);
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(running));
    // For an alternating series the remainder is bounded by the next term;
    // require two consecutive small terms to dodge accidental near-zeros.
    if (term_mag <= 0.25 * tol && prev_term_mag <= 0.25 * tol) {
      out.value = running;
      out.error = carried_err + term_mag;
      return out;
    }
    prev_term_mag = term_mag;
  }

  // Plain summation did not finish; accelerate the tail of partial sums.
  const size_t window = std::min<size_t>(partial.size(), 160);
  std::vector<cplx> tail(partial.end() - window, partial.end());
  double acc_err = 0.0;
  const cplx accelerated = aitken_limit(std::move(tail), acc_err);
  out.value = accelerated;
  out.error = carried_err + 4.0 * acc_err;
  out.converged =
      out.error <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(accelerated)) * 10.0;
  return out;
}

namespace {

// Laguerre polynomial value and derivative scaled by e^{-x/2}; stays
// representable for x up to ~1400 where the plain polynomial overflows.
// Long double throughout: the n = 128 rule would otherwise lose ~3 digits.
void scaled_laguerre_pair(int n, long double x, long double& pn,
                          long double& dpn) {
  const long double s = std::exp(-0.5L * x / std::max(1, n));
  // Recurrence with per-step damping: q_k = L_k * e^{-kx/(2n)}.
  long double q0 = 1.0L;          // L_0 scaled by s^0
  long double q1 = (1.0L - x) * s;
  if (n == 0) {
    pn = q0;
    dpn = 0.0L;
    return;
  }
  long double qk = q1, qkm1 = q0;
  for (int k = 2; k <= n; ++k) {
    const long double qk_new =
        (((2.0L * k - 1.0L - x) * qk) * s - (k - 1.0L) * qkm1 * s * s) / k;
    qkm1 = qk;
    qk = qk_new;
  }
  pn = qk;  // = L_n(x) e^{-x/2}
  // L_n'(x) = n (L_n - L_{n-1}) / x, same scaling: qkm1 carries s^{n-1}.
  if (x != 0.0L) {
    dpn = n * (qk - qkm1 * s) / x;
  } else {
    dpn = -static_cast<long double>(n);  // L_n'(0) = -n, scale factor 1 there
  }
}

GaussLaguerreRule build_gauss_laguerre(int n) {
  GaussLaguerreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  long double z = 0.0L;
  long double z_prev = 0.0L;
  for (int i = 0; i < n; ++i) {
    if (i == 0) {
      z = 3.0L / (1.0L + 2.4L * n);
    } else if (i == 1) {
      z_prev = z;
      z += 15.0L / (1.0L + 2.5L * n);
    } else {
      const long double ai = i - 1;
      const long double zn = z + ((1.0L + 2.55L * ai) / (1.9L * ai)) * (z - z_prev);
      z_prev = z;
      z = zn;
    }
    for (int iter = 0; iter < 100; ++iter) {
      long double pn, dpn;
      scaled_laguerre_pair(n, z, pn, dpn);
      const long double dz = pn / dpn;
      z -= dz;
      if (std::abs(dz) <= 1e-18L * std::max(1.0L, z)) break;
    }
    long double pn1, dpn1;
    scaled_laguerre_pair(n + 1, z, pn1, dpn1);
    // Classical weight w_i = x_i / ((n+1)^2 L_{n+1}(x_i)^2). pn1 carries a
    // factor e^{-z/2}, hence the extra e^{-z}. Weights at the outermost nodes
    // of very high-order rules land in the denormal range; their
    // contributions are below double resolution anyway.
    rule.nodes[i] = static_cast<double>(z);
    rule.weights[i] = static_cast<double>(
        z * std::exp(-z) / ((n + 1.0L) * (n + 1.0L) * pn1 * pn1));
  }
  return rule;
}

}  // namespace

const GaussLaguerreRule& gauss_laguerre(int n) {
  if (n < 1 || n > 256) {
    throw std::invalid_argument("gauss_laguerre: order out of range [1, 256]");
  }
  static std::mutex mu;
  static std::map<int, GaussLaguerreRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, build_gauss_laguerre(n)).first;
  }
  return it->second;
}

cplx richardson_limit(const std::vector<double>& h, const std::vector<cplx>& y,
                      double& err_estimate) {
  if (h.size() != y.size() || h.empty()) {
    throw std::invalid_argument("richardson_limit: mismatched or empty input");
  }
  // Neville tableau evaluated at h = 0.
  const size_t n = h.size();
  std::vector<cplx> d(y);
  cplx prev_diag = d[0];
  err_estimate = std::numeric_limits<double>::infinity();
  for (size_t level = 1; level < n; ++level) {
    for (size_t i = 0; i + level < n; ++i) {
      const double hi = h[i];
      const double hj = h[i + level];
      d[i] = (hi * d[i + 1] - hj * d[i]) / (hi - hj);
    }
    err_estimate = std::abs(d[0] - prev_diag);
    prev_diag = d[0];
  }
  return d[0];
}

std::vector<double> log_grid(double lo, double hi, int n) {
  if (!(lo > 0.0) || !(hi > 0.0)) {
    throw std::invalid_argument("log_grid: endpoints must be positive");
  }
  if (n < 1) throw std::invalid_argument("log_grid: need at least one point");
  std::vector<double> xs(n);
  if (n == 1) {
    xs[0] = lo;
    return xs;
  }
  const double la = std::log(lo), lb = std::log(hi);
  for (int i = 0; i < n; ++i) {
    xs[i] = std::exp(la + (lb - la) * i / (n - 1.0));
  }
  xs.front() = lo;
  xs.back() = hi;
  return xs;
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 1) throw std::invalid_argument("linspace: need at least one point");
  std::vector<double> xs(n);
  if (n == 1) {
    xs[0] = lo;
    return xs;
  }
  for (int i = 0; i < n; ++i) {
    xs[i] = lo + (hi - lo) * i / (n - 1.0);
  }
  xs.back() = hi;
  return xs;
}

double stable_sum(const std::vector<double>& xs) {
  double sum = 0.0, c = 0.0;
  for (double x : xs) {
    const double y = x - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
  return sum;
}

cplx stable_sum(const std::vector<cplx>& xs) {
  double sr = 0.0, cr = 0.0, si = 0.0, ci = 0.0;
  for (const cplx& x : xs) {
    double y = x.real() - cr;
    double t = sr + y;
    cr = (t - sr) - y;
    sr = t;
    y = x.imag() - ci;
    t = si + y;
    ci = (t - si) - y;
    si = t;
  }
  return {sr, si};
}

}  // namespace polytoep
