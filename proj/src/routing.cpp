#include "polytoep/routing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace polytoep {

namespace {
constexpr double kPi = std::numbers::pi;
}

OscDescriptor scale_oscillation(OscDescriptor d, double s) {
  switch (d.kind) {
    case PhaseKind::Linear:
      d.w *= s;
      break;
    case PhaseKind::InversePower:
      d.c *= std::pow(s, -d.alpha);
      break;
    default:
      break;  // log phase picks up only a constant offset
  }
  return d;
}

QuadResult integrate_oscillation_aware(const Integrand& f, double D,
                                       std::vector<double> bps,
                                       const OscDescriptor& osc,
                                       const QuadratureConfig& cfg) {
  std::sort(bps.begin(), bps.end());
  bps.erase(std::remove_if(bps.begin(), bps.end(),
                           [&](double b) { return !(b > 0.0 && b < D); }),
            bps.end());

  const int ppp = std::max(2, cfg.oscillatory_min_panels_per_period);

  if (osc.kind == PhaseKind::Linear && osc.w > 0.0) {
    const double half_period = kPi / osc.w;
    const double seeds_needed = D / half_period * (ppp / 2.0);
    if (seeds_needed <= 2048.0) {
      const double step = 2.0 * half_period / ppp;
      for (double u = step; u < D; u += step) bps.push_back(u);
      return integrate(f, 0.0, D, cfg, std::move(bps));
    }
    // Long oscillatory range: seeded panels up to just past the last
    // breakpoint, half-period lobes with tail acceleration beyond.
    double head = bps.empty() ? 0.0 : bps.back();
    const long m0 = static_cast<long>(std::ceil(head / half_period)) + 1;
    const double lobe_start = m0 * half_period;
    QuadResult total;
    if (lobe_start > 0.0) {
      std::vector<double> head_bps = bps;
      const double step = 2.0 * half_period / ppp;
      for (double u = step; u < lobe_start; u += step) head_bps.push_back(u);
      total += integrate(f, 0.0, std::min(lobe_start, D), cfg,
                         std::move(head_bps));
    }
    if (lobe_start < D) {
      auto node = [m0, half_period, D](long m) {
        return std::min((m0 + m) * half_period, D);
      };
      total += integrate_lobes(f, node, 20000, cfg);
    }
    return total;
  }

  if (osc.kind == PhaseKind::InversePower && osc.c > 0.0) {
    // Phase c u^{-alpha}; unit phase-rate point splits the slow outer region
    // from the node accumulation at the origin.
    const double ustar =
        std::min(D, std::pow(osc.alpha * osc.c, 1.0 / (1.0 + osc.alpha)));
    const double phase_star = osc.c * std::pow(ustar, -osc.alpha);
    QuadResult total;
    if (ustar < D) {
      // Seed the outer region at fractions of the remaining phase.
      std::vector<double> outer = bps;
      const double phase_D = osc.c * std::pow(D, -osc.alpha);
      for (double ph = std::ceil(phase_D / kPi) * kPi; ph < phase_star;
           ph += kPi / (ppp / 2.0)) {
        if (ph <= 0.0) continue;
        outer.push_back(std::pow(osc.c / ph, 1.0 / osc.alpha));
      }
      outer.erase(std::remove_if(outer.begin(), outer.end(),
                                 [&](double b) { return !(b > ustar && b < D); }),
                  outer.end());
      total += integrate(f, ustar, D, cfg, std::move(outer));
    }
    // Oriented sum from ustar toward 0; flip the sign to integrate upward.
    auto node = [&osc, phase_star](long m) {
      return std::pow(osc.c / (phase_star + m * kPi), 1.0 / osc.alpha);
    };
    QuadResult lobes = integrate_lobes(f, node, 20000, cfg);
    lobes.value = -lobes.value;
    total += lobes;
    return total;
  }

  if (osc.kind == PhaseKind::Log) {
    // Phase s ln u: geometric seeding keeps panel phase spans bounded.
    const double rate = std::max(std::abs(osc.s), 1.0);
    const double factor = std::exp(2.0 * kPi / (rate * ppp));
    for (double u = D / factor; u > 1e-12 * D; u /= factor) bps.push_back(u);
    return integrate(f, 0.0, D, cfg, std::move(bps));
  }

  return integrate(f, 0.0, D, cfg, std::move(bps));
}

}  // namespace polytoep
