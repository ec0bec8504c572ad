#pragma once

#include <vector>

#include "polytoep/quadrature.hpp"
#include "polytoep/symbols.hpp"

namespace polytoep {

// Oscillation of u -> f(s u) given the oscillation of f.
OscDescriptor scale_oscillation(OscDescriptor d, double s);

// Adaptive integral over (0, D), routed by the integrand's phase behavior:
// linear phases get per-period panel seeding or half-period lobe summation,
// inverse-power phases get a lobe walk into the node accumulation at the
// origin, log phases get geometric seeding. Breakpoints are interior kinks
// or jumps of the integrand; out-of-range entries are dropped.
QuadResult integrate_oscillation_aware(const Integrand& f, double D,
                                       std::vector<double> breakpoints,
                                       const OscDescriptor& osc,
                                       const QuadratureConfig& cfg);

}  // namespace polytoep
