#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polytoep/quadrature.hpp"

namespace polytoep {

// Operator symbols: functions a(u) on the positive half-line (vertical) or
// b(v) on the real line (horizontal). Immutable trees shared by value.

enum class Axis { Vertical, Horizontal };

enum class SymbolKind {
  Constant,
  Indicator,          // characteristic function of [0, lambda]
  PowerLogSquared,    // u^{-beta} ln^2(u^{-alpha})
  OscPower,           // u^{-beta} sin(u^{-alpha})
  OscPowerPositive,   // u^{tau}  sin(u^{-alpha})
  ComplexExp,         // e^{2ui}
  SineU,              // sin u
  PureOscillation,    // u^{i}
  Power,              // u^{p}
  Tabulated,
  Product,
  Sum,
  Scaled,
};

// How a symbol oscillates, for quadrature routing. The inverse-power kind
// has phase c * u^{-alpha} (nodes accumulate at 0); the linear kind has
// phase w * u; the log kind has phase s * ln u (geometric nodes at 0).
enum class PhaseKind { None, Linear, InversePower, Log };

struct OscDescriptor {
  PhaseKind kind = PhaseKind::None;
  double w = 0.0;      // Linear: phase w u
  double c = 0.0;      // InversePower: phase c u^{-alpha}
  double alpha = 0.0;  // InversePower exponent
  double s = 0.0;      // Log: phase s ln u
  bool oscillatory() const { return kind != PhaseKind::None; }
};

// Optional declared endpoint behavior. Limits are at the ends of the axis
// domain (0 and +inf for vertical symbols). Declarations are cross-checked
// against evaluation on a probe grid at construction; a mismatch throws.
struct SymbolMeta {
  std::optional<cplx> limit_at_zero;
  std::optional<cplx> limit_at_inf;
  std::optional<bool> bounded;
};

class SymbolParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
struct SymbolNode;
struct SymbolAccess;
}

class Symbol {
 public:
  // Built-in families.
  static Symbol constant(cplx c, Axis axis = Axis::Vertical);
  static Symbol indicator(double lambda);
  static Symbol power_log_squared(double alpha, double beta);
  static Symbol osc_power(double alpha, double beta);
  static Symbol osc_power_positive(double tau, double alpha);
  static Symbol complex_exp();
  static Symbol sine_u();
  static Symbol pure_oscillation();
  static Symbol power(double p);
  static Symbol tabulated(std::vector<double> grid, std::vector<cplx> values,
                          Axis axis = Axis::Vertical);

  // Combinators (operands must share an axis).
  static Symbol product(const Symbol& a, const Symbol& b);
  static Symbol sum(const Symbol& a, const Symbol& b);
  static Symbol scaled(cplx c, const Symbol& s);

  // Two-column (x,re) or three-column (x,re,im) CSV with a header row.
  static Symbol tabulated_from_csv(const std::string& path,
                                   Axis axis = Axis::Vertical);

  // Mini-grammar: name[:p1,p2,...] with names {indicator, powerlog2,
  // oscpower, oscpowerpos, cexp, sinu, uosc, const, power, table:<path>},
  // combined with '*', '+', and parentheses.
  static Symbol parse(const std::string& spec);

  cplx eval(double x) const;
  Axis axis() const;
  SymbolKind kind() const;

  // Conservative traits (true only when provable from the tree).
  bool is_real() const;
  bool is_nonnegative() const;
  bool is_bounded() const;

  // Jump/kink abscissae (indicator edges, tabulated knots), for quadrature
  // panel seeding. Sorted ascending.
  std::vector<double> breakpoints() const;

  const OscDescriptor& oscillation() const;

  const SymbolMeta& meta() const;
  // Returns a copy carrying the metadata; declared limits are validated
  // against evaluation near the endpoints (within 1e-3 on a probe grid).
  Symbol with_meta(const SymbolMeta& m) const;

  // Canonical grammar-style rendering, also used in reports.
  std::string describe() const;

 private:
  friend struct detail::SymbolAccess;
  explicit Symbol(std::shared_ptr<const detail::SymbolNode> node);
  std::shared_ptr<const detail::SymbolNode> node_;
};

// Discrete approximation of the transform b̂ on the dual grid of a uniform
// sample grid, with the convention F{b}(xi) = integral b(v) e^{-2 pi i v xi} dv.
// Dual grid: xi_m = (m - n/2) * dxi with dxi = 1/(n*dv).
struct TransformSamples {
  std::vector<cplx> values;
  double xi0 = 0.0;
  double dxi = 0.0;
};

TransformSamples fourier_transform_samples(const Symbol& b, double v0, double dv,
                                           int n);

// Inverse of the above on the original grid; used by round-trip checks.
std::vector<cplx> invert_transform_samples(const TransformSamples& spec,
                                           double v0, double dv, int n);

}  // namespace polytoep
