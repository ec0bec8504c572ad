#include "polytoep/symbols.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include "polytoep/fft.hpp"

namespace polytoep {

namespace detail {

struct SymbolNode {
  SymbolKind kind = SymbolKind::Constant;
  Axis axis = Axis::Vertical;
  double p1 = 0.0, p2 = 0.0;  // family parameters
  cplx c{0.0, 0.0};           // constant value / scale factor
  std::vector<double> grid;   // tabulated abscissae
  std::vector<cplx> values;   // tabulated ordinates
  std::shared_ptr<const SymbolNode> left, right;
  SymbolMeta meta;
  OscDescriptor osc;
};

namespace {

cplx eval_node(const SymbolNode& n, double x);

cplx eval_tabulated(const SymbolNode& n, double x) {
  if (x < n.grid.front() || x > n.grid.back()) {
    throw std::domain_error("tabulated symbol: no extrapolation beyond the grid");
  }
  const auto it = std::upper_bound(n.grid.begin(), n.grid.end(), x);
  if (it == n.grid.begin()) return n.values.front();
  if (it == n.grid.end()) return n.values.back();
  const size_t hi = static_cast<size_t>(it - n.grid.begin());
  const size_t lo = hi - 1;
  const double t = (x - n.grid[lo]) / (n.grid[hi] - n.grid[lo]);
  return n.values[lo] * (1.0 - t) + n.values[hi] * t;
}

cplx eval_node(const SymbolNode& n, double x) {
  switch (n.kind) {
    case SymbolKind::Constant:
      return n.c;
    case SymbolKind::Indicator:
      return x <= n.p1 ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
    case SymbolKind::PowerLogSquared: {
      const double lg = n.p1 * std::log(x);  // ln(u^{-alpha}) = -alpha ln u
      return cplx(std::pow(x, -n.p2) * lg * lg, 0.0);
    }
    case SymbolKind::OscPower:
      return cplx(std::pow(x, -n.p2) * std::sin(std::pow(x, -n.p1)), 0.0);
    case SymbolKind::OscPowerPositive:
      return cplx(std::pow(x, n.p1) * std::sin(std::pow(x, -n.p2)), 0.0);
    case SymbolKind::ComplexExp:
      return cplx(std::cos(2.0 * x), std::sin(2.0 * x));
    case SymbolKind::SineU:
      return cplx(std::sin(x), 0.0);
    case SymbolKind::PureOscillation: {
      const double lx = std::log(x);
      return cplx(std::cos(lx), std::sin(lx));
    }
    case SymbolKind::Power:
      return cplx(std::pow(x, n.p1), 0.0);
    case SymbolKind::Tabulated:
      return eval_tabulated(n, x);
    case SymbolKind::Product:
      return eval_node(*n.left, x) * eval_node(*n.right, x);
    case SymbolKind::Sum:
      return eval_node(*n.left, x) + eval_node(*n.right, x);
    case SymbolKind::Scaled:
      return n.c * eval_node(*n.left, x);
  }
  throw std::logic_error("unreachable symbol kind");
}

// Oscillation combination for products and sums: keep the descriptor whose
// nodes are densest near the dangerous end (inverse-power beats log beats
// linear), adding rates within a kind. Conservative: denser slicing never
// hurts correctness, only costs panels.
OscDescriptor combine_osc(const OscDescriptor& a, const OscDescriptor& b) {
  if (!a.oscillatory()) return b;
  if (!b.oscillatory()) return a;
  if (a.kind == b.kind) {
    OscDescriptor r = a;
    r.w = a.w + b.w;
    r.s = a.s + b.s;
    if (a.kind == PhaseKind::InversePower) {
      r.alpha = std::max(a.alpha, b.alpha);
      r.c = a.c + b.c;
    }
    return r;
  }
  auto rank = [](PhaseKind k) {
    switch (k) {
      case PhaseKind::InversePower: return 3;
      case PhaseKind::Log: return 2;
      case PhaseKind::Linear: return 1;
      default: return 0;
    }
  };
  return rank(a.kind) >= rank(b.kind) ? a : b;
}

bool node_is_real(const SymbolNode& n) {
  switch (n.kind) {
    case SymbolKind::Constant:
      return n.c.imag() == 0.0;
    case SymbolKind::ComplexExp:
    case SymbolKind::PureOscillation:
      return false;
    case SymbolKind::Tabulated:
      return std::all_of(n.values.begin(), n.values.end(),
                         [](const cplx& v) { return v.imag() == 0.0; });
    case SymbolKind::Product:
    case SymbolKind::Sum:
      return node_is_real(*n.left) && node_is_real(*n.right);
    case SymbolKind::Scaled:
      return n.c.imag() == 0.0 && node_is_real(*n.left);
    default:
      return true;
  }
}

bool node_is_nonnegative(const SymbolNode& n) {
  switch (n.kind) {
    case SymbolKind::Constant:
      return n.c.imag() == 0.0 && n.c.real() >= 0.0;
    case SymbolKind::Indicator:
    case SymbolKind::PowerLogSquared:
    case SymbolKind::Power:
      return true;
    case SymbolKind::Tabulated:
      return std::all_of(n.values.begin(), n.values.end(), [](const cplx& v) {
        return v.imag() == 0.0 && v.real() >= 0.0;
      });
    case SymbolKind::Product:
    case SymbolKind::Sum:
      return node_is_nonnegative(*n.left) && node_is_nonnegative(*n.right);
    case SymbolKind::Scaled:
      return n.c.imag() == 0.0 && n.c.real() >= 0.0 && node_is_nonnegative(*n.left);
    default:
      return false;
  }
}

bool node_is_bounded(const SymbolNode& n) {
  if (n.meta.bounded.has_value()) return *n.meta.bounded;
  switch (n.kind) {
    case SymbolKind::Constant:
    case SymbolKind::Indicator:
    case SymbolKind::ComplexExp:
    case SymbolKind::SineU:
    case SymbolKind::PureOscillation:
    case SymbolKind::Tabulated:
      return true;
    case SymbolKind::OscPowerPositive:
      // u^tau sin(u^{-alpha}) ~ u^{tau-alpha} at infinity.
      return n.p1 <= n.p2;
    case SymbolKind::Power:
      return n.p1 == 0.0;
    case SymbolKind::PowerLogSquared:
    case SymbolKind::OscPower:
      return false;
    case SymbolKind::Product:
    case SymbolKind::Sum:
      return node_is_bounded(*n.left) && node_is_bounded(*n.right);
    case SymbolKind::Scaled:
      return node_is_bounded(*n.left);
  }
  return false;
}

void collect_breakpoints(const SymbolNode& n, std::vector<double>& out) {
  switch (n.kind) {
    case SymbolKind::Indicator:
      out.push_back(n.p1);
      break;
    case SymbolKind::Tabulated:
      out.insert(out.end(), n.grid.begin(), n.grid.end());
      break;
    case SymbolKind::Product:
    case SymbolKind::Sum:
      collect_breakpoints(*n.left, out);
      collect_breakpoints(*n.right, out);
      break;
    case SymbolKind::Scaled:
      collect_breakpoints(*n.left, out);
      break;
    default:
      break;
  }
}

std::string format_real(double v) {
  std::ostringstream os;
  os.precision(15);
  os << v;
  return os.str();
}

std::string describe_node(const SymbolNode& n) {
  switch (n.kind) {
    case SymbolKind::Constant:
      if (n.c.imag() == 0.0) return "const:" + format_real(n.c.real());
      return "const:" + format_real(n.c.real()) + "," + format_real(n.c.imag());
    case SymbolKind::Indicator:
      return "indicator:" + format_real(n.p1);
    case SymbolKind::PowerLogSquared:
      return "powerlog2:" + format_real(n.p1) + "," + format_real(n.p2);
    case SymbolKind::OscPower:
      return "oscpower:" + format_real(n.p1) + "," + format_real(n.p2);
    case SymbolKind::OscPowerPositive:
      return "oscpowerpos:" + format_real(n.p1) + "," + format_real(n.p2);
    case SymbolKind::ComplexExp:
      return "cexp";
    case SymbolKind::SineU:
      return "sinu";
    case SymbolKind::PureOscillation:
      return "uosc";
    case SymbolKind::Power:
      return "power:" + format_real(n.p1);
    case SymbolKind::Tabulated:
      return "table[" + std::to_string(n.grid.size()) + "pts]";
    case SymbolKind::Product:
      return "(" + describe_node(*n.left) + "*" + describe_node(*n.right) + ")";
    case SymbolKind::Sum:
      return "(" + describe_node(*n.left) + "+" + describe_node(*n.right) + ")";
    case SymbolKind::Scaled: {
      std::string c = n.c.imag() == 0.0
                          ? format_real(n.c.real())
                          : format_real(n.c.real()) + "," + format_real(n.c.imag());
      return "(const:" + c + "*" + describe_node(*n.left) + ")";
    }
  }
  return "?";
}

}  // namespace
}  // namespace detail

namespace detail {
struct SymbolAccess {
  static Symbol wrap(std::shared_ptr<const SymbolNode> n) {
    return Symbol(std::move(n));
  }
  static const std::shared_ptr<const SymbolNode>& node(const Symbol& s) {
    return s.node_;
  }
};
}  // namespace detail

using detail::SymbolNode;

Symbol::Symbol(std::shared_ptr<const SymbolNode> node) : node_(std::move(node)) {}

cplx Symbol::eval(double x) const {
  if (node_->axis == Axis::Vertical) {
    if (!(x > 0.0)) {
      throw std::domain_error("vertical symbol evaluated outside (0, inf)");
    }
  } else if (!std::isfinite(x)) {
    throw std::domain_error("horizontal symbol evaluated at non-finite point");
  }
  return detail::eval_node(*node_, x);
}

Axis Symbol::axis() const { return node_->axis; }
SymbolKind Symbol::kind() const { return node_->kind; }
bool Symbol::is_real() const { return detail::node_is_real(*node_); }
bool Symbol::is_nonnegative() const { return detail::node_is_nonnegative(*node_); }
bool Symbol::is_bounded() const { return detail::node_is_bounded(*node_); }
const OscDescriptor& Symbol::oscillation() const { return node_->osc; }
const SymbolMeta& Symbol::meta() const { return node_->meta; }
std::string Symbol::describe() const { return detail::describe_node(*node_); }

std::vector<double> Symbol::breakpoints() const {
  std::vector<double> out;
  detail::collect_breakpoints(*node_, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::shared_ptr<SymbolNode> make_node(SymbolKind kind, Axis axis) {
  auto n = std::make_shared<SymbolNode>();
  n->kind = kind;
  n->axis = axis;
  return n;
}

Symbol wrap(std::shared_ptr<SymbolNode> n) {
  return detail::SymbolAccess::wrap(std::move(n));
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0)) {
    throw std::invalid_argument(std::string(what) + " must be positive");
  }
}

}  // namespace

Symbol Symbol::constant(cplx c, Axis axis) {
  auto n = make_node(SymbolKind::Constant, axis);
  n->c = c;
  return wrap(std::move(n));
}

Symbol Symbol::indicator(double lambda) {
  require_positive(lambda, "indicator edge");
  auto n = make_node(SymbolKind::Indicator, Axis::Vertical);
  n->p1 = lambda;
  return wrap(std::move(n));
}

Symbol Symbol::power_log_squared(double alpha, double beta) {
  require_positive(alpha, "powerlog2 alpha");
  if (beta < 0.0 || beta > 1.0) {
    throw std::invalid_argument("powerlog2 beta must lie in [0, 1]");
  }
  auto n = make_node(SymbolKind::PowerLogSquared, Axis::Vertical);
  n->p1 = alpha;
  n->p2 = beta;
  return wrap(std::move(n));
}

Symbol Symbol::osc_power(double alpha, double beta) {
  require_positive(alpha, "oscpower alpha");
  if (beta <= 0.0 || beta >= 1.0) {
    throw std::invalid_argument("oscpower beta must lie in (0, 1)");
  }
  auto n = make_node(SymbolKind::OscPower, Axis::Vertical);
  n->p1 = alpha;
  n->p2 = beta;
  n->osc = {PhaseKind::InversePower, 0.0, 1.0, alpha, 0.0};
  return wrap(std::move(n));
}

Symbol Symbol::osc_power_positive(double tau, double alpha) {
  require_positive(tau, "oscpowerpos tau");
  require_positive(alpha, "oscpowerpos alpha");
  auto n = make_node(SymbolKind::OscPowerPositive, Axis::Vertical);
  n->p1 = tau;
  n->p2 = alpha;
  n->osc = {PhaseKind::InversePower, 0.0, 1.0, alpha, 0.0};
  return wrap(std::move(n));
}

Symbol Symbol::complex_exp() {
  auto n = make_node(SymbolKind::ComplexExp, Axis::Vertical);
  n->osc = {PhaseKind::Linear, 2.0, 0.0, 0.0, 0.0};
  return wrap(std::move(n));
}

Symbol Symbol::sine_u() {
  auto n = make_node(SymbolKind::SineU, Axis::Vertical);
  n->osc = {PhaseKind::Linear, 1.0, 0.0, 0.0, 0.0};
  return wrap(std::move(n));
}

Symbol Symbol::pure_oscillation() {
  auto n = make_node(SymbolKind::PureOscillation, Axis::Vertical);
  n->osc = {PhaseKind::Log, 0.0, 0.0, 0.0, 1.0};
  return wrap(std::move(n));
}

Symbol Symbol::power(double p) {
  auto n = make_node(SymbolKind::Power, Axis::Vertical);
  n->p1 = p;
  return wrap(std::move(n));
}

Symbol Symbol::tabulated(std::vector<double> grid, std::vector<cplx> values,
                         Axis axis) {
  if (grid.size() < 2 || grid.size() != values.size()) {
    throw std::invalid_argument("tabulated symbol needs >= 2 matched points");
  }
  for (size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw std::invalid_argument("tabulated grid must be strictly increasing");
    }
  }
  if (axis == Axis::Vertical && !(grid.front() > 0.0)) {
    throw std::invalid_argument("vertical tabulated grid must be positive");
  }
  auto n = make_node(SymbolKind::Tabulated, axis);
  n->grid = std::move(grid);
  n->values = std::move(values);
  return wrap(std::move(n));
}

namespace {

std::shared_ptr<const SymbolNode> node_of(const Symbol& s) {
  // Symbols are immutable; sharing the node is safe.
  return detail::SymbolAccess::node(s);
}

}  // namespace

Symbol Symbol::product(const Symbol& a, const Symbol& b) {
  if (a.axis() != b.axis()) {
    throw std::invalid_argument("combined symbols must share an axis");
  }
  auto n = make_node(SymbolKind::Product, a.axis());
  n->left = node_of(a);
  n->right = node_of(b);
  n->osc = detail::combine_osc(a.oscillation(), b.oscillation());
  return wrap(std::move(n));
}

Symbol Symbol::sum(const Symbol& a, const Symbol& b) {
  if (a.axis() != b.axis()) {
    throw std::invalid_argument("combined symbols must share an axis");
  }
  auto n = make_node(SymbolKind::Sum, a.axis());
  n->left = node_of(a);
  n->right = node_of(b);
  n->osc = detail::combine_osc(a.oscillation(), b.oscillation());
  return wrap(std::move(n));
}

Symbol Symbol::scaled(cplx c, const Symbol& s) {
  auto n = make_node(SymbolKind::Scaled, s.axis());
  n->c = c;
  n->left = node_of(s);
  n->osc = s.oscillation();
  return wrap(std::move(n));
}

Symbol Symbol::with_meta(const SymbolMeta& m) const {
  // Validate declared limits on probe grids near the axis endpoints. For
  // horizontal symbols the "zero" slot means v -> -inf.
  auto check = [&](const cplx& declared, bool zero_side) {
    const bool vertical = axis() == Axis::Vertical;
    std::vector<double> probes;
    if (vertical && zero_side) {
      probes = {1e-6, 3.16e-6, 1e-5, 3.16e-5, 1e-4};
    } else if (vertical) {
      probes = {1e4, 3.16e4, 1e5, 3.16e5, 1e6};
    } else if (zero_side) {
      probes = {-1e6, -3.16e5, -1e5};
    } else {
      probes = {1e5, 3.16e5, 1e6};
    }
    for (double x : probes) {
      if (std::abs(eval(x) - declared) > 1e-3) {
        throw std::invalid_argument(
            "declared endpoint limit contradicts evaluation near " +
            std::string(zero_side ? "the origin" : "infinity"));
      }
    }
  };
  if (m.limit_at_zero) check(*m.limit_at_zero, true);
  if (m.limit_at_inf) check(*m.limit_at_inf, false);

  auto n = std::make_shared<SymbolNode>(*node_);
  n->meta = m;
  return wrap(std::move(n));
}

Symbol Symbol::tabulated_from_csv(const std::string& path, Axis axis) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open symbol table: " + path);
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("empty symbol table: " + path);
  }
  // Header row is mandatory: x,re or x,re,im.
  {
    std::string h = line;
    h.erase(std::remove_if(h.begin(), h.end(),
                           [](unsigned char c) { return std::isspace(c); }),
            h.end());
    if (h != "x,re" && h != "x,re,im") {
      throw std::invalid_argument("symbol table must start with header x,re[,im]");
    }
  }
  std::vector<double> grid;
  std::vector<cplx> values;
  size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    std::vector<double> cols;
    while (std::getline(ls, cell, ',')) {
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      while (end && *end != '\0' && std::isspace(static_cast<unsigned char>(*end)))
        ++end;
      if (!end || *end != '\0') {
        throw std::invalid_argument("bad number in symbol table line " +
                                    std::to_string(lineno));
      }
      cols.push_back(v);
    }
    if (cols.size() != 2 && cols.size() != 3) {
      throw std::invalid_argument("symbol table rows need 2 or 3 columns (line " +
                                  std::to_string(lineno) + ")");
    }
    grid.push_back(cols[0]);
    values.emplace_back(cols[1], cols.size() == 3 ? cols[2] : 0.0);
  }
  return tabulated(std::move(grid), std::move(values), axis);
}

// ----- mini-grammar parser ------------------------------------------------

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& str) : s(str) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool at(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }

  bool consume(char c) {
    if (at(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw SymbolParseError("symbol spec error at position " +
                           std::to_string(pos) + ": " + why);
  }

  double number() {
    skip_ws();
    char* end = nullptr;
    const double v = std::strtod(s.c_str() + pos, &end);
    if (end == s.c_str() + pos) fail("expected a number");
    pos = static_cast<size_t>(end - s.c_str());
    return v;
  }

  std::string name() {
    skip_ws();
    const size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
      ++pos;
    }
    if (pos == start) fail("expected a symbol name");
    return s.substr(start, pos - start);
  }

  std::string path_token() {
    skip_ws();
    const size_t start = pos;
    while (pos < s.size() && s[pos] != '*' && s[pos] != '+' && s[pos] != '(' &&
           s[pos] != ')' && !std::isspace(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    }
    if (pos == start) fail("expected a table path");
    return s.substr(start, pos - start);
  }

  std::vector<double> params(size_t want_min, size_t want_max) {
    std::vector<double> ps;
    if (consume(':')) {
      ps.push_back(number());
      while (consume(',')) ps.push_back(number());
    }
    if (ps.size() < want_min || ps.size() > want_max) {
      fail("wrong parameter count");
    }
    return ps;
  }

  Symbol atom() {
    if (consume('(')) {
      Symbol inner = expr();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    const std::string n = name();
    if (n == "table") {
      if (!consume(':')) fail("table needs a path");
      return Symbol::tabulated_from_csv(path_token());
    }
    if (n == "indicator") {
      auto p = params(1, 1);
      return Symbol::indicator(p[0]);
    }
    if (n == "powerlog2") {
      auto p = params(2, 2);
      return Symbol::power_log_squared(p[0], p[1]);
    }
    if (n == "oscpower") {
      auto p = params(2, 2);
      return Symbol::osc_power(p[0], p[1]);
    }
    if (n == "oscpowerpos") {
      auto p = params(2, 2);
      return Symbol::osc_power_positive(p[0], p[1]);
    }
    if (n == "cexp") {
      params(0, 0);
      return Symbol::complex_exp();
    }
    if (n == "sinu") {
      params(0, 0);
      return Symbol::sine_u();
    }
    if (n == "uosc") {
      params(0, 0);
      return Symbol::pure_oscillation();
    }
    if (n == "const") {
      auto p = params(1, 2);
      return Symbol::constant(cplx(p[0], p.size() == 2 ? p[1] : 0.0));
    }
    if (n == "power") {
      auto p = params(1, 1);
      return Symbol::power(p[0]);
    }
    fail("unknown symbol name '" + n + "'");
  }

  Symbol term() {
    Symbol lhs = atom();
    while (consume('*')) lhs = Symbol::product(lhs, atom());
    return lhs;
  }

  Symbol expr() {
    Symbol lhs = term();
    while (consume('+')) lhs = Symbol::sum(lhs, term());
    return lhs;
  }
};

}  // namespace

Symbol Symbol::parse(const std::string& spec) {
  Parser p(spec);
  Symbol result = p.expr();
  p.skip_ws();
  if (p.pos != spec.size()) {
    throw SymbolParseError("trailing characters in symbol spec at position " +
                           std::to_string(p.pos));
  }
  return result;
}

// ----- sampled Fourier transform -------------------------------------------

namespace {

bool is_constant_like(const SymbolNode& n) {
  switch (n.kind) {
    case SymbolKind::Constant:
      return true;
    case SymbolKind::Scaled:
      return is_constant_like(*n.left);
    case SymbolKind::Sum:
    case SymbolKind::Product:
      return is_constant_like(*n.left) && is_constant_like(*n.right);
    default:
      return false;
  }
}

}  // namespace

TransformSamples fourier_transform_samples(const Symbol& b, double v0, double dv,
                                           int n) {
  if (b.axis() != Axis::Horizontal) {
    throw std::invalid_argument("sampled transform requires a horizontal symbol");
  }
  if (n < 2 || !(dv > 0.0)) {
    throw std::invalid_argument("sampled transform needs n >= 2 and dv > 0");
  }
  if (is_constant_like(*node_of(b))) {
    // A constant transforms to a point mass, which has no sample sequence;
    // downstream operators treat constants atomically instead.
    throw std::invalid_argument("constant symbols have an atomic transform");
  }
  const double edge0 = std::abs(b.eval(v0));
  const double edge1 = std::abs(b.eval(v0 + (n - 1) * dv));
  if (edge0 > 1e8 || edge1 > 1e8) {
    throw std::invalid_argument("symbol grows without bound at the grid edges");
  }

  std::vector<cplx> work(n);
  for (int j = 0; j < n; ++j) {
    const cplx bv = b.eval(v0 + j * dv);
    work[j] = (j % 2 == 0) ? bv : -bv;
  }
  fft(work, -1);

  TransformSamples out;
  out.dxi = 1.0 / (n * dv);
  out.xi0 = -0.5 * n * out.dxi;
  out.values.resize(n);
  for (int m = 0; m < n; ++m) {
    const double xi = out.xi0 + m * out.dxi;
    const double ph = -2.0 * std::numbers::pi * v0 * xi;
    out.values[m] = dv * cplx(std::cos(ph), std::sin(ph)) * work[m];
  }
  return out;
}

std::vector<cplx> invert_transform_samples(const TransformSamples& spec,
                                           double v0, double dv, int n) {
  if (static_cast<int>(spec.values.size()) != n) {
    throw std::invalid_argument("inverse transform: sample count mismatch");
  }
  if (std::abs(spec.dxi * n * dv - 1.0) > 1e-12) {
    throw std::invalid_argument("inverse transform: grids are not dual");
  }
  std::vector<cplx> work(n);
  for (int m = 0; m < n; ++m) {
    const double xi = spec.xi0 + m * spec.dxi;
    const double ph = 2.0 * std::numbers::pi * xi * v0;
    work[m] = spec.values[m] * cplx(std::cos(ph), std::sin(ph));
  }
  fft(work, +1);
  std::vector<cplx> out(n);
  for (int j = 0; j < n; ++j) {
    out[j] = spec.dxi * ((j % 2 == 0) ? work[j] : -work[j]);
  }
  return out;
}

}  // namespace polytoep
