#include "monadica/expr.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "monadica/error.hpp"

namespace monadica::calc {

struct Node {
  Op op = Op::Const;
  double value = 0.0;
  std::uint32_t order = 0;
  Expr a{Expr::Unset{}};
  Expr b{Expr::Unset{}};
  std::shared_ptr<const InverseData> inv;
};

namespace {

const std::shared_ptr<const Node>& zero_node() {
  static const auto node = std::make_shared<const Node>();
  return node;
}

[[noreturn]] void out_of_domain(const std::string& what) {
  throw Error(ErrorCode::OutOfDomain, what);
}

std::string num(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

GeneralizedReal tangent(double head, double slope, const GeneralizedReal& x) {
  return GeneralizedReal(head) + linear_combination(slope, x.differential(), 0.0, GeneralizedReal{});
}

}  // namespace

Expr make_node(Node n) { return Expr(std::make_shared<const Node>(std::move(n))); }

namespace {

Expr unary(Op op, const Expr& u, double value = 0.0, std::uint32_t order = 0) {
  Node n;
  n.op = op;
  n.a = u;
  n.value = value;
  n.order = order;
  return make_node(std::move(n));
}

Expr binary(Op op, const Expr& a, const Expr& b) {
  Node n;
  n.op = op;
  n.a = a;
  n.b = b;
  return make_node(std::move(n));
}

}  // namespace

bool OpenInterval::is_bounded() const noexcept { return std::isfinite(lo) && std::isfinite(hi); }

Expr::Expr() : node_(zero_node()) {}

Expr Expr::constant(double c) {
  if (!std::isfinite(c)) throw Error(ErrorCode::NonFiniteInput, "non-finite constant");
  Node n;
  n.value = c == 0.0 ? 0.0 : c;
  return make_node(std::move(n));
}

Expr Expr::variable() {
  static const Expr var = [] {
    Node n;
    n.op = Op::Var;
    return make_node(std::move(n));
  }();
  return var;
}

Op Expr::op() const noexcept { return node_->op; }
double Expr::value() const noexcept { return node_->value; }
std::uint32_t Expr::order() const noexcept { return node_->order; }
const Expr& Expr::lhs() const { return node_->a; }
const Expr& Expr::rhs() const { return node_->b; }
const InverseData& Expr::inverse() const { return *node_->inv; }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  const Node& x = *a.node_;
  const Node& y = *b.node_;
  if (x.op != y.op || x.value != y.value || x.order != y.order) return false;
  switch (x.op) {
    case Op::Const:
    case Op::Var: return true;
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div: return x.a == y.a && x.b == y.b;
    case Op::Inverse:
      return x.a == y.a && x.inv->f == y.inv->f && x.inv->domain == y.inv->domain;
    default: return x.a == y.a;
  }
}

// --- building with constant folding ---

Expr operator+(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) return Expr::constant(a.value() + b.value());
  if (a.is_constant(0.0)) return b;
  if (b.is_constant(0.0)) return a;
  return binary(Op::Add, a, b);
}

Expr operator-(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) return Expr::constant(a.value() - b.value());
  if (b.is_constant(0.0)) return a;
  if (a.is_constant(0.0)) return -b;
  return binary(Op::Sub, a, b);
}

Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) return Expr::constant(a.value() * b.value());
  if (a.is_constant(0.0) || b.is_constant(0.0)) return Expr::constant(0.0);
  if (a.is_constant(1.0)) return b;
  if (b.is_constant(1.0)) return a;
  if (a.is_constant(-1.0)) return -b;
  if (b.is_constant(-1.0)) return -a;
  return binary(Op::Mul, a, b);
}

Expr operator/(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant() && b.value() != 0.0) {
    return Expr::constant(a.value() / b.value());
  }
  if (a.is_constant(0.0) && !b.is_constant(0.0)) return Expr::constant(0.0);
  if (b.is_constant(1.0)) return a;
  return binary(Op::Div, a, b);
}

Expr operator-(const Expr& a) {
  if (a.is_constant()) return Expr::constant(-a.value());
  if (a.op() == Op::Neg) return a.lhs();
  return unary(Op::Neg, a);
}

Expr pow_int(const Expr& u, std::uint32_t m) {
  if (m == 0) return Expr::constant(1.0);
  if (m == 1) return u;
  if (u.is_constant()) return Expr::constant(std::pow(u.value(), static_cast<double>(m)));
  return unary(Op::PowInt, u, 0.0, m);
}

Expr pow_real(const Expr& u, double alpha) {
  if (!std::isfinite(alpha)) throw Error(ErrorCode::NonFiniteInput, "non-finite exponent");
  if (alpha == 0.0) return Expr::constant(1.0);
  if (alpha == 1.0) return u;
  if (u.is_constant() && u.value() > 0.0) return Expr::constant(std::pow(u.value(), alpha));
  return unary(Op::PowReal, u, alpha);
}

Expr root(const Expr& u, std::uint32_t m) {
  if (m < 2) throw Error(ErrorCode::DomainError, "root order must exceed 1");
  if (u.is_constant() && u.value() > 0.0) {
    return Expr::constant(std::pow(u.value(), 1.0 / static_cast<double>(m)));
  }
  return unary(Op::Root, u, 0.0, m);
}

Expr exp(const Expr& u) {
  if (u.is_constant()) return Expr::constant(std::exp(u.value()));
  return unary(Op::Exp, u);
}

Expr log(const Expr& u) {
  if (u.is_constant() && u.value() > 0.0) return Expr::constant(std::log(u.value()));
  return unary(Op::Log, u);
}

Expr sin(const Expr& u) {
  if (u.is_constant()) return Expr::constant(std::sin(u.value()));
  return unary(Op::Sin, u);
}

Expr cos(const Expr& u) {
  if (u.is_constant()) return Expr::constant(std::cos(u.value()));
  return unary(Op::Cos, u);
}

namespace {

Expr make_inverse(const Expr& u, std::shared_ptr<const InverseData> data) {
  Node n;
  n.op = Op::Inverse;
  n.a = u;
  n.inv = std::move(data);
  return make_node(std::move(n));
}

}  // namespace

Expr compose(const Expr& outer, const Expr& inner) {
  switch (outer.op()) {
    case Op::Const: return outer;
    case Op::Var: return inner;
    case Op::Add: return compose(outer.lhs(), inner) + compose(outer.rhs(), inner);
    case Op::Sub: return compose(outer.lhs(), inner) - compose(outer.rhs(), inner);
    case Op::Mul: return compose(outer.lhs(), inner) * compose(outer.rhs(), inner);
    case Op::Div: return compose(outer.lhs(), inner) / compose(outer.rhs(), inner);
    case Op::Neg: return -compose(outer.lhs(), inner);
    case Op::PowInt: return pow_int(compose(outer.lhs(), inner), outer.order());
    case Op::PowReal: return pow_real(compose(outer.lhs(), inner), outer.value());
    case Op::Root: return root(compose(outer.lhs(), inner), outer.order());
    case Op::Exp: return exp(compose(outer.lhs(), inner));
    case Op::Log: return log(compose(outer.lhs(), inner));
    case Op::Sin: return sin(compose(outer.lhs(), inner));
    case Op::Cos: return cos(compose(outer.lhs(), inner));
    case Op::Inverse: {
      Node n;
      n.op = Op::Inverse;
      n.a = compose(outer.lhs(), inner);
      n.inv = outer.node_->inv;
      return make_node(std::move(n));
    }
  }
  throw Error(ErrorCode::DomainError, "unknown expression node");
}

namespace {

// Symbolic differentiation memoized on node identity, so a subtree shared by
// several parents (as repeated differentiation produces) is differentiated once.
class Differentiator {
 public:
  Expr operator()(const Expr& e) {
    const auto it = memo_.find(e.id());
    if (it != memo_.end()) return it->second;
    Expr d = rule(e);
    memo_.emplace(e.id(), d);
    keep_.push_back(e);
    return d;
  }

 private:
  Expr rule(const Expr& e) {
    auto& self = *this;
    const Expr& u = e.lhs();
    switch (e.op()) {
      case Op::Const: return Expr::constant(0.0);
      case Op::Var: return Expr::constant(1.0);
      case Op::Add: return self(e.lhs()) + self(e.rhs());
      case Op::Sub: return self(e.lhs()) - self(e.rhs());
      case Op::Mul: return self(e.lhs()) * e.rhs() + e.lhs() * self(e.rhs());
      case Op::Div:
        return (self(e.lhs()) * e.rhs() - e.lhs() * self(e.rhs())) / pow_int(e.rhs(), 2);
      case Op::Neg: return -self(u);
      case Op::PowInt: {
        const auto m = e.order();
        return Expr::constant(static_cast<double>(m)) * pow_int(u, m - 1) * self(u);
      }
      case Op::PowReal: {
        const double a = e.value();
        return Expr::constant(a) * pow_real(u, a - 1.0) * self(u);
      }
      case Op::Root: {
        const auto m = e.order();
        return self(u) / (Expr::constant(static_cast<double>(m)) * pow_int(e, m - 1));
      }
      case Op::Exp: return e * self(u);
      case Op::Log: return self(u) / u;
      case Op::Sin: return cos(u) * self(u);
      case Op::Cos: return -sin(u) * self(u);
      case Op::Inverse: {
        const InverseData& d = e.inverse();
        return self(u) / compose(d.f_prime, e);
      }
    }
    throw Error(ErrorCode::DomainError, "unknown expression node");
  }

  std::unordered_map<const void*, Expr> memo_;
  std::vector<Expr> keep_;  // keeps memo keys alive
};

}  // namespace

Expr lambda(const Expr& e) { return Differentiator{}(e); }

Expr lambda_n(const Expr& e, std::uint32_t m) { return lambda_chain(e, m).back(); }

std::vector<Expr> lambda_chain(const Expr& e, std::uint32_t m) {
  Differentiator diff;
  std::vector<Expr> out{e};
  out.reserve(m + 1);
  for (std::uint32_t k = 0; k < m; ++k) out.push_back(diff(out.back()));
  return out;
}

// --- compiled evaluation ---

Program::Program(const Expr& e) : root_(e) {
  std::unordered_map<const void*, std::uint32_t> slot;
  // Iterative post-order over distinct nodes.
  std::vector<std::pair<Expr, bool>> stack{{e, false}};
  while (!stack.empty()) {
    auto [node, expanded] = stack.back();
    stack.pop_back();
    if (slot.count(node.id())) continue;
    const Op op = node.op();
    const bool binary = op == Op::Add || op == Op::Sub || op == Op::Mul || op == Op::Div;
    const bool leaf = op == Op::Const || op == Op::Var;
    if (!expanded && !leaf) {
      stack.emplace_back(node, true);
      if (binary) stack.emplace_back(node.rhs(), false);
      stack.emplace_back(node.lhs(), false);
      continue;
    }
    Step s;
    s.op = op;
    s.value = node.value();
    s.order = node.order();
    if (!leaf) s.a = slot.at(node.lhs().id());
    if (binary) s.b = slot.at(node.rhs().id());
    if (op == Op::Inverse) s.inv = &node.inverse();
    slot.emplace(node.id(), static_cast<std::uint32_t>(steps_.size()));
    steps_.push_back(s);
  }
}

double Program::operator()(double xi) const {
  std::vector<double> r(steps_.size());
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const Step& s = steps_[i];
    const double a = s.op == Op::Const || s.op == Op::Var ? 0.0 : r[s.a];
    double v = 0.0;
    switch (s.op) {
      case Op::Const: v = s.value; break;
      case Op::Var: v = xi; break;
      case Op::Add: v = a + r[s.b]; break;
      case Op::Sub: v = a - r[s.b]; break;
      case Op::Mul: v = a * r[s.b]; break;
      case Op::Div:
        if (r[s.b] == 0.0) out_of_domain("division by zero at x = " + num(xi));
        v = a / r[s.b];
        break;
      case Op::Neg: v = -a; break;
      case Op::PowInt: v = std::pow(a, static_cast<double>(s.order)); break;
      case Op::PowReal:
        if (!(a > 0.0)) out_of_domain("real power of a non-positive value at x = " + num(xi));
        v = std::pow(a, s.value);
        break;
      case Op::Root:
        if (!(a > 0.0)) out_of_domain("root of a non-positive value at x = " + num(xi));
        v = std::pow(a, 1.0 / static_cast<double>(s.order));
        break;
      case Op::Exp: v = std::exp(a); break;
      case Op::Log:
        if (!(a > 0.0)) out_of_domain("log of a non-positive value at x = " + num(xi));
        v = std::log(a);
        break;
      case Op::Sin: v = std::sin(a); break;
      case Op::Cos: v = std::cos(a); break;
      case Op::Inverse: v = s.inv->solve(a); break;
    }
    r[i] = v;
  }
  return r.back();
}

double Expr::eval(double xi) const {
  const Node& n = *node_;
  switch (n.op) {
    case Op::Const: return n.value;
    case Op::Var: return xi;
    case Op::Add: return n.a.eval(xi) + n.b.eval(xi);
    case Op::Sub: return n.a.eval(xi) - n.b.eval(xi);
    case Op::Mul: return n.a.eval(xi) * n.b.eval(xi);
    case Op::Div: {
      const double den = n.b.eval(xi);
      if (den == 0.0) out_of_domain("division by zero at x = " + num(xi));
      return n.a.eval(xi) / den;
    }
    case Op::Neg: return -n.a.eval(xi);
    case Op::PowInt: return std::pow(n.a.eval(xi), static_cast<double>(n.order));
    case Op::PowReal: {
      const double u = n.a.eval(xi);
      if (!(u > 0.0)) out_of_domain("real power of a non-positive value at x = " + num(xi));
      return std::pow(u, n.value);
    }
    case Op::Root: {
      const double u = n.a.eval(xi);
      if (!(u > 0.0)) out_of_domain("root of a non-positive value at x = " + num(xi));
      return std::pow(u, 1.0 / static_cast<double>(n.order));
    }
    case Op::Exp: return std::exp(n.a.eval(xi));
    case Op::Log: {
      const double u = n.a.eval(xi);
      if (!(u > 0.0)) out_of_domain("log of a non-positive value at x = " + num(xi));
      return std::log(u);
    }
    case Op::Sin: return std::sin(n.a.eval(xi));
    case Op::Cos: return std::cos(n.a.eval(xi));
    case Op::Inverse: return n.inv->solve(n.a.eval(xi));
  }
  throw Error(ErrorCode::DomainError, "unknown expression node");
}

GeneralizedReal Expr::gen_eval(const GeneralizedReal& x) const {
  const Node& n = *node_;
  switch (n.op) {
    case Op::Const: return GeneralizedReal(n.value);
    case Op::Var: return x;
    case Op::Add: return n.a.gen_eval(x) + n.b.gen_eval(x);
    case Op::Sub: return n.a.gen_eval(x) - n.b.gen_eval(x);
    case Op::Mul: return n.a.gen_eval(x) * n.b.gen_eval(x);
    case Op::Div: return div(n.a.gen_eval(x), n.b.gen_eval(x));
    case Op::Neg: return -n.a.gen_eval(x);
    case Op::PowInt: return pow_nat(n.a.gen_eval(x), n.order);
    case Op::PowReal: return pow_real_hat(n.a.gen_eval(x), n.value);
    case Op::Root: {
      GeneralizedReal u = n.a.gen_eval(x);
      if (!(u.shadow() > 0.0)) out_of_domain("root of a non-positive value");
      return monadica::root(u, n.order);
    }
    case Op::Exp: return exp_hat(n.a.gen_eval(x));
    case Op::Log: return log_hat(n.a.gen_eval(x));
    case Op::Sin: return sin_hat(n.a.gen_eval(x));
    case Op::Cos: return cos_hat(n.a.gen_eval(x));
    case Op::Inverse: {
      const GeneralizedReal u = n.a.gen_eval(x);
      const double xi = n.inv->solve(u.shadow());
      return tangent(xi, 1.0 / n.inv->f_prime.eval(xi), u);
    }
  }
  throw Error(ErrorCode::DomainError, "unknown expression node");
}

std::string Expr::to_string() const {
  const Node& n = *node_;
  auto wrap = [](const Expr& e) {
    const Op op = e.op();
    const bool atomic = op == Op::Var || (op == Op::Const && e.value() >= 0.0) || op == Op::Exp ||
                        op == Op::Log || op == Op::Sin || op == Op::Cos || op == Op::PowReal ||
                        op == Op::Root || op == Op::Inverse;
    return atomic ? e.to_string() : "(" + e.to_string() + ")";
  };
  switch (n.op) {
    case Op::Const: return num(n.value);
    case Op::Var: return "x";
    case Op::Add: return n.a.to_string() + " + " + wrap(n.b);
    case Op::Sub: return n.a.to_string() + " - " + wrap(n.b);
    case Op::Mul: return wrap(n.a) + "*" + wrap(n.b);
    case Op::Div: return wrap(n.a) + "/" + wrap(n.b);
    case Op::Neg: return "-" + wrap(n.a);
    case Op::PowInt: return wrap(n.a) + "^" + std::to_string(n.order);
    case Op::PowReal: return "pow(" + num(n.value) + ", " + n.a.to_string() + ")";
    case Op::Root: return "root(" + std::to_string(n.order) + ", " + n.a.to_string() + ")";
    case Op::Exp: return "exp(" + n.a.to_string() + ")";
    case Op::Log: return "log(" + n.a.to_string() + ")";
    case Op::Sin: return "sin(" + n.a.to_string() + ")";
    case Op::Cos: return "cos(" + n.a.to_string() + ")";
    case Op::Inverse: return "inverse[" + n.inv->f.to_string() + "](" + n.a.to_string() + ")";
  }
  return "?";
}

// --- inverse functions ---

namespace {

double anchor(const OpenInterval& d) {
  if (d.is_bounded()) return d.lo / 2.0 + d.hi / 2.0;
  if (std::isfinite(d.lo)) return d.lo + std::max(1.0, std::abs(d.lo));
  if (std::isfinite(d.hi)) return d.hi - std::max(1.0, std::abs(d.hi));
  return 0.0;
}

// Points marching from `from` toward `bound` (possibly infinite), k = 1, 2, ...
// Returns nullopt once the march is exhausted.
std::optional<double> march(double from, double bound, int k) {
  if (std::isfinite(bound)) {
    if (k > 64) return std::nullopt;
    const double p = bound - (bound - from) * std::ldexp(1.0, -k);
    if (p == bound) return std::nullopt;
    return p;
  }
  if (k > 1022) return std::nullopt;
  return from + std::copysign(std::ldexp(1.0, k), bound);
}

// Value of a monotone f at (or as close as representable to) the end of d.
double boundary_value(const Expr& f, const OpenInterval& d, double bound) {
  const double m = anchor(d);
  double last = f.eval(m);
  for (int k = 1;; ++k) {
    auto p = march(m, bound, k);
    if (!p) break;
    try {
      const double v = f.eval(*p);
      if (!std::isfinite(v)) return v;
      last = v;
    } catch (const Error&) {
      break;
    }
  }
  return last;
}

}  // namespace

OpenInterval monotone_image(const Expr& f, const OpenInterval& d) {
  const double a = boundary_value(f, d, d.lo);
  const double b = boundary_value(f, d, d.hi);
  return a < b ? OpenInterval{a, b} : OpenInterval{b, a};
}

Expr inverse_of(const Expr& f, const OpenInterval& domain) {
  const Expr x = Expr::variable();
  if (f.op() == Op::Var) return x;
  if (f.op() == Op::Exp && f.lhs().op() == Op::Var) return log(x);
  if (f.op() == Op::Log && f.lhs().op() == Op::Var) return exp(x);

  auto data = std::make_shared<InverseData>();
  data->f = f;
  data->f_prime = lambda(f);
  data->domain = domain;
  const double lo_v = boundary_value(f, domain, domain.lo);
  const double hi_v = boundary_value(f, domain, domain.hi);
  data->increasing = hi_v > lo_v;
  data->image = data->increasing ? OpenInterval{lo_v, hi_v} : OpenInterval{hi_v, lo_v};
  return make_inverse(x, std::move(data));
}

double InverseData::solve(double y) const {
  if (!std::isfinite(y)) out_of_domain("inverse of a non-finite value");
  auto g = [&](double xi) { return increasing ? f.eval(xi) - y : y - f.eval(xi); };
  const double m = anchor(domain);
  const double gm = g(m);
  if (gm == 0.0) return m;
  // g increases along the domain; march toward the side where it changes sign.
  const double bound = gm < 0.0 ? domain.hi : domain.lo;
  double inner = m;
  double outer = m;
  bool bracketed = false;
  for (int k = 1;; ++k) {
    auto p = march(m, bound, k);
    if (!p) break;
    double gv = 0.0;
    try {
      gv = g(*p);
    } catch (const Error&) {
      break;
    }
    if (gv == 0.0) return *p;
    if ((gm < 0.0) != (gv < 0.0)) {
      outer = *p;
      bracketed = true;
      break;
    }
    inner = *p;
  }
  if (!bracketed) out_of_domain("value " + num(y) + " lies outside the image of the function");
  double a = std::min(inner, outer);
  double b = std::max(inner, outer);
  double ga = g(a);
  for (int it = 0; it < 2000; ++it) {
    const double mid = a / 2.0 + b / 2.0;
    if (mid <= a || mid >= b) break;
    const double gmid = g(mid);
    if (gmid == 0.0) return mid;
    if ((gmid < 0.0) == (ga < 0.0)) {
      a = mid;
      ga = gmid;
    } else {
      b = mid;
    }
  }
  return std::abs(g(a)) <= std::abs(g(b)) ? a : b;
}

// --- natural extensions of the primitives ---

GeneralizedReal exp_hat(const GeneralizedReal& x) {
  const double e = std::exp(x.shadow());
  if (!std::isfinite(e)) out_of_domain("exp overflow");
  return tangent(e, e, x);
}

GeneralizedReal log_hat(const GeneralizedReal& x) {
  const double s = x.shadow();
  if (!(s > 0.0)) out_of_domain("log needs a positive shadow");
  return tangent(std::log(s), 1.0 / s, x);
}

GeneralizedReal sin_hat(const GeneralizedReal& x) {
  const double s = x.shadow();
  return tangent(std::sin(s), std::cos(s), x);
}

GeneralizedReal cos_hat(const GeneralizedReal& x) {
  const double s = x.shadow();
  return tangent(std::cos(s), -std::sin(s), x);
}

GeneralizedReal pow_real_hat(const GeneralizedReal& x, double alpha) {
  const double s = x.shadow();
  if (!(s > 0.0)) out_of_domain("real power needs a positive shadow");
  return tangent(std::pow(s, alpha), alpha * std::pow(s, alpha - 1.0), x);
}

}  // namespace monadica::calc
