#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monadica/generalized_real.hpp"

namespace monadica::calc {

enum class Op {
  Const,
  Var,
  Add,
  Sub,
  Mul,
  Div,
  Neg,
  PowInt,   // u^m, m >= 0
  PowReal,  // u^alpha, u > 0
  Root,     // positive m-th root, u > 0
  Exp,
  Log,
  Sin,
  Cos,
  Inverse,  // numeric inverse of a strictly monotone function
};

class Expr;
struct Node;
struct InverseData;

/// Open real interval ]lo, hi[, endpoints possibly infinite.
struct OpenInterval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double v) const noexcept { return v > lo && v < hi; }
  bool is_bounded() const noexcept;
  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

/**
 * Immutable expression tree in one real variable. Copies share structure.
 * The building functions fold constants and drop identity elements
 * (0 + u, 1 * u, u^1, ...); nothing else is simplified.
 */
class Expr {
 public:
  Expr();  // the constant 0

  static Expr constant(double c);
  static Expr variable();

  Op op() const noexcept;
  double value() const noexcept;        // Const value, PowReal exponent
  std::uint32_t order() const noexcept; // PowInt / Root order
  const Expr& lhs() const;              // unary operand or left operand
  const Expr& rhs() const;
  const InverseData& inverse() const;

  /// Node identity; copies of one tree share it.
  const void* id() const noexcept { return node_.get(); }

  bool is_constant() const noexcept { return op() == Op::Const; }
  bool is_constant(double c) const noexcept { return is_constant() && value() == c; }

  /// Real evaluation. Throws Error(OutOfDomain) outside the natural domain.
  double eval(double xi) const;

  /// Structural evaluation over the generalized reals, each primitive
  /// replaced by its natural extension.
  GeneralizedReal gen_eval(const GeneralizedReal& x) const;

  std::string to_string() const;

  /// Structural identity (same tree shape and constants).
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Unset {};
  explicit Expr(Unset) noexcept {}
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  friend struct Node;
  friend Expr make_node(Node n);
  friend Expr compose(const Expr& outer, const Expr& inner);
  std::shared_ptr<const Node> node_;
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);

Expr pow_int(const Expr& u, std::uint32_t m);
Expr pow_real(const Expr& u, double alpha);
Expr root(const Expr& u, std::uint32_t m);
Expr exp(const Expr& u);
Expr log(const Expr& u);
Expr sin(const Expr& u);
Expr cos(const Expr& u);

/// outer with its variable replaced by inner.
Expr compose(const Expr& outer, const Expr& inner);

/// Inverse of f restricted to domain (f must be strictly monotone there).
/// Inverting exp, log and the identity stays symbolic.
Expr inverse_of(const Expr& f, const OpenInterval& domain);

/// Image of a monotone f over d as an open interval, ends taken as limits.
OpenInterval monotone_image(const Expr& f, const OpenInterval& d);

/// Symbolic derivative.
Expr lambda(const Expr& e);

/// lambda applied m times (m = 0 gives e).
Expr lambda_n(const Expr& e, std::uint32_t m);

/// {e, lambda(e), ..., lambda^m(e)}, sharing common subtrees across orders.
std::vector<Expr> lambda_chain(const Expr& e, std::uint32_t m);

/**
 * An expression flattened to one step per distinct node, so repeated
 * subtrees are evaluated once. Same results and errors as Expr::eval.
 */
class Program {
 public:
  explicit Program(const Expr& e);
  double operator()(double xi) const;

 private:
  struct Step {
    Op op = Op::Const;
    double value = 0.0;
    std::uint32_t order = 0;
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    const InverseData* inv = nullptr;
  };
  Expr root_;
  std::vector<Step> steps_;
};

/// Parse the CLI infix syntax: + - * / ^, unary minus, parentheses, the
/// variable x, constants pi and e, and the functions exp, log, sin, cos,
/// sqrt(u), root(m, u), pow(alpha, u). Throws Error(ParseError).
Expr parse(std::string_view text);

struct InverseData {
  Expr f;
  Expr f_prime;
  OpenInterval domain;
  OpenInterval image;
  bool increasing = true;

  /// Solve f(xi) = y inside domain. Throws Error(OutOfDomain) for y outside image.
  double solve(double y) const;
};

// --- Natural extensions of the primitives ---

GeneralizedReal exp_hat(const GeneralizedReal& x);
/// Throws Error(OutOfDomain) unless shadow(x) > 0.
GeneralizedReal log_hat(const GeneralizedReal& x);
GeneralizedReal sin_hat(const GeneralizedReal& x);
GeneralizedReal cos_hat(const GeneralizedReal& x);
/// x^alpha; throws Error(OutOfDomain) unless shadow(x) > 0.
GeneralizedReal pow_real_hat(const GeneralizedReal& x, double alpha);

// --- Range analysis ---

/// Conservative enclosure of an expression's values over a set of inputs.
/// An open end means the bound is not attained.
struct Range {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_open = false;
  bool hi_open = false;

  bool excludes_zero() const noexcept;
  bool strictly_positive() const noexcept;
};

/// Enclosure of e over the open interval, or nullopt when e might leave its
/// natural domain somewhere on it (a denominator that may vanish, a log of
/// a possibly non-positive value, ...).
std::optional<Range> range_over(const Expr& e, const OpenInterval& domain);

}  // namespace monadica::calc
