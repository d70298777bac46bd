#pragma once

#include <cstdint>
#include <optional>

#include "monadica/expr.hpp"
#include "monadica/generalized_real.hpp"
#include "monadica/generalized_set.hpp"

namespace monadica::calc {

/**
 * A real function phi on an open interval I together with its classical
 * derivative, standing for the natural extension
 *
 *   phi_hat(x) = phi(shadow x) + lambda_phi(shadow x) * dx
 *
 * on the monad of I. Construction proves (by range analysis) that both phi
 * and lambda_phi are defined on all of I.
 */
class GenFn {
 public:
  /// Throws Error(OutOfDomain) if phi may be undefined somewhere on I, or
  /// Error(NotDifferentiable) if its derivative may be.
  GenFn(Expr phi, OpenInterval domain);

  /// Same, on the widest ]xi0 - r, xi0 + r[ with r = 2^-k (k = 0..40) that validates.
  static GenFn local(Expr phi, double xi0);

  const Expr& expr() const noexcept { return phi_; }
  const Expr& lambda() const noexcept { return lambda_; }
  const OpenInterval& domain() const noexcept { return domain_; }

  /// lambda applied m times, checked on the whole domain.
  /// Throws Error(NotDifferentiable).
  Expr derivative_expr(std::uint32_t m) const;

  double operator()(double xi) const { return phi_.eval(xi); }

 private:
  Expr phi_;
  Expr lambda_;
  OpenInterval domain_;
};

/// phi(shadow x) + lambda(shadow x) dx. Throws Error(OutOfDomain).
GeneralizedReal nat_ext_eval(const GenFn& f, const GeneralizedReal& x);

/// Structural evaluation with hatted primitives.
GeneralizedReal gen_eval(const Expr& e, const GeneralizedReal& x);

/// f'(x) = lambda_phi(shadow x); constant on every monad.
double derivative_at(const GenFn& f, const GeneralizedReal& x);

/// m-th natural extension: lambda^(m-1)(shadow x) + lambda^(m)(shadow x) dx, m >= 1.
GeneralizedReal mth_ext_eval(const GenFn& f, std::uint32_t m, const GeneralizedReal& x);

/// m-th derivative function: lambda^(m)(shadow x), m >= 0.
double mth_derivative(const GenFn& f, std::uint32_t m, const GeneralizedReal& x);

struct TaylorResult {
  double partial_sum = 0.0;
  double remainder_bound = 0.0;
  /// Lagrange point in ]0,1[, absent when the root search fails.
  std::optional<double> theta;
  double function_value = 0.0;  // phi(shadow x)
};

/// Degree-m Taylor expansion of phi about xi0, evaluated at shadow x, with a
/// Lagrange remainder point found by bisection (grid-scan fallback).
TaylorResult taylor(const GenFn& f, double xi0, std::uint32_t m, const GeneralizedReal& x);

/// Real gamma strictly between the shadows with
/// phi(sb) - phi(sa) = lambda(gamma) (sb - sa).
/// Throws Error(DomainError) unless a < b, Error(GammaNotFound) if the search fails.
double mvt_gamma(const GenFn& f, const GeneralizedReal& a, const GeneralizedReal& b);

/// Both sides of the generalized mean value identity:
///   f(b) - f(a)  and
///   f'(g)(b - a) + (f'(b) - f'(g)) db + (f'(g) - f'(a)) da.
struct MvtSides {
  GeneralizedReal lhs;
  GeneralizedReal rhs;
};
MvtSides mvt_sides(const GenFn& f, const GeneralizedReal& a, const GeneralizedReal& b,
                   double gamma);

/// The natural extension of phi^-1 on phi(I), with derivative
/// 1 / lambda_phi(phi^-1(y)). Throws Error(NotInjective) or
/// Error(VanishingDerivative).
GenFn inverse_ext(const GenFn& f);

/// phi_hat applied to a monadic set whose base lies in the domain: the monad
/// of phi(A \ C) plus the real values phi(C), where C are the zeros of
/// lambda_phi in A. Unbounded pieces need lambda_phi of constant sign
/// (Error(NotRepresentable) otherwise).
sets::GeneralizedSet image(const GenFn& f, const sets::GeneralizedSet& g);

/// n interior points spread over d (a rational map handles infinite ends).
std::vector<double> sample_points(const OpenInterval& d, std::size_t n);

}  // namespace monadica::calc
