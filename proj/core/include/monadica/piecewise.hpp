#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monadica/expr.hpp"
#include "monadica/generalized_real.hpp"

namespace monadica::calc {

/// On the monad of a breakpoint xi: t -> value + slope * dt.
struct MonadRule {
  double value = 0.0;
  double slope = 0.0;
};

/**
 * A generalized function defined region by region: gap i is the open
 * interval between breakpoints i-1 and i (unbounded at both ends), where the
 * function is the natural extension of gaps[i]; on the monad of breakpoint i
 * it follows rules[i].
 *
 * Example, the solution of y' = 0 (t < 0), 1 (on m(0)), 0 (t > 0):
 *   { -t | 0 + 1 dt | t }  -> breakpoints {0}, gaps {-x, x}, rules {{0, 1}}.
 */
struct PiecewiseGenFn {
  std::vector<double> breakpoints;  // strictly increasing
  std::vector<Expr> gaps;           // breakpoints.size() + 1
  std::vector<MonadRule> rules;     // breakpoints.size()

  /// Throws Error(DomainError) when the sizes or ordering are inconsistent.
  void validate() const;
};

GeneralizedReal pw_eval(const PiecewiseGenFn& p, const GeneralizedReal& t);

enum class LimitProbe {
  NotProbed,  // inside a gap: the derivative is the classical one
  Exists,
  Absent,
};

struct PwDerivative {
  double value = 0.0;
  LimitProbe probe = LimitProbe::NotProbed;
  std::optional<double> classical_limit;
};

/// Derivative at the real point xi0. At a breakpoint it is the rule's slope;
/// when the classical difference quotient has a limit there, that limit must
/// agree with the slope, else Error(ProvisoViolated). Throws
/// Error(OutOfDomain) inside a gap where the expression is undefined.
PwDerivative pw_derivative_at(const PiecewiseGenFn& p, double xi0);

struct RegionReport {
  std::string region;
  bool pass = false;
  std::string detail;
};

struct OdeReport {
  std::vector<RegionReport> regions;
  bool all_pass() const;
};

/// Check solution' = rhs region by region: on real samples of each gap, and
/// on each breakpoint monad (where rhs must be real-valued, i.e. slope 0).
/// Throws Error(RegionMismatch) when the breakpoints differ.
OdeReport ode_verify(const PiecewiseGenFn& solution, const PiecewiseGenFn& rhs,
                     std::size_t samples_per_gap = 16);

}  // namespace monadica::calc
