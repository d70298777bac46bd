#include "monadica/piecewise.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "monadica/calculus.hpp"
#include "monadica/error.hpp"

namespace monadica::calc {
namespace {

constexpr double kOdeTol = 1e-9;

std::string num(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

// Index of the breakpoint equal to xi, or of the gap containing it (second).
std::pair<std::optional<std::size_t>, std::size_t> locate(const PiecewiseGenFn& p, double xi) {
  const auto& b = p.breakpoints;
  const auto it = std::lower_bound(b.begin(), b.end(), xi);
  const auto i = static_cast<std::size_t>(it - b.begin());
  if (it != b.end() && *it == xi) return {i, i};
  return {std::nullopt, i};
}

// Richardson-extrapolated one-sided difference quotients at h = 2^-k, k = 5..20.
std::optional<std::vector<double>> one_sided(const Expr& gap, double xi0, double f0, double sign) {
  std::vector<double> q;
  try {
    for (int k = 4; k <= 20; ++k) {
      const double h = sign * std::ldexp(1.0, -k);
      const double v = gap.eval(xi0 + h);
      if (!std::isfinite(v)) return std::nullopt;
      q.push_back((v - f0) / h);
    }
  } catch (const Error&) {
    return std::nullopt;
  }
  std::vector<double> r;
  for (std::size_t i = 1; i < q.size(); ++i) r.push_back(2.0 * q[i] - q[i - 1]);
  return r;
}

std::optional<double> tail_limit(const std::vector<double>& r) {
  const std::size_t tail = 7;
  const auto first = r.end() - static_cast<std::ptrdiff_t>(tail);
  const auto [lo, hi] = std::minmax_element(first, r.end());
  const double last = r.back();
  if (!std::isfinite(*lo) || !std::isfinite(*hi)) return std::nullopt;
  if (*hi - *lo > 1e-5 * std::max(1.0, std::abs(last))) return std::nullopt;
  return last;
}

std::string gap_name(const PiecewiseGenFn& p, std::size_t i) {
  const auto& b = p.breakpoints;
  if (b.empty()) return "all t";
  if (i == 0) return "t < " + num(b.front());
  if (i == b.size()) return "t > " + num(b.back());
  return num(b[i - 1]) + " < t < " + num(b[i]);
}

std::vector<double> gap_samples(const PiecewiseGenFn& p, std::size_t i, std::size_t n) {
  const auto& b = p.breakpoints;
  OpenInterval gap;
  if (b.empty()) {
    gap = {-1.0, 1.0};
  } else {
    const double span = std::max(1.0, b.back() - b.front());
    gap.lo = i == 0 ? b.front() - span : b[i - 1];
    gap.hi = i == b.size() ? b.back() + span : b[i];
  }
  return sample_points(gap, n);
}

}  // namespace

void PiecewiseGenFn::validate() const {
  if (gaps.size() != breakpoints.size() + 1 || rules.size() != breakpoints.size()) {
    throw Error(ErrorCode::DomainError, "piecewise function needs k breakpoints, k+1 gaps, k rules");
  }
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (!std::isfinite(breakpoints[i]) || (i > 0 && !(breakpoints[i - 1] < breakpoints[i]))) {
      throw Error(ErrorCode::DomainError, "breakpoints must be finite and strictly increasing");
    }
  }
}

GeneralizedReal pw_eval(const PiecewiseGenFn& p, const GeneralizedReal& t) {
  p.validate();
  const auto [bp, gap] = locate(p, t.shadow());
  if (bp) {
    const MonadRule& r = p.rules[*bp];
    return GeneralizedReal(r.value) +
           linear_combination(r.slope, t.differential(), 0.0, GeneralizedReal{});
  }
  return p.gaps[gap].gen_eval(t);
}

PwDerivative pw_derivative_at(const PiecewiseGenFn& p, double xi0) {
  p.validate();
  const auto [bp, gap] = locate(p, xi0);
  PwDerivative out;
  if (!bp) {
    out.value = lambda(p.gaps[gap]).eval(xi0);
    p.gaps[gap].eval(xi0);
    return out;
  }
  const MonadRule& rule = p.rules[*bp];
  out.value = rule.slope;
  const auto right = one_sided(p.gaps[*bp + 1], xi0, rule.value, 1.0);
  const auto left = one_sided(p.gaps[*bp], xi0, rule.value, -1.0);
  const auto lr = right ? tail_limit(*right) : std::nullopt;
  const auto ll = left ? tail_limit(*left) : std::nullopt;
  if (lr && ll && std::abs(*lr - *ll) <= 1e-4 * std::max({1.0, std::abs(*lr), std::abs(*ll)})) {
    out.probe = LimitProbe::Exists;
    out.classical_limit = *lr / 2.0 + *ll / 2.0;
    if (std::abs(*out.classical_limit - rule.slope) >
        1e-4 * std::max(1.0, std::abs(*out.classical_limit))) {
      throw Error(ErrorCode::ProvisoViolated,
                  "classical derivative at " + num(xi0) + " is " + num(*out.classical_limit) +
                      " but the monad rule has slope " + num(rule.slope));
    }
  } else {
    out.probe = LimitProbe::Absent;
  }
  return out;
}

bool OdeReport::all_pass() const {
  return std::all_of(regions.begin(), regions.end(), [](const RegionReport& r) { return r.pass; });
}

OdeReport ode_verify(const PiecewiseGenFn& solution, const PiecewiseGenFn& rhs,
                     std::size_t samples_per_gap) {
  solution.validate();
  rhs.validate();
  if (solution.breakpoints != rhs.breakpoints) {
    throw Error(ErrorCode::RegionMismatch, "solution and right-hand side use different breakpoints");
  }
  OdeReport report;
  const std::size_t k = solution.breakpoints.size();
  for (std::size_t i = 0; i <= k; ++i) {
    RegionReport gap{gap_name(solution, i), true, ""};
    const Expr dy = lambda(solution.gaps[i]);
    for (double t : gap_samples(solution, i, samples_per_gap)) {
      try {
        const double lhs = dy.eval(t);
        const double want = rhs.gaps[i].eval(t);
        if (std::abs(lhs - want) > kOdeTol * std::max(1.0, std::abs(want))) {
          gap.pass = false;
          gap.detail = "at t = " + num(t) + ": y' = " + num(lhs) + ", rhs = " + num(want);
          break;
        }
      } catch (const Error& e) {
        gap.pass = false;
        gap.detail = e.what();
        break;
      }
    }
    report.regions.push_back(std::move(gap));
    if (i == k) break;

    const double xi = solution.breakpoints[i];
    RegionReport mon{"t in m(" + num(xi) + ")", true, ""};
    const MonadRule& want = rhs.rules[i];
    if (want.slope != 0.0) {
      mon.pass = false;
      mon.detail = "right-hand side is not real-valued on the monad";
    } else {
      try {
        const PwDerivative d = pw_derivative_at(solution, xi);
        if (std::abs(d.value - want.value) > kOdeTol * std::max(1.0, std::abs(want.value))) {
          mon.pass = false;
          mon.detail = "y' = " + num(d.value) + ", rhs = " + num(want.value);
        }
      } catch (const Error& e) {
        mon.pass = false;
        mon.detail = e.what();
      }
    }
    report.regions.push_back(std::move(mon));
  }
  return report;
}

}  // namespace monadica::calc
