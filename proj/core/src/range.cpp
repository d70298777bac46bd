#include <algorithm>
#include <cmath>
#include <numbers>

#include "monadica/error.hpp"
#include "monadica/expr.hpp"

namespace monadica::calc {
namespace {

using MaybeRange = std::optional<Range>;

MaybeRange finish(Range r) {
  if (std::isnan(r.lo) || std::isnan(r.hi) || r.lo > r.hi) return std::nullopt;
  if (std::isinf(r.lo)) r.lo_open = true;
  if (std::isinf(r.hi)) r.hi_open = true;
  return r;
}

// f increasing on the enclosure.
template <class F>
MaybeRange increasing(const Range& a, F f) {
  return finish({f(a.lo), f(a.hi), a.lo_open, a.hi_open});
}

template <class F>
MaybeRange decreasing(const Range& a, F f) {
  return finish({f(a.hi), f(a.lo), a.hi_open, a.lo_open});
}

double times(double p, double q) {
  if (p == 0.0 || q == 0.0) return 0.0;
  return p * q;
}

MaybeRange add(const Range& a, const Range& b) {
  return finish({a.lo + b.lo, a.hi + b.hi, a.lo_open || b.lo_open, a.hi_open || b.hi_open});
}

MaybeRange negate(const Range& a) { return finish({-a.hi, -a.lo, a.hi_open, a.lo_open}); }

MaybeRange multiply(const Range& a, const Range& b) {
  struct Cand {
    double v;
    bool attained;
  };
  auto cand = [](double p, bool p_open, double q, bool q_open) {
    const bool pa = !p_open;
    const bool qa = !q_open;
    return Cand{times(p, q), (pa && (qa || p == 0.0)) || (qa && q == 0.0)};
  };
  const Cand c[4] = {cand(a.lo, a.lo_open, b.lo, b.lo_open), cand(a.lo, a.lo_open, b.hi, b.hi_open),
                     cand(a.hi, a.hi_open, b.lo, b.lo_open), cand(a.hi, a.hi_open, b.hi, b.hi_open)};
  Range r{c[0].v, c[0].v, true, true};
  for (const auto& k : c) {
    r.lo = std::min(r.lo, k.v);
    r.hi = std::max(r.hi, k.v);
  }
  for (const auto& k : c) {
    if (k.v == r.lo && k.attained) r.lo_open = false;
    if (k.v == r.hi && k.attained) r.hi_open = false;
  }
  return finish(r);
}

MaybeRange reciprocal(const Range& b) {
  if (!b.excludes_zero()) return std::nullopt;
  const bool positive = b.strictly_positive();
  auto recip = [positive](double v) {
    if (v == 0.0) return positive ? HUGE_VAL : -HUGE_VAL;
    return 1.0 / v;
  };
  return decreasing(b, recip);
}

MaybeRange power(const Range& a, std::uint32_t m) {
  const double md = static_cast<double>(m);
  auto p = [md](double v) { return std::pow(v, md); };
  if (m % 2 == 1 || a.lo >= 0.0) return increasing(a, p);
  if (a.hi <= 0.0) return decreasing(a, p);
  Range r{0.0, 0.0, false, false};
  const double l = std::abs(a.lo);
  const double h = std::abs(a.hi);
  if (l > h) {
    r.hi = p(l);
    r.hi_open = a.lo_open;
  } else if (h > l) {
    r.hi = p(h);
    r.hi_open = a.hi_open;
  } else {
    r.hi = p(h);
    r.hi_open = a.lo_open && a.hi_open;
  }
  return finish(r);
}

// Enclosure of sin(v + shift) over a, conservative at the extrema.
MaybeRange sinusoid(const Range& a, double shift) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  if (!std::isfinite(a.lo) || !std::isfinite(a.hi) || a.hi - a.lo >= kTwoPi) {
    return Range{-1.0, 1.0, false, false};
  }
  const double lo = a.lo + shift;
  const double hi = a.hi + shift;
  constexpr double kSlack = 1e-12;
  auto hits = [&](double base) {
    const double k = std::ceil((lo - kSlack - base) / kTwoPi);
    return base + k * kTwoPi <= hi + kSlack;
  };
  const double vlo = std::sin(lo);
  const double vhi = std::sin(hi);
  Range r{std::min(vlo, vhi), std::max(vlo, vhi), false, false};
  if (hits(std::numbers::pi / 2.0)) r.hi = 1.0;
  if (hits(-std::numbers::pi / 2.0)) r.lo = -1.0;
  return r;
}

MaybeRange inverse_range(const InverseData& d, const Range& u) {
  const auto& img = d.image;
  // The argument must stay inside the (open) image.
  if (u.lo < img.lo || (u.lo == img.lo && !u.lo_open)) return std::nullopt;
  if (u.hi > img.hi || (u.hi == img.hi && !u.hi_open)) return std::nullopt;
  auto at = [&](double y, bool toward_lo_end) {
    if (y == img.lo) return d.increasing ? d.domain.lo : d.domain.hi;
    if (y == img.hi) return d.increasing ? d.domain.hi : d.domain.lo;
    (void)toward_lo_end;
    return d.solve(y);
  };
  try {
    const double a = at(u.lo, true);
    const double b = at(u.hi, false);
    if (d.increasing) return finish({a, b, u.lo_open, u.hi_open});
    return finish({b, a, u.hi_open, u.lo_open});
  } catch (const Error&) {
    return std::nullopt;
  }
}

MaybeRange eval_range(const Expr& e, const Range& var) {
  switch (e.op()) {
    case Op::Const: return Range{e.value(), e.value(), false, false};
    case Op::Var: return var;
    default: break;
  }
  const MaybeRange a = eval_range(e.lhs(), var);
  if (!a) return std::nullopt;
  switch (e.op()) {
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div: {
      const MaybeRange b = eval_range(e.rhs(), var);
      if (!b) return std::nullopt;
      if (e.op() == Op::Add) return add(*a, *b);
      if (e.op() == Op::Sub) {
        const MaybeRange nb = negate(*b);
        return nb ? add(*a, *nb) : std::nullopt;
      }
      if (e.op() == Op::Mul) return multiply(*a, *b);
      const MaybeRange rb = reciprocal(*b);
      return rb ? multiply(*a, *rb) : std::nullopt;
    }
    case Op::Neg: return negate(*a);
    case Op::PowInt: return power(*a, e.order());
    case Op::PowReal: {
      if (!a->strictly_positive()) return std::nullopt;
      const double alpha = e.value();
      auto p = [alpha](double v) { return std::pow(v, alpha); };
      return alpha > 0.0 ? increasing(*a, p) : decreasing(*a, p);
    }
    case Op::Root: {
      if (!a->strictly_positive()) return std::nullopt;
      const double inv_m = 1.0 / static_cast<double>(e.order());
      return increasing(*a, [inv_m](double v) { return std::pow(v, inv_m); });
    }
    case Op::Exp: return increasing(*a, [](double v) { return std::exp(v); });
    case Op::Log:
      if (!a->strictly_positive()) return std::nullopt;
      return increasing(*a, [](double v) { return v == 0.0 ? -HUGE_VAL : std::log(v); });
    case Op::Sin: return sinusoid(*a, 0.0);
    case Op::Cos: return sinusoid(*a, std::numbers::pi / 2.0);
    case Op::Inverse: return inverse_range(e.inverse(), *a);
    default: break;
  }
  return std::nullopt;
}

}  // namespace

bool Range::strictly_positive() const noexcept { return lo > 0.0 || (lo == 0.0 && lo_open); }

bool Range::excludes_zero() const noexcept {
  return strictly_positive() || hi < 0.0 || (hi == 0.0 && hi_open);
}

std::optional<Range> range_over(const Expr& e, const OpenInterval& domain) {
  if (!(domain.lo < domain.hi)) return std::nullopt;
  return eval_range(e, Range{domain.lo, domain.hi, true, true});
}

}  // namespace monadica::calc
