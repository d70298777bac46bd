#include "monadica/generalized_set.hpp"

#include <algorithm>
#include <cmath>

#include "monadica/error.hpp"

namespace monadica::sets {
namespace {

std::vector<double> canonical_extras(std::vector<double> pts, const RealSet& base) {
  for (double& p : pts) {
    if (!std::isfinite(p)) throw Error(ErrorCode::NonFiniteInput, "extra point must be finite");
    if (p == 0.0) p = 0.0;
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::erase_if(pts, [&](double p) { return base.contains(p); });
  return pts;
}

const RealSet& monadic_base(const GeneralizedSet& g) {
  if (!g.is_monadic()) throw Error(ErrorCode::NotMonadic, "operation needs a monad of a real set");
  return g.base();
}

}  // namespace

GeneralizedSet::GeneralizedSet(RealSet base, std::vector<double> extras)
    : base_(std::move(base)), extras_(canonical_extras(std::move(extras), base_)) {}

std::ostream& operator<<(std::ostream& os, const GeneralizedSet& g) {
  os << "m(" << g.base() << ")";
  if (!g.extras().empty()) {
    os << " u {";
    for (std::size_t i = 0; i < g.extras().size(); ++i) os << (i ? "," : "") << g.extras()[i];
    os << "}";
  }
  return os;
}

GeneralizedSet monad(const RealSet& s) { return GeneralizedSet(s, {}); }

RealSet shadow(const GeneralizedSet& g) {
  return g.base().union_with(RealSet::of({}, g.extras()));
}

bool member(const GeneralizedReal& x, const GeneralizedSet& g) {
  if (g.base().contains(x.shadow())) return true;
  return x.is_real() && std::binary_search(g.extras().begin(), g.extras().end(), x.shadow());
}

GeneralizedSet set_union(const GeneralizedSet& a, const GeneralizedSet& b) {
  std::vector<double> extras = a.extras();
  extras.insert(extras.end(), b.extras().begin(), b.extras().end());
  return GeneralizedSet(a.base().union_with(b.base()), std::move(extras));
}

GeneralizedSet set_intersect(const GeneralizedSet& a, const GeneralizedSet& b) {
  // A real r lies in m(S) iff r lies in S, so lone reals survive when the
  // other side holds them in either form.
  std::vector<double> extras;
  for (double p : a.extras()) {
    if (b.base().contains(p) || std::binary_search(b.extras().begin(), b.extras().end(), p)) {
      extras.push_back(p);
    }
  }
  for (double p : b.extras()) {
    if (a.base().contains(p)) extras.push_back(p);
  }
  return GeneralizedSet(a.base().intersect(b.base()), std::move(extras));
}

GeneralizedSet set_difference(const GeneralizedSet& a, const GeneralizedSet& b) {
  RealSet base = a.base().difference(b.base());
  for (double p : b.extras()) {
    if (base.contains(p)) {
      throw Error(ErrorCode::NotRepresentable,
                  "difference would puncture a monad at a single real point");
    }
  }
  std::vector<double> extras;
  for (double p : a.extras()) {
    if (!b.base().contains(p) && !std::binary_search(b.extras().begin(), b.extras().end(), p)) {
      extras.push_back(p);
    }
  }
  return GeneralizedSet(std::move(base), std::move(extras));
}

GeneralizedSet hat_interval(IntervalKind kind, double lo, double hi) {
  auto bounded = [&](bool lc, bool hc) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
      throw Error(ErrorCode::NonFiniteInput, "bounded interval needs finite endpoints");
    }
    if (lo > hi) throw Error(ErrorCode::DomainError, "interval needs lo <= hi");
    return monad(RealSet::of(Interval{lo, hi, lc, hc}));
  };
  auto finite = [](double v) {
    if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteInput, "ray endpoint must be finite");
    return v;
  };
  switch (kind) {
    case IntervalKind::Closed: return bounded(true, true);
    case IntervalKind::Open: return bounded(false, false);
    case IntervalKind::HalfLo: return bounded(false, true);
    case IntervalKind::HalfHi: return bounded(true, false);
    case IntervalKind::RayGe: return monad(RealSet::of(Interval{finite(lo), kInf, true, false}));
    case IntervalKind::RayGt: return monad(RealSet::of(Interval{finite(lo), kInf, false, false}));
    case IntervalKind::RayLe: return monad(RealSet::of(Interval{-kInf, finite(hi), false, true}));
    case IntervalKind::RayLt: return monad(RealSet::of(Interval{-kInf, finite(hi), false, false}));
    case IntervalKind::All: return monad(RealSet::all());
  }
  throw Error(ErrorCode::DomainError, "unknown interval kind");
}

double length(const GeneralizedSet& g) {
  if (!g.is_monadic()) throw Error(ErrorCode::LengthUndefined, "not an interval");
  const auto& pieces = g.base().pieces();
  // Every empty interval ]a,a[, ]a,a], [a,a[ has length 0.
  if (pieces.empty()) return 0.0;
  if (pieces.size() > 1) throw Error(ErrorCode::LengthUndefined, "not an interval");
  if (!pieces.front().is_bounded()) {
    throw Error(ErrorCode::LengthUndefined, "interval is not <~-bounded");
  }
  return pieces.front().hi - pieces.front().lo;
}

GeneralizedSet topo(TopoOp op, const GeneralizedSet& g) {
  const RealSet& b = monadic_base(g);
  switch (op) {
    case TopoOp::Interior: return monad(b.interior());
    case TopoOp::Exterior: return monad(b.exterior());
    case TopoOp::Boundary: return monad(b.boundary());
    case TopoOp::Closure: return monad(b.closure());
  }
  throw Error(ErrorCode::DomainError, "unknown topology operator");
}

bool is_open(const GeneralizedSet& g) { return monadic_base(g).is_open(); }
bool is_closed(const GeneralizedSet& g) { return monadic_base(g).is_closed(); }
bool is_compact(const GeneralizedSet& g) { return monadic_base(g).is_compact(); }
bool is_connected(const GeneralizedSet& g) { return monadic_base(g).is_connected(); }

double sup_r(const GeneralizedSet& g) { return shadow(g).sup(); }
double inf_r(const GeneralizedSet& g) { return shadow(g).inf(); }
std::optional<double> max_r(const GeneralizedSet& g) { return shadow(g).max(); }
std::optional<double> min_r(const GeneralizedSet& g) { return shadow(g).min(); }

bool is_upper_bound(const GeneralizedReal& l, const GeneralizedSet& g) {
  const RealSet s = shadow(g);
  if (s.is_empty()) return true;
  const double top = s.pieces().back().hi;
  return !std::isinf(top) && l.shadow() >= top;
}

bool is_lower_bound(const GeneralizedReal& l, const GeneralizedSet& g) {
  const RealSet s = shadow(g);
  if (s.is_empty()) return true;
  const double bottom = s.pieces().front().lo;
  return !std::isinf(bottom) && l.shadow() <= bottom;
}

}  // namespace monadica::sets
