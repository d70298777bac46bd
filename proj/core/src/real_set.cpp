#include "monadica/real_set.hpp"

#include <algorithm>
#include <cmath>

#include "monadica/error.hpp"

namespace monadica::sets {
namespace {

Interval sanitize(Interval i) {
  if (std::isnan(i.lo) || std::isnan(i.hi)) {
    throw Error(ErrorCode::NonFiniteInput, "NaN interval endpoint");
  }
  if (std::isinf(i.lo)) i.lo_closed = false;
  if (std::isinf(i.hi)) i.hi_closed = false;
  if (i.lo == 0.0) i.lo = 0.0;
  if (i.hi == 0.0) i.hi = 0.0;
  return i;
}

// a starts before b: smaller lo, or equal lo with a closed there.
bool starts_before(const Interval& a, const Interval& b) {
  if (a.lo != b.lo) return a.lo < b.lo;
  return a.lo_closed && !b.lo_closed;
}

std::vector<Interval> normalize(std::vector<Interval> in) {
  std::vector<Interval> pieces;
  pieces.reserve(in.size());
  for (auto& i : in) {
    i = sanitize(i);
    if (!i.is_empty()) pieces.push_back(i);
  }
  std::sort(pieces.begin(), pieces.end(), starts_before);
  std::vector<Interval> out;
  for (const auto& p : pieces) {
    if (!out.empty()) {
      Interval& cur = out.back();
      const bool joins = p.lo < cur.hi || (p.lo == cur.hi && (cur.hi_closed || p.lo_closed));
      if (joins) {
        if (p.hi > cur.hi) {
          cur.hi = p.hi;
          cur.hi_closed = p.hi_closed;
        } else if (p.hi == cur.hi) {
          cur.hi_closed = cur.hi_closed || p.hi_closed;
        }
        continue;
      }
    }
    out.push_back(p);
  }
  return out;
}

Interval intersect_pieces(const Interval& a, const Interval& b) {
  Interval r;
  if (a.lo > b.lo) {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed;
  } else if (b.lo > a.lo) {
    r.lo = b.lo;
    r.lo_closed = b.lo_closed;
  } else {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed && b.lo_closed;
  }
  if (a.hi < b.hi) {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed;
  } else if (b.hi < a.hi) {
    r.hi = b.hi;
    r.hi_closed = b.hi_closed;
  } else {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed && b.hi_closed;
  }
  return r;
}

}  // namespace

bool Interval::is_empty() const noexcept {
  if (lo > hi) return true;
  if (lo == hi) return !(lo_closed && hi_closed) || std::isinf(lo);
  return false;
}

bool Interval::is_bounded() const noexcept { return std::isfinite(lo) && std::isfinite(hi); }

bool Interval::contains(double v) const noexcept {
  const bool above = lo_closed ? v >= lo : v > lo;
  const bool below = hi_closed ? v <= hi : v < hi;
  return above && below;
}

RealSet::RealSet(std::vector<Interval> pieces) : pieces_(normalize(std::move(pieces))) {}

RealSet RealSet::of(std::span<const Interval> intervals, std::span<const double> points) {
  std::vector<Interval> all(intervals.begin(), intervals.end());
  for (double p : points) all.push_back(Interval::point(p));
  return RealSet(std::move(all));
}

std::vector<Interval> RealSet::intervals() const {
  std::vector<Interval> out;
  for (const auto& p : pieces_) {
    if (!p.is_point()) out.push_back(p);
  }
  return out;
}

std::vector<double> RealSet::points() const {
  std::vector<double> out;
  for (const auto& p : pieces_) {
    if (p.is_point()) out.push_back(p.lo);
  }
  return out;
}

bool RealSet::contains(double v) const noexcept {
  return std::any_of(pieces_.begin(), pieces_.end(),
                     [v](const Interval& p) { return p.contains(v); });
}

RealSet RealSet::union_with(const RealSet& other) const {
  std::vector<Interval> all = pieces_;
  all.insert(all.end(), other.pieces_.begin(), other.pieces_.end());
  return RealSet(std::move(all));
}

RealSet RealSet::intersect(const RealSet& other) const {
  std::vector<Interval> out;
  for (const auto& a : pieces_) {
    for (const auto& b : other.pieces_) {
      Interval r = intersect_pieces(a, b);
      if (!r.is_empty()) out.push_back(r);
    }
  }
  return RealSet(std::move(out));
}

RealSet RealSet::complement() const {
  std::vector<Interval> gaps;
  double lo = -kInf;
  bool lo_closed = false;
  for (const auto& p : pieces_) {
    gaps.push_back({lo, p.lo, lo_closed, !p.lo_closed});
    lo = p.hi;
    lo_closed = !p.hi_closed;
  }
  gaps.push_back({lo, kInf, lo_closed, false});
  return RealSet(std::move(gaps));
}

RealSet RealSet::difference(const RealSet& other) const {
  return intersect(other.complement());
}

RealSet RealSet::interior() const {
  std::vector<Interval> out;
  for (const auto& p : pieces_) {
    if (p.lo < p.hi) out.push_back({p.lo, p.hi, false, false});
  }
  return RealSet(std::move(out));
}

RealSet RealSet::closure() const {
  std::vector<Interval> out;
  for (const auto& p : pieces_) out.push_back({p.lo, p.hi, true, true});
  return RealSet(std::move(out));
}

RealSet RealSet::boundary() const { return closure().difference(interior()); }

RealSet RealSet::exterior() const { return complement().interior(); }

bool RealSet::is_bounded() const noexcept {
  return pieces_.empty() || (std::isfinite(pieces_.front().lo) && std::isfinite(pieces_.back().hi));
}

double RealSet::sup() const {
  if (pieces_.empty()) throw Error(ErrorCode::EmptySet, "supremum of the empty set");
  const double s = pieces_.back().hi;
  if (std::isinf(s)) throw Error(ErrorCode::Unbounded, "set is not bounded above");
  return s;
}

double RealSet::inf() const {
  if (pieces_.empty()) throw Error(ErrorCode::EmptySet, "infimum of the empty set");
  const double s = pieces_.front().lo;
  if (std::isinf(s)) throw Error(ErrorCode::Unbounded, "set is not bounded below");
  return s;
}

std::optional<double> RealSet::max() const {
  const double s = sup();
  if (pieces_.back().hi_closed) return s;
  return std::nullopt;
}

std::optional<double> RealSet::min() const {
  const double s = inf();
  if (pieces_.front().lo_closed) return s;
  return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, const Interval& i) {
  if (i.is_point()) return os << "{" << i.lo << "}";
  return os << (i.lo_closed ? "[" : "]") << i.lo << "," << i.hi << (i.hi_closed ? "]" : "[");
}

std::ostream& operator<<(std::ostream& os, const RealSet& s) {
  if (s.is_empty()) return os << "{}";
  bool first = true;
  for (const auto& p : s.pieces()) {
    if (!first) os << " u ";
    os << p;
    first = false;
  }
  return os;
}

}  // namespace monadica::sets
