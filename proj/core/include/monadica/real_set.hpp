#pragma once

#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

namespace monadica::sets {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// A real interval; infinite endpoints are always open. lo == hi with both
/// ends closed is a single point.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = true;
  bool hi_closed = true;

  static Interval closed(double a, double b) { return {a, b, true, true}; }
  static Interval open(double a, double b) { return {a, b, false, false}; }
  static Interval point(double p) { return {p, p, true, true}; }

  bool is_empty() const noexcept;
  bool is_point() const noexcept { return lo == hi && lo_closed && hi_closed; }
  bool is_bounded() const noexcept;
  bool contains(double v) const noexcept;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/**
 * A finite union of disjoint real intervals plus finitely many isolated
 * points, kept normalized:
 *   - pieces sorted by left endpoint, pairwise disjoint;
 *   - pieces sharing an endpoint that belongs to either of them are merged,
 *     so [a,b] u [b,c] becomes [a,c] while [a,b[ u ]b,c] stays split;
 *   - isolated points are stored as degenerate closed pieces.
 * Normal form is unique, so operator== is set equality.
 */
class RealSet {
 public:
  RealSet() = default;

  static RealSet empty() { return {}; }
  static RealSet all() { return RealSet({Interval{-kInf, kInf, false, false}}); }
  static RealSet of(Interval i) { return RealSet({i}); }
  static RealSet point(double p) { return RealSet({Interval::point(p)}); }
  static RealSet of(std::span<const Interval> intervals, std::span<const double> points = {});

  /// Throws Error(NonFiniteInput) on NaN endpoints.
  explicit RealSet(std::vector<Interval> pieces);

  const std::vector<Interval>& pieces() const noexcept { return pieces_; }
  std::vector<Interval> intervals() const;  // non-degenerate pieces
  std::vector<double> points() const;       // isolated points

  bool is_empty() const noexcept { return pieces_.empty(); }
  bool contains(double v) const noexcept;

  RealSet union_with(const RealSet& other) const;
  RealSet intersect(const RealSet& other) const;
  RealSet complement() const;
  RealSet difference(const RealSet& other) const;

  // Standard topology of R.
  RealSet interior() const;
  RealSet closure() const;
  RealSet boundary() const;
  RealSet exterior() const;

  bool is_open() const { return *this == interior(); }
  bool is_closed() const { return *this == closure(); }
  bool is_bounded() const noexcept;
  bool is_compact() const { return is_closed() && is_bounded(); }
  /// Connected subsets of R are exactly the intervals (the empty set included).
  bool is_connected() const noexcept { return pieces_.size() <= 1; }

  /// Throws Error(EmptySet) or Error(Unbounded).
  double sup() const;
  double inf() const;
  /// The supremum when it belongs to the set.
  std::optional<double> max() const;
  std::optional<double> min() const;

  friend bool operator==(const RealSet&, const RealSet&) = default;

 private:
  std::vector<Interval> pieces_;
};

std::ostream& operator<<(std::ostream& os, const Interval& i);
std::ostream& operator<<(std::ostream& os, const RealSet& s);

}  // namespace monadica::sets
