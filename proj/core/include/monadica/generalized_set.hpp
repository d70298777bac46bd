#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "monadica/generalized_real.hpp"
#include "monadica/real_set.hpp"

namespace monadica::sets {

/**
 * A subset of the generalized reals of the form m(base) u extras: the monad
 * of a real set (every value whose shadow lies in base) together with
 * finitely many real points outside base. The extras arise as images of
 * critical monads, e.g. the image of sin, which is the monad of ]-1,1[ plus
 * the two reals -1 and 1.
 *
 * Invariant: extras are sorted, unique and disjoint from base, so the
 * representation is unique and operator== is set equality.
 */
class GeneralizedSet {
 public:
  GeneralizedSet() = default;
  GeneralizedSet(RealSet base, std::vector<double> extras);

  const RealSet& base() const noexcept { return base_; }
  const std::vector<double>& extras() const noexcept { return extras_; }

  bool is_monadic() const noexcept { return extras_.empty(); }
  bool is_empty() const noexcept { return base_.is_empty() && extras_.empty(); }

  friend bool operator==(const GeneralizedSet&, const GeneralizedSet&) = default;

 private:
  RealSet base_;
  std::vector<double> extras_;
};

std::ostream& operator<<(std::ostream& os, const GeneralizedSet& g);

GeneralizedSet monad(const RealSet& s);
/// The set of shadows of members: base u extras.
RealSet shadow(const GeneralizedSet& g);

bool member(const GeneralizedReal& x, const GeneralizedSet& g);

GeneralizedSet set_union(const GeneralizedSet& a, const GeneralizedSet& b);
GeneralizedSet set_intersect(const GeneralizedSet& a, const GeneralizedSet& b);
/// Throws Error(NotRepresentable) when b removes a lone real from inside a
/// monad of a (the punctured monad has no representation here).
GeneralizedSet set_difference(const GeneralizedSet& a, const GeneralizedSet& b);

enum class IntervalKind {
  Closed,     // [a,b]
  Open,       // ]a,b[
  HalfLo,     // ]a,b]
  HalfHi,     // [a,b[
  RayGe,      // [a,+inf[
  RayGt,      // ]a,+inf[
  RayLe,      // ]-inf,b]
  RayLt,      // ]-inf,b[
  All,
};

/// Interval of generalized reals, i.e. the monad of the matching real interval.
/// Bounded kinds throw Error(DomainError) when lo > hi; rays read lo (Ge/Gt)
/// or hi (Le/Lt) and ignore the other bound.
GeneralizedSet hat_interval(IntervalKind kind, double lo, double hi = 0.0);

/// hi - lo for a bounded interval; 0 for the empty set and for a single monad.
/// Throws Error(LengthUndefined) otherwise.
double length(const GeneralizedSet& g);

enum class TopoOp { Interior, Exterior, Boundary, Closure };

/// Apply the operator to base and take the monad. Throws Error(NotMonadic).
GeneralizedSet topo(TopoOp op, const GeneralizedSet& g);
bool is_open(const GeneralizedSet& g);
bool is_closed(const GeneralizedSet& g);
bool is_compact(const GeneralizedSet& g);
bool is_connected(const GeneralizedSet& g);

/// Real supremum: the supremum of the shadow set.
double sup_r(const GeneralizedSet& g);
double inf_r(const GeneralizedSet& g);
std::optional<double> max_r(const GeneralizedSet& g);
std::optional<double> min_r(const GeneralizedSet& g);

/// L is a <~-upper bound iff its shadow bounds the shadow set from above.
bool is_upper_bound(const GeneralizedReal& l, const GeneralizedSet& g);
bool is_lower_bound(const GeneralizedReal& l, const GeneralizedSet& g);

}  // namespace monadica::sets
