#include <gtest/gtest.h>

#include "monadica/error.hpp"
#include "monadica/generalized_set.hpp"
#include "monadica/real_set.hpp"

using namespace monadica;
using namespace monadica::sets;

namespace {

GeneralizedReal e(std::uint64_t k) { return GeneralizedReal::generator(GeneratorId("e:" + std::to_string(k))); }

RealSet closed(double a, double b) { return RealSet::of(Interval::closed(a, b)); }
RealSet open(double a, double b) { return RealSet::of(Interval::open(a, b)); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& err) {
    return err.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::DomainError;
}

}  // namespace

TEST(RealSet, Normalization) {
  const RealSet s({Interval::closed(0, 1), Interval::open(1, 2)});
  EXPECT_EQ(s, RealSet::of(Interval{0, 2, true, false}));
  const RealSet gap({Interval::open(0, 1), Interval::open(1, 2)});
  EXPECT_EQ(gap.pieces().size(), 2u);
  EXPECT_FALSE(gap.contains(1.0));
  EXPECT_TRUE(RealSet({Interval::open(1, 1)}).is_empty());
}

TEST(RealSet, Algebra) {
  EXPECT_EQ(closed(0, 2).difference(closed(1, 3)), RealSet::of(Interval{0, 1, true, false}));
  EXPECT_EQ(closed(0, 1).intersect(closed(1, 2)), RealSet::point(1));
  EXPECT_EQ(RealSet::all().complement(), RealSet::empty());
  EXPECT_EQ(closed(0, 1).complement().complement(), closed(0, 1));
}

TEST(RealSet, Topology) {
  EXPECT_EQ(closed(0, 1).interior(), open(0, 1));
  EXPECT_EQ(open(0, 1).closure(), closed(0, 1));
  EXPECT_EQ(closed(0, 1).boundary(), RealSet({Interval::point(0), Interval::point(1)}));
  EXPECT_TRUE(closed(0, 1).is_compact());
  EXPECT_FALSE(open(0, 1).is_compact());
  EXPECT_FALSE(RealSet::of(Interval{0, kInf, true, false}).is_compact());
  EXPECT_TRUE(RealSet::all().is_open());
  EXPECT_TRUE(RealSet::all().is_closed());
}

TEST(RealSet, Bounds) {
  EXPECT_EQ(open(0, 1).sup(), 1.0);
  EXPECT_EQ(open(0, 1).max(), std::nullopt);
  EXPECT_EQ(closed(0, 1).max(), 1.0);
  EXPECT_EQ(closed(-3, 1).min(), -3.0);
  EXPECT_THROW(RealSet::empty().sup(), Error);
  EXPECT_THROW(RealSet::of(Interval{0, kInf, true, false}).sup(), Error);
}

TEST(GeneralizedSet, MonadAndShadow) {
  EXPECT_TRUE(monad(RealSet::empty()).is_empty());
  EXPECT_EQ(shadow(monad(closed(0, 1))), closed(0, 1));
  const GeneralizedSet g(RealSet::empty(), {2.0});
  EXPECT_EQ(shadow(g), RealSet::point(2.0));
  EXPECT_FALSE(g.is_monadic());
}

TEST(GeneralizedSet, Membership) {
  EXPECT_TRUE(member(0.5 + e(1), monad(closed(0, 1))));
  const GeneralizedSet with_extra(closed(0, 1), {2.0});
  EXPECT_TRUE(member(1.0 + e(1), with_extra));
  EXPECT_FALSE(member(2.0 + e(1), with_extra));
  EXPECT_TRUE(member(GeneralizedReal(2.0), with_extra));
  EXPECT_TRUE(member(e(1), monad(RealSet::point(0))));
  // Open ends: the monad of ]0,1[ does not reach the monad of 0.
  EXPECT_FALSE(member(e(1), monad(open(0, 1))));
}

TEST(GeneralizedSet, BooleanOperations) {
  EXPECT_EQ(set_union(monad(closed(0, 1)), monad(closed(2, 3))),
            monad(RealSet({Interval::closed(0, 1), Interval::closed(2, 3)})));
  EXPECT_EQ(set_intersect(monad(closed(-1, 0.5)), monad(closed(0.5, 4))), monad(RealSet::point(0.5)));
  EXPECT_EQ(set_difference(monad(closed(0, 2)), monad(closed(1, 3))),
            monad(RealSet::of(Interval{0, 1, true, false})));
}

TEST(GeneralizedSet, HatIntervals) {
  EXPECT_EQ(hat_interval(IntervalKind::Closed, 1.5, 1.5), monad(RealSet::point(1.5)));
  EXPECT_EQ(length(hat_interval(IntervalKind::Closed, 1.5, 1.5)), 0.0);
  EXPECT_TRUE(hat_interval(IntervalKind::Open, 1.5, 1.5).is_empty());
  EXPECT_EQ(length(hat_interval(IntervalKind::HalfHi, 1, 4)), 3.0);
  EXPECT_EQ(hat_interval(IntervalKind::RayGe, 2), monad(RealSet::of(Interval{2, kInf, true, false})));
  EXPECT_EQ(code_of([] { length(hat_interval(IntervalKind::RayGt, 0)); }), ErrorCode::LengthUndefined);
  EXPECT_EQ(code_of([] { hat_interval(IntervalKind::Closed, 2, 1); }), ErrorCode::DomainError);
}

TEST(GeneralizedSet, Topology) {
  EXPECT_EQ(topo(TopoOp::Interior, monad(closed(0, 1))), monad(open(0, 1)));
  EXPECT_EQ(topo(TopoOp::Closure, monad(open(0, 1))), monad(closed(0, 1)));
  EXPECT_TRUE(is_compact(monad(closed(0, 1))));
  EXPECT_FALSE(is_compact(monad(open(0, 1))));
  EXPECT_FALSE(is_connected(monad(RealSet({Interval::closed(0, 1), Interval::closed(2, 3)}))));
  EXPECT_TRUE(is_open(monad(open(0, 1))));
  EXPECT_TRUE(is_closed(monad(closed(0, 1))));
  EXPECT_EQ(code_of([] { topo(TopoOp::Interior, GeneralizedSet(RealSet::empty(), {1.0})); }),
            ErrorCode::NotMonadic);
}

TEST(GeneralizedSet, Completeness) {
  EXPECT_EQ(sup_r(monad(open(0, 1))), 1.0);
  EXPECT_EQ(inf_r(monad(open(0, 1))), 0.0);
  EXPECT_TRUE(is_upper_bound(1.0 + e(1), monad(open(0, 1))));
  EXPECT_TRUE(is_lower_bound(e(2), monad(open(0, 1))));
  EXPECT_FALSE(is_upper_bound(GeneralizedReal(0.5), monad(open(0, 1))));
  EXPECT_EQ(max_r(monad(closed(0, 1))), 1.0);
  EXPECT_EQ(max_r(monad(open(0, 1))), std::nullopt);
  EXPECT_EQ(min_r(monad(closed(0, 1))), 0.0);
  EXPECT_EQ(code_of([] { sup_r(GeneralizedSet{}); }), ErrorCode::EmptySet);
  EXPECT_EQ(code_of([] { sup_r(monad(RealSet::all())); }), ErrorCode::Unbounded);
}
