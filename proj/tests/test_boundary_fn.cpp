#include <gtest/gtest.h>

#include "bnloci/boundary_fn.hpp"

using namespace bnloci;

namespace {

BoundaryFn saw() {
  // (0,1]: x, (1,2]: 1/2, (2,3): 3 - x
  return BoundaryFn({{0, 1, false, true, 1, 0}, {1, 2, false, true, 0, Rat(1, 2)}, {2, 3, false, false, -1, 3}});
}

}  // namespace

TEST(BoundaryFn, Evaluates) {
  const BoundaryFn f = saw();
  EXPECT_EQ(f(Rat(1, 2)), Rat(1, 2));
  EXPECT_EQ(f(1), Rat(1));
  EXPECT_EQ(f(Rat(3, 2)), Rat(1, 2));
  EXPECT_EQ(f(2), Rat(1, 2));
  EXPECT_EQ(f(Rat(5, 2)), Rat(1, 2));
  EXPECT_THROW(f(0), std::out_of_range);
  EXPECT_THROW(f(3), std::out_of_range);
  EXPECT_FALSE(f.try_eval(Rat(-1)).has_value());
  EXPECT_TRUE(f.in_domain(Rat(29, 10)));
}

TEST(BoundaryFn, Limits) {
  const BoundaryFn f = saw();
  EXPECT_EQ(f.left_limit(1), Rat(1));
  EXPECT_EQ(f.right_limit(1), Rat(1, 2));
  EXPECT_EQ(f.left_limit(2), Rat(1, 2));
  EXPECT_EQ(f.right_limit(2), Rat(1));
  EXPECT_EQ(f.right_limit(0), Rat(0));
  EXPECT_EQ(f.left_limit(3), Rat(0));
}

TEST(BoundaryFn, Breakpoints) {
  EXPECT_EQ(saw().breakpoints(), (std::vector<Rat>{0, 1, 2, 3}));
}

TEST(BoundaryFn, RejectsBadTilings) {
  EXPECT_THROW(BoundaryFn({}), std::invalid_argument);
  // gap
  EXPECT_THROW(BoundaryFn({{0, 1, false, true, 0, 0}, {2, 3, false, true, 0, 0}}), std::invalid_argument);
  // shared endpoint owned twice
  EXPECT_THROW(BoundaryFn({{0, 1, false, true, 0, 0}, {1, 2, true, true, 0, 0}}), std::invalid_argument);
  // shared endpoint owned by neither
  EXPECT_THROW(BoundaryFn({{0, 1, false, false, 0, 0}, {1, 2, false, true, 0, 0}}), std::invalid_argument);
  // empty piece
  EXPECT_THROW(BoundaryFn({{1, 1, true, true, 0, 0}}), std::invalid_argument);
}

TEST(BoundaryFn, EveryPointHasOnePiece) {
  const BoundaryFn f = saw();
  for (int i = 1; i < 30; ++i) {
    const Rat x(i, 10);
    int owners = 0;
    for (const Piece& p : f.pieces()) owners += p.contains(x);
    EXPECT_EQ(owners, 1) << x;
    EXPECT_TRUE(f.piece_at(x).contains(x));
  }
}
