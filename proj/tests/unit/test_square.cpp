#include <gtest/gtest.h>

#include "flapped/square.hpp"

using namespace flapped;

TEST(Square, SymmetryGroupHasEightElements) {
  auto all = SquareSymmetry::all();
  ASSERT_EQ(all.size(), 8u);
  int positive = 0;
  for (const auto& g : all) positive += g.det() == 1;
  EXPECT_EQ(positive, 4);
}

TEST(Square, InverseUndoesApply) {
  const Point probe{Rational(1, 3), Rational(2, 7)};
  for (const auto& g : SquareSymmetry::all()) {
    Point p = g.inverse().apply(g.apply(probe));
    EXPECT_EQ(p.x, probe.x);
    EXPECT_EQ(p.y, probe.y);
  }
}

TEST(Square, SideMapsAgreeWithPoints) {
  for (const auto& g : SquareSymmetry::all())
    for (Side s : kSides) {
      Rational t(1, 5);
      Point img = g.apply(point_on_side(s, t));
      BoundaryPoint b;
      ASSERT_TRUE(boundary_point_of(img, b));
      EXPECT_EQ(b.side, g.map_side(s));
      EXPECT_EQ(b.t, g.reverses_side(s) ? Rational(1) - t : t);
    }
}

TEST(Square, CornersAndPerimeter) {
  EXPECT_EQ(perimeter_position(Side::S, Rational(1, 2)), Rational(1, 2));
  EXPECT_EQ(perimeter_position(Side::E, Rational(1, 2)), Rational(3, 2));
  EXPECT_EQ(perimeter_position(Side::N, Rational(1, 4)), Rational(11, 4));
  EXPECT_EQ(perimeter_position(Side::W, Rational(1, 4)), Rational(15, 4));
  for (Side s : kSides) {
    EXPECT_EQ(opposite(opposite(s)), s);
    Point a = corner_point(corner_at(s, 0)), b = point_on_side(s, Rational(0));
    EXPECT_EQ(a.x, b.x);
    EXPECT_EQ(a.y, b.y);
  }
}
