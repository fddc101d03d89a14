#include <gtest/gtest.h>

#include <set>

#include "flapped/errors.hpp"
#include "flapped/slopes.hpp"
#include "support/oracles.hpp"

using namespace flapped;

namespace {
ExtendedSlope S(const char* t) { return ExtendedSlope::parse(t); }
}  // namespace

TEST(Slopes, NormalizeReducesAndFixesSign) {
  EXPECT_EQ(normalize_slope(4, 6).str(), "2/3");
  EXPECT_EQ(normalize_slope(-3, 0).str(), "1/0");
  EXPECT_EQ(normalize_slope(2, -1).str(), "-2/1");
  EXPECT_EQ(normalize_slope(0, -5).str(), "0/1");
  EXPECT_THROW(normalize_slope(0, 0), InputError);
}

TEST(Slopes, NormalizeIsIdempotent) {
  for (const auto& x : enumerate_slopes(12)) EXPECT_EQ(normalize_slope(x.r(), x.s()), x);
}

TEST(Slopes, ParseAndPrint) {
  EXPECT_TRUE(S("o").is_peripheral());
  EXPECT_TRUE(S("peripheral").is_peripheral());
  EXPECT_EQ(S("inf"), normalize_slope(1, 0));
  EXPECT_EQ(S("-6/4").str(), "-3/2");
  EXPECT_EQ(S("7").str(), "7/1");
  EXPECT_EQ(ExtendedSlope().str(), "peripheral");
  EXPECT_THROW(S("1/x"), InputError);
  EXPECT_THROW(S("0/0"), InputError);
  EXPECT_THROW(S(""), InputError);
}

TEST(Slopes, BigComponentsStayExact) {
  ExtendedSlope x = S("123456789012345678901234567891/2");
  EXPECT_EQ(x.str(), "123456789012345678901234567891/2");
  EXPECT_EQ(complexity(x), BigInt("123456789012345678901234567893"));
  EXPECT_THROW(x.r64(), InputError);
}

TEST(Slopes, Complexity) {
  EXPECT_EQ(complexity(ExtendedSlope::peripheral()), 0);
  EXPECT_EQ(complexity(S("3/25")), 28);
  EXPECT_EQ(complexity(S("1/0")), 1);
  EXPECT_EQ(complexity(S("-4/7")), 11);
}

TEST(Slopes, IntersectionNumbers) {
  EXPECT_EQ(intersection_curves(S("0/1"), S("1/0")), 2);
  EXPECT_EQ(intersection_curves(S("2/1"), S("0/1")), 4);
  EXPECT_EQ(intersection_curves(S("5/7"), S("5/7")), 0);
  EXPECT_EQ(intersection_curve_arc(S("2/1"), S("0/1")), 2);
  EXPECT_EQ(intersection_curve_arc(S("2/1"), S("1/0")), 1);
  EXPECT_EQ(intersection_curve_arc(S("3/4"), S("3/4")), 0);
  EXPECT_THROW(intersection_curves(ExtendedSlope(), S("1/2")), InputError);
  EXPECT_THROW(intersection_curve_arc(S("1/2"), ExtendedSlope()), InputError);
}

TEST(Slopes, IntersectionSymmetricAndTwiceArc) {
  auto xs = enumerate_slopes(9);
  for (const auto& x : xs)
    for (const auto& y : xs) {
      EXPECT_EQ(intersection_curves(x, y), intersection_curves(y, x));
      EXPECT_EQ(intersection_curves(x, y) == 0, x == y);
      if (!(x == y)) EXPECT_EQ(intersection_curves(x, y), 2 * intersection_curve_arc(x, y));
    }
}

TEST(Slopes, EnumerationSmallCases) {
  auto one = enumerate_slopes(1);
  ASSERT_EQ(one.size(), 2u);
  std::set<std::string> names;
  for (const auto& x : enumerate_slopes(2)) names.insert(x.str());
  EXPECT_EQ(names, (std::set<std::string>{"0/1", "1/0", "1/1", "-1/1"}));
  EXPECT_EQ(enumerate_slopes(8).size(), support::brute_force_slopes(8).size());
  auto with = enumerate_slopes(3, true);
  EXPECT_TRUE(with.back().is_peripheral());
}

TEST(Slopes, EnumerationMatchesBruteForce) {
  for (int k = 1; k <= 25; ++k) {
    auto xs = enumerate_slopes(k);
    std::set<std::pair<std::string, std::string>> got;
    for (const auto& x : xs) {
      EXPECT_LE(complexity(x), k);
      got.insert({x.r().str(), x.s().str()});
    }
    EXPECT_EQ(got.size(), xs.size()) << "duplicates at bound " << k;
    std::set<std::pair<std::string, std::string>> want;
    for (auto [r, s] : support::brute_force_slopes(k)) want.insert({std::to_string(r), std::to_string(s)});
    EXPECT_EQ(got, want);
  }
}

TEST(Slopes, EnumerationOrderIsComplexityThenR) {
  auto xs = enumerate_slopes(15);
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    auto c0 = complexity(xs[k]), c1 = complexity(xs[k + 1]);
    EXPECT_TRUE(c0 < c1 || (c0 == c1 && xs[k].r() < xs[k + 1].r()));
  }
}

TEST(Slopes, OrderingPutsPeripheralFirst) {
  EXPECT_TRUE(ExtendedSlope() < S("0/1"));
  EXPECT_TRUE(S("0/1") < S("1/1"));
  EXPECT_FALSE(S("1/1") < S("1/1"));
}
