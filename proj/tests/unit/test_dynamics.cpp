#include <gtest/gtest.h>

#include <set>

#include "flapped/dynamics.hpp"
#include "flapped/errors.hpp"
#include "support/sweep.hpp"

using namespace flapped;
using flapped::support::bundled;

namespace {
ExtendedSlope S(const char* t) { return ExtendedSlope::parse(t); }
std::vector<std::string> names(const std::vector<ExtendedSlope>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}
bool integral(const ExtendedSlope& x) { return x.is_peripheral() || x.s() <= 1; }
}  // namespace

TEST(Orbit, ThreeByThreeFromOneNinth) {
  FlappedPillow p = build_pillow(bundled("b3"));
  OrbitRecord r = orbit(p, S("1/9"), 20);
  EXPECT_EQ(names(r.states),
            (std::vector<std::string>{"1/9", "3/25", "3/23", "1/7", "3/19", "3/17", "1/5", "1/5"}));
  EXPECT_EQ(r.terminal, OrbitTerminal::FixedPoint);
  EXPECT_EQ(r.fixed, S("1/5"));
  EXPECT_EQ(r.terminal_str(), "fixed 1/5");
}

TEST(Orbit, PeripheralIsAbsorbing) {
  FlappedPillow p = build_pillow(bundled("corner2"));
  OrbitRecord r = orbit(p, ExtendedSlope(), 5);
  EXPECT_EQ(r.terminal, OrbitTerminal::Peripheral);
  EXPECT_EQ(r.states.size(), 1u);
}

TEST(Orbit, PlainMapsFixEverything) {
  FlappedPillow p = build_pillow(bundled("plain3"));
  for (const auto& x : enumerate_slopes(6)) {
    OrbitRecord r = orbit(p, x, 3);
    EXPECT_EQ(r.terminal, OrbitTerminal::FixedPoint);
    EXPECT_EQ(r.states.size(), 2u);
  }
}

TEST(Orbit, BudgetAndDeterminism) {
  FlappedPillow p = build_pillow(bundled("b3"));
  OrbitRecord r = orbit(p, S("1/9"), 1);
  EXPECT_EQ(r.terminal, OrbitTerminal::BudgetExceeded);
  EXPECT_EQ(r.states.size(), 2u);
  EXPECT_EQ(orbit(p, S("2/11"), 30).str(), orbit(p, S("2/11"), 30).str());
  EXPECT_THROW(orbit(p, S("1/2"), 0), InputError);
}

TEST(Orbit, StatesFollowTheMap) {
  FlappedPillow p = build_pillow(bundled("b3"));
  SlopeMap mu(p);
  for (const auto& x : enumerate_slopes(12)) {
    OrbitRecord r = orbit(mu, x, 40);
    for (std::size_t k = 0; k + 1 < r.states.size(); ++k) EXPECT_EQ(mu(r.states[k]), r.states[k + 1]);
  }
}

TEST(Fixed, CornerMap) {
  FlappedPillow p = build_pillow(bundled("corner2"));
  EXPECT_EQ(names(fixed_slopes(p, 8)), (std::vector<std::string>{"0/1", "1/0", "-1/1", "1/1"}));
}

TEST(Fixed, VerticalOnlyFixesIntegers) {
  FlappedPillow p = build_pillow(bundled("vertical2"));
  auto fixed = names(fixed_slopes(p, 4));
  std::set<std::string> got(fixed.begin(), fixed.end());
  for (const char* x : {"0/1", "1/0", "1/1", "-1/1", "2/1", "-2/1", "3/1", "-3/1"}) EXPECT_TRUE(got.count(x)) << x;
}

TEST(Fixed, PlainIsIdentity) {
  FlappedPillow p = build_pillow(bundled("plain2"));
  EXPECT_EQ(fixed_slopes(p, 2).size(), 4u);
}

TEST(Scan, CertifiedMapsHaveNoViolations) {
  FlappedPillow p = build_pillow(bundled("corner2"));
  SlopeMap mu(p);
  EXPECT_TRUE(monotonicity_scan(mu, 30).empty());
  EXPECT_TRUE(certified_mode(p.spec()));
}

TEST(Scan, ThreeByThreeIncreases) {
  FlappedPillow p = build_pillow(bundled("b3"));
  SlopeMap mu(p);
  auto vs = monotonicity_scan(mu, 8);
  bool seen = false;
  for (const auto& v : vs)
    if (v.x == S("1/7")) {
      seen = true;
      EXPECT_EQ(v.image, S("3/19"));
      EXPECT_EQ(v.kind, ViolationKind::Increase);
    }
  EXPECT_TRUE(seen);
  EXPECT_FALSE(certified_mode(p.spec()));
}

TEST(Attractor, CornerMapCertified) {
  FlappedPillow p = build_pillow(bundled("corner2"));
  SlopeMap mu(p);
  AttractorReport r = attractor(mu, 30, 30);
  EXPECT_TRUE(r.certified_mode);
  EXPECT_TRUE(r.attractor_certified);
  EXPECT_EQ(names(r.fixed_slopes), (std::vector<std::string>{"0/1", "1/0", "-1/1", "1/1"}));
  EXPECT_NE(r.str().find("certified: true"), std::string::npos);
}

TEST(Attractor, VerticalOnlyLandsOnIntegers) {
  FlappedPillow p = build_pillow(bundled("vertical2"));
  SlopeMap mu(p);
  AttractorReport r = attractor(mu, 12, 20, AttractorOptions{50, 3});
  EXPECT_FALSE(r.attractor_certified);
  for (const auto& o : r.sample_orbits) {
    EXPECT_TRUE(o.terminal == OrbitTerminal::FixedPoint || o.terminal == OrbitTerminal::Peripheral);
    EXPECT_TRUE(integral(o.states.back())) << o.start.str();
  }
}

TEST(Attractor, ThreeByThreeObservational) {
  FlappedPillow p = build_pillow(bundled("b3"));
  SlopeMap mu(p);
  AttractorReport r = attractor(mu, 10, 12, AttractorOptions{30, 5});
  EXPECT_FALSE(r.certified_mode);
  EXPECT_FALSE(r.attractor_certified);
  for (const auto& o : r.sample_orbits)
    EXPECT_TRUE(o.terminal == OrbitTerminal::FixedPoint || o.terminal == OrbitTerminal::Peripheral) << o.start.str();
}

TEST(Relation, ShiftedInstances) {
  FlappedPillow p = build_pillow(bundled("b3"));
  SlopeMap mu(p);
  EXPECT_EQ(mu(S("1/9")), S("3/25"));
  // r/(s+24r) -> r'/(s'+22r') with r' = 3
  EXPECT_EQ(mu(S("1/33")), S("3/91"));
  EXPECT_EQ(mu(S("1/7")), S("3/19"));
  EXPECT_EQ(mu(S("1/31")), S("3/85"));
  RelationReport r = relation_check_3x3(mu, 12);
  EXPECT_TRUE(r.passed()) << (r.counterexamples.empty() ? "" : r.counterexamples.front());
  EXPECT_EQ(r.checked + r.skipped, static_cast<int>(enumerate_slopes(12).size()));
}
