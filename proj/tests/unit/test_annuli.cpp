#include <gtest/gtest.h>

#include <map>
#include <set>

#include "flapped/annuli.hpp"
#include "flapped/errors.hpp"
#include "support/sweep.hpp"

using namespace flapped;
using flapped::support::bundled;
using flapped::support::sweep_configs;

namespace {
ExtendedSlope S(const char* t) { return ExtendedSlope::parse(t); }
PillowSpec spec_of(int n, std::vector<std::pair<const char*, int>> flaps) {
  PillowSpec s;
  s.n = n;
  for (auto [e, m] : flaps) s.flaps.push_back({EdgeAddress::parse(e), m});
  return s;
}
std::set<PillowVertex> ends(const CoreArc& a) { return {a.start, a.end}; }
}  // namespace

TEST(CoreArcs, AxisSlopesRunAlongEdges) {
  CoreArcPair h = core_arc_pair(S("0/1"));
  ASSERT_TRUE(h.xi.along && h.xi_prime.along);
  EXPECT_EQ(std::set<PillowEdge>({*h.xi.along, *h.xi_prime.along}), std::set<PillowEdge>({PillowEdge::a, PillowEdge::c}));
  CoreArcPair v = core_arc_pair(S("1/0"));
  ASSERT_TRUE(v.xi.along && v.xi_prime.along);
  EXPECT_EQ(std::set<PillowEdge>({*v.xi.along, *v.xi_prime.along}), std::set<PillowEdge>({PillowEdge::b, PillowEdge::d}));
}

TEST(CoreArcs, DiagonalJoinsOppositeVertices) {
  CoreArcPair d = core_arc_pair(S("1/1"));
  EXPECT_FALSE(d.xi.along);
  EXPECT_EQ(ends(d.xi), (std::set<PillowVertex>{PillowVertex::A, PillowVertex::C}));
  EXPECT_EQ(ends(d.xi_prime), (std::set<PillowVertex>{PillowVertex::B, PillowVertex::D}));
}

TEST(CoreArcs, BezoutAndDisjointEndpoints) {
  for (const auto& x : enumerate_slopes(15)) {
    CoreArcPair c = core_arc_pair(x);
    EXPECT_EQ(c.p * x.r64() + c.q * x.s64(), 1);
    // The two arcs use all four vertices.
    std::set<PillowVertex> all = ends(c.xi);
    for (auto v : ends(c.xi_prime)) all.insert(v);
    EXPECT_EQ(all.size(), 4u) << x.str();
    // Consecutive arc chords sit in tiles of opposite color.
    for (const CoreArc* a : {&c.xi, &c.xi_prime})
      for (std::size_t k = 0; k + 1 < a->chords.size(); ++k) EXPECT_NE(a->chords[k].color, a->chords[k + 1].color);
  }
}

TEST(Annuli, PlainHorizontal) {
  AnnulusDecomposition d = annulus_components(build_pillow(spec_of(2, {})), S("0/1"));
  ASSERT_EQ(d.annuli.size(), 2u);
  for (const auto& a : d.annuli) {
    EXPECT_TRUE(a.essential);
    EXPECT_EQ(a.degree, 2);
    EXPECT_EQ(a.circuit_length, 4);
    ASSERT_TRUE(a.essential_circuit_length);
    EXPECT_EQ(*a.essential_circuit_length, 4);
  }
}

TEST(Annuli, SweepInvariants) {
  for (const auto& spec : sweep_configs()) {
    SCOPED_TRACE(spec_to_json(spec));
    FlappedPillow p = build_pillow(spec);
    for (const char* xs : {"0/1", "1/0", "1/1", "-1/2"}) {
      ExtendedSlope x = S(xs);
      AnnulusDecomposition d = annulus_components(p, x);
      EXPECT_EQ(d.annuli.size(), d.pullback.components.size());
      std::set<int> comps;
      for (const auto& a : d.annuli) {
        comps.insert(a.component);
        EXPECT_EQ(a.circuit_length % 2, 0);
        EXPECT_EQ(a.circuit_length, 2 * a.degree) << xs;
        EXPECT_EQ(a.circuit_length_prime, 2 * a.degree) << xs;
        EXPECT_EQ(a.essential, d.pullback.components[a.component].classification.essential());
        EXPECT_EQ(a.degree, d.pullback.components[a.component].degree);
        if (a.essential) {
          ASSERT_TRUE(a.essential_circuit_length) << xs;
          EXPECT_LE(*a.essential_circuit_length, a.circuit_length);
          EXPECT_EQ(*a.essential_circuit_length % 2, 0);
        } else {
          EXPECT_GE(a.degree, 1);
        }
      }
      EXPECT_EQ(comps.size(), d.annuli.size());
      for (const auto& e : d.graph.edges) {
        const CoreArc& arc = e.type == ArcType::Xi ? d.arcs.xi : d.arcs.xi_prime;
        std::set<PillowVertex> got = {p.vertex_image(e.v0), p.vertex_image(e.v1)};
        EXPECT_EQ(got, ends(arc));
      }
    }
  }
}

TEST(Annuli, BoundaryPushOffIsTheCore) {
  for (const auto& spec : sweep_configs()) {
    FlappedPillow p = build_pillow(spec);
    for (const char* xs : {"0/1", "1/1", "2/3"}) {
      AnnulusDecomposition d = annulus_components(p, S(xs), AnnulusOptions{1000000, false, {}});
      for (const auto& a : d.annuli) {
        const auto& comp = d.pullback.components[a.component];
        for (const auto* walk : {&a.xi_boundary, &a.xi_prime_boundary}) {
          WalkClass wc = classify_walk(p, push_off_walk(p, d.graph, *walk));
          EXPECT_EQ(wc.classification, comp.classification) << spec_to_json(spec) << " " << xs;
        }
      }
    }
  }
}

TEST(Annuli, FlapAnnuliArePeripheral) {
  AnnulusDecomposition d = annulus_components(build_pillow(bundled("hflaponly")), S("0/1"));
  int peripheral = 0;
  for (const auto& a : d.annuli)
    if (!a.essential) {
      ++peripheral;
      EXPECT_GE(a.degree, 1);
    }
  EXPECT_EQ(peripheral, 1);
}

TEST(Annuli, BudgetIsReported) {
  FlappedPillow p = build_pillow(bundled("b3"));
  AnnulusOptions tiny;
  tiny.budget = 1;
  AnnulusDecomposition d = annulus_components(p, S("1/1"), tiny);
  bool flagged = false;
  for (const auto& a : d.annuli) flagged = flagged || a.circuit_budget_exceeded;
  EXPECT_TRUE(flagged);
  AnnulusDecomposition full = annulus_components(p, S("1/1"));
  for (std::size_t k = 0; k < full.annuli.size(); ++k)
    if (full.annuli[k].essential) EXPECT_THROW(essential_circuit_length(p, full, static_cast<int>(k), 1), BudgetExceeded);
}

TEST(Annuli, PartnerLengthsAgreeAfterOneFlap) {
  // Adding a flap on an edge crossed once by the curve keeps essential circuit lengths.
  const std::vector<std::pair<const char*, Orientation>> cases = {{"0/1", Orientation::Vertical},
                                                                  {"1/0", Orientation::Horizontal}};
  int pairs = 0;
  for (const auto& spec : sweep_configs()) {
    if (spec.total_multiplicity() > 2) continue;
    for (auto [xs, orient] : cases) {
      ExtendedSlope x = S(xs);
      EdgeAddress extra;
      bool found = false;
      for (const auto& e : list_edges(spec.n)) {
        bool used = false;
        for (const auto& f : spec.flaps) used = used || f.edge == e;
        if (!used && e.orientation == orient) {
          extra = e;
          found = true;
          break;
        }
      }
      ASSERT_TRUE(found);
      PillowSpec bigger = spec;
      bigger.flaps.push_back({extra, 1});
      FlappedPillow p = build_pillow(spec), q = build_pillow(bigger);
      AnnulusDecomposition a = annulus_components(p, x), b = annulus_components(q, x);
      std::map<std::array<int, 2>, int> where;
      for (std::size_t k = 0; k < b.annuli.size(); ++k)
        for (const auto& cell : b.annuli[k].base_cells) where[cell] = static_cast<int>(k);
      for (const auto& an : a.annuli) {
        if (!an.essential) continue;
        std::set<int> partners;
        for (const auto& cell : an.base_cells)
          if (where.count(cell)) partners.insert(where[cell]);
        ASSERT_EQ(partners.size(), 1u);
        const auto& bn = b.annuli[*partners.begin()];
        ASSERT_TRUE(bn.essential);
        EXPECT_EQ(an.essential_circuit_length, bn.essential_circuit_length) << spec_to_json(bigger) << " " << xs;
        ++pairs;
      }
    }
  }
  EXPECT_GE(pairs, 10);
}
