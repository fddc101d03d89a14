#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flapped/complex.hpp"
#include "flapped/rational.hpp"
#include "flapped/slopes.hpp"
#include "flapped/square.hpp"

namespace flapped {

struct PullbackOptions {
  // The curve of slope r/s is the fold of r*u - s*v = 1/offset_denominator.
  // 0 selects 2n+1. Any value > n keeps the curve off the (1/n)-grid.
  int offset_denominator = 0;
};

// A piece of the geodesic inside one 0-tile, oriented along the direction (s, r).
struct BaseChord {
  int id = 0;
  Color color = Color::White;
  BoundaryPoint from;
  BoundaryPoint to;
};

struct BaseChordSets {
  ExtendedSlope slope;
  int n = 2;
  Rational offset;
  std::vector<BaseChord> chords;  // consecutive along the curve, cyclically
  std::vector<int> white_chords;
  std::vector<int> black_chords;
  int reference_chord = 0;        // first white chord
  int black_reference_chord = 0;  // first black chord
};

BaseChordSets canonical_geodesic(const ExtendedSlope& x, int n, const PullbackOptions& opts = {});

// A lifted chord in tile-local coordinates.
struct Chord {
  int tile = 0;
  BoundaryPoint entry;
  BoundaryPoint exit;
  int source_chord_id = 0;
};

// z -> sign * z + (wx, wy), wx and wy even.
struct DeckHolonomy {
  int sign = 1;
  std::int64_t wx = 0;
  std::int64_t wy = 0;
  friend bool operator==(const DeckHolonomy&, const DeckHolonomy&) = default;
  std::string str() const;
};

// z -> sign * sigma(z) + (tx, ty), sigma the identity or complex conjugation.
struct SheetFrame {
  bool conjugate = false;
  int sign = 1;
  std::int64_t tx = 0;
  std::int64_t ty = 0;

  static SheetFrame canonical(Sheet sheet);
  std::array<std::int64_t, 2> apply(std::int64_t x, std::int64_t y) const;
  SheetFrame then(const SheetFrame& outer) const;  // outer o this
  SheetFrame inverse() const;
  // Frame of the other sheet after crossing the pillow edge e.
  SheetFrame across(PillowEdge e) const;
};

enum class ClassKind { Essential, AroundVertex, NullHomotopic };

struct Classification {
  ClassKind kind = ClassKind::NullHomotopic;
  ExtendedSlope slope;  // Essential only
  PillowVertex vertex = PillowVertex::A;  // AroundVertex only

  bool essential() const { return kind == ClassKind::Essential; }
  std::string str() const;
  friend bool operator==(const Classification& a, const Classification& b);
};

// A crossing of a side of a base tile in the plain pillow.
struct BaseCrossing {
  int tile = 0;
  Side side = Side::S;
};

struct CollapsedTrace {
  std::vector<BaseCrossing> crossings;
  int excursions = 0;
  bool flap_interior = false;  // walk never visits a base tile
};

// A closed tile walk is given by the slots through which it leaves each tile.
CollapsedTrace collapse_flap_excursions(const FlappedPillow& pillow, const std::vector<Slot>& walk);
DeckHolonomy holonomy_of_loop(const FlappedPillow& pillow, const std::vector<BaseCrossing>& trace);
Classification classify_holonomy(const DeckHolonomy& g);

struct WalkClass {
  Classification classification;
  DeckHolonomy holonomy;
  int excursions = 0;
  bool flap_interior = false;
};
WalkClass classify_walk(const FlappedPillow& pillow, const std::vector<Slot>& walk);

struct PullbackComponent {
  std::vector<Chord> chords;
  Classification classification;
  DeckHolonomy holonomy;
  int degree = 0;
  int black_degree = 0;
  int flap_excursions = 0;
  bool flap_interior = false;

  std::vector<Slot> walk() const;
};

struct Pullback {
  BaseChordSets base;
  std::vector<PullbackComponent> components;
};

Pullback pull_back(const FlappedPillow& pillow, const ExtendedSlope& x, const PullbackOptions& opts = {});
std::vector<PullbackComponent> pullback_components(const FlappedPillow& pillow, const ExtendedSlope& x,
                                                   const PullbackOptions& opts = {});
Classification classify_component(const FlappedPillow& pillow, const PullbackComponent& component);

ExtendedSlope slope_map(const FlappedPillow& pillow, const ExtendedSlope& x, const PullbackOptions& opts = {});
Rational thurston_coefficient(const FlappedPillow& pillow, const ExtendedSlope& x, const PullbackOptions& opts = {});

struct ObstructionReport {
  bool obstruction = false;
  bool invariant = false;
  Rational lambda;
  bool hyperbolic = true;  // false: the criterion does not apply, reported anyway
};
ObstructionReport is_obstruction(const FlappedPillow& pillow, const ExtendedSlope& x, const PullbackOptions& opts = {});

PillowSpec eliminate_obstruction(const FlappedPillow& pillow, const ExtendedSlope& x, const PullbackOptions& opts = {});

}  // namespace flapped
