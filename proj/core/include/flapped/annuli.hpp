#pragma once

#include <array>
#include <optional>
#include <vector>

#include "flapped/complex.hpp"
#include "flapped/pullback.hpp"

namespace flapped {

// A piece of a core arc inside one 0-tile; endpoints may be corners.
struct ArcChord {
  Color color = Color::White;
  Point from;
  Point to;
};

struct CoreArc {
  std::vector<ArcChord> chords;    // empty when the arc is a pillow edge
  std::optional<PillowEdge> along;  // set for slopes 0 and 1/0
  PillowVertex start = PillowVertex::A;
  PillowVertex end = PillowVertex::B;
};

struct CoreArcPair {
  ExtendedSlope slope;
  CoreArc xi;        // through the lattice point 0
  CoreArc xi_prime;  // through (-p, q) with p*r + q*s = 1
  std::int64_t p = 0;
  std::int64_t q = 0;
};

CoreArcPair core_arc_pair(const ExtendedSlope& x, int n = 2);

enum class ArcType { Xi, XiPrime };

struct LocalSegment {
  int tile = 0;
  Point from;
  Point to;
};

struct GraphEdge {
  int id = 0;
  ArcType type = ArcType::Xi;
  int v0 = 0;
  int v1 = 0;
  std::vector<LocalSegment> segments;  // v0 -> v1; empty for edges along tile sides
  std::optional<Slot> side;            // along-side edges: increasing parameter runs v0 -> v1
  bool stick = false;                  // touches a flap tile
};

// Directed edge: dir 0 runs v0 -> v1.
struct DirectedEdge {
  int edge = 0;
  int dir = 0;
  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

struct PreimageGraph {
  int vertex_count = 0;
  std::vector<GraphEdge> edges;
  // Around each vertex, in counterclockwise order, position 2k is the k-th
  // sector (may hold a chord end) and 2k+1 is its outgoing side (may hold a
  // side edge end). Entries are edge-end ids (2*edge + end) or -1.
  std::vector<std::vector<int>> rotation;
  std::vector<std::array<int, 2>> end_position;  // edge-end -> (vertex, position)
  std::vector<std::array<int, 2>> left_face;     // per edge, per direction
};

struct AnnulusComponent {
  int id = 0;
  int face = 0;
  std::vector<DirectedEdge> xi_boundary;
  std::vector<DirectedEdge> xi_prime_boundary;
  int component = -1;  // index into the pullback components
  Classification classification;
  bool essential = false;
  int degree = 0;
  int circuit_length = 0;        // length of the xi boundary walk
  int circuit_length_prime = 0;  // length of the xi' boundary walk
  std::optional<int> essential_circuit_length;
  std::optional<int> stick_free_essential_circuit_length;
  bool circuit_budget_exceeded = false;  // search hit the walk budget; lengths unset
  // Base cells (tile id, piece index) inside the annulus; base tiles keep
  // their ids under adding flaps.
  std::vector<std::array<int, 2>> base_cells;
};

struct AnnulusOptions {
  long long budget = 1000000;  // walk extensions for the circuit search
  bool essential_lengths = true;
  PullbackOptions pullback;
};

struct AnnulusDecomposition {
  CoreArcPair arcs;
  PreimageGraph graph;
  Pullback pullback;
  std::vector<AnnulusComponent> annuli;
};

AnnulusDecomposition annulus_components(const FlappedPillow& pillow, const ExtendedSlope& x,
                                        const AnnulusOptions& opts = {});

struct CircuitSearch {
  std::optional<int> length;
  std::optional<int> stick_free_length;
  long long extensions = 0;
};
CircuitSearch essential_circuit_length(const FlappedPillow& pillow, const AnnulusDecomposition& dec, int annulus,
                                       long long budget = 1000000);

// Tile walk of the push-off of a closed boundary walk, to the left of it.
std::vector<Slot> push_off_walk(const FlappedPillow& pillow, const PreimageGraph& graph,
                                const std::vector<DirectedEdge>& walk);

}  // namespace flapped
