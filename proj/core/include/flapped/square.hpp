#pragma once

#include <array>
#include <string>

#include "flapped/rational.hpp"

namespace flapped {

// Sides of the unit square. S and N are parametrized by x, E and W by y.
enum class Side { S = 0, E = 1, N = 2, W = 3 };
// Corners counterclockwise from the origin.
enum class Corner { SW = 0, SE = 1, NE = 2, NW = 3 };

// The four sides of a 0-tile are the pillow edges a, b, c, d; the corners are A, B, C, D.
enum class PillowEdge { a = 0, b = 1, c = 2, d = 3 };
enum class PillowVertex { A = 0, B = 1, C = 2, D = 3 };

inline PillowEdge edge_of_side(Side s) { return static_cast<PillowEdge>(static_cast<int>(s)); }
inline PillowVertex vertex_of_corner(Corner c) { return static_cast<PillowVertex>(static_cast<int>(c)); }

const char* side_name(Side s);
const char* vertex_name(PillowVertex v);
const char* edge_name(PillowEdge e);

constexpr std::array<Side, 4> kSides = {Side::S, Side::E, Side::N, Side::W};

struct Point {
  Rational x;
  Rational y;
  friend bool operator==(const Point&, const Point&) = default;
};

// A point on the boundary of the unit square, as a side and a parameter.
// Corners are represented with t in {0, 1}.
struct BoundaryPoint {
  Side side = Side::S;
  Rational t;
  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;
};

Point point_on_side(Side s, const Rational& t);
Corner corner_at(Side s, int end);      // end 0 or 1 along the side parameter
int end_of_corner(Side s, Corner c);    // inverse of corner_at, -1 if not on the side
Point corner_point(Corner c);
// Counterclockwise perimeter coordinate in [0, 4), SW corner at 0.
Rational perimeter_position(Side s, const Rational& t);
// +1 if increasing parameter runs counterclockwise around the square.
int side_direction(Side s);
Side opposite(Side s);

// One of the eight symmetries of the unit square: optional transpose, then
// optional reflections x -> 1-x and y -> 1-y.
struct SquareSymmetry {
  bool swap = false;
  bool flip_x = false;
  bool flip_y = false;

  Point apply(const Point& p) const;
  // Image of a side point: the side it lands on and its parameter there.
  BoundaryPoint apply(const BoundaryPoint& p) const;
  Side map_side(Side s) const;
  bool reverses_side(Side s) const;  // parameter runs backwards on the image side
  Corner map_corner(Corner c) const;
  SquareSymmetry inverse() const;
  int det() const { return (swap ? -1 : 1) * (flip_x ? -1 : 1) * (flip_y ? -1 : 1); }

  static std::array<SquareSymmetry, 8> all();
  friend bool operator==(const SquareSymmetry&, const SquareSymmetry&) = default;
  std::string str() const;
};

// Locate a point of the closed unit square on its boundary. Returns false
// for interior points. Corners resolve to the side on which t is 0 or 1 in
// counterclockwise order (S for SW, E for SE, N for NE, W for NW).
bool boundary_point_of(const Point& p, BoundaryPoint& out);

}  // namespace flapped
