#include "flapped/square.hpp"

#include "flapped/errors.hpp"

namespace flapped {

const char* side_name(Side s) {
  static const char* names[] = {"S", "E", "N", "W"};
  return names[static_cast<int>(s)];
}

const char* vertex_name(PillowVertex v) {
  static const char* names[] = {"A", "B", "C", "D"};
  return names[static_cast<int>(v)];
}

const char* edge_name(PillowEdge e) {
  static const char* names[] = {"a", "b", "c", "d"};
  return names[static_cast<int>(e)];
}

Point point_on_side(Side s, const Rational& t) {
  switch (s) {
    case Side::S: return {t, 0};
    case Side::E: return {1, t};
    case Side::N: return {t, 1};
    case Side::W: return {0, t};
  }
  return {};
}

Corner corner_at(Side s, int end) {
  switch (s) {
    case Side::S: return end ? Corner::SE : Corner::SW;
    case Side::E: return end ? Corner::NE : Corner::SE;
    case Side::N: return end ? Corner::NE : Corner::NW;
    case Side::W: return end ? Corner::NW : Corner::SW;
  }
  return Corner::SW;
}

int end_of_corner(Side s, Corner c) {
  if (corner_at(s, 0) == c) return 0;
  if (corner_at(s, 1) == c) return 1;
  return -1;
}

Point corner_point(Corner c) {
  switch (c) {
    case Corner::SW: return {0, 0};
    case Corner::SE: return {1, 0};
    case Corner::NE: return {1, 1};
    case Corner::NW: return {0, 1};
  }
  return {};
}

Rational perimeter_position(Side s, const Rational& t) {
  switch (s) {
    case Side::S: return t;
    case Side::E: return Rational(1) + t;
    case Side::N: return Rational(3) - t;
    case Side::W: return Rational(4) - t;
  }
  return 0;
}

int side_direction(Side s) { return (s == Side::S || s == Side::E) ? 1 : -1; }

Side opposite(Side s) { return static_cast<Side>((static_cast<int>(s) + 2) % 4); }

Point SquareSymmetry::apply(const Point& p) const {
  Point q = swap ? Point{p.y, p.x} : p;
  if (flip_x) q.x = Rational(1) - q.x;
  if (flip_y) q.y = Rational(1) - q.y;
  return q;
}

bool boundary_point_of(const Point& p, BoundaryPoint& out) {
  const Rational zero(0), one(1);
  if (p.y == zero && p.x < one) {
    out = {Side::S, p.x};
    return true;
  }
  if (p.x == one && p.y < one) {
    out = {Side::E, p.y};
    return true;
  }
  if (p.y == one && p.x > zero) {
    out = {Side::N, p.x};
    return true;
  }
  if (p.x == zero) {
    out = {Side::W, p.y};
    return true;
  }
  return false;
}

namespace {

// Side containing both points; both are assumed to lie on one side.
Side side_through(const Point& p, const Point& q) {
  if (p.y == 0 && q.y == 0) return Side::S;
  if (p.x == 1 && q.x == 1) return Side::E;
  if (p.y == 1 && q.y == 1) return Side::N;
  if (p.x == 0 && q.x == 0) return Side::W;
  throw InternalError("points not on a common side");
}

Rational param_on(Side s, const Point& p) { return (s == Side::S || s == Side::N) ? p.x : p.y; }

}  // namespace

BoundaryPoint SquareSymmetry::apply(const BoundaryPoint& p) const {
  Side img = map_side(p.side);
  return {img, param_on(img, apply(point_on_side(p.side, p.t)))};
}

Side SquareSymmetry::map_side(Side s) const {
  return side_through(apply(point_on_side(s, 0)), apply(point_on_side(s, 1)));
}

bool SquareSymmetry::reverses_side(Side s) const {
  Side img = map_side(s);
  return param_on(img, apply(point_on_side(s, 0))) == Rational(1);
}

Corner SquareSymmetry::map_corner(Corner c) const {
  Point p = apply(corner_point(c));
  for (int k = 0; k < 4; ++k)
    if (corner_point(static_cast<Corner>(k)) == p) return static_cast<Corner>(k);
  throw InternalError("corner image not a corner");
}

std::array<SquareSymmetry, 8> SquareSymmetry::all() {
  std::array<SquareSymmetry, 8> out;
  for (int k = 0; k < 8; ++k) out[k] = {(k & 4) != 0, (k & 1) != 0, (k & 2) != 0};
  return out;
}

SquareSymmetry SquareSymmetry::inverse() const {
  const Point probe1{Rational(1, 3), Rational(1, 5)};
  const Point probe2{Rational(2, 7), Rational(3, 4)};
  for (const auto& g : all())
    if (g.apply(apply(probe1)) == probe1 && g.apply(apply(probe2)) == probe2) return g;
  throw InternalError("square symmetry without inverse");
}

std::string SquareSymmetry::str() const {
  std::string out;
  if (swap) out += "T";
  if (flip_x) out += "X";
  if (flip_y) out += "Y";
  return out.empty() ? "id" : out;
}

}  // namespace flapped
