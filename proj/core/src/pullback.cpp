#include "flapped/pullback.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "flapped/errors.hpp"

namespace flapped {

namespace {

std::int64_t floor_of(const Rational& q) { return q.floor(); }
std::int64_t ceil_of(const Rational& q) { return q.is_integer() ? q.num() : q.floor() + 1; }

// Position of a plane coordinate inside the unit square it belongs to, folded
// so that adjacent squares are mirror images.
Rational fold_in(const Rational& u, std::int64_t cell) {
  Rational local = u - Rational(cell);
  return (cell % 2 == 0) ? local : Rational(1) - local;
}

}  // namespace

// ---------------------------------------------------------------- geodesic

BaseChordSets canonical_geodesic(const ExtendedSlope& x, int n, const PullbackOptions& opts) {
  if (!x.is_rational()) throw InputError("canonical_geodesic: slope must be rational");
  if (n < 1) throw InputError("canonical_geodesic: n must be positive");
  const int denom = opts.offset_denominator == 0 ? 2 * n + 1 : opts.offset_denominator;
  if (denom <= n) throw InputError("canonical_geodesic: offset denominator must exceed n");
  const std::int64_t r = x.r64();
  const std::int64_t s = x.s64();
  if ((r < 0 ? -r : r) + s > (std::int64_t{1} << 30)) throw InputError("canonical_geodesic: slope complexity too large");

  BaseChordSets out;
  out.slope = x;
  out.n = n;
  out.offset = Rational(1, denom);

  // Start on the line r*u - s*v = delta, at u = 0 (or v = 0 when s = 0).
  const Rational delta = out.offset;
  const Rational u0 = s > 0 ? Rational(0) : delta / Rational(r);
  const Rational v0 = s > 0 ? Rational(0) - delta / Rational(s) : Rational(0);

  // Grid crossings for parameter lambda in [0, 2); z(lambda) = z0 + lambda*(s, r).
  struct Event {
    Rational lambda;
    bool vertical;
    std::int64_t line;
  };
  std::vector<Event> events;
  if (s > 0)
    for (std::int64_t k = ceil_of(u0); Rational(k) < u0 + Rational(2 * s); ++k)
      events.push_back({(Rational(k) - u0) / Rational(s), true, k});
  if (r > 0)
    for (std::int64_t m = ceil_of(v0); Rational(m) < v0 + Rational(2 * r); ++m)
      events.push_back({(Rational(m) - v0) / Rational(r), false, m});
  if (r < 0)
    for (std::int64_t m = floor_of(v0 + Rational(2 * r)) + 1; Rational(m) <= v0; ++m)
      events.push_back({(Rational(m) - v0) / Rational(r), false, m});
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.lambda < b.lambda; });
  for (std::size_t k = 0; k + 1 < events.size(); ++k)
    check(events[k].lambda != events[k + 1].lambda, "geodesic passes through a lattice point");
  check(events.size() == static_cast<std::size_t>(2 * ((r < 0 ? -r : r) + s)), "unexpected number of grid crossings");

  auto at = [&](const Rational& lam) { return Point{u0 + lam * Rational(s), v0 + lam * Rational(r)}; };
  for (std::size_t k = 0; k < events.size(); ++k) {
    Rational l0 = events[k].lambda;
    Rational l1 = k + 1 < events.size() ? events[k + 1].lambda : Rational(2);
    Point p0 = at(l0);
    Point p1 = at(l1);
    Point mid = at((l0 + l1) / Rational(2));
    std::int64_t cu = floor_of(mid.x);
    std::int64_t cv = floor_of(mid.y);
    BaseChord c;
    c.id = static_cast<int>(k);
    c.color = ((cu + cv) % 2 == 0) ? Color::White : Color::Black;
    bool ok0 = boundary_point_of(Point{fold_in(p0.x, cu), fold_in(p0.y, cv)}, c.from);
    bool ok1 = boundary_point_of(Point{fold_in(p1.x, cu), fold_in(p1.y, cv)}, c.to);
    check(ok0 && ok1, "chord endpoint off the tile boundary");
    check(c.from.t != 0 && c.from.t != 1 && c.to.t != 0 && c.to.t != 1, "chord endpoint at a corner");
    out.chords.push_back(c);
    (c.color == Color::White ? out.white_chords : out.black_chords).push_back(c.id);
  }
  for (std::size_t k = 0; k < out.chords.size(); ++k) {
    const BaseChord& a = out.chords[k];
    const BaseChord& b = out.chords[(k + 1) % out.chords.size()];
    check(a.to == b.from && a.color != b.color, "geodesic chords do not chain");
  }
  check(!out.white_chords.empty() && !out.black_chords.empty(), "geodesic misses a tile");
  for (const auto& c : out.chords)
    check(!(c.to.t * Rational(n)).is_integer(), "chord endpoint on the n-grid");
  if (r != 0 && s != 0) {
    // Crossings of a and c alternate.
    std::vector<Side> ac;
    for (const auto& c : out.chords)
      if (c.to.side == Side::S || c.to.side == Side::N) ac.push_back(c.to.side);
    for (std::size_t k = 0; k < ac.size(); ++k) check(ac[k] != ac[(k + 1) % ac.size()], "a and c crossings do not alternate");
  }
  out.reference_chord = out.white_chords.front();
  out.black_reference_chord = out.black_chords.front();
  return out;
}

// ---------------------------------------------------------------- holonomy

std::string DeckHolonomy::str() const {
  return std::string(sign > 0 ? "z" : "-z") + " + (" + std::to_string(wx) + "," + std::to_string(wy) + ")";
}

SheetFrame SheetFrame::canonical(Sheet sheet) {
  if (sheet == Sheet::Back) return {true, -1, 2, 0};
  return {};
}

std::array<std::int64_t, 2> SheetFrame::apply(std::int64_t x, std::int64_t y) const {
  if (conjugate) y = -y;
  return {sign * x + tx, sign * y + ty};
}

SheetFrame SheetFrame::then(const SheetFrame& outer) const {
  SheetFrame f;
  f.conjugate = conjugate != outer.conjugate;
  f.sign = sign * outer.sign;
  auto t = outer.apply(tx, ty);
  f.tx = t[0];
  f.ty = t[1];
  return f;
}

SheetFrame SheetFrame::inverse() const {
  SheetFrame f;
  f.conjugate = conjugate;
  f.sign = sign;
  std::int64_t y = conjugate ? -ty : ty;
  f.tx = -sign * tx;
  f.ty = -sign * y;
  return f;
}

SheetFrame SheetFrame::across(PillowEdge e) const {
  static const std::int64_t ends[4][4] = {{0, 0, 1, 0}, {1, 0, 1, 1}, {0, 1, 1, 1}, {0, 0, 0, 1}};
  const auto* q = ends[static_cast<int>(e)];
  auto p0 = apply(q[0], q[1]);
  auto p1 = apply(q[2], q[3]);
  SheetFrame reflection;
  reflection.conjugate = true;
  if (p0[1] == p1[1]) {
    reflection.sign = 1;
    reflection.ty = 2 * p0[1];
  } else {
    check(p0[0] == p1[0], "edge image is not axis parallel");
    reflection.sign = -1;
    reflection.tx = 2 * p0[0];
  }
  return then(reflection);
}

std::string Classification::str() const {
  switch (kind) {
    case ClassKind::Essential: return "essential " + slope.str();
    case ClassKind::AroundVertex: return std::string("peripheral around ") + vertex_name(vertex);
    case ClassKind::NullHomotopic: return "peripheral null-homotopic";
  }
  return "";
}

bool operator==(const Classification& a, const Classification& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == ClassKind::Essential) return a.slope == b.slope;
  if (a.kind == ClassKind::AroundVertex) return a.vertex == b.vertex;
  return true;
}

CollapsedTrace collapse_flap_excursions(const FlappedPillow& p, const std::vector<Slot>& walk) {
  CollapsedTrace out;
  const std::size_t len = walk.size();
  for (std::size_t k = 0; k < len; ++k)
    check(p.neighbor(walk[k]).tile == walk[(k + 1) % len].tile, "tile walk is not closed");
  std::size_t start = len;
  for (std::size_t k = 0; k < len; ++k)
    if (p.tile(walk[k].tile).kind == TileKind::Base) {
      start = k;
      break;
    }
  if (start == len) {
    out.flap_interior = true;
    if (len > 0) {
      int f = p.tile(walk[0].tile).flap_id;
      for (const Slot& s : walk) check(p.tile(s.tile).flap_id == f, "flap-interior walk spans two flaps");
    }
    return out;
  }
  std::size_t k = 0;
  while (k < len) {
    const Slot& exit = walk[(start + k) % len];
    const Slot next = p.neighbor(exit);
    if (p.tile(next.tile).kind == TileKind::Base) {
      out.crossings.push_back({exit.tile, exit.side});
      ++k;
      continue;
    }
    // Excursion into a flap stack: run until the walk returns to the base.
    int flap = p.flap_at_slot(exit);
    check(flap >= 0, "base slot leads into a flap tile but is not a slit");
    std::size_t m = k + 1;
    Slot back_into{};
    while (true) {
      check(m < len + 1, "excursion never returns to the base");
      const Slot& s = walk[(start + m) % len];
      check(p.tile(s.tile).kind == TileKind::Flap && p.tile(s.tile).flap_id == flap, "excursion leaves its flap stack");
      Slot nb = p.neighbor(s);
      if (p.tile(nb.tile).kind == TileKind::Base) {
        back_into = nb;
        break;
      }
      ++m;
    }
    ++out.excursions;
    if (!(back_into == exit)) {
      const Gluing& plain = p.plain_gluing(exit);
      check(plain.other == back_into, "excursion exits through an unrelated slot");
      out.crossings.push_back({exit.tile, exit.side});
    }
    k = m + 1;
  }
  return out;
}

DeckHolonomy holonomy_of_loop(const FlappedPillow& p, const std::vector<BaseCrossing>& trace) {
  if (trace.empty()) return {};
  const Tile& first = p.tile(trace.front().tile);
  check(first.kind == TileKind::Base, "holonomy trace leaves the base");
  const SheetFrame initial = SheetFrame::canonical(first.sheet);
  SheetFrame frame = initial;
  Sheet sheet = first.sheet;
  int current = trace.front().tile;
  for (const BaseCrossing& c : trace) {
    check(c.tile == current, "holonomy trace is not continuous");
    const Gluing& g = p.plain_gluing({c.tile, c.side});
    const Tile& to = p.tile(g.other.tile);
    if (to.sheet != sheet) {
      frame = frame.across(edge_of_side(c.side));
      sheet = to.sheet;
    }
    current = g.other.tile;
  }
  check(current == trace.front().tile, "holonomy trace does not close");
  SheetFrame g = initial.inverse().then(frame);
  check(!g.conjugate, "holonomy reverses orientation");
  check(g.tx % 2 == 0 && g.ty % 2 == 0, "holonomy translation not in 2Z^2");
  return {g.sign, g.tx, g.ty};
}

Classification classify_holonomy(const DeckHolonomy& g) {
  Classification c;
  if (g.sign < 0) {
    auto fold = [](std::int64_t k) { return ((k % 2) + 2) % 2; };
    std::int64_t x = fold(g.wx / 2);
    std::int64_t y = fold(g.wy / 2);
    c.kind = ClassKind::AroundVertex;
    c.vertex = x == 0 ? (y == 0 ? PillowVertex::A : PillowVertex::D) : (y == 0 ? PillowVertex::B : PillowVertex::C);
    return c;
  }
  if (g.wx == 0 && g.wy == 0) {
    c.kind = ClassKind::NullHomotopic;
    return c;
  }
  std::int64_t s = g.wx / 2;
  std::int64_t r = g.wy / 2;
  check(std::gcd(s, r) == 1, "essential holonomy is not primitive");
  c.kind = ClassKind::Essential;
  c.slope = normalize_slope(r, s);
  return c;
}

WalkClass classify_walk(const FlappedPillow& p, const std::vector<Slot>& walk) {
  WalkClass out;
  CollapsedTrace trace = collapse_flap_excursions(p, walk);
  out.excursions = trace.excursions;
  out.flap_interior = trace.flap_interior;
  if (trace.flap_interior) return out;
  out.holonomy = holonomy_of_loop(p, trace.crossings);
  out.classification = classify_holonomy(out.holonomy);
  return out;
}

// ---------------------------------------------------------------- pullback

std::vector<Slot> PullbackComponent::walk() const {
  std::vector<Slot> w;
  w.reserve(chords.size());
  for (const Chord& c : chords) w.push_back({c.tile, c.exit.side});
  return w;
}

Classification classify_component(const FlappedPillow& p, const PullbackComponent& component) {
  return classify_walk(p, component.walk()).classification;
}

Pullback pull_back(const FlappedPillow& p, const ExtendedSlope& x, const PullbackOptions& opts) {
  if (!x.is_rational()) throw InputError("pullback: slope must be rational");
  Pullback out;
  out.base = canonical_geodesic(x, p.n(), opts);
  const auto& chords = out.base.chords;
  const int K = static_cast<int>(chords.size());
  const int T = p.tile_count();

  std::vector<SquareSymmetry> inv(T);
  for (int t = 0; t < T; ++t) inv[t] = p.tile(t).chart.inverse();

  std::vector<char> used(static_cast<std::size_t>(T) * K, 0);
  for (int t = 0; t < T; ++t) {
    for (int k = 0; k < K; ++k) {
      if (chords[k].color != p.tile(t).color || used[static_cast<std::size_t>(t) * K + k]) continue;
      PullbackComponent comp;
      int ct = t, ck = k;
      while (!used[static_cast<std::size_t>(ct) * K + ck]) {
        used[static_cast<std::size_t>(ct) * K + ck] = 1;
        Chord c;
        c.tile = ct;
        c.source_chord_id = ck;
        c.entry = inv[ct].apply(chords[ck].from);
        c.exit = inv[ct].apply(chords[ck].to);
        comp.chords.push_back(c);
        // Cross the side and find the chord starting at the same point.
        const Gluing& g = p.gluing({ct, c.exit.side});
        BoundaryPoint there{g.other.side, g.reversed ? Rational(1) - c.exit.t : c.exit.t};
        int nk = (ck + 1) % K;
        if (!(p.tile(g.other.tile).chart.apply(there) == chords[nk].from))
          throw InternalError("chord endpoints do not match across a gluing");
        ct = g.other.tile;
        ck = nk;
      }
      check(ct == t && ck == k, "component does not close");
      for (const Chord& c : comp.chords) {
        if (c.source_chord_id == out.base.reference_chord) ++comp.degree;
        if (c.source_chord_id == out.base.black_reference_chord) ++comp.black_degree;
      }
      check(comp.degree == comp.black_degree && comp.degree > 0, "reference chord counts disagree");
      check(static_cast<int>(comp.chords.size()) == comp.degree * K, "component length is not degree times period");
      WalkClass wc = classify_walk(p, comp.walk());
      comp.classification = wc.classification;
      comp.holonomy = wc.holonomy;
      comp.flap_excursions = wc.excursions;
      comp.flap_interior = wc.flap_interior;
      out.components.push_back(std::move(comp));
    }
  }

  int total = 0;
  for (const auto& c : out.components) total += c.degree;
  check(total == p.white_count(), "degree conservation fails");

  // Long slopes on a pillow with flaps of both directions must run over
  // some flap, from a base edge to its top edge.
  const std::int64_t cx = (x.r64() < 0 ? -x.r64() : x.r64()) + x.s64();
  if (cx > 4 * p.n() && p.spec().n_h() >= 1 && p.spec().n_v() >= 1) {
    for (const auto& comp : out.components) {
      if (comp.flap_interior) continue;
      std::set<int> base_hit, top_hit;
      for (const Slot& s : comp.walk()) {
        int f = p.flap_at_slot(s);
        if (f >= 0) base_hit.insert(f);
        if (p.is_top_slot(s)) top_hit.insert(p.tile(s.tile).flap_id);
      }
      bool both = false;
      for (int f : base_hit) both = both || top_hit.count(f) > 0;
      check(both, "long pullback avoids every flap top edge");
    }
  }
  return out;
}

std::vector<PullbackComponent> pullback_components(const FlappedPillow& p, const ExtendedSlope& x,
                                                   const PullbackOptions& opts) {
  return pull_back(p, x, opts).components;
}

namespace {

ExtendedSlope mu_of(const std::vector<PullbackComponent>& comps) {
  ExtendedSlope mu = ExtendedSlope::peripheral();
  for (const auto& c : comps) {
    if (!c.classification.essential()) continue;
    if (mu.is_peripheral()) mu = c.classification.slope;
    else check(mu == c.classification.slope, "essential pullbacks with different slopes");
  }
  return mu;
}

Rational lambda_of(const std::vector<PullbackComponent>& comps) {
  Rational l(0);
  for (const auto& c : comps)
    if (c.classification.essential()) l += Rational(1, c.degree);
  return l;
}

}  // namespace

ExtendedSlope slope_map(const FlappedPillow& p, const ExtendedSlope& x, const PullbackOptions& opts) {
  if (x.is_peripheral()) return x;
  return mu_of(pullback_components(p, x, opts));
}

Rational thurston_coefficient(const FlappedPillow& p, const ExtendedSlope& x, const PullbackOptions& opts) {
  if (!x.is_rational()) throw InputError("thurston_coefficient: slope must be rational");
  return lambda_of(pullback_components(p, x, opts));
}

ObstructionReport is_obstruction(const FlappedPillow& p, const ExtendedSlope& x, const PullbackOptions& opts) {
  if (!x.is_rational()) throw InputError("is_obstruction: slope must be rational");
  auto comps = pullback_components(p, x, opts);
  ObstructionReport rep;
  rep.invariant = mu_of(comps) == x;
  rep.lambda = lambda_of(comps);
  rep.obstruction = rep.invariant && rep.lambda >= Rational(1);
  rep.hyperbolic = orbifold_signature(p).type == OrbifoldType::Hyperbolic;
  return rep;
}

PillowSpec eliminate_obstruction(const FlappedPillow& p, const ExtendedSlope& x, const PullbackOptions& opts) {
  const bool horizontal = x == normalize_slope(0, 1);
  const bool vertical = x == normalize_slope(1, 0);
  if (!horizontal && !vertical) throw InputError("eliminate_obstruction: only 0/1 and 1/0 can be eliminated");
  if (orbifold_signature(p).type != OrbifoldType::Hyperbolic)
    throw InputError("eliminate_obstruction: pillow has a parabolic orbifold");
  if (!is_obstruction(p, x, opts).obstruction) throw InputError("eliminate_obstruction: slope is not an obstruction");

  // Transverse edges: vertical ones for the horizontal curve and vice versa.
  const Orientation want = horizontal ? Orientation::Vertical : Orientation::Horizontal;
  PillowSpec spec = p.spec();
  std::set<EdgeAddress> taken;
  for (const auto& f : spec.flaps) taken.insert(f.edge);
  for (const auto& comp : pullback_components(p, x, opts)) {
    if (!comp.classification.essential()) continue;
    CollapsedTrace trace = collapse_flap_excursions(p, comp.walk());
    std::set<EdgeAddress> crossed;
    for (const auto& c : trace.crossings) {
      EdgeAddress e = p.edge_under({c.tile, c.side});
      if (e.orientation == want) crossed.insert(e);
    }
    bool added = false;
    for (const auto& e : crossed) {
      if (taken.count(e)) continue;
      spec.flaps.push_back({e, 1});
      taken.insert(e);
      added = true;
      break;
    }
    check(added, "no free transverse edge for an essential pullback");
  }
  FlappedPillow q = build_pillow(spec);
  check(thurston_coefficient(q, x, opts) < Rational(1), "elimination left lambda >= 1");
  return spec;
}

}  // namespace flapped
