#include "flapped/annuli.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "flapped/errors.hpp"

namespace flapped {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::int64_t mod2(std::int64_t k) { return ((k % 2) + 2) % 2; }

PillowVertex lattice_vertex(std::int64_t x, std::int64_t y) {
  std::int64_t a = mod2(x), b = mod2(y);
  return a == 0 ? (b == 0 ? PillowVertex::A : PillowVertex::D) : (b == 0 ? PillowVertex::B : PillowVertex::C);
}

Rational fold_in(const Rational& u, std::int64_t cell) {
  Rational local = u - Rational(cell);
  return (cell % 2 == 0) ? local : Rational(1) - local;
}

// p*r + q*s = 1.
void bezout(std::int64_t r, std::int64_t s, std::int64_t& p, std::int64_t& q) {
  std::int64_t old_r = r, cur_r = s, old_a = 1, cur_a = 0, old_b = 0, cur_b = 1;
  while (cur_r != 0) {
    std::int64_t k = old_r / cur_r;
    std::int64_t t = old_r - k * cur_r;
    old_r = cur_r;
    cur_r = t;
    t = old_a - k * cur_a;
    old_a = cur_a;
    cur_a = t;
    t = old_b - k * cur_b;
    old_b = cur_b;
    cur_b = t;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_a = -old_a;
    old_b = -old_b;
  }
  check(old_r == 1, "slope is not reduced");
  p = old_a;
  q = old_b;
}

// Lattice segment from (x0, y0) to (x0 + s, y0 + r), folded into the 0-tiles.
CoreArc make_arc(std::int64_t x0, std::int64_t y0, std::int64_t s, std::int64_t r) {
  CoreArc arc;
  arc.start = lattice_vertex(x0, y0);
  arc.end = lattice_vertex(x0 + s, y0 + r);
  if (r == 0) {
    arc.along = mod2(y0) == 0 ? PillowEdge::a : PillowEdge::c;
    return arc;
  }
  if (s == 0) {
    arc.along = mod2(x0) == 0 ? PillowEdge::d : PillowEdge::b;
    return arc;
  }
  std::vector<Rational> breaks = {Rational(0), Rational(1)};
  for (std::int64_t k = x0 + 1; k < x0 + s; ++k) breaks.push_back(Rational(k - x0, s));
  std::int64_t lo = std::min(y0, y0 + r), hi = std::max(y0, y0 + r);
  for (std::int64_t m = lo + 1; m < hi; ++m) breaks.push_back(Rational(m - y0, r));
  std::sort(breaks.begin(), breaks.end());
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) check(breaks[k] != breaks[k + 1], "core arc meets a lattice point");
  auto at = [&](const Rational& l) { return Point{Rational(x0) + l * Rational(s), Rational(y0) + l * Rational(r)}; };
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    Point a = at(breaks[k]), b = at(breaks[k + 1]);
    Point mid = at((breaks[k] + breaks[k + 1]) / Rational(2));
    std::int64_t cu = mid.x.floor(), cv = mid.y.floor();
    ArcChord c;
    c.color = ((cu + cv) % 2 == 0) ? Color::White : Color::Black;
    c.from = {fold_in(a.x, cu), fold_in(a.y, cv)};
    c.to = {fold_in(b.x, cu), fold_in(b.y, cv)};
    arc.chords.push_back(c);
  }
  return arc;
}

int corner_index(const Point& p) {
  for (int c = 0; c < 4; ++c)
    if (corner_point(static_cast<Corner>(c)) == p) return c;
  return -1;
}

Rational perimeter_of(const Point& p) {
  BoundaryPoint b;
  check(boundary_point_of(p, b), "point is not on the tile boundary");
  return perimeter_position(b.side, b.t);
}

// Boundary arcs of one tile cut by graph segments, grouped into pieces.
struct TilePieces {
  std::vector<Rational> cuts;  // sorted perimeter positions
  std::vector<int> arc_piece;  // boundary arc -> global piece id

  int arc_starting_at(const Rational& pos) const {
    auto it = std::lower_bound(cuts.begin(), cuts.end(), pos);
    check(it != cuts.end() && *it == pos, "position is not a cut");
    return static_cast<int>(it - cuts.begin());
  }
  int arc_containing(const Rational& pos) const {
    if (cuts.empty()) return 0;
    auto it = std::lower_bound(cuts.begin(), cuts.end(), pos);
    check(it == cuts.end() || *it != pos, "position is a cut");
    int idx = static_cast<int>(it - cuts.begin()) - 1;
    return idx < 0 ? static_cast<int>(cuts.size()) - 1 : idx;
  }
};

}  // namespace

CoreArcPair core_arc_pair(const ExtendedSlope& x, int) {
  if (!x.is_rational()) throw InputError("core_arc_pair: slope must be rational");
  CoreArcPair pair;
  pair.slope = x;
  std::int64_t r = x.r64(), s = x.s64();
  bezout(r, s, pair.p, pair.q);
  pair.xi = make_arc(0, 0, s, r);
  pair.xi_prime = make_arc(-pair.p, pair.q, s, r);
  return pair;
}

namespace {

void build_graph(const FlappedPillow& p, const CoreArcPair& arcs, PreimageGraph& g) {
  const int T = p.tile_count();
  g.vertex_count = p.vertex_count();
  std::vector<SquareSymmetry> inv(T);
  for (int t = 0; t < T; ++t) inv[t] = p.tile(t).chart.inverse();

  for (ArcType type : {ArcType::Xi, ArcType::XiPrime}) {
    const CoreArc& arc = type == ArcType::Xi ? arcs.xi : arcs.xi_prime;
    if (arc.along) {
      const Side target = static_cast<Side>(static_cast<int>(*arc.along));
      for (int t = 0; t < T; ++t)
        for (Side s : kSides) {
          if (p.tile(t).chart.map_side(s) != target) continue;
          Slot other = p.neighbor({t, s});
          if (other.tile * 4 + static_cast<int>(other.side) < t * 4 + static_cast<int>(s)) continue;
          GraphEdge e;
          e.id = static_cast<int>(g.edges.size());
          e.type = type;
          e.side = Slot{t, s};
          e.v0 = p.vertex_at(t, corner_at(s, 0));
          e.v1 = p.vertex_at(t, corner_at(s, 1));
          e.stick = p.tile(t).kind == TileKind::Flap || p.tile(other.tile).kind == TileKind::Flap;
          g.edges.push_back(e);
        }
      continue;
    }
    const auto& chords = arc.chords;
    for (int t = 0; t < T; ++t) {
      if (p.tile(t).color != chords.front().color) continue;
      GraphEdge e;
      e.id = static_cast<int>(g.edges.size());
      e.type = type;
      int ct = t;
      for (std::size_t k = 0; k < chords.size(); ++k) {
        check(p.tile(ct).color == chords[k].color, "arc lift meets a tile of the wrong color");
        LocalSegment seg{ct, inv[ct].apply(chords[k].from), inv[ct].apply(chords[k].to)};
        e.segments.push_back(seg);
        if (p.tile(ct).kind == TileKind::Flap) e.stick = true;
        if (k + 1 == chords.size()) break;
        BoundaryPoint b;
        check(boundary_point_of(seg.to, b) && b.t != 0 && b.t != 1, "arc chord ends inside a side expected");
        const Gluing& gl = p.gluing({ct, b.side});
        BoundaryPoint there{gl.other.side, gl.reversed ? Rational(1) - b.t : b.t};
        if (!(p.tile(gl.other.tile).chart.apply(point_on_side(there.side, there.t)) == chords[k + 1].from))
          throw InternalError("arc lift endpoints do not match across a gluing");
        ct = gl.other.tile;
      }
      int c0 = corner_index(e.segments.front().from);
      int c1 = corner_index(e.segments.back().to);
      check(c0 >= 0 && c1 >= 0, "arc lift does not end at corners");
      e.v0 = p.vertex_at(e.segments.front().tile, static_cast<Corner>(c0));
      e.v1 = p.vertex_at(e.segments.back().tile, static_cast<Corner>(c1));
      g.edges.push_back(e);
    }
  }

  // Bipartite: every edge runs from an arc start label to an arc end label.
  for (const auto& e : g.edges) {
    const CoreArc& arc = e.type == ArcType::Xi ? arcs.xi : arcs.xi_prime;
    PillowVertex a = p.vertex_image(e.v0), b = p.vertex_image(e.v1);
    if (e.side && a != arc.start) std::swap(a, b);  // along-side edges follow the side parameter
    check(a == arc.start && b == arc.end, "graph edge endpoints mislabelled");
  }

  // Rotation system.
  std::map<int, int> chord_end;  // tile*4 + corner -> edge end
  std::map<int, int> side_edge;  // tile*4 + side -> edge
  for (const auto& e : g.edges) {
    if (e.side) {
      side_edge[e.side->tile * 4 + static_cast<int>(e.side->side)] = e.id;
      Slot o = p.neighbor(*e.side);
      side_edge[o.tile * 4 + static_cast<int>(o.side)] = e.id;
    } else {
      chord_end[e.segments.front().tile * 4 + corner_index(e.segments.front().from)] = 2 * e.id;
      chord_end[e.segments.back().tile * 4 + corner_index(e.segments.back().to)] = 2 * e.id + 1;
    }
  }
  g.rotation.assign(g.vertex_count, {});
  g.end_position.assign(2 * g.edges.size(), {-1, -1});
  for (int v = 0; v < g.vertex_count; ++v) {
    const auto& sectors = p.sectors(v);
    auto& rot = g.rotation[v];
    rot.assign(2 * sectors.size(), -1);
    for (std::size_t k = 0; k < sectors.size(); ++k) {
      const Sector& sec = sectors[k];
      auto it = chord_end.find(sec.tile * 4 + static_cast<int>(sec.corner));
      if (it != chord_end.end()) rot[2 * k] = it->second;
      auto js = side_edge.find(sec.tile * 4 + static_cast<int>(sec.out_side));
      if (js != side_edge.end()) {
        const GraphEdge& e = g.edges[js->second];
        rot[2 * k + 1] = 2 * e.id + (e.v0 == v ? 0 : 1);
        check(e.v0 == v || e.v1 == v, "side edge not incident to its vertex");
      }
    }
    for (std::size_t pos = 0; pos < rot.size(); ++pos)
      if (rot[pos] >= 0) {
        check(g.end_position[rot[pos]][0] == -1, "edge end placed twice");
        g.end_position[rot[pos]] = {v, static_cast<int>(pos)};
      }
  }
  for (const auto& ep : g.end_position) check(ep[0] >= 0, "edge end missing from the rotation system");
}

DirectedEdge next_in(const PreimageGraph& g, const DirectedEdge& d, const std::vector<char>* in_h) {
  int head_end = 2 * d.edge + (1 - d.dir);
  auto [v, pos] = g.end_position[head_end];
  const auto& rot = g.rotation[v];
  const int k = static_cast<int>(rot.size());
  for (int step = 1; step <= k; ++step) {
    int c = ((pos - step) % k + k) % k;
    int ee = rot[c];
    if (ee < 0) continue;
    if (in_h && !(*in_h)[ee / 2]) continue;
    return {ee / 2, ee % 2};
  }
  throw InternalError("no next edge in rotation");
}

}  // namespace

std::vector<Slot> push_off_walk(const FlappedPillow& p, const PreimageGraph& g, const std::vector<DirectedEdge>& walk) {
  std::vector<Slot> out;
  const std::size_t len = walk.size();
  for (std::size_t k = 0; k < len; ++k) {
    const DirectedEdge& d = walk[k];
    const GraphEdge& e = g.edges[d.edge];
    const int m = static_cast<int>(e.segments.size());
    if (d.dir == 0) {
      for (int i = 0; i + 1 < m; ++i) {
        BoundaryPoint b;
        boundary_point_of(e.segments[i].to, b);
        out.push_back({e.segments[i].tile, b.side});
      }
    } else {
      for (int i = m - 1; i >= 1; --i) {
        BoundaryPoint b;
        boundary_point_of(e.segments[i].from, b);
        out.push_back({e.segments[i].tile, b.side});
      }
    }
    // Turn clockwise around the head vertex to the next edge.
    const DirectedEdge& nd = walk[(k + 1) % len];
    auto [v, c_in] = g.end_position[2 * d.edge + (1 - d.dir)];
    auto [v2, c_out] = g.end_position[2 * nd.edge + nd.dir];
    check(v == v2, "boundary walk is not connected");
    const auto& sectors = p.sectors(v);
    const int k2 = static_cast<int>(g.rotation[v].size());
    int steps = c_in == c_out ? k2 - 1 : ((c_in - c_out - 1) % k2 + k2) % k2;
    for (int t = 1; t <= steps; ++t) {
      int c = ((c_in - t) % k2 + k2) % k2;
      if (c % 2 == 0) continue;
      const Sector& from = sectors[((c - 1) / 2 + 1) % sectors.size()];
      out.push_back({from.tile, from.in_side});
    }
  }
  return out;
}

AnnulusDecomposition annulus_components(const FlappedPillow& p, const ExtendedSlope& x, const AnnulusOptions& opts) {
  if (!x.is_rational()) throw InputError("annulus_components: slope must be rational");
  AnnulusDecomposition dec;
  dec.arcs = core_arc_pair(x, p.n());
  PreimageGraph& g = dec.graph;
  build_graph(p, dec.arcs, g);
  dec.pullback = pull_back(p, x, opts.pullback);

  // Pieces of each tile.
  const int T = p.tile_count();
  std::vector<TilePieces> pieces(T);
  std::vector<std::vector<const LocalSegment*>> segs(T);
  for (const auto& e : g.edges)
    for (const auto& s : e.segments) segs[s.tile].push_back(&s);
  int piece_count = 0;
  std::vector<int> piece_tile;
  for (int t = 0; t < T; ++t) {
    TilePieces& tp = pieces[t];
    for (const auto* s : segs[t]) {
      tp.cuts.push_back(perimeter_of(s->from));
      tp.cuts.push_back(perimeter_of(s->to));
    }
    std::sort(tp.cuts.begin(), tp.cuts.end());
    check(std::adjacent_find(tp.cuts.begin(), tp.cuts.end()) == tp.cuts.end(), "graph segments share an endpoint");
    const int arcs_n = std::max<int>(1, static_cast<int>(tp.cuts.size()));
    UnionFind uf(arcs_n);
    for (const auto* s : segs[t]) {
      int a = tp.arc_starting_at(perimeter_of(s->from));
      int b = tp.arc_starting_at(perimeter_of(s->to));
      uf.unite((a - 1 + arcs_n) % arcs_n, b);
      uf.unite((b - 1 + arcs_n) % arcs_n, a);
    }
    std::map<int, int> local;
    tp.arc_piece.resize(arcs_n);
    for (int a = 0; a < arcs_n; ++a) {
      int root = uf.find(a);
      auto it = local.find(root);
      if (it == local.end()) {
        it = local.emplace(root, piece_count++).first;
        piece_tile.push_back(t);
      }
      tp.arc_piece[a] = it->second;
    }
  }
  auto piece_at = [&](int tile, Side side, const Rational& t) {
    const TilePieces& tp = pieces[tile];
    return tp.arc_piece[tp.arc_containing(perimeter_position(side, t))];
  };

  // Glue pieces across sides that are not graph edges.
  std::set<int> blocked;
  for (const auto& e : g.edges)
    if (e.side) {
      blocked.insert(e.side->tile * 4 + static_cast<int>(e.side->side));
      Slot o = p.neighbor(*e.side);
      blocked.insert(o.tile * 4 + static_cast<int>(o.side));
    }
  UnionFind faces(piece_count);
  std::vector<std::pair<int, int>> glued;  // piece pairs, one per glued interval
  for (int t = 0; t < T; ++t) {
    std::array<std::vector<Rational>, 4> side_cuts;
    for (const auto* s : segs[t])
      for (const Point* pt : {&s->from, &s->to}) {
        BoundaryPoint b;
        boundary_point_of(*pt, b);
        if (b.t != 0 && b.t != 1) side_cuts[static_cast<int>(b.side)].push_back(b.t);
      }
    for (Side side : kSides) {
      Slot me{t, side};
      Slot other = p.neighbor(me);
      if (other.tile * 4 + static_cast<int>(other.side) < t * 4 + static_cast<int>(side)) continue;
      if (blocked.count(t * 4 + static_cast<int>(side))) continue;
      const Gluing& gl = p.gluing(me);
      auto cuts = side_cuts[static_cast<int>(side)];
      cuts.push_back(0);
      cuts.push_back(1);
      std::sort(cuts.begin(), cuts.end());
      for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        Rational mid = (cuts[k] + cuts[k + 1]) / Rational(2);
        int a = piece_at(t, side, mid);
        int b = piece_at(other.tile, other.side, gl.reversed ? Rational(1) - mid : mid);
        faces.unite(a, b);
        glued.push_back({a, b});
      }
    }
  }
  std::map<int, int> face_id;
  std::vector<int> piece_face(piece_count);
  for (int k = 0; k < piece_count; ++k) {
    int root = faces.find(k);
    auto it = face_id.emplace(root, static_cast<int>(face_id.size())).first;
    piece_face[k] = it->second;
  }
  const int face_count = static_cast<int>(face_id.size());
  std::vector<int> euler(face_count, 0);
  for (int k = 0; k < piece_count; ++k) ++euler[piece_face[k]];
  for (const auto& gp : glued) --euler[piece_face[gp.first]];
  for (int f = 0; f < face_count; ++f) check(euler[f] == 0, "complementary face is not an annulus");

  // Left faces of directed edges.
  g.left_face.assign(g.edges.size(), {-1, -1});
  for (const auto& e : g.edges) {
    for (int dir = 0; dir < 2; ++dir) {
      int piece;
      if (e.side) {
        const Slot s = *e.side;
        const Slot o = p.neighbor(s);
        const Gluing& gl = p.gluing(s);
        bool mine_left = p.tile(s.tile).orientation * side_direction(s.side) == 1;
        if (dir == 1) mine_left = !mine_left;
        Rational half(1, 2);
        piece = mine_left ? piece_at(s.tile, s.side, half) : piece_at(o.tile, o.side, gl.reversed ? Rational(1) - half : half);
      } else {
        const LocalSegment& s = e.segments.front();
        const TilePieces& tp = pieces[s.tile];
        bool positive = p.tile(s.tile).orientation == 1;
        const Point& start_here = (dir == 0) == positive ? s.to : s.from;
        piece = tp.arc_piece[tp.arc_starting_at(perimeter_of(start_here))];
      }
      g.left_face[e.id][dir] = piece_face[piece];
    }
  }

  // Boundary walks.
  std::vector<std::vector<DirectedEdge>> walks;
  std::vector<char> seen(2 * g.edges.size(), 0);
  for (std::size_t k = 0; k < 2 * g.edges.size(); ++k) {
    if (seen[k]) continue;
    DirectedEdge d{static_cast<int>(k / 2), static_cast<int>(k % 2)};
    std::vector<DirectedEdge> w;
    while (!seen[2 * d.edge + d.dir]) {
      seen[2 * d.edge + d.dir] = 1;
      w.push_back(d);
      d = next_in(g, d, nullptr);
    }
    check(d == w.front(), "boundary walk does not close");
    int f = g.left_face[w.front().edge][w.front().dir];
    for (const auto& de : w) check(g.left_face[de.edge][de.dir] == f, "boundary walk changes face");
    walks.push_back(std::move(w));
  }

  // Curve components.
  std::vector<int> face_component(face_count, -1);
  for (std::size_t c = 0; c < dec.pullback.components.size(); ++c) {
    const auto& comp = dec.pullback.components[c];
    int f = -1;
    for (const auto& ch : comp.chords) {
      int ff = piece_face[piece_at(ch.tile, ch.entry.side, ch.entry.t)];
      if (f == -1) f = ff;
      check(f == ff, "curve component crosses the preimage graph");
    }
    check(face_component[f] == -1, "two curve components in one face");
    face_component[f] = static_cast<int>(c);
  }

  for (int f = 0; f < face_count; ++f) {
    AnnulusComponent a;
    a.id = f;
    a.face = f;
    check(face_component[f] >= 0, "face without a curve component");
    a.component = face_component[f];
    const auto& comp = dec.pullback.components[a.component];
    a.classification = comp.classification;
    a.essential = comp.classification.essential();
    a.degree = comp.degree;
    int xi_walks = 0, xip_walks = 0;
    for (const auto& w : walks) {
      if (g.left_face[w.front().edge][w.front().dir] != f) continue;
      ArcType type = g.edges[w.front().edge].type;
      for (const auto& de : w) check(g.edges[de.edge].type == type, "boundary walk mixes arc types");
      if (type == ArcType::Xi) {
        ++xi_walks;
        a.xi_boundary = w;
      } else {
        ++xip_walks;
        a.xi_prime_boundary = w;
      }
    }
    check(xi_walks == 1 && xip_walks == 1, "annulus does not have one boundary walk per arc");
    a.circuit_length = static_cast<int>(a.xi_boundary.size());
    a.circuit_length_prime = static_cast<int>(a.xi_prime_boundary.size());
    for (int k = 0; k < piece_count; ++k)
      if (piece_face[k] == f && p.tile(piece_tile[k]).kind == TileKind::Base) {
        int local = 0;
        for (int j = 0; j < k; ++j)
          if (piece_tile[j] == piece_tile[k]) ++local;
        a.base_cells.push_back({piece_tile[k], local});
      }
    dec.annuli.push_back(std::move(a));
  }

  if (opts.essential_lengths)
    for (std::size_t k = 0; k < dec.annuli.size(); ++k) {
      if (!dec.annuli[k].essential) continue;
      try {
        CircuitSearch cs = essential_circuit_length(p, dec, static_cast<int>(k), opts.budget);
        dec.annuli[k].essential_circuit_length = cs.length;
        dec.annuli[k].stick_free_essential_circuit_length = cs.stick_free_length;
      } catch (const BudgetExceeded&) {
        dec.annuli[k].circuit_budget_exceeded = true;
      }
    }
  return dec;
}

CircuitSearch essential_circuit_length(const FlappedPillow& p, const AnnulusDecomposition& dec, int index,
                                       long long budget) {
  const AnnulusComponent& ann = dec.annuli.at(index);
  if (!ann.essential) throw InputError("essential_circuit_length: annulus is not essential");
  const PreimageGraph& g = dec.graph;
  const int F = ann.face;
  const int bound = std::max(ann.circuit_length, ann.circuit_length_prime);
  const int E = static_cast<int>(g.edges.size());
  CircuitSearch result;

  std::map<std::vector<int>, bool> memo;
  auto evaluate = [&](const std::vector<int>& h) {
    auto it = memo.find(h);
    if (it != memo.end()) return it->second;
    std::vector<char> in_h(E, 0);
    for (int e : h) in_h[e] = 1;
    DirectedEdge start{-1, 0};
    for (int e : h) {
      if (g.left_face[e][0] == F) start = {e, 0};
      else if (g.left_face[e][1] == F) start = {e, 1};
      if (start.edge >= 0) break;
    }
    check(start.edge >= 0, "circuit has no edge on the annulus");
    std::vector<DirectedEdge> face_walk;
    DirectedEdge d = start;
    do {
      face_walk.push_back(d);
      check(face_walk.size() <= 2 * h.size(), "face walk of a circuit does not close");
      d = next_in(g, d, &in_h);
    } while (!(d == start));
    WalkClass wc = classify_walk(p, push_off_walk(p, g, face_walk));
    bool ok = wc.classification == ann.classification;
    memo.emplace(h, ok);
    return ok;
  };

  for (ArcType part : {ArcType::Xi, ArcType::XiPrime}) {
    std::vector<std::vector<DirectedEdge>> out(g.vertex_count);
    for (const auto& e : g.edges) {
      if (e.type != part) continue;
      if (g.left_face[e.id][0] != F && g.left_face[e.id][1] != F) continue;
      out[e.v0].push_back({e.id, 0});
      out[e.v1].push_back({e.id, 1});
    }
    std::vector<char> used(2 * E, 0);
    std::vector<DirectedEdge> path;
    auto tail = [&](const DirectedEdge& d) { return d.dir == 0 ? g.edges[d.edge].v0 : g.edges[d.edge].v1; };
    auto head = [&](const DirectedEdge& d) { return d.dir == 0 ? g.edges[d.edge].v1 : g.edges[d.edge].v0; };
    auto record = [&]() {
      std::vector<int> h;
      bool stick = false;
      for (const auto& d : path) {
        h.push_back(d.edge);
        stick = stick || g.edges[d.edge].stick;
      }
      std::sort(h.begin(), h.end());
      h.erase(std::unique(h.begin(), h.end()), h.end());
      if (!evaluate(h)) return;
      int len = static_cast<int>(path.size());
      if (!result.length || len < *result.length) result.length = len;
      if (!stick && (!result.stick_free_length || len < *result.stick_free_length)) result.stick_free_length = len;
    };
    for (int v = 0; v < g.vertex_count; ++v)
      for (const auto& d0 : out[v]) {
        const int id0 = 2 * d0.edge + d0.dir;
        const int home = tail(d0);
        // Depth-first extension; every other directed edge must have a larger id.
        std::vector<std::pair<int, std::size_t>> stack;  // (vertex, next option)
        path.assign(1, d0);
        used[id0] = 1;
        if (head(d0) == home) record();
        stack.push_back({head(d0), 0});
        while (!stack.empty()) {
          auto& [at, opt] = stack.back();
          if (static_cast<int>(path.size()) >= bound || opt >= out[at].size()) {
            used[2 * path.back().edge + path.back().dir] = 0;
            path.pop_back();
            stack.pop_back();
            continue;
          }
          DirectedEdge d = out[at][opt++];
          int id = 2 * d.edge + d.dir;
          if (id <= id0 || used[id]) continue;
          if (++result.extensions > budget) throw BudgetExceeded("essential circuit search exceeded its budget");
          used[id] = 1;
          path.push_back(d);
          if (head(d) == home) record();
          stack.push_back({head(d), 0});
        }
      }
  }
  return result;
}

}  // namespace flapped
