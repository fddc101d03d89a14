#include "flapped/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "json.hpp"

#include "flapped/errors.hpp"

namespace flapped {

using nlohmann::json;

namespace {

char sheet_char(Sheet s) { return s == Sheet::Front ? 'F' : s == Sheet::Back ? 'B' : 'E'; }

int parse_index(const std::string& text, const std::string& whole) {
  if (text.empty() || text.size() > 9) throw InputError("malformed edge address: " + whole);
  for (char ch : text)
    if (ch < '0' || ch > '9') throw InputError("malformed edge address: " + whole);
  return std::stoi(text);
}

}  // namespace

std::string EdgeAddress::str() const {
  return std::string(1, sheet_char(sheet)) + ":" + (orientation == Orientation::Horizontal ? "h" : "v") + ":" +
         std::to_string(i) + ":" + std::to_string(j);
}

EdgeAddress EdgeAddress::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 4) throw InputError("malformed edge address: " + text);
  EdgeAddress e;
  if (parts[0] == "F") e.sheet = Sheet::Front;
  else if (parts[0] == "B") e.sheet = Sheet::Back;
  else if (parts[0] == "E") e.sheet = Sheet::Equator;
  else throw InputError("malformed edge address: " + text);
  if (parts[1] == "h") e.orientation = Orientation::Horizontal;
  else if (parts[1] == "v") e.orientation = Orientation::Vertical;
  else throw InputError("malformed edge address: " + text);
  e.i = parse_index(parts[2], text);
  e.j = parse_index(parts[3], text);
  return e;
}

bool edge_address_valid(const EdgeAddress& e, int n) {
  if (e.i < 0 || e.i >= n) return false;
  if (e.sheet == Sheet::Equator) return e.j == 0 || e.j == n;
  return e.j > 0 && e.j < n;
}

std::array<std::array<int, 2>, 2> edge_endpoints(const EdgeAddress& e, int) {
  if (e.orientation == Orientation::Horizontal) return {{{e.i, e.j}, {e.i + 1, e.j}}};
  return {{{e.j, e.i}, {e.j, e.i + 1}}};
}

std::vector<EdgeAddress> list_edges(int n) {
  if (n < 2) throw InputError("list_edges: n must be >= 2");
  std::vector<EdgeAddress> out;
  for (Sheet sh : {Sheet::Front, Sheet::Back})
    for (Orientation o : {Orientation::Horizontal, Orientation::Vertical})
      for (int i = 0; i < n; ++i)
        for (int j = 1; j < n; ++j) out.push_back({sh, o, i, j});
  for (Orientation o : {Orientation::Horizontal, Orientation::Vertical})
    for (int i = 0; i < n; ++i)
      for (int j : {0, n}) out.push_back({Sheet::Equator, o, i, j});
  std::sort(out.begin(), out.end());
  return out;
}

int PillowSpec::n_h() const {
  int t = 0;
  for (const auto& f : flaps)
    if (f.edge.orientation == Orientation::Horizontal) t += f.multiplicity;
  return t;
}

int PillowSpec::n_v() const {
  int t = 0;
  for (const auto& f : flaps)
    if (f.edge.orientation == Orientation::Vertical) t += f.multiplicity;
  return t;
}

int PillowSpec::total_multiplicity() const { return n_h() + n_v(); }

void PillowSpec::validate() const {
  if (n < 2) throw InputError("pillow spec: n must be >= 2");
  if (n > 64) throw InputError("pillow spec: n above the supported range (64)");
  std::set<EdgeAddress> seen;
  for (const auto& f : flaps) {
    if (!edge_address_valid(f.edge, n)) throw InputError("pillow spec: invalid edge " + f.edge.str());
    if (f.multiplicity < 1) throw InputError("pillow spec: multiplicity must be positive at " + f.edge.str());
    if (f.multiplicity > 64) throw InputError("pillow spec: multiplicity above the supported range at " + f.edge.str());
    if (!seen.insert(f.edge).second) throw InputError("pillow spec: duplicate edge " + f.edge.str());
  }
}

PillowSpec parse_spec_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("pillow spec: not valid JSON: ") + e.what());
  }
  PillowSpec spec;
  try {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
      throw InputError("pillow spec: missing integer field n");
    spec.n = j["n"].get<int>();
    if (j.contains("flaps")) {
      if (!j["flaps"].is_array()) throw InputError("pillow spec: flaps must be a list");
      for (const auto& f : j["flaps"]) {
        if (!f.is_object() || !f.contains("edge") || !f["edge"].is_string())
          throw InputError("pillow spec: flap entry needs a string edge");
        FlapPlacement p;
        p.edge = EdgeAddress::parse(f["edge"].get<std::string>());
        p.multiplicity = 1;
        if (f.contains("mult")) {
          if (!f["mult"].is_number_integer()) throw InputError("pillow spec: mult must be an integer");
          p.multiplicity = f["mult"].get<int>();
        }
        spec.flaps.push_back(p);
      }
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("pillow spec: ") + e.what());
  }
  spec.validate();
  return spec;
}

std::string spec_to_json(const PillowSpec& spec) {
  json j;
  j["n"] = spec.n;
  j["flaps"] = json::array();
  for (const auto& f : spec.flaps) j["flaps"].push_back({{"edge", f.edge.str()}, {"mult", f.multiplicity}});
  return j.dump();
}

const char* color_name(Color c) { return c == Color::White ? "white" : "black"; }

int FlappedPillow::white_count() const {
  return static_cast<int>(std::count_if(tiles_.begin(), tiles_.end(), [](const Tile& t) { return t.color == Color::White; }));
}

int FlappedPillow::base_tile(Sheet sheet, int i, int j) const {
  int n = spec_.n;
  if (sheet == Sheet::Equator || i < 0 || j < 0 || i >= n || j >= n) throw InputError("no such base tile");
  return base_index_[(sheet == Sheet::Front ? 0 : 1) * n * n + j * n + i];
}

const Gluing& FlappedPillow::plain_gluing(const Slot& s) const {
  if (tiles_.at(s.tile).kind != TileKind::Base) throw InternalError("plain gluing of a flap tile");
  return plain_gluing_.at(s.tile)[static_cast<int>(s.side)];
}

EdgeAddress FlappedPillow::edge_under(const Slot& s) const {
  const Tile& t = tiles_.at(s.tile);
  if (t.kind != TileKind::Base) throw InternalError("edge_under on a flap tile");
  int n = spec_.n;
  Sheet sh = t.sheet;
  switch (s.side) {
    case Side::S: return t.j == 0 ? EdgeAddress{Sheet::Equator, Orientation::Horizontal, t.i, 0}
                                  : EdgeAddress{sh, Orientation::Horizontal, t.i, t.j};
    case Side::N: return t.j + 1 == n ? EdgeAddress{Sheet::Equator, Orientation::Horizontal, t.i, n}
                                      : EdgeAddress{sh, Orientation::Horizontal, t.i, t.j + 1};
    case Side::W: return t.i == 0 ? EdgeAddress{Sheet::Equator, Orientation::Vertical, t.j, 0}
                                  : EdgeAddress{sh, Orientation::Vertical, t.j, t.i};
    case Side::E: return t.i + 1 == n ? EdgeAddress{Sheet::Equator, Orientation::Vertical, t.j, n}
                                      : EdgeAddress{sh, Orientation::Vertical, t.j, t.i + 1};
  }
  return {};
}

int FlappedPillow::flap_at_slot(const Slot& s) const {
  if (tiles_.at(s.tile).kind != TileKind::Base) return -1;
  return slot_flap_.at(s.tile)[static_cast<int>(s.side)];
}

bool FlappedPillow::is_top_slot(const Slot& s) const { return top_slot_.at(s.tile)[static_cast<int>(s.side)]; }

bool FlappedPillow::is_marked(int v) const { return std::find(marked_.begin(), marked_.end(), v) != marked_.end(); }

int FlappedPillow::euler_characteristic() const {
  // Every tile has four sides and every 1-edge two slots, so E = 2F.
  return vertex_count() - tile_count();
}

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

std::pair<Side, Side> sector_sides(Corner c, int orientation) {
  std::pair<Side, Side> s;
  switch (c) {
    case Corner::SW: s = {Side::S, Side::W}; break;
    case Corner::SE: s = {Side::E, Side::S}; break;
    case Corner::NE: s = {Side::N, Side::E}; break;
    case Corner::NW: s = {Side::W, Side::N}; break;
  }
  if (orientation < 0) std::swap(s.first, s.second);
  return s;
}

// The two base slots under a 1-edge address.
std::pair<Slot, Slot> slit_slots(const FlappedPillow& p, const EdgeAddress& e) {
  int n = p.n();
  if (e.sheet != Sheet::Equator) {
    if (e.orientation == Orientation::Horizontal)
      return {{p.base_tile(e.sheet, e.i, e.j - 1), Side::N}, {p.base_tile(e.sheet, e.i, e.j), Side::S}};
    return {{p.base_tile(e.sheet, e.j - 1, e.i), Side::E}, {p.base_tile(e.sheet, e.j, e.i), Side::W}};
  }
  if (e.orientation == Orientation::Horizontal) {
    int row = e.j == 0 ? 0 : n - 1;
    Side s = e.j == 0 ? Side::S : Side::N;
    return {{p.base_tile(Sheet::Front, e.i, row), s}, {p.base_tile(Sheet::Back, e.i, row), s}};
  }
  int col = e.j == 0 ? 0 : n - 1;
  Side s = e.j == 0 ? Side::W : Side::E;
  return {{p.base_tile(Sheet::Front, col, e.i), s}, {p.base_tile(Sheet::Back, col, e.i), s}};
}

}  // namespace

FlappedPillow build_pillow(const PillowSpec& spec) {
  spec.validate();
  FlappedPillow p;
  p.spec_ = spec;
  const int n = spec.n;

  // Base tiles. Both sheets use the pillow coordinates; tile (i, j) covers
  // [i/n, (i+1)/n] x [j/n, (j+1)/n]. The chart folds by index parity.
  p.base_index_.assign(2 * n * n, -1);
  for (int sh = 0; sh < 2; ++sh)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        Tile t;
        t.id = static_cast<int>(p.tiles_.size());
        t.kind = TileKind::Base;
        t.sheet = sh == 0 ? Sheet::Front : Sheet::Back;
        t.i = i;
        t.j = j;
        bool even = (i + j) % 2 == 0;
        t.color = (sh == 0) == even ? Color::White : Color::Black;
        t.chart = SquareSymmetry{false, i % 2 == 1, j % 2 == 1};
        t.orientation = sh == 0 ? 1 : -1;
        p.base_index_[sh * n * n + j * n + i] = t.id;
        p.tiles_.push_back(t);
      }

  const int base_count = 2 * n * n;
  p.gluing_.assign(base_count, {});
  auto glue = [&p](Slot a, Slot b, bool rev) {
    p.gluing_[a.tile][static_cast<int>(a.side)] = {b, rev};
    p.gluing_[b.tile][static_cast<int>(b.side)] = {a, rev};
  };
  for (Sheet sh : {Sheet::Front, Sheet::Back})
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        int t = p.base_tile(sh, i, j);
        if (i + 1 < n) glue({t, Side::E}, {p.base_tile(sh, i + 1, j), Side::W}, false);
        if (j + 1 < n) glue({t, Side::N}, {p.base_tile(sh, i, j + 1), Side::S}, false);
      }
  for (int k = 0; k < n; ++k) {
    glue({p.base_tile(Sheet::Front, k, 0), Side::S}, {p.base_tile(Sheet::Back, k, 0), Side::S}, false);
    glue({p.base_tile(Sheet::Front, k, n - 1), Side::N}, {p.base_tile(Sheet::Back, k, n - 1), Side::N}, false);
    glue({p.base_tile(Sheet::Front, 0, k), Side::W}, {p.base_tile(Sheet::Back, 0, k), Side::W}, false);
    glue({p.base_tile(Sheet::Front, n - 1, k), Side::E}, {p.base_tile(Sheet::Back, n - 1, k), Side::E}, false);
  }
  p.plain_gluing_ = p.gluing_;
  p.slot_flap_.assign(base_count, {-1, -1, -1, -1});

  // Flaps. Layer k consists of a lower half (a copy of the second base tile,
  // glued to the first slot side) and an upper half (a copy of the first base
  // tile); the halves are folded onto each other by the reflection across the
  // slit, and consecutive layers are chained base edge to base edge.
  for (const auto& placement : spec.flaps) {
    Flap f;
    f.id = static_cast<int>(p.flaps_.size());
    f.edge = placement.edge;
    f.multiplicity = placement.multiplicity;
    f.on_equator = placement.edge.sheet == Sheet::Equator;
    auto [first, second] = slit_slots(p, placement.edge);
    f.first = first;
    f.second = second;
    f.reversed = p.gluing_[first.tile][static_cast<int>(first.side)].reversed;
    if (p.slot_flap_[first.tile][static_cast<int>(first.side)] != -1) throw InternalError("slot flapped twice");
    p.slot_flap_[first.tile][static_cast<int>(first.side)] = f.id;
    p.slot_flap_[second.tile][static_cast<int>(second.side)] = f.id;

    const Tile& t1 = p.tiles_[first.tile];
    const Tile& t2 = p.tiles_[second.tile];
    const Side s1 = first.side;
    const Side s2 = second.side;
    // Fold: second-tile square -> first-tile square, sending the slit side to
    // the slit side with the gluing's parametrization.
    SquareSymmetry fold;
    bool found = false;
    for (const auto& g : SquareSymmetry::all()) {
      if (g.apply(point_on_side(s2, 0)) == point_on_side(s1, f.reversed ? 1 : 0) &&
          g.apply(point_on_side(s2, 1)) == point_on_side(s1, f.reversed ? 0 : 1)) {
        fold = g;
        found = true;
        break;
      }
    }
    check(found, "no fold symmetry for flap");
    Color c1 = t1.color, c2 = t2.color;
    SquareSymmetry ch1 = t1.chart, ch2 = t2.chart;

    Slot prev = first;
    for (int layer = 1; layer <= placement.multiplicity; ++layer) {
      Tile lo;
      lo.id = static_cast<int>(p.tiles_.size());
      lo.kind = TileKind::Flap;
      lo.flap_id = f.id;
      lo.layer = layer;
      lo.half = FlapHalf::Lower;
      lo.color = c2;
      lo.chart = ch2;
      p.tiles_.push_back(lo);
      Tile up = lo;
      up.id = lo.id + 1;
      up.half = FlapHalf::Upper;
      up.color = c1;
      up.chart = ch1;
      p.tiles_.push_back(up);
      p.gluing_.push_back({});
      p.gluing_.push_back({});
      f.lower_tiles.push_back(lo.id);
      f.upper_tiles.push_back(up.id);

      glue(prev, {lo.id, s2}, f.reversed);
      for (Side tau : kSides) {
        if (tau == s2) continue;
        glue({lo.id, tau}, {up.id, fold.map_side(tau)}, fold.reverses_side(tau));
      }
      prev = {up.id, s1};
    }
    glue(prev, second, f.reversed);
    p.flaps_.push_back(f);
  }

  const int tile_count = static_cast<int>(p.tiles_.size());
  p.top_slot_.assign(tile_count, {false, false, false, false});
  for (const auto& f : p.flaps_)
    for (int lo : f.lower_tiles) {
      Side top = opposite(f.second.side);
      p.top_slot_[lo][static_cast<int>(top)] = true;
      Slot other = p.gluing_[lo][static_cast<int>(top)].other;
      p.top_slot_[other.tile][static_cast<int>(other.side)] = true;
    }

  // Involution and checkerboard.
  for (int t = 0; t < tile_count; ++t)
    for (Side s : kSides) {
      const Gluing& g = p.gluing_[t][static_cast<int>(s)];
      check(!(g.other.tile == t && g.other.side == s), "gluing has a fixed slot");
      const Gluing& back = p.gluing_[g.other.tile][static_cast<int>(g.other.side)];
      check(back.other.tile == t && back.other.side == s && back.reversed == g.reversed, "gluing is not an involution");
      check(p.tiles_[t].color != p.tiles_[g.other.tile].color, "gluing pairs equal colors");
    }

  // Chart transitions: the shared side must land on one 0-tile side with
  // matching parametrization.
  for (int t = 0; t < tile_count; ++t)
    for (Side s : kSides) {
      const Gluing& g = p.gluing_[t][static_cast<int>(s)];
      const Tile& a = p.tiles_[t];
      const Tile& b = p.tiles_[g.other.tile];
      check(a.chart.map_side(s) == b.chart.map_side(g.other.side), "chart transition lands on different edges");
      check(a.chart.reverses_side(s) == (b.chart.reverses_side(g.other.side) != g.reversed),
            "chart transition parametrization mismatch");
    }

  // Orientation by propagation from the front tile at A.
  std::vector<int> orient(tile_count, 0);
  std::queue<int> queue;
  orient[p.base_tile(Sheet::Front, 0, 0)] = 1;
  queue.push(p.base_tile(Sheet::Front, 0, 0));
  while (!queue.empty()) {
    int t = queue.front();
    queue.pop();
    for (Side s : kSides) {
      const Gluing& g = p.gluing_[t][static_cast<int>(s)];
      int o = -orient[t] * side_direction(s) * side_direction(g.other.side) * (g.reversed ? -1 : 1);
      if (orient[g.other.tile] == 0) {
        orient[g.other.tile] = o;
        queue.push(g.other.tile);
      } else {
        check(orient[g.other.tile] == o, "complex is not orientable");
      }
    }
  }
  for (int t = 0; t < tile_count; ++t) {
    check(orient[t] != 0, "complex is not connected");
    if (p.tiles_[t].kind == TileKind::Base) check(orient[t] == p.tiles_[t].orientation, "base orientation mismatch");
    p.tiles_[t].orientation = orient[t];
    int target = p.tiles_[t].color == Color::White ? 1 : -1;
    check(orient[t] * p.tiles_[t].chart.det() == target, "chart reverses orientation");
  }

  // Vertices.
  UnionFind uf(tile_count * 4);
  for (int t = 0; t < tile_count; ++t)
    for (Side s : kSides) {
      const Gluing& g = p.gluing_[t][static_cast<int>(s)];
      for (int e = 0; e < 2; ++e) {
        Corner c = corner_at(s, e);
        Corner c2 = corner_at(g.other.side, g.reversed ? 1 - e : e);
        uf.unite(t * 4 + static_cast<int>(c), g.other.tile * 4 + static_cast<int>(c2));
      }
    }
  std::map<int, int> root_id;
  p.corner_vertex_.assign(tile_count, {});
  for (int t = 0; t < tile_count; ++t)
    for (int c = 0; c < 4; ++c) {
      int r = uf.find(t * 4 + c);
      auto it = root_id.find(r);
      if (it == root_id.end()) {
        it = root_id.emplace(r, static_cast<int>(p.valence_.size())).first;
        p.valence_.push_back(0);
        p.vertex_image_.push_back(vertex_of_corner(p.tiles_[t].chart.map_corner(static_cast<Corner>(c))));
      }
      int v = it->second;
      p.corner_vertex_[t][c] = v;
      ++p.valence_[v];
      check(p.vertex_image_[v] == vertex_of_corner(p.tiles_[t].chart.map_corner(static_cast<Corner>(c))),
            "vertex maps to two pillow vertices");
    }
  for (int k : p.valence_) check(k % 2 == 0, "odd vertex valence");
  p.marked_ = {p.corner_vertex_[p.base_tile(Sheet::Front, 0, 0)][0],
               p.corner_vertex_[p.base_tile(Sheet::Front, n - 1, 0)][1],
               p.corner_vertex_[p.base_tile(Sheet::Front, n - 1, n - 1)][2],
               p.corner_vertex_[p.base_tile(Sheet::Front, 0, n - 1)][3]};
  for (int k = 0; k < 4; ++k)
    check(p.vertex_image_[p.marked_[k]] == (n % 2 == 0 ? PillowVertex::A : static_cast<PillowVertex>(k)),
          "marked vertex image");

  // Sector cycles.
  p.sectors_.assign(p.valence_.size(), {});
  std::vector<bool> seen(tile_count * 4, false);
  for (int t = 0; t < tile_count; ++t)
    for (int c = 0; c < 4; ++c) {
      if (seen[t * 4 + c]) continue;
      int v = p.corner_vertex_[t][c];
      check(p.sectors_[v].empty(), "vertex with two sector cycles");
      int ct = t;
      Corner cc = static_cast<Corner>(c);
      while (!seen[ct * 4 + static_cast<int>(cc)]) {
        seen[ct * 4 + static_cast<int>(cc)] = true;
        auto [in, out] = sector_sides(cc, p.tiles_[ct].orientation);
        p.sectors_[v].push_back({ct, cc, in, out});
        const Gluing& g = p.gluing_[ct][static_cast<int>(out)];
        int e = end_of_corner(out, cc);
        Corner next = corner_at(g.other.side, g.reversed ? 1 - e : e);
        check(sector_sides(next, p.tiles_[g.other.tile].orientation).first == g.other.side,
              "sector walk enters through the wrong side");
        ct = g.other.tile;
        cc = next;
      }
      check(ct == t && static_cast<int>(cc) == c, "sector walk does not close");
      check(static_cast<int>(p.sectors_[v].size()) == p.valence_[v], "sector cycle length differs from valence");
    }

  check(p.euler_characteristic() == 2, "complex is not a sphere");
  check(p.tile_count() == 2 * n * n + 2 * spec.total_multiplicity(), "tile count formula");
  check(p.white_count() == n * n + spec.total_multiplicity(), "white tile count");
  return p;
}

OrbifoldSignature orbifold_signature(const FlappedPillow& pillow) {
  OrbifoldSignature sig;
  sig.type = OrbifoldType::Parabolic;
  for (int v = 0; v < pillow.vertex_count(); ++v) {
    sig.local_degree.push_back(pillow.local_degree(v));
    if (!pillow.is_marked(v) && pillow.local_degree(v) < 2) sig.type = OrbifoldType::Hyperbolic;
  }
  return sig;
}

JuliaType julia_type(const PillowSpec& spec) {
  spec.validate();
  if (spec.n_h() < 1 || spec.n_v() < 1) throw InputError("julia_type: needs at least one horizontal and one vertical flap");
  const int n = spec.n;
  const std::array<std::array<int, 2>, 4> corners = {{{0, 0}, {n, 0}, {n, n}, {0, n}}};
  bool a_touched = false, v_touched = false;
  for (const auto& f : spec.flaps)
    for (const auto& end : edge_endpoints(f.edge, n))
      for (int k = 0; k < 4; ++k)
        if (end == corners[k]) {
          v_touched = true;
          if (k == 0) a_touched = true;
        }
  bool whole = n % 2 == 0 ? !a_touched : !v_touched;
  return whole ? JuliaType::WholeSphere : JuliaType::SierpinskiCarpet;
}

std::string pillow_to_json(const FlappedPillow& p) {
  json j = json::parse(spec_to_json(p.spec()));
  j["tiles"] = json::array();
  for (const auto& t : p.tiles()) {
    json jt{{"id", t.id}, {"color", color_name(t.color)}, {"chart", t.chart.str()}, {"orientation", t.orientation}};
    if (t.kind == TileKind::Base) {
      jt["kind"] = "base";
      jt["sheet"] = t.sheet == Sheet::Front ? "F" : "B";
      jt["i"] = t.i;
      jt["j"] = t.j;
    } else {
      jt["kind"] = "flap";
      jt["flap"] = t.flap_id;
      jt["layer"] = t.layer;
      jt["half"] = t.half == FlapHalf::Lower ? "lower" : "upper";
    }
    json glues = json::object();
    for (Side s : kSides) {
      const Gluing& g = p.gluing({t.id, s});
      glues[side_name(s)] = {{"tile", g.other.tile}, {"side", side_name(g.other.side)}, {"reversed", g.reversed}};
    }
    jt["gluing"] = glues;
    jt["vertices"] = {p.vertex_at(t.id, Corner::SW), p.vertex_at(t.id, Corner::SE), p.vertex_at(t.id, Corner::NE),
                      p.vertex_at(t.id, Corner::NW)};
    j["tiles"].push_back(jt);
  }
  j["vertices"] = json::array();
  for (int v = 0; v < p.vertex_count(); ++v)
    j["vertices"].push_back({{"id", v}, {"image", vertex_name(p.vertex_image(v))}, {"valence", p.valence(v)},
                             {"marked", p.is_marked(v)}});
  j["flap_list"] = json::array();
  for (const auto& f : p.flaps())
    j["flap_list"].push_back({{"id", f.id}, {"edge", f.edge.str()}, {"mult", f.multiplicity}, {"equator", f.on_equator}});
  return j.dump(2);
}

}  // namespace flapped
