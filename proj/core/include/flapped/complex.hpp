#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "flapped/square.hpp"

namespace flapped {

enum class Sheet { Front, Back, Equator };
enum class Orientation { Horizontal, Vertical };

// Name of one 1-edge of the n-subdivided pillow.
//   Front/Back: horizontal edges lie on y = j/n, vertical edges on x = j/n,
//   0 < j < n; i is the segment index along the edge direction.
//   Equator: j = 0 or j = n. Horizontal j = 0 is edge a, j = n is edge c;
//   vertical j = 0 is edge d, j = n is edge b.
struct EdgeAddress {
  Sheet sheet = Sheet::Front;
  Orientation orientation = Orientation::Horizontal;
  int i = 0;
  int j = 0;

  std::string str() const;
  static EdgeAddress parse(const std::string& text);
  friend auto operator<=>(const EdgeAddress&, const EdgeAddress&) = default;
};

struct FlapPlacement {
  EdgeAddress edge;
  int multiplicity = 1;
  friend bool operator==(const FlapPlacement&, const FlapPlacement&) = default;
};

struct PillowSpec {
  int n = 2;
  std::vector<FlapPlacement> flaps;

  int n_h() const;
  int n_v() const;
  int total_multiplicity() const;
  // Throws InputError on n < 2, malformed or duplicate addresses, bad multiplicity.
  void validate() const;
  friend bool operator==(const PillowSpec&, const PillowSpec&) = default;
};

PillowSpec parse_spec_json(const std::string& text);
std::string spec_to_json(const PillowSpec& spec);

std::vector<EdgeAddress> list_edges(int n);
bool edge_address_valid(const EdgeAddress& e, int n);
// Endpoints of the edge in pillow coordinates, as multiples of 1/n.
std::array<std::array<int, 2>, 2> edge_endpoints(const EdgeAddress& e, int n);

enum class Color { White, Black };
inline Color other(Color c) { return c == Color::White ? Color::Black : Color::White; }
const char* color_name(Color c);

enum class TileKind { Base, Flap };
enum class FlapHalf { Lower, Upper };

struct Tile {
  int id = 0;
  Color color = Color::White;
  TileKind kind = TileKind::Base;
  // Base tiles.
  Sheet sheet = Sheet::Front;
  int i = 0;
  int j = 0;
  // Flap tiles. Lower is the half glued to the first base slot of the flap.
  int flap_id = -1;
  int layer = 0;  // 1..m
  FlapHalf half = FlapHalf::Lower;
  // Local square -> 0-tile chart of this tile's color.
  SquareSymmetry chart;
  // +1 if the local (x, y) frame is positively oriented on the sphere.
  int orientation = 1;
};

struct Slot {
  int tile = 0;
  Side side = Side::S;
  friend bool operator==(const Slot&, const Slot&) = default;
};

struct Gluing {
  Slot other;
  bool reversed = false;
};

struct Flap {
  int id = 0;
  EdgeAddress edge;
  int multiplicity = 1;
  // The two base slots of the slit. first is glued to the lower half of layer 1,
  // second to the upper half of layer m.
  Slot first;
  Slot second;
  bool reversed = false;  // parametrization flag of the original gluing first <-> second
  std::vector<int> lower_tiles;  // by layer
  std::vector<int> upper_tiles;
  bool on_equator = false;
};

// One sector around a 1-vertex: the corner of a tile and its two sides, in
// counterclockwise order around the vertex.
struct Sector {
  int tile = 0;
  Corner corner = Corner::SW;
  Side in_side = Side::S;
  Side out_side = Side::W;
};

class FlappedPillow {
 public:
  const PillowSpec& spec() const { return spec_; }
  int n() const { return spec_.n; }
  const std::vector<Tile>& tiles() const { return tiles_; }
  const Tile& tile(int id) const { return tiles_.at(id); }
  int tile_count() const { return static_cast<int>(tiles_.size()); }
  int white_count() const;

  const Gluing& gluing(const Slot& s) const { return gluing_.at(s.tile)[static_cast<int>(s.side)]; }
  Slot neighbor(const Slot& s) const { return gluing(s).other; }

  // Base tile of the plain pillow, and its neighbour there (ignoring flaps).
  int base_tile(Sheet sheet, int i, int j) const;
  const Gluing& plain_gluing(const Slot& s) const;
  // The 1-edge of the plain pillow under a base slot.
  EdgeAddress edge_under(const Slot& base_slot) const;

  const std::vector<Flap>& flaps() const { return flaps_; }
  // Flap whose slit contains this base slot, or -1.
  int flap_at_slot(const Slot& s) const;
  // Slot is the fold between the halves of a layer, opposite the base edges.
  bool is_top_slot(const Slot& s) const;

  int vertex_count() const { return static_cast<int>(valence_.size()); }
  int vertex_at(int tile, Corner c) const { return corner_vertex_.at(tile)[static_cast<int>(c)]; }
  int valence(int v) const { return valence_.at(v); }
  int local_degree(int v) const { return valence_.at(v) / 2; }
  PillowVertex vertex_image(int v) const { return vertex_image_.at(v); }
  int marked_vertex(PillowVertex p) const { return marked_.at(static_cast<int>(p)); }
  bool is_marked(int v) const;
  // Counterclockwise sector cycle around a vertex.
  const std::vector<Sector>& sectors(int v) const { return sectors_.at(v); }

  int euler_characteristic() const;

 private:
  friend FlappedPillow build_pillow(const PillowSpec& spec);

  PillowSpec spec_;
  std::vector<Tile> tiles_;
  std::vector<std::array<Gluing, 4>> gluing_;
  std::vector<std::array<Gluing, 4>> plain_gluing_;  // base tiles only
  std::vector<int> base_index_;                      // (sheet, i, j) -> tile id
  std::vector<Flap> flaps_;
  std::vector<std::array<int, 4>> slot_flap_;  // base slots only
  std::vector<std::array<bool, 4>> top_slot_;
  std::vector<std::array<int, 4>> corner_vertex_;
  std::vector<int> valence_;
  std::vector<PillowVertex> vertex_image_;
  std::array<int, 4> marked_{};
  std::vector<std::vector<Sector>> sectors_;
};

FlappedPillow build_pillow(const PillowSpec& spec);

enum class OrbifoldType { Parabolic, Hyperbolic };
struct OrbifoldSignature {
  OrbifoldType type = OrbifoldType::Parabolic;
  std::vector<int> local_degree;  // indexed by vertex id
};
OrbifoldSignature orbifold_signature(const FlappedPillow& pillow);

enum class JuliaType { WholeSphere, SierpinskiCarpet };
JuliaType julia_type(const PillowSpec& spec);

// Debug dump of tiles, gluings and vertices in the spec JSON dialect.
std::string pillow_to_json(const FlappedPillow& pillow);

}  // namespace flapped
