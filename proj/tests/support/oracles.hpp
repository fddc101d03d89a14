#pragma once

#include <array>
#include <vector>

#include "flapped/complex.hpp"
#include "flapped/pullback.hpp"
#include "flapped/rational.hpp"
#include "flapped/slopes.hpp"

// Independent reference computations used to check the engine.
namespace flapped::support {

// Double loop over coprime pairs.
std::vector<std::pair<long, long>> brute_force_slopes(int max_complexity);

// Cut the sphere along one curve component and count marked vertices on each side.
struct SplitOracle {
  int regions = 0;
  std::vector<int> marked_per_region;
  int lone_marked = -1;  // pillow vertex index when the split is 1-3
  bool essential() const { return regions == 2 && marked_per_region[0] == 2; }
  bool null_homotopic() const { return regions == 2 && (marked_per_region[0] % 4 == 0); }
};
SplitOracle flood_fill_split(const FlappedPillow& pillow, const PullbackComponent& component);

// Transverse crossings of the two canonical geodesics on the pillow, counted
// chord by chord inside the 0-tiles.
long geodesic_crossings(const ExtendedSlope& x, const ExtendedSlope& y, int n);

// Pullback of the horizontal curve (or the vertical one when vertical is set)
// read off from the rows of the spec.
struct RowOracle {
  std::vector<int> essential_degrees;  // sorted
  int peripheral = 0;
  Rational lambda;
};
RowOracle row_oracle(const PillowSpec& spec, bool vertical);

}  // namespace flapped::support
