#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "flapped/complex.hpp"
#include "flapped/pullback.hpp"
#include "flapped/slopes.hpp"

namespace flapped {

// Memoized slope map of one pillow.
class SlopeMap {
 public:
  explicit SlopeMap(const FlappedPillow& pillow, PullbackOptions opts = {}) : pillow_(pillow), opts_(opts) {}
  ExtendedSlope operator()(const ExtendedSlope& x);
  const FlappedPillow& pillow() const { return pillow_; }

 private:
  const FlappedPillow& pillow_;
  PullbackOptions opts_;
  std::map<ExtendedSlope, ExtendedSlope> cache_;
};

enum class OrbitTerminal { FixedPoint, Peripheral, Cycle, BudgetExceeded };
const char* terminal_name(OrbitTerminal t);

struct OrbitRecord {
  ExtendedSlope start;
  std::vector<ExtendedSlope> states;  // states[k+1] = mu(states[k]); ends with the repeated state
  OrbitTerminal terminal = OrbitTerminal::BudgetExceeded;
  ExtendedSlope fixed;  // FixedPoint only
  int period = 0;       // Cycle only
  std::string str() const;           // "k<TAB>slope" lines
  std::string terminal_str() const;  // e.g. "fixed 1/5"
};

OrbitRecord orbit(SlopeMap& mu, const ExtendedSlope& x, int max_steps);
OrbitRecord orbit(const FlappedPillow& pillow, const ExtendedSlope& x, int max_steps, const PullbackOptions& opts = {});

std::vector<ExtendedSlope> fixed_slopes(SlopeMap& mu, int max_complexity);
std::vector<ExtendedSlope> fixed_slopes(const FlappedPillow& pillow, int max_complexity,
                                        const PullbackOptions& opts = {});

enum class ViolationKind {
  Increase,          // |mu(x)| > |x|
  NoStrictDecrease,  // |x| > 8 and |mu(x)| = |x|
  EqualNotFixed,     // |mu(x)| = |x| but mu(x) != x
};
const char* violation_name(ViolationKind k);

struct MonotonicityViolation {
  ExtendedSlope x;
  ExtendedSlope image;
  ViolationKind kind = ViolationKind::Increase;
};

// n = 2 with horizontal and vertical flaps: the complexity bound is known to hold there.
bool certified_mode(const PillowSpec& spec);

std::vector<MonotonicityViolation> monotonicity_scan(SlopeMap& mu, int max_complexity);

struct AttractorOptions {
  int samples = 100;  // orbits started from random slopes up to sample_bound; <= 0 means all
  std::uint32_t seed = 1;
};

struct AttractorReport {
  bool certified_mode = false;
  std::vector<ExtendedSlope> fixed_slopes;  // certified mode: within the 8-ball
  int scanned_bound = 0;
  std::vector<MonotonicityViolation> monotonicity_violations;
  std::vector<OrbitRecord> sample_orbits;
  std::vector<ExtendedSlope> orbit_targets;  // terminal fixed points and cycle members seen
  bool samples_landed = false;               // every sample orbit ended in fixed_slopes or peripheral
  bool attractor_certified = false;
  std::string str() const;
};

AttractorReport attractor(SlopeMap& mu, int max_complexity, int sample_bound, const AttractorOptions& opts = {});

struct RelationReport {
  int bound = 0;
  int checked = 0;
  int skipped = 0;  // mu(x) peripheral
  std::vector<std::string> counterexamples;
  bool passed() const { return counterexamples.empty(); }
};

// mu(r/s) = r'/s'  =>  mu(r/(s+24r)) = r'/(s'+22r'), over rational x with |x| <= bound.
RelationReport relation_check_3x3(SlopeMap& mu, int bound);

}  // namespace flapped
