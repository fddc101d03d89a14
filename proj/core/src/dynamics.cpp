#include "flapped/dynamics.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "flapped/errors.hpp"

namespace flapped {

ExtendedSlope SlopeMap::operator()(const ExtendedSlope& x) {
  auto it = cache_.find(x);
  if (it != cache_.end()) return it->second;
  ExtendedSlope y = slope_map(pillow_, x, opts_);
  cache_.emplace(x, y);
  return y;
}

const char* terminal_name(OrbitTerminal t) {
  switch (t) {
    case OrbitTerminal::FixedPoint: return "fixed";
    case OrbitTerminal::Peripheral: return "peripheral";
    case OrbitTerminal::Cycle: return "cycle";
    case OrbitTerminal::BudgetExceeded: return "budget";
  }
  return "?";
}

std::string OrbitRecord::str() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < states.size(); ++k) out << k << '\t' << states[k].str() << '\n';
  return out.str();
}

std::string OrbitRecord::terminal_str() const {
  std::string t = terminal_name(terminal);
  if (terminal == OrbitTerminal::FixedPoint) t += " " + fixed.str();
  if (terminal == OrbitTerminal::Cycle) t += " " + std::to_string(period);
  return t;
}

OrbitRecord orbit(SlopeMap& mu, const ExtendedSlope& x, int max_steps) {
  if (max_steps < 1) throw InputError("orbit: max_steps must be at least 1");
  OrbitRecord rec;
  rec.start = x;
  rec.states.push_back(x);
  if (x.is_peripheral()) {
    rec.terminal = OrbitTerminal::Peripheral;
    return rec;
  }
  std::map<ExtendedSlope, int> seen{{x, 0}};
  for (int step = 0; step < max_steps; ++step) {
    const ExtendedSlope cur = rec.states.back();
    ExtendedSlope next = mu(cur);
    rec.states.push_back(next);
    if (next.is_peripheral()) {
      rec.terminal = OrbitTerminal::Peripheral;
      return rec;
    }
    if (next == cur) {
      rec.terminal = OrbitTerminal::FixedPoint;
      rec.fixed = next;
      return rec;
    }
    auto it = seen.find(next);
    if (it != seen.end()) {
      rec.terminal = OrbitTerminal::Cycle;
      rec.period = static_cast<int>(rec.states.size()) - 1 - it->second;
      return rec;
    }
    seen.emplace(next, static_cast<int>(rec.states.size()) - 1);
  }
  rec.terminal = OrbitTerminal::BudgetExceeded;
  return rec;
}

OrbitRecord orbit(const FlappedPillow& pillow, const ExtendedSlope& x, int max_steps, const PullbackOptions& opts) {
  SlopeMap mu(pillow, opts);
  return orbit(mu, x, max_steps);
}

std::vector<ExtendedSlope> fixed_slopes(SlopeMap& mu, int max_complexity) {
  if (max_complexity < 1) throw InputError("fixed_slopes: bound must be at least 1");
  std::vector<ExtendedSlope> out;
  for (const auto& x : enumerate_slopes(max_complexity))
    if (mu(x) == x) out.push_back(x);
  return out;
}

std::vector<ExtendedSlope> fixed_slopes(const FlappedPillow& pillow, int max_complexity, const PullbackOptions& opts) {
  SlopeMap mu(pillow, opts);
  return fixed_slopes(mu, max_complexity);
}

const char* violation_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::Increase: return "increase";
    case ViolationKind::NoStrictDecrease: return "no-strict-decrease";
    case ViolationKind::EqualNotFixed: return "equal-not-fixed";
  }
  return "?";
}

bool certified_mode(const PillowSpec& spec) { return spec.n == 2 && spec.n_h() >= 1 && spec.n_v() >= 1; }

std::vector<MonotonicityViolation> monotonicity_scan(SlopeMap& mu, int max_complexity) {
  if (max_complexity < 1) throw InputError("monotonicity_scan: bound must be at least 1");
  std::vector<MonotonicityViolation> out;
  for (const auto& x : enumerate_slopes(max_complexity)) {
    ExtendedSlope y = mu(x);
    BigInt cx = complexity(x), cy = complexity(y);
    if (cy > cx) out.push_back({x, y, ViolationKind::Increase});
    else if (cy == cx && cx > 8) out.push_back({x, y, ViolationKind::NoStrictDecrease});
    else if (cy == cx && !(y == x)) out.push_back({x, y, ViolationKind::EqualNotFixed});
  }
  return out;
}

std::string AttractorReport::str() const {
  std::ostringstream out;
  out << "mode: " << (certified_mode ? "certified" : "observational") << '\n';
  out << "scanned_bound: " << scanned_bound << '\n';
  out << "fixed_slopes:";
  for (const auto& x : fixed_slopes) out << ' ' << x.str();
  out << "\nattractor:";
  if (certified_mode) {
    for (const auto& x : fixed_slopes) out << ' ' << x.str();
    out << " peripheral";
  } else {
    out << " (not certified)";
  }
  out << "\nmonotonicity_violations: " << monotonicity_violations.size() << '\n';
  for (const auto& v : monotonicity_violations)
    out << "  " << v.x.str() << " -> " << v.image.str() << ' ' << violation_name(v.kind) << '\n';
  out << "sample_orbits: " << sample_orbits.size() << '\n';
  out << "orbit_targets:";
  for (const auto& x : orbit_targets) out << ' ' << x.str();
  out << "\nsamples_landed: " << (samples_landed ? "true" : "false") << '\n';
  out << "certified: " << (attractor_certified ? "true" : "false") << '\n';
  return out.str();
}

AttractorReport attractor(SlopeMap& mu, int max_complexity, int sample_bound, const AttractorOptions& opts) {
  AttractorReport rep;
  rep.certified_mode = certified_mode(mu.pillow().spec());
  rep.scanned_bound = max_complexity;
  const int fixed_bound = rep.certified_mode ? std::min(8, max_complexity) : max_complexity;
  rep.fixed_slopes = fixed_slopes(mu, fixed_bound);
  rep.monotonicity_violations = monotonicity_scan(mu, max_complexity);

  std::vector<ExtendedSlope> pool = enumerate_slopes(std::max(1, sample_bound));
  std::vector<ExtendedSlope> picks;
  if (opts.samples <= 0 || opts.samples >= static_cast<int>(pool.size())) {
    picks = pool;
  } else {
    std::mt19937 rng(opts.seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int k = 0; k < opts.samples; ++k) picks.push_back(pool[pick(rng)]);
  }
  std::set<ExtendedSlope> fixed_set(rep.fixed_slopes.begin(), rep.fixed_slopes.end());
  std::set<ExtendedSlope> targets;
  rep.samples_landed = true;
  for (const auto& x : picks) {
    // In certified mode complexity drops every step outside the 8-ball.
    int steps = static_cast<int>(std::min<BigInt>(complexity(x) + 2, BigInt(10000)));
    OrbitRecord rec = orbit(mu, x, std::max(steps, 2));
    if (rec.terminal == OrbitTerminal::FixedPoint) {
      targets.insert(rec.fixed);
      if (!fixed_set.count(rec.fixed)) rep.samples_landed = false;
    } else if (rec.terminal == OrbitTerminal::Cycle) {
      for (std::size_t k = rec.states.size() - 1 - rec.period; k + 1 < rec.states.size(); ++k)
        targets.insert(rec.states[k]);
      rep.samples_landed = false;
    } else if (rec.terminal == OrbitTerminal::BudgetExceeded) {
      rep.samples_landed = false;
    }
    rep.sample_orbits.push_back(std::move(rec));
  }
  rep.orbit_targets.assign(targets.begin(), targets.end());
  rep.attractor_certified = rep.certified_mode && rep.monotonicity_violations.empty() && rep.samples_landed;
  return rep;
}

RelationReport relation_check_3x3(SlopeMap& mu, int bound) {
  RelationReport rep;
  rep.bound = bound;
  for (const auto& x : enumerate_slopes(bound)) {
    ExtendedSlope y = mu(x);
    if (y.is_peripheral()) {
      ++rep.skipped;
      continue;
    }
    ExtendedSlope lhs = mu(normalize_slope(x.r(), x.s() + 24 * x.r()));
    ExtendedSlope rhs = normalize_slope(y.r(), y.s() + 22 * y.r());
    ++rep.checked;
    if (!(lhs == rhs)) {
      std::ostringstream msg;
      msg << "mu(" << x.str() << ") = " << y.str() << " but mu(" << normalize_slope(x.r(), x.s() + 24 * x.r()).str()
          << ") = " << lhs.str() << ", expected " << rhs.str();
      rep.counterexamples.push_back(msg.str());
    }
  }
  return rep;
}

}  // namespace flapped
