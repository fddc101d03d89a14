#include "sweep.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace flapped::support {

PillowSpec bundled(const std::string& name) {
  std::ifstream in(std::string(FLAPPED_DATA_DIR) + "/" + name + ".json");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spec_json(buf.str());
}

namespace {

struct Picker {
  std::mt19937 rng;
  std::vector<EdgeAddress> h, v;

  Picker(int n, unsigned seed) : rng(seed) {
    for (const auto& e : list_edges(n)) (e.orientation == Orientation::Horizontal ? h : v).push_back(e);
  }
  EdgeAddress pick(const std::vector<EdgeAddress>& pool, const std::set<EdgeAddress>& used) {
    std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
    for (;;) {
      EdgeAddress e = pool[d(rng)];
      if (!used.count(e)) return e;
    }
  }
  // kinds: 'h', 'v' or 'a' (any); mult per entry.
  PillowSpec make(int n, const std::string& kinds, const std::vector<int>& mult) {
    PillowSpec s;
    s.n = n;
    std::set<EdgeAddress> used;
    for (std::size_t k = 0; k < kinds.size(); ++k) {
      char c = kinds[k];
      if (c == 'a') c = std::uniform_int_distribution<int>(0, 1)(rng) ? 'h' : 'v';
      EdgeAddress e = pick(c == 'h' ? h : v, used);
      used.insert(e);
      s.flaps.push_back({e, mult[k]});
    }
    return s;
  }
};

}  // namespace

std::vector<PillowSpec> sweep_configs() {
  std::vector<PillowSpec> out;
  for (int n : {2, 3, 4}) {
    Picker p(n, 7919u * static_cast<unsigned>(n));
    out.push_back(PillowSpec{n, {}});
    for (int k = 0; k < 3; ++k) out.push_back(p.make(n, "h", {1}));
    for (int k = 0; k < 3; ++k) out.push_back(p.make(n, "v", {1}));
    for (int k = 0; k < 3; ++k) out.push_back(p.make(n, "hv", {1, 1}));
    for (int k = 0; k < 2; ++k) out.push_back(p.make(n, "hh", {1, 1}));
    out.push_back(p.make(n, "vv", {1, 1}));
    out.push_back(p.make(n, "h", {2}));
    out.push_back(p.make(n, "vh", {2, 1}));
    for (int k = 0; k < 3; ++k) out.push_back(p.make(n, "hva", {1, 1, 1}));
  }
  for (const auto& s : out) s.validate();
  return out;
}

std::vector<PillowSpec> certified_configs(int count) {
  std::vector<PillowSpec> out;
  std::vector<EdgeAddress> h, v;
  for (const auto& e : list_edges(2)) (e.orientation == Orientation::Horizontal ? h : v).push_back(e);
  // Walk the h x v grid diagonally so the picks spread over both lists.
  for (std::size_t d = 0; static_cast<int>(out.size()) < count && d < h.size() * v.size(); ++d) {
    const EdgeAddress& a = h[d % h.size()];
    const EdgeAddress& b = v[(d / h.size() + d) % v.size()];
    out.push_back(PillowSpec{2, {{a, 1}, {b, 1}}});
  }
  return out;
}

std::string describe(const PillowSpec& spec) { return spec_to_json(spec); }

}  // namespace flapped::support
