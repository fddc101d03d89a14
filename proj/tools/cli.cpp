#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "flapped/annuli.hpp"
#include "flapped/complex.hpp"
#include "flapped/dynamics.hpp"
#include "flapped/errors.hpp"
#include "flapped/pullback.hpp"
#include "json.hpp"

namespace flapped::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string spec_path;
  std::string slope;
  int bound = 0;
  int max_steps = 100;
  int samples = 100;
  long long budget = 1000000;
  int n = 0;
  int denominator = 0;
  bool json = false;
};

PillowSpec load_spec(const std::string& path) {
  if (path.empty()) throw InputError("--spec is required");
  std::ifstream in(path);
  if (!in) throw InputError("cannot read spec file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spec_json(buf.str());
}

ExtendedSlope need_slope(const Options& o) {
  if (o.slope.empty()) throw InputError("--slope is required");
  return ExtendedSlope::parse(o.slope);
}

PullbackOptions pull_opts(const Options& o) {
  PullbackOptions p;
  p.offset_denominator = o.denominator;
  return p;
}

const char* vertex_label(PillowVertex v) { return vertex_name(v); }

json slope_list(const std::vector<ExtendedSlope>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(x.str());
  return a;
}

json orbit_json(const OrbitRecord& r) {
  json j{{"start", r.start.str()}, {"states", slope_list(r.states)}, {"terminal", terminal_name(r.terminal)}};
  if (r.terminal == OrbitTerminal::FixedPoint) j["fixed"] = r.fixed.str();
  if (r.terminal == OrbitTerminal::Cycle) j["period"] = r.period;
  return j;
}

json violations_json(const std::vector<MonotonicityViolation>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back({{"slope", v.x.str()}, {"image", v.image.str()}, {"kind", violation_name(v.kind)}});
  return a;
}

std::string opt_int(const std::optional<int>& v, bool budget) {
  if (budget) return "budget";
  return v ? std::to_string(*v) : "-";
}

bool is_b3(const PillowSpec& s) {
  if (s.n != 3 || s.flaps.size() != 2) return false;
  std::set<std::string> got;
  for (const auto& f : s.flaps) {
    if (f.multiplicity != 1) return false;
    got.insert(f.edge.str());
  }
  return got == std::set<std::string>{"E:h:2:0", "E:v:0:3"};
}

void cmd_build(const Options& o, std::ostream& out) {
  FlappedPillow p = build_pillow(load_spec(o.spec_path));
  if (o.json) {
    out << pillow_to_json(p) << '\n';
    return;
  }
  out << "n: " << p.n() << '\n'
      << "flaps: " << p.flaps().size() << '\n'
      << "equator_flaps: "
      << std::count_if(p.flaps().begin(), p.flaps().end(), [](const auto& f) { return f.on_equator; }) << '\n'
      << "tiles: " << p.tile_count() << '\n'
      << "white_tiles: " << p.white_count() << '\n'
      << "vertices: " << p.vertex_count() << '\n'
      << "euler_characteristic: " << p.euler_characteristic() << '\n';
}

void cmd_edges(const Options& o, const std::vector<std::string>& positional, std::ostream& out) {
  int n = o.n;
  if (n == 0 && !positional.empty()) {
    try {
      n = std::stoi(positional.front());
    } catch (const std::exception&) {
      throw InputError("edges: n must be an integer");
    }
  }
  if (n < 2) throw InputError("edges: n must be at least 2");
  auto edges = list_edges(n);
  if (o.json) {
    json a = json::array();
    for (const auto& e : edges) a.push_back(e.str());
    out << json{{"n", n}, {"edges", a}}.dump() << '\n';
    return;
  }
  for (const auto& e : edges) out << e.str() << '\n';
}

void cmd_orbifold(const Options& o, std::ostream& out) {
  FlappedPillow p = build_pillow(load_spec(o.spec_path));
  OrbifoldSignature sig = orbifold_signature(p);
  const char* type = sig.type == OrbifoldType::Hyperbolic ? "hyperbolic" : "parabolic";
  std::map<int, int> histogram;
  for (int d : sig.local_degree) ++histogram[d];
  if (o.json) {
    json marked = json::object();
    for (int k = 0; k < 4; ++k) {
      auto v = static_cast<PillowVertex>(k);
      marked[vertex_label(v)] = p.local_degree(p.marked_vertex(v));
    }
    out << json{{"orbifold", type}, {"local_degree", sig.local_degree}, {"marked", marked}}.dump() << '\n';
    return;
  }
  out << "orbifold: " << type << '\n';
  for (int k = 0; k < 4; ++k) {
    auto v = static_cast<PillowVertex>(k);
    out << "marked " << vertex_label(v) << ": " << p.local_degree(p.marked_vertex(v)) << '\n';
  }
  for (auto [d, count] : histogram) out << "degree " << d << ": " << count << " vertices\n";
}

void cmd_julia(const Options& o, std::ostream& out) {
  JuliaType t = julia_type(load_spec(o.spec_path));
  const char* name = t == JuliaType::WholeSphere ? "whole-sphere" : "sierpinski-carpet";
  if (o.json) out << json{{"julia", name}}.dump() << '\n';
  else out << "julia: " << name << '\n';
}

void cmd_pullback(const Options& o, std::ostream& out) {
  FlappedPillow p = build_pillow(load_spec(o.spec_path));
  ExtendedSlope x = need_slope(o);
  Pullback pb = pull_back(p, x, pull_opts(o));
  ExtendedSlope mu = slope_map(p, x, pull_opts(o));
  Rational lambda = thurston_coefficient(p, x, pull_opts(o));
  if (o.json) {
    json comps = json::array();
    for (const auto& c : pb.components)
      comps.push_back({{"classification", c.classification.str()},
                       {"essential", c.classification.essential()},
                       {"slope", c.classification.essential() ? c.classification.slope.str() : "peripheral"},
                       {"holonomy", c.holonomy.str()},
                       {"degree", c.degree},
                       {"black_degree", c.black_degree},
                       {"chords", c.chords.size()},
                       {"flap_excursions", c.flap_excursions},
                       {"flap_interior", c.flap_interior}});
    out << json{{"slope", x.str()}, {"components", comps}, {"mu", mu.str()}, {"lambda", lambda.str()}}.dump() << '\n';
    return;
  }
  out << "component\tclass\tdegree\tchords\tflap_excursions\n";
  for (std::size_t k = 0; k < pb.components.size(); ++k) {
    const auto& c = pb.components[k];
    out << k << '\t' << c.classification.str() << '\t' << c.degree << '\t' << c.chords.size() << '\t'
        << c.flap_excursions << '\n';
  }
  out << "mu: " << mu.str() << '\n' << "lambda: " << lambda.str() << '\n';
}

void cmd_slope_map(const Options& o, std::ostream& out) {
  FlappedPillow p = build_pillow(load_spec(o.spec_path));
  ExtendedSlope x = need_slope(o);
  ExtendedSlope y = slope_map(p, x, pull_opts(o));
  if (o.json) out << json{{"slope", x.str()}, {"image", y.str()}}.dump() << '\n';
  else out << y.str() << '\n';
}

void cmd_lambda(const Options& o, std::ostream& out) {
  FlappedPillow p = build_pillow(load_spec(o.spec_path));
  ExtendedSlope x = need_slope(o);
  Rational l = thurston_coefficient(p, x, pull_opts(o));
  if (o.json) out << json{{"slope", x.str()}, {"lambda", l.str()}}.dump() << '\n';
  else out << "lambda = " << l.str() << '\n';
}

void cmd_obstruction(const Options& o, std::ostream& out, std::ostream& err) {
  FlappedPillow p = build_pillow(load_spec(o.spec_path));
  ExtendedSlope x = need_slope(o);
  ObstructionReport r = is_obstruction(p, x, pull_opts(o));
  if (!r.hyperbolic) err << "warning: parabolic orbifold, the obstruction criterion does not apply\n";
  if (o.json) {
    out << json{{"slope", x.str()},
                {"obstruction", r.obstruction},
                {"invariant", r.invariant},
                {"lambda", r.lambda.str()},
                {"hyperbolic", r.hyperbolic}}
               .dump()
        << '\n';
    return;
  }
  out << "obstruction: " << (r.obstruction ? "true" : "false") << ", lambda = " << r.lambda.str() << '\n';
}

void cmd_eliminate(const Options& o, std::ostream& out) {
  FlappedPillow p = build_pillow(load_spec(o.spec_path));
  PillowSpec spec = eliminate_obstruction(p, need_slope(o), pull_opts(o));
  out << spec_to_json(spec) << '\n';
}

void cmd_annuli(const Options& o, std::ostream& out) {
  FlappedPillow p = build_pillow(load_spec(o.spec_path));
  AnnulusOptions opts;
  opts.budget = o.budget;
  opts.pullback = pull_opts(o);
  AnnulusDecomposition dec = annulus_components(p, need_slope(o), opts);
  if (o.json) {
    json a = json::array();
    for (const auto& an : dec.annuli) {
      json j{{"id", an.id},
             {"classification", an.classification.str()},
             {"essential", an.essential},
             {"degree", an.degree},
             {"circuit_length", an.circuit_length},
             {"circuit_length_prime", an.circuit_length_prime},
             {"budget_exceeded", an.circuit_budget_exceeded}};
      j["essential_circuit_length"] = an.essential_circuit_length ? json(*an.essential_circuit_length) : json();
      j["stick_free_essential_circuit_length"] =
          an.stick_free_essential_circuit_length ? json(*an.stick_free_essential_circuit_length) : json();
      a.push_back(j);
    }
    out << json{{"slope", dec.arcs.slope.str()}, {"graph_edges", dec.graph.edges.size()}, {"annuli", a}}.dump() << '\n';
    return;
  }
  out << "id\tclass\tdegree\tcircuit_length\tcircuit_length_prime\tessential_circuit_length\tstick_free\n";
  for (const auto& an : dec.annuli)
    out << an.id << '\t' << an.classification.str() << '\t' << an.degree << '\t' << an.circuit_length << '\t'
        << an.circuit_length_prime << '\t' << opt_int(an.essential_circuit_length, an.circuit_budget_exceeded) << '\t'
        << opt_int(an.stick_free_essential_circuit_length, an.circuit_budget_exceeded) << '\n';
}

void cmd_orbit(const Options& o, std::ostream& out) {
  FlappedPillow p = build_pillow(load_spec(o.spec_path));
  OrbitRecord r = orbit(p, need_slope(o), o.max_steps, pull_opts(o));
  if (o.json) out << orbit_json(r).dump() << '\n';
  else out << r.str();
}

void cmd_fixed(const Options& o, std::ostream& out) {
  FlappedPillow p = build_pillow(load_spec(o.spec_path));
  auto xs = fixed_slopes(p, o.bound > 0 ? o.bound : 8, pull_opts(o));
  if (o.json) {
    out << json{{"bound", o.bound > 0 ? o.bound : 8}, {"fixed", slope_list(xs)}}.dump() << '\n';
    return;
  }
  for (const auto& x : xs) out << x.str() << '\n';
}

void cmd_scan(const Options& o, std::ostream& out) {
  PillowSpec spec = load_spec(o.spec_path);
  FlappedPillow p = build_pillow(spec);
  SlopeMap mu(p, pull_opts(o));
  const int bound = o.bound > 0 ? o.bound : 30;
  auto vs = monotonicity_scan(mu, bound);
  const char* mode = certified_mode(spec) ? "certified" : "observational";
  if (o.json) {
    out << json{{"mode", mode}, {"bound", bound}, {"violations", violations_json(vs)}}.dump() << '\n';
    return;
  }
  out << "mode: " << mode << '\n';
  for (const auto& v : vs) out << v.x.str() << '\t' << v.image.str() << '\t' << violation_name(v.kind) << '\n';
  out << "violations: " << vs.size() << '\n';
}

void cmd_attractor(const Options& o, std::ostream& out) {
  FlappedPillow p = build_pillow(load_spec(o.spec_path));
  SlopeMap mu(p, pull_opts(o));
  const int bound = o.bound > 0 ? o.bound : 30;
  AttractorOptions ao;
  ao.samples = o.samples;
  AttractorReport r = attractor(mu, bound, bound, ao);
  if (o.json) {
    json orbits = json::array();
    for (const auto& rec : r.sample_orbits) orbits.push_back(orbit_json(rec));
    out << json{{"mode", r.certified_mode ? "certified" : "observational"},
                {"scanned_bound", r.scanned_bound},
                {"fixed_slopes", slope_list(r.fixed_slopes)},
                {"monotonicity_violations", violations_json(r.monotonicity_violations)},
                {"orbit_targets", slope_list(r.orbit_targets)},
                {"samples_landed", r.samples_landed},
                {"attractor_certified", r.attractor_certified},
                {"sample_orbits", orbits}}
               .dump()
        << '\n';
    return;
  }
  out << r.str();
}

void cmd_relation(const Options& o, std::ostream& out) {
  PillowSpec spec = load_spec(o.spec_path);
  if (!is_b3(spec)) throw InputError("relation3x3: spec must be the 3x3 map with flaps E:h:2:0 and E:v:0:3");
  FlappedPillow p = build_pillow(spec);
  SlopeMap mu(p, pull_opts(o));
  RelationReport r = relation_check_3x3(mu, o.bound > 0 ? o.bound : 40);
  if (o.json) {
    out << json{{"bound", r.bound},
                {"checked", r.checked},
                {"skipped", r.skipped},
                {"counterexamples", r.counterexamples},
                {"passed", r.passed()}}
               .dump()
        << '\n';
    return;
  }
  out << "bound: " << r.bound << '\n' << "checked: " << r.checked << '\n' << "skipped: " << r.skipped << '\n';
  for (const auto& c : r.counterexamples) out << "counterexample: " << c << '\n';
  out << "relation: " << (r.passed() ? "pass" : "fail") << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curve pullbacks and slope maps of flapped pillows", "flapped"};
  app.require_subcommand(1);
  Options o;
  std::vector<std::string> positional;
  std::string chosen;

  auto add = [&](const std::string& name, const std::string& help, std::initializer_list<std::string> flags) {
    CLI::App* sub = app.add_subcommand(name, help);
    for (const auto& f : flags) {
      if (f == "spec") sub->add_option("--spec", o.spec_path, "pillow spec file (JSON)");
      if (f == "slope") sub->add_option("--slope", o.slope, "slope r/s, 1/0 or peripheral");
      if (f == "bound") sub->add_option("--bound", o.bound, "complexity bound");
      if (f == "max") sub->add_option("--max", o.max_steps, "maximum orbit steps");
      if (f == "samples") sub->add_option("--samples", o.samples, "number of sampled orbits");
      if (f == "budget") sub->add_option("--budget", o.budget, "walk extension budget of the circuit search");
    }
    if (name != "edges" && name != "julia" && name != "eliminate")
      sub->add_option("--denominator", o.denominator, "offset denominator of the canonical curve (default 2n+1)");
    sub->add_flag("--json", o.json, "structured output");
    sub->callback([&chosen, name] { chosen = name; });
    return sub;
  };
  add("build", "build and validate the flapped pillow", {"spec"});
  CLI::App* edges = add("edges", "list 1-edge addresses of the n-subdivided pillow", {});
  edges->add_option("--n", o.n, "subdivision n");
  edges->add_option("size", positional, "subdivision n");
  add("orbifold", "orbifold type and local degrees", {"spec"});
  add("julia", "Julia set type", {"spec"});
  add("pullback", "pullback components of a slope", {"spec", "slope"});
  add("slope-map", "slope of the essential pullbacks", {"spec", "slope"});
  add("lambda", "Thurston coefficient", {"spec", "slope"});
  add("obstruction", "Thurston obstruction test", {"spec", "slope"});
  add("eliminate", "add flaps that remove an obstruction", {"spec", "slope"});
  add("annuli", "annulus decomposition and circuit lengths", {"spec", "slope", "budget"});
  add("orbit", "orbit of a slope under the slope map", {"spec", "slope", "max"});
  add("fixed", "fixed slopes up to a complexity bound", {"spec", "bound"});
  add("scan", "complexity monotonicity scan", {"spec", "bound"});
  add("attractor", "global curve attractor report", {"spec", "bound", "samples"});
  add("relation3x3", "check the 3x3 slope relation", {"spec", "bound"});

  std::ostringstream help_out, help_err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    err << help_err.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (chosen == "build") cmd_build(o, out);
    else if (chosen == "edges") cmd_edges(o, positional, out);
    else if (chosen == "orbifold") cmd_orbifold(o, out);
    else if (chosen == "julia") cmd_julia(o, out);
    else if (chosen == "pullback") cmd_pullback(o, out);
    else if (chosen == "slope-map") cmd_slope_map(o, out);
    else if (chosen == "lambda") cmd_lambda(o, out);
    else if (chosen == "obstruction") cmd_obstruction(o, out, err);
    else if (chosen == "eliminate") cmd_eliminate(o, out);
    else if (chosen == "annuli") cmd_annuli(o, out);
    else if (chosen == "orbit") cmd_orbit(o, out);
    else if (chosen == "fixed") cmd_fixed(o, out);
    else if (chosen == "scan") cmd_scan(o, out);
    else if (chosen == "attractor") cmd_attractor(o, out);
    else if (chosen == "relation3x3") cmd_relation(o, out);
    else throw InputError("unknown command");
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace flapped::cli
