#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = flapped::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string spec(const char* name) { return std::string(FLAPPED_DATA_DIR) + "/" + name + ".json"; }

}  // namespace

TEST(Cli, OrbitPrintsOneLinePerStep) {
  Result r = run({"orbit", "--spec", spec("b3"), "--slope", "1/9", "--max", "20"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0\t1/9\n1\t3/25\n2\t3/23\n3\t1/7\n4\t3/19\n5\t3/17\n6\t1/5\n7\t1/5\n");
}

TEST(Cli, FixedSlopes) {
  Result r = run({"fixed", "--spec", spec("corner2"), "--bound", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0/1\n1/0\n-1/1\n1/1\n");
}

TEST(Cli, Obstruction) {
  Result r = run({"obstruction", "--spec", spec("hflaponly"), "--slope", "0/1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "obstruction: true, lambda = 1\n");
}

TEST(Cli, EdgesTakesN) {
  Result a = run({"edges", "2"});
  Result b = run({"edges", "--n", "2"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 16);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"orbit", "--spec", "/nonexistent.json", "--slope", "1/2"}).code, 2);
  EXPECT_EQ(run({"orbit", "--spec", spec("b3"), "--slope", "1/0/2"}).code, 2);
  EXPECT_EQ(run({"orbit", "--spec", spec("b3")}).code, 2);
  EXPECT_EQ(run({"edges", "1"}).code, 2);
  EXPECT_EQ(run({"julia", "--spec", spec("plain2")}).code, 2);
  EXPECT_EQ(run({"eliminate", "--spec", spec("plain2"), "--slope", "0/1"}).code, 2);
  EXPECT_EQ(run({"relation3x3", "--spec", spec("corner2")}).code, 2);
  Result e = run({"orbit", "--spec", spec("b3"), "--slope", "x"});
  EXPECT_NE(e.err.find("error"), std::string::npos);
}

TEST(Cli, EveryCommandIsDeterministic) {
  const std::vector<std::vector<std::string>> commands = {
      {"build", "--spec", spec("corner2")},
      {"edges", "3"},
      {"orbifold", "--spec", spec("b3")},
      {"julia", "--spec", spec("b3")},
      {"pullback", "--spec", spec("b3"), "--slope", "2/5"},
      {"slope-map", "--spec", spec("b3"), "--slope", "2/5"},
      {"lambda", "--spec", spec("b3"), "--slope", "2/5"},
      {"obstruction", "--spec", spec("corner2"), "--slope", "1/1"},
      {"eliminate", "--spec", spec("hflaponly"), "--slope", "0/1"},
      {"annuli", "--spec", spec("corner2"), "--slope", "1/1"},
      {"orbit", "--spec", spec("b3"), "--slope", "2/9"},
      {"fixed", "--spec", spec("corner2"), "--bound", "5"},
      {"scan", "--spec", spec("corner2"), "--bound", "10"},
      {"attractor", "--spec", spec("corner2"), "--bound", "10", "--samples", "10"},
      {"relation3x3", "--spec", spec("b3"), "--bound", "6"},
  };
  for (auto args : commands) {
    Result a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << args[0] << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << args[0];
    EXPECT_FALSE(a.out.empty()) << args[0];
    if (args[0] == "eliminate") continue;  // already JSON
    args.push_back("--json");
    Result j = run(args);
    EXPECT_EQ(j.code, 0) << args[0];
    auto doc = nlohmann::json::parse(j.out);
    EXPECT_EQ(nlohmann::json::parse(doc.dump()), doc);
  }
}

TEST(Cli, JsonFields) {
  auto orbit = nlohmann::json::parse(run({"orbit", "--spec", spec("b3"), "--slope", "1/9", "--json"}).out);
  EXPECT_EQ(orbit["terminal"], "fixed");
  EXPECT_EQ(orbit["fixed"], "1/5");
  EXPECT_EQ(orbit["states"].size(), 8u);
  auto ob = nlohmann::json::parse(run({"obstruction", "--spec", spec("hflaponly"), "--slope", "0/1", "--json"}).out);
  EXPECT_EQ(ob["obstruction"], true);
  EXPECT_EQ(ob["lambda"], "1");
  auto att = nlohmann::json::parse(run({"attractor", "--spec", spec("corner2"), "--bound", "12", "--json"}).out);
  EXPECT_EQ(att["attractor_certified"], true);
  auto an = nlohmann::json::parse(run({"annuli", "--spec", spec("plain2"), "--slope", "0/1", "--json"}).out);
  ASSERT_EQ(an["annuli"].size(), 2u);
  EXPECT_EQ(an["annuli"][0]["circuit_length"], 4);
}

TEST(Cli, EliminatedSpecParses) {
  Result r = run({"eliminate", "--spec", spec("hflaponly"), "--slope", "0/1"});
  ASSERT_EQ(r.code, 0);
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["n"], 2);
  EXPECT_GE(doc["flaps"].size(), 2u);
}
