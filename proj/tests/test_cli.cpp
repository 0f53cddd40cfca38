#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "../tools/cli.hpp"
#include "json.hpp"
#include "tinter/family_io.hpp"
#include "tinter/verify.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "tinter");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = tinter::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "tinter_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("bound") {
  auto r = invoke({"bound", "--n", "8,10", "--k", "4,4", "--t", "2"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["value"] == "3150");
  CHECK(j["optimal_distributions"] == Json::parse("[[2,0]]"));
  CHECK(j["hypotheses"]["thm1.2"] == false);
  CHECK(j["ratio_bound"]["ratio"] == "1/2");

  r = invoke({"bound", "--n", "6,6", "--profiles", "2,2;3,2", "--t", "1"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["value"] == "225");

  CHECK(invoke({"bound", "--n", "8,10", "--k", "4", "--t", "2"}).code == 2);
  CHECK(invoke({"bound", "--n", "8,10", "--k", "4,4", "--t", "9"}).code == 2);
  CHECK(invoke({"bound", "--n", "8,10", "--k", "4,4"}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"bound", "--n", "8,10", "--k", "4,4", "--t", "2", "--format", "table"}).code == 0);
}

TEST_CASE("search, enumerate, shift and verify round trip") {
  const auto space = scratch("space.txt");
  const auto star = scratch("star.txt");
  const auto witness = scratch("witness.txt");
  const auto shifted = scratch("shifted.txt");

  auto r = invoke({"enumerate", "--n", "4,4", "--k", "2,2", "--out", space.string()});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["size"] == "36");

  r = invoke({"enumerate", "--n", "4,4", "--k", "2,2", "--center", "5", "--out", star.string()});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["size"] == "18");

  r = invoke({"verify", "--mode", "star", "--in", star.string(), "--space", space.string(), "--t", "1"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["center"] == Json::parse("[5]"));
  r = invoke({"verify", "--mode", "t-intersecting", "--in", space.string(), "--t", "1"});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)["holds"] == false);

  r = invoke({"search", "--n", "4,4", "--k", "2,2", "--t", "1", "--witness", witness.string()});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["max_size"] == "18");
  CHECK(j["g"] == "18");
  const auto w = tinter::read_family_file(witness.string());
  CHECK(w.size() == 18);
  CHECK(tinter::is_t_intersecting(w, 1));

  r = invoke({"shift", "--in", star.string(), "--all", "--out", shifted.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("steps: ", 0) == 0);
  const auto s = tinter::read_family_file(shifted.string());
  CHECK(s.size() == 18);
  CHECK(s.contains(tinter::Subset{1, 2, 5, 6}));

  r = invoke({"shift", "--in", star.string(), "--part", "2"});
  CHECK(r.code == 0);
  CHECK(r.err.rfind("steps: ", 0) == 0);
  CHECK(r.out.rfind("ground: 4,4", 0) == 0);

  CHECK(invoke({"shift", "--in", star.string()}).code == 2);
  CHECK(invoke({"verify", "--mode", "t-intersecting", "--in", scratch("missing.txt").string(), "--t", "1"}).code == 2);

  r = invoke({"search", "--n", "6,6", "--profiles", "2,2;3,2", "--t", "1", "--shifted"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["max_size"] == "225");
}

TEST_CASE("verify preconditions and caps") {
  const auto odd = scratch("odd.txt");
  {
    std::ofstream f(odd);
    f << "ground: 6\n4,5,6\n";
  }
  auto r = invoke({"verify", "--mode", "lemma21ii", "--in", odd.string(), "--family-b", odd.string(), "--t", "1",
                   "--r", "3", "--s", "3"});
  CHECK(r.code == 2);
  CHECK(Json::parse(r.out).contains("hypothesis_violated"));

  CHECK(invoke({"search", "--n", "9", "--k", "4", "--t", "1", "--search-cap", "100"}).code == 3);
  CHECK(invoke({"enumerate", "--n", "9", "--k", "4", "--cap", "100"}).code == 3);
}

TEST_CASE("kneser") {
  auto r = invoke({"kneser", "--params", "4:2"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["connected"] == false);
  r = invoke({"kneser", "--params", "5:2,7:3"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["connected"] == true);
  CHECK(Json::parse(r.out)["vertices"] == "350");
  CHECK(invoke({"kneser", "--params", "3:2"}).code == 2);
  CHECK(invoke({"kneser", "--params", "5"}).code == 2);
}

TEST_CASE("repro subset") {
  const auto r = invoke({"repro", "--only", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS", 0) == 0);
}
