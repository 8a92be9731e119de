#include "support.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using nlohmann::json;
using rsdl::test::corpus_path;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run rsdl_run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = rsdl::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p.string();
}

const json* find_proven(const json& ext, const std::string& lit, const std::string& tag) {
  for (const auto& p : ext["proven"])
    if (p["literal"] == lit && p["tag"] == tag) return &p;
  return nullptr;
}

}  // namespace

TEST_CASE("check exit codes") {
  CHECK(rsdl_run({"check", corpus_path("vending.rsdl")}).code == 0);

  auto bad = rsdl_run({"check", corpus_path("mixed_nesting.rsdl")});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("mixed_nesting.rsdl:4:9: mixed nesting unsupported") != std::string::npos);

  auto missing = rsdl_run({"check", "/nonexistent/nosuch.rsdl"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("cannot read") != std::string::npos);

  CHECK(rsdl_run({"check", "-"}, "r1: a => b. r1 > r1.").code == 1);
  CHECK(rsdl_run({"frobnicate"}).code == 1);
}

TEST_CASE("enumerate vending as JSON") {
  auto r = rsdl_run({"enumerate", corpus_path("vending.rsdl")});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["theory"] == "vending");
  CHECK(j["config"]["head_variant"] == "per-literal");
  CHECK(j["config"]["max_steps"] == 1000);
  REQUIRE(j["extensions"].size() == 1);
  const auto& e = j["extensions"][0];
  const json* cola = find_proven(e, "cola", "+partial");
  REQUIRE(cola);
  CHECK((*cola)["count"] == 1);
  CHECK((*cola)["consumed_count"] == 0);
  const json* dollar = find_proven(e, "dollar", "+Delta");
  REQUIRE(dollar);
  CHECK((*dollar)["consumed_count"] == 1);
  CHECK(e["cyclic"] == false);
  CHECK(e["inconsistent"] == false);
  CHECK_FALSE(e.contains("trace"));

  CHECK(rsdl_run({"enumerate", corpus_path("vending.rsdl")}).out == r.out);

  auto traced = json::parse(rsdl_run({"enumerate", "--trace", corpus_path("vending.rsdl")}).out);
  CHECK_FALSE(traced["extensions"][0]["trace"].empty());
}

TEST_CASE("head variant flag") {
  auto whole = json::parse(rsdl_run({"enumerate", "--head-variant", "whole", corpus_path("multiset_head.rsdl")}).out);
  auto per = json::parse(rsdl_run({"enumerate", corpus_path("multiset_head.rsdl")}).out);
  REQUIRE(whole["extensions"].size() == 1);
  REQUIRE(per["extensions"].size() == 1);
  CHECK(whole["config"]["head_variant"] == "whole");
  CHECK_FALSE(find_proven(whole["extensions"][0], "b", "+partial"));
  CHECK_FALSE(find_proven(whole["extensions"][0], "d", "+partial"));
  CHECK(find_proven(per["extensions"][0], "b", "+partial"));
  CHECK(find_proven(per["extensions"][0], "d", "+partial"));
  CHECK_FALSE(find_proven(per["extensions"][0], "c", "+partial"));
}

TEST_CASE("empty input has one empty extension") {
  auto r = rsdl_run({"enumerate"}, "");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["theory"] == "stdin");
  REQUIRE(j["extensions"].size() == 1);
  CHECK(j["extensions"][0]["proven"].empty());
  CHECK(j["extensions"][0]["refuted"].empty());
}

TEST_CASE("derive prints a trace") {
  auto r = rsdl_run({"derive", "--format", "text", corpus_path("vending.rsdl")});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("+∂ cola via r1, consumed: [step 1 (+Δ dollar)]") != std::string::npos);

  auto team = rsdl_run({"derive", "--format", "text", corpus_path("team_defeater.rsdl")});
  REQUIRE(team.code == 0);
  CHECK(team.out.find("+∂ d via r0, consumed: [step 2 (+Δ b)]") != std::string::npos);
  CHECK(team.out.find("+∂ e via r1, consumed: [step 1 (+Δ a)]") != std::string::npos);

  auto j = json::parse(rsdl_run({"derive", "--format", "json", corpus_path("vending.rsdl")}).out);
  REQUIRE(j["extensions"].size() == 1);
  CHECK_FALSE(j["extensions"][0]["trace"].empty());
}

TEST_CASE("rank") {
  auto r = rsdl_run({"rank", "--format", "text", corpus_path("energy.rsdl"), corpus_path("energy.costs")});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("#1 cost 3", 0) == 0);
  CHECK(r.out.find("#2 cost 5") != std::string::npos);

  auto unit = rsdl_run({"rank", "--format", "text", corpus_path("energy.rsdl")});
  REQUIRE(unit.code == 0);
  CHECK(unit.out.rfind("#1 cost 2", 0) == 0);

  auto neg = rsdl_run({"rank", corpus_path("energy.rsdl"), temp_file("rsdl_neg.costs", "gas -1\n")});
  CHECK(neg.code == 1);
  CHECK(rsdl_run({"rank", corpus_path("energy.rsdl"), "/nonexistent/x.costs"}).code == 2);

  auto goal = json::parse(rsdl_run({"rank", "--goal", "nosuch", corpus_path("energy.rsdl")}).out);
  CHECK(goal["extensions"].empty());
}

TEST_CASE("explain") {
  auto cola = rsdl_run({"explain", corpus_path("vending.rsdl"), "cola"});
  REQUIRE(cola.code == 0);
  CHECK(cola.out.find("+∂ in 1/1 extensions") != std::string::npos);

  auto p = rsdl_run({"explain", corpus_path("ambiguity.rsdl"), "p"});
  REQUIRE(p.code == 0);
  CHECK(p.out.find("blocked by σ-applicable r2") != std::string::npos);

  auto j = json::parse(rsdl_run({"explain", "--format", "json", corpus_path("ambiguity.rsdl"), "p"}).out);
  CHECK(j["literal"] == "p");
  REQUIRE(j["tags"].size() == 5);
  CHECK(j["tags"][3]["tag"] == "-partial");
  CHECK(j["tags"][3]["blocked_by"] == json::array({"r2"}));

  CHECK(rsdl_run({"explain", corpus_path("vending.rsdl"), "nosuch"}).code == 1);
}

TEST_CASE("strict inconsistency exits 3") {
  auto r = rsdl_run({"enumerate"}, "fact a. fact b. s1: a -> c. s2: b -> ~c.");
  CHECK(r.code == 3);
  auto j = json::parse(r.out);
  CHECK(j["extensions"][0]["inconsistent"] == true);
}

TEST_CASE("RSDL_MAX_STEPS sets the default budget") {
  ::setenv("RSDL_MAX_STEPS", "5", 1);
  auto r = rsdl_run({"enumerate"}, "fact a. r: a => a.");
  auto bad = rsdl_run({"enumerate"}, "");
  ::setenv("RSDL_MAX_STEPS", "zero", 1);
  auto invalid = rsdl_run({"enumerate"}, "");
  ::unsetenv("RSDL_MAX_STEPS");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["config"]["max_steps"] == 5);
  CHECK(j["extensions"][0]["cyclic"] == true);
  CHECK(bad.code == 0);
  CHECK(invalid.code == 1);

  auto flag = json::parse(rsdl_run({"enumerate", "--max-steps", "7"}, "").out);
  CHECK(flag["config"]["max_steps"] == 7);
}
