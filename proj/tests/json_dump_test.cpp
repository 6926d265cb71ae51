#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eclcs/json_dump.hpp"
#include "eclcs/solver.hpp"

using eclcs::automaton_to_json;
using eclcs::build_automaton;
using eclcs::hex_encode;
using eclcs::normalize;
using eclcs::solve;
using eclcs::solve_result_to_json;
using eclcs::SolveOptions;
using eclcs::utf8_valid;
using nlohmann::json;

namespace {

std::set<std::string> key_set(const json& j) {
  std::set<std::string> keys;
  for (const auto& item : j.items()) keys.insert(item.key());
  return keys;
}

}  // namespace

TEST_CASE("solve result serializes with the documented key set") {
  const auto res = solve("aabb", "abab", std::vector<std::string>{"ab"});
  const json j = solve_result_to_json(res);
  const std::set<std::string> expected = {
      "length", "lcs",        "terminal_state", "removed_constraints",
      "n",      "m",          "d",              "r",
      "s",      "elapsed_ms"};
  CHECK(key_set(j) == expected);
  CHECK(j["length"] == 2);
  CHECK(j["lcs"].is_string());
  CHECK(j["removed_constraints"].is_array());
  CHECK(j["removed_constraints"].empty());
  CHECK(j["n"] == 4);
  CHECK(j["m"] == 4);
  CHECK(j["d"] == 1);
  CHECK(j["r"] == 2);
  CHECK(j["s"] == 2);
  CHECK(j["elapsed_ms"].is_number());
}

TEST_CASE("lcs is null in length-only mode") {
  SolveOptions opts;
  opts.length_only = true;
  opts.want_witness = false;
  const auto res = solve("ab", "ab", std::vector<std::string>{}, opts);
  const json j = solve_result_to_json(res);
  CHECK(j["lcs"].is_null());
  CHECK(key_set(j).count("lcs_hex") == 0);
}

TEST_CASE("non-UTF-8 witnesses get a hex companion") {
  const std::string bytes = "\xff\xfe";
  const auto res = solve(bytes, bytes, std::vector<std::string>{});
  REQUIRE(res.lcs.has_value());
  const json j = solve_result_to_json(res);
  REQUIRE(key_set(j).count("lcs_hex") == 1);
  CHECK(j["lcs_hex"] == "fffe");
  // Dumping stays lossy but legal with the replace handler.
  const std::string text =
      j.dump(2, ' ', false, json::error_handler_t::replace);
  CHECK_FALSE(text.empty());
}

TEST_CASE("removed constraints appear in the report") {
  const auto res =
      solve("ab", "ab", std::vector<std::string>{"aab", "aba", "ba"});
  const json j = solve_result_to_json(res);
  REQUIRE(j["removed_constraints"].size() == 1);
  CHECK(j["removed_constraints"][0]["pattern"] == "aba");
  CHECK(j["removed_constraints"][0]["reason"] == "superstring");
}

TEST_CASE("emitted JSON round-trips") {
  const auto res = solve("abcba", "bacbc", std::vector<std::string>{"bc"});
  const json j = solve_result_to_json(res);
  const json reparsed = json::parse(j.dump());
  CHECK(reparsed == j);
  CHECK(reparsed.dump() == j.dump());
}

TEST_CASE("utf8 validation") {
  CHECK(utf8_valid(""));
  CHECK(utf8_valid("plain ascii"));
  CHECK(utf8_valid("caf\xc3\xa9"));
  CHECK(utf8_valid("\xf0\x9f\x98\x80"));
  CHECK_FALSE(utf8_valid("\xc3"));
  CHECK_FALSE(utf8_valid("\xc0\x80"));
  CHECK_FALSE(utf8_valid("\xed\xa0\x80"));
  CHECK_FALSE(utf8_valid("\xf4\x90\x80\x80"));
  CHECK_FALSE(utf8_valid("\x80"));
}

TEST_CASE("hex encoding") {
  CHECK(hex_encode("") == "");
  CHECK(hex_encode("ab") == "6162");
  CHECK(hex_encode(std::string_view("\x00\xff", 2)) == "00ff");
}

TEST_CASE("automaton debug dump shape") {
  const auto a = build_automaton(normalize(std::vector<std::string>{
      "aab", "ba"}));
  const json j = automaton_to_json(a);
  CHECK(j["s"] == 4);
  CHECK(j["patterns"] == json::array({"aab", "ba"}));
  CHECK(j["alphabet"] == json::array({97, 98}));
  REQUIRE(j["states"].size() == 4);
  CHECK(j["states"][0]["label"] == "");
  CHECK(j["states"][3]["label"] == "b");
  CHECK(j["states"][2]["lambda"][1] == "MATCH");
  CHECK(j["states"][3]["lambda"][0] == "MATCH");
  CHECK(j["states"][1]["lambda"][0] == 2);
  CHECK(j["states"][2]["pre"] == 1);
}

TEST_CASE("table debug dump carries the cube") {
  const auto a = build_automaton(normalize(std::vector<std::string>{"ab"}));
  const auto tab = eclcs::solve_table("ab", "ab", a);
  const json j = eclcs::table_to_json(tab, a);
  CHECK(j["n"] == 2);
  CHECK(j["m"] == 2);
  REQUIRE(j["f"].size() == 3);
  REQUIRE(j["f"][0].size() == 3);
  REQUIRE(j["f"][0][0].size() == 2);
  CHECK(j["f"][0][0][0] == 0);
  CHECK(j["f"][2][2][0].get<int>() + j["f"][2][2][1].get<int>() >= 1);
}
