#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include "eclcs/automaton.hpp"
#include "eclcs/oracle.hpp"
#include "support/test_rng.hpp"

using eclcs::build_automaton;
using eclcs::ConstraintSet;
using eclcs::ExclusionAutomaton;
using eclcs::kMatch;
using eclcs::normalize;
using eclcs::StateId;

namespace {

ExclusionAutomaton make(const std::vector<std::string>& raw) {
  return build_automaton(normalize(raw));
}

// Expected transition per the sigma definition, computed with the naive
// suffix scan: a full pattern means MATCH, any other result is a state label.
StateId expected_transition(const ExclusionAutomaton& a, StateId k,
                            unsigned char c) {
  std::string extended = a.state_label(k);
  extended.push_back(static_cast<char>(c));
  const std::string suffix = eclcs::naive_sigma(extended, a.patterns());
  for (const std::string& p : a.patterns()) {
    if (p == suffix) return kMatch;
  }
  for (StateId t = 0; t < a.state_count(); ++t) {
    if (a.state_label(t) == suffix) return t;
  }
  FAIL("naive sigma produced a non-state label");
  return 0;
}

}  // namespace

TEST_CASE("states of {aab, ba} include the root") {
  const ExclusionAutomaton a = make({"aab", "ba"});
  REQUIRE(a.state_count() == 4);
  CHECK(a.state_label(0) == "");
  CHECK(a.state_label(1) == "a");
  CHECK(a.state_label(2) == "aa");
  CHECK(a.state_label(3) == "b");
  CHECK(a.state_pre(1) == 0);
  CHECK(a.state_pre(2) == 1);
  CHECK(a.state_pre(3) == 0);
}

TEST_CASE("lambda table of {aab, ba}") {
  const ExclusionAutomaton a = make({"aab", "ba"});
  CHECK(a.sigma_step(2, 'b') == kMatch);
  CHECK(a.sigma_step(3, 'a') == kMatch);
  CHECK(a.sigma_step(0, 'a') == 1);
  CHECK(a.sigma_step(1, 'a') == 2);
  CHECK(a.sigma_step(2, 'a') == 2);
  CHECK(a.sigma_step(1, 'b') == 3);
  CHECK(a.sigma_step(3, 'b') == 3);
  CHECK(a.sigma_step(0, 'b') == 3);
}

TEST_CASE("characters outside the pattern alphabet reset to the root") {
  const ExclusionAutomaton a = make({"aab", "ba"});
  for (StateId k = 0; k < a.state_count(); ++k) {
    CHECK(a.sigma_step(k, 'z') == 0);
    CHECK(a.sigma_step_walk(k, 'z') == 0);
  }
  CHECK(a.alphabet() == std::vector<unsigned char>{'a', 'b'});
}

TEST_CASE("sigma over whole strings") {
  const ExclusionAutomaton a = make({"aab", "ba"});
  CHECK(a.sigma_string("") == 0);
  CHECK(a.sigma_string("abb") == 3);
  CHECK(a.sigma_string("aab") == kMatch);
  CHECK(a.sigma_string("xyaa") == 2);
}

TEST_CASE("degenerate automaton for an empty constraint set") {
  const ExclusionAutomaton a = make({});
  REQUIRE(a.state_count() == 1);
  CHECK(a.alphabet().empty());
  CHECK(a.sigma_string("anything") == 0);
}

TEST_CASE("MATCH iff some pattern occurs as a substring") {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned alphabet = 1 + rng() % 3;
    const auto raw =
        eclcs::testsupport::random_patterns(rng, 4, 3, alphabet);
    const ConstraintSet cs = normalize(raw);
    const ExclusionAutomaton a = build_automaton(cs);
    const std::string s =
        eclcs::testsupport::random_string(rng, 12, alphabet);
    const bool matched = a.sigma_string(s) == kMatch;
    CHECK(matched == eclcs::contains_any_substring(s, cs.patterns));
  }
}

TEST_CASE("table, walk, and naive sigma agree everywhere") {
  std::mt19937_64 rng(92);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned alphabet = 1 + rng() % 5;
    const auto raw =
        eclcs::testsupport::random_patterns(rng, 8, 5, alphabet);
    const ExclusionAutomaton a = make(raw);
    std::vector<unsigned char> chars = a.alphabet();
    chars.push_back('x');
    chars.push_back('y');
    chars.push_back('z');
    for (StateId k = 0; k < a.state_count(); ++k) {
      for (const unsigned char c : chars) {
        const StateId via_table = a.sigma_step(k, c);
        CHECK(via_table == a.sigma_step_walk(k, c));
        if (a.in_alphabet(c)) {
          CHECK(via_table == expected_transition(a, k, c));
        } else {
          CHECK(via_table == 0);
        }
      }
    }
  }
}

TEST_CASE("single-pattern automaton over one letter") {
  const ExclusionAutomaton a = make({"aaa"});
  REQUIRE(a.state_count() == 3);
  CHECK(a.sigma_step(0, 'a') == 1);
  CHECK(a.sigma_step(1, 'a') == 2);
  CHECK(a.sigma_step(2, 'a') == kMatch);
}
