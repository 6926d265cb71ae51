#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <string>
#include <vector>

#include "eclcs/keyword_tree.hpp"
#include "support/test_rng.hpp"

using eclcs::KeywordTree;
using eclcs::NodeId;

namespace {

std::vector<std::string> all_labels(const KeywordTree& tree) {
  std::vector<std::string> out;
  for (NodeId v = 0; v < tree.size(); ++v) out.push_back(tree.label(v));
  return out;
}

// Longest proper suffix of label that is itself a node label.
NodeId naive_failure(const KeywordTree& tree, NodeId v) {
  std::map<std::string, NodeId> by_label;
  for (NodeId u = 0; u < tree.size(); ++u) by_label[tree.label(u)] = u;
  const std::string label = tree.label(v);
  for (std::size_t drop = 1; drop <= label.size(); ++drop) {
    const auto it = by_label.find(label.substr(drop));
    if (it != by_label.end()) return it->second;
  }
  return 0;
}

}  // namespace

TEST_CASE("preorder numbering of {aab, aba, ba}") {
  const std::vector<std::string> patterns = {"aab", "aba", "ba"};
  KeywordTree tree(patterns);
  REQUIRE(tree.size() == 8);
  const std::vector<std::string> expected = {"",   "a",  "aa", "aab",
                                             "ab", "aba", "b",  "ba"};
  CHECK(all_labels(tree) == expected);
  CHECK(tree.label(tree.end_of(0)) == "aab");
  CHECK(tree.label(tree.end_of(1)) == "aba");
  CHECK(tree.label(tree.end_of(2)) == "ba");
}

TEST_CASE("failure links of {aab, aba, ba}") {
  const std::vector<std::string> patterns = {"aab", "aba", "ba"};
  KeywordTree tree(patterns);
  compute_failure(tree);
  const std::vector<NodeId> expected = {0, 1, 4, 6, 7, 0, 1};
  for (NodeId v = 1; v < 8; ++v) {
    CHECK(tree.node(v).pre == expected[v - 1]);
  }
}

TEST_CASE("single one-character pattern") {
  const std::vector<std::string> patterns = {"a"};
  KeywordTree tree(patterns);
  REQUIRE(tree.size() == 2);
  CHECK(tree.is_leaf(1));
  CHECK(tree.node(1).pattern_end == 0);
}

TEST_CASE("tree shape for {aab, ba}") {
  const std::vector<std::string> patterns = {"aab", "ba"};
  KeywordTree tree(patterns);
  REQUIRE(tree.size() == 6);
  std::vector<std::string> nonleaf;
  for (NodeId v = 0; v < tree.size(); ++v) {
    if (!tree.is_leaf(v)) nonleaf.push_back(tree.label(v));
  }
  CHECK(nonleaf == std::vector<std::string>{"", "a", "aa", "b"});
}

TEST_CASE("empty pattern is rejected") {
  const std::vector<std::string> patterns = {"ab", ""};
  CHECK_THROWS_AS(KeywordTree(patterns), eclcs::EmptyConstraint);
}

TEST_CASE("structural invariants on random trees") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const auto patterns =
        eclcs::testsupport::random_patterns(rng, 6, 5, 1 + rng() % 4);
    KeywordTree tree(patterns);
    compute_failure(tree);
    for (NodeId v = 1; v < tree.size(); ++v) {
      const auto& node = tree.node(v);
      CHECK(node.parent < v);
      CHECK(node.depth == tree.node(node.parent).depth + 1);
      if (node.depth == 1) CHECK(node.pre == 0);
      for (std::size_t c = 1; c < node.children.size(); ++c) {
        CHECK(node.children[c - 1].first < node.children[c].first);
      }
    }
  }
}

TEST_CASE("failure links equal the naive longest-suffix scan") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const auto patterns =
        eclcs::testsupport::random_patterns(rng, 5, 5, 1 + rng() % 3);
    KeywordTree tree(patterns);
    compute_failure(tree);
    for (NodeId v = 1; v < tree.size(); ++v) {
      CHECK(tree.node(v).pre == naive_failure(tree, v));
    }
  }
}

TEST_CASE("sigma scan on the un-normalized {aab, aba, ba} tree") {
  const std::vector<std::string> patterns = {"aab", "aba", "ba"};
  KeywordTree tree(patterns);
  const NodeId v = sigma_scan(tree, "aabaaabb");
  CHECK(v == 6);
  CHECK(tree.label(v) == "b");
  CHECK(sigma_scan(tree, "") == 0);
  CHECK(tree.label(sigma_scan(tree, "xyaab")) == "aab");
}
