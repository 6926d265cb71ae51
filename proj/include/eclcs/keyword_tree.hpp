#ifndef ECLCS_KEYWORD_TREE_HPP
#define ECLCS_KEYWORD_TREE_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eclcs/errors.hpp"

namespace eclcs {

using NodeId = std::uint32_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

// Keyword tree (trie) of a pattern set. Nodes are numbered in preorder with
// children visited in increasing byte order, so node 0 is always the root and
// every node's id is greater than its parent's.
class KeywordTree {
 public:
  struct Node {
    NodeId parent = kNoNode;
    unsigned char edge = 0;        // byte on the edge from parent
    std::uint32_t depth = 0;       // label length
    NodeId pre = 0;                // failure link: deepest proper-suffix node
    std::int32_t pattern_end = -1; // index of the pattern ending here, or -1
    std::vector<std::pair<unsigned char, NodeId>> children; // byte-sorted
  };

  explicit KeywordTree(std::span<const std::string> patterns) {
    nodes_.emplace_back(); // root, label epsilon
    ends_.assign(patterns.size(), kNoNode);
    // Insert in byte-sorted order so that sequential node allocation yields
    // preorder numbering with byte-sorted children.
    std::vector<std::size_t> order(patterns.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return patterns[a] < patterns[b];
    });
    for (std::size_t idx : order) {
      const std::string& p = patterns[idx];
      if (p.empty()) throw EmptyConstraint();
      NodeId v = 0;
      for (char ch : p) {
        auto c = static_cast<unsigned char>(ch);
        NodeId next = child(v, c);
        if (next == kNoNode) {
          next = static_cast<NodeId>(nodes_.size());
          nodes_.push_back(Node{v, c, nodes_[v].depth + 1, 0, -1, {}});
          nodes_[v].children.emplace_back(c, next);
        }
        v = next;
      }
      nodes_[v].pattern_end = static_cast<std::int32_t>(idx);
      ends_[idx] = v;
    }
  }

  std::size_t size() const { return nodes_.size(); }

  const Node& node(NodeId v) const { return nodes_[v]; }
  Node& node(NodeId v) { return nodes_[v]; }

  bool is_leaf(NodeId v) const { return nodes_[v].children.empty(); }

  NodeId child(NodeId v, unsigned char c) const {
    const auto& kids = nodes_[v].children;
    auto it = std::lower_bound(
        kids.begin(), kids.end(), c,
        [](const std::pair<unsigned char, NodeId>& e, unsigned char key) {
          return e.first < key;
        });
    if (it != kids.end() && it->first == c) return it->second;
    return kNoNode;
  }

  // Node at which pattern idx (original indexing) ends.
  NodeId end_of(std::size_t idx) const { return ends_[idx]; }

  std::string label(NodeId v) const {
    std::string out(nodes_[v].depth, '\0');
    for (NodeId u = v; u != 0; u = nodes_[u].parent) {
      out[nodes_[u].depth - 1] = static_cast<char>(nodes_[u].edge);
    }
    return out;
  }

  // Nodes in increasing depth order (root first). Preorder ids are not
  // breadth-first, so failure-link propagation needs this order explicitly.
  std::vector<NodeId> by_depth() const {
    std::vector<NodeId> order(nodes_.size());
    for (NodeId v = 0; v < order.size(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
      return nodes_[a].depth < nodes_[b].depth;
    });
    return order;
  }

 private:
  std::vector<Node> nodes_;
  std::vector<NodeId> ends_;
};

// Failure links: pre(v) is the deepest node whose label is a proper suffix of
// v's label. pre(root) = root.
inline void compute_failure(KeywordTree& tree) {
  for (NodeId v : tree.by_depth()) {
    if (v == 0) {
      tree.node(v).pre = 0;
      continue;
    }
    const NodeId parent = tree.node(v).parent;
    const unsigned char c = tree.node(v).edge;
    if (parent == 0) {
      tree.node(v).pre = 0;
      continue;
    }
    NodeId u = tree.node(parent).pre;
    for (;;) {
      NodeId next = tree.child(u, c);
      if (next != kNoNode && next != v) {
        tree.node(v).pre = next;
        break;
      }
      if (u == 0) {
        tree.node(v).pre = 0;
        break;
      }
      u = tree.node(u).pre;
    }
  }
}

// Indices of patterns that contain another pattern of the set as a proper
// substring. A pattern is contained in another exactly when some node on the
// root-to-end path (other than the end itself, excluding the root) either is
// the end of a different pattern or reaches a pattern end via failure links.
// Requires failure links.
inline std::vector<std::size_t> detect_superstrings(const KeywordTree& tree) {
  const std::size_t n = tree.size();
  std::vector<char> chain_hit(n, 0); // some proper suffix of label is a pattern
  for (NodeId v : tree.by_depth()) {
    if (v == 0) continue;
    const NodeId p = tree.node(v).pre;
    chain_hit[v] = static_cast<char>(tree.node(p).pattern_end >= 0 ||
                                     chain_hit[p]);
  }
  std::vector<std::size_t> removed;
  std::vector<std::pair<NodeId, std::size_t>> ends;
  for (NodeId v = 0; v < n; ++v) {
    if (tree.node(v).pattern_end >= 0) {
      ends.emplace_back(v, static_cast<std::size_t>(tree.node(v).pattern_end));
    }
  }
  for (auto [end, idx] : ends) {
    bool contains_other = false;
    for (NodeId v = end; v != 0; v = tree.node(v).parent) {
      if (chain_hit[v] || (tree.node(v).pattern_end >= 0 && v != end)) {
        contains_other = true;
        break;
      }
    }
    if (contains_other) removed.push_back(idx);
  }
  std::sort(removed.begin(), removed.end());
  return removed;
}

// sigma(S): deepest node of the tree whose label is a suffix of S. Definitional
// scan over all nodes; quadratic, intended for small inputs and verification.
inline NodeId sigma_scan(const KeywordTree& tree, std::string_view s) {
  NodeId best = 0;
  std::uint32_t best_depth = 0;
  for (NodeId v = 1; v < tree.size(); ++v) {
    const std::uint32_t d = tree.node(v).depth;
    if (d <= best_depth || d > s.size()) continue;
    if (tree.label(v) == s.substr(s.size() - d)) {
      best = v;
      best_depth = d;
    }
  }
  return best;
}

}  // namespace eclcs

#endif  // ECLCS_KEYWORD_TREE_HPP
