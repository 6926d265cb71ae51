#ifndef ECLCS_AUTOMATON_HPP
#define ECLCS_AUTOMATON_HPP

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "eclcs/constraint_set.hpp"
#include "eclcs/keyword_tree.hpp"

namespace eclcs {

using StateId = std::uint32_t;

// Transition target meaning the extended string contains a full pattern.
inline constexpr StateId kMatch = std::numeric_limits<StateId>::max();

// Deterministic automaton over the nonleaf nodes of the keyword tree. State k
// is the deepest tree node whose label is a suffix of the text read so far;
// reading a byte that completes a pattern yields kMatch. States are numbered
// 0..s-1 in tree preorder, state 0 being the root.
//
// Requires a normalized pattern set: under normalization every pattern ends at
// a leaf and no failure chain of a nonleaf node passes through a leaf, so the
// nonleaf nodes are closed under transitions short of a match.
class ExclusionAutomaton {
 public:
  ExclusionAutomaton(const ConstraintSet& cs, const KeywordTree& tree)
      : patterns_(cs.patterns) {
    // Nonleaf states keep tree preorder; root stays a state even when it has
    // no children (empty pattern set).
    std::vector<StateId> state_of(tree.size(), kMatch);
    for (NodeId v = 0; v < tree.size(); ++v) {
      if (v == 0 || !tree.is_leaf(v)) {
        state_of[v] = static_cast<StateId>(labels_.size());
        labels_.push_back(tree.label(v));
        node_of_.push_back(v);
      }
    }
    const std::size_t s = labels_.size();

    pre_.resize(s);
    for (std::size_t k = 0; k < s; ++k) {
      const NodeId f = tree.node(node_of_[k]).pre;
      assert(state_of[f] != kMatch);
      pre_[k] = state_of[f];
    }

    for (const std::string& p : patterns_) {
      for (char ch : p) mark_alphabet(static_cast<unsigned char>(ch));
    }
    std::vector<unsigned char> alpha;
    for (unsigned c = 0; c < 256; ++c) {
      if (in_alphabet_[c]) alpha.push_back(static_cast<unsigned char>(c));
    }
    col_of_.fill(kNoColumn);
    for (std::size_t j = 0; j < alpha.size(); ++j) col_of_[alpha[j]] = j;
    alphabet_.assign(alpha.begin(), alpha.end());

    // lambda(k, c) = sigma(label(k) + c), with kMatch when the extension ends
    // a pattern. Filled in depth order: a failure link points to a strictly
    // shallower state (never to a later preorder sibling), so the fallback
    // entry is always final before it is read.
    std::vector<StateId> fill_order(s);
    for (std::size_t k = 0; k < s; ++k) {
      fill_order[k] = static_cast<StateId>(k);
    }
    std::stable_sort(fill_order.begin(), fill_order.end(),
                     [&](StateId lhs, StateId rhs) {
                       return tree.node(node_of_[lhs]).depth <
                              tree.node(node_of_[rhs]).depth;
                     });
    table_.assign(alphabet_.size() * s, 0);
    for (const StateId k : fill_order) {
      for (std::size_t j = 0; j < alphabet_.size(); ++j) {
        const unsigned char c = alphabet_[j];
        const NodeId child = tree.child(node_of_[k], c);
        StateId t;
        if (child != kNoNode) {
          t = tree.is_leaf(child) ? kMatch : state_of[child];
        } else if (k == 0) {
          t = 0;
        } else {
          t = table_[j * s + pre_[k]];
        }
        table_[j * s + k] = t;
      }
    }
  }

  std::size_t state_count() const { return labels_.size(); }

  const std::string& state_label(StateId k) const { return labels_[k]; }

  StateId state_pre(StateId k) const { return pre_[k]; }

  NodeId state_node(StateId k) const { return node_of_[k]; }

  const std::vector<unsigned char>& alphabet() const { return alphabet_; }

  const std::vector<std::string>& patterns() const { return patterns_; }

  bool in_alphabet(unsigned char c) const { return in_alphabet_[c]; }

  // lambda(k, c) via the precomputed table. Bytes outside the pattern
  // alphabet occur in no pattern, so they reset to the root.
  StateId sigma_step(StateId k, unsigned char c) const {
    const std::size_t j = col_of_[c];
    if (j == kNoColumn) return 0;
    return table_[j * state_count() + k];
  }

  // Same function computed by walking failure links; no table lookup.
  StateId sigma_step_walk(StateId k, unsigned char c) const {
    if (!in_alphabet_[c]) return 0;
    // Definitional: sigma(label(k) + c) is found by following failure links
    // until a child on c exists.
    for (;;) {
      const StateId t = child_state(k, c);
      if (t != kNoChild) return t;
      if (k == 0) return 0;
      k = pre_[k];
    }
  }

  // sigma of a whole string, stepping through the table from the root.
  // Returns kMatch as soon as a pattern occurs, without reading further.
  StateId sigma_string(std::string_view s) const {
    StateId k = 0;
    for (char ch : s) {
      k = sigma_step(k, static_cast<unsigned char>(ch));
      if (k == kMatch) return kMatch;
    }
    return k;
  }

  // Raw table access for dumps: column-major, entry (k, j) of lambda.
  StateId table_entry(StateId k, std::size_t j) const {
    return table_[j * state_count() + k];
  }

  // Column of the lambda table for byte c, s entries, or nullptr when c is
  // outside the pattern alphabet (every transition resets to the root).
  const StateId* column_ptr(unsigned char c) const {
    const std::size_t j = col_of_[c];
    if (j == kNoColumn) return nullptr;
    return table_.data() + j * state_count();
  }

 private:
  static constexpr std::size_t kNoColumn = std::numeric_limits<std::size_t>::max();
  static constexpr StateId kNoChild = kMatch - 1;

  void mark_alphabet(unsigned char c) { in_alphabet_[c] = true; }

  // Child of state k on byte c within the state set: kMatch when the child is
  // a leaf, kNoChild when absent.
  StateId child_state(StateId k, unsigned char c) const {
    // Recover the child from labels: a state t is the child when its label is
    // label(k) + c. Leaves are not states, so pattern ends are checked
    // directly against the stored patterns.
    const std::string want = labels_[k] + static_cast<char>(c);
    for (const std::string& p : patterns_) {
      if (p == want) return kMatch;
    }
    for (StateId t = static_cast<StateId>(k + 1); t < state_count(); ++t) {
      if (labels_[t] == want) return t;
    }
    return kNoChild;
  }

  std::vector<std::string> patterns_;
  std::vector<std::string> labels_;
  std::vector<StateId> pre_;
  std::vector<NodeId> node_of_;
  std::vector<unsigned char> alphabet_;
  std::array<bool, 256> in_alphabet_{};
  std::array<std::size_t, 256> col_of_{};
  std::vector<StateId> table_; // column-major: table_[j * s + k]
};

// Normalizes, builds the keyword tree with failure links, and derives the
// transition table.
inline ExclusionAutomaton build_automaton(const ConstraintSet& cs) {
  KeywordTree tree(cs.patterns);
  compute_failure(tree);
  return ExclusionAutomaton(cs, tree);
}

}  // namespace eclcs

#endif  // ECLCS_AUTOMATON_HPP
