#ifndef ECLCS_CONSTRAINT_SET_HPP
#define ECLCS_CONSTRAINT_SET_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "eclcs/errors.hpp"
#include "eclcs/keyword_tree.hpp"

namespace eclcs {

struct RemovedConstraint {
  std::string pattern;
  std::string reason; // "duplicate" or "superstring"
};

// Pattern set after normalization: no duplicates, no pattern containing
// another as a substring. Removing duplicates and superstrings preserves the
// excluded language, since a string avoiding p avoids every superstring of p.
struct ConstraintSet {
  std::vector<std::string> patterns; // surviving patterns, input order
  std::size_t d = 0;                 // number of surviving patterns
  std::size_t r = 0;                 // total length of surviving patterns
  std::vector<RemovedConstraint> removed; // duplicates first, then superstrings
};

inline ConstraintSet normalize(std::span<const std::string> raw) {
  for (const std::string& p : raw) {
    if (p.empty()) throw EmptyConstraint();
  }
  ConstraintSet cs;

  // Duplicate removal keeps the first occurrence of each value.
  std::vector<std::size_t> order(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (raw[a] != raw[b]) return raw[a] < raw[b];
    return a < b;
  });
  std::vector<char> dup(raw.size(), 0);
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (raw[order[i]] == raw[order[i - 1]]) dup[order[i]] = 1;
  }
  std::vector<std::string> unique;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (dup[i]) {
      cs.removed.push_back({raw[i], "duplicate"});
    } else {
      unique.push_back(raw[i]);
    }
  }

  KeywordTree tree(unique);
  compute_failure(tree);
  std::vector<char> super(unique.size(), 0);
  for (std::size_t idx : detect_superstrings(tree)) super[idx] = 1;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    if (super[i]) {
      cs.removed.push_back({unique[i], "superstring"});
    } else {
      cs.patterns.push_back(unique[i]);
    }
  }

  cs.d = cs.patterns.size();
  for (const std::string& p : cs.patterns) cs.r += p.size();
  return cs;
}

}  // namespace eclcs

#endif  // ECLCS_CONSTRAINT_SET_HPP
