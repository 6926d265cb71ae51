#ifndef ECLCS_ORACLE_HPP
#define ECLCS_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eclcs/errors.hpp"

namespace eclcs {

// Brute-force reference implementations. Deliberately naive and structurally
// independent of the automaton and DP machinery; used only for verification.

inline constexpr std::size_t kOracleCap = 20;

struct OracleResult {
  std::uint32_t length = 0;
  std::vector<std::string> witnesses;  // all optimal strings, deduplicated
};

inline bool is_subsequence(std::string_view z, std::string_view s) {
  std::size_t i = 0;
  for (std::size_t j = 0; i < z.size() && j < s.size(); ++j) {
    if (z[i] == s[j]) ++i;
  }
  return i == z.size();
}

inline bool contains_any_substring(std::string_view s,
                                   std::span<const std::string> patterns) {
  for (const std::string& p : patterns) {
    if (p.size() > s.size()) continue;
    for (std::size_t off = 0; off + p.size() <= s.size(); ++off) {
      if (s.compare(off, p.size(), p) == 0) return true;
    }
  }
  return false;
}

// Longest suffix of s that is a prefix of some pattern; may be a full
// pattern, which the automaton layer interprets as MATCH.
inline std::string naive_sigma(std::string_view s,
                               std::span<const std::string> patterns) {
  for (std::size_t len = s.size(); len > 0; --len) {
    const std::string_view suffix = s.substr(s.size() - len);
    for (const std::string& p : patterns) {
      if (len <= p.size() && p.compare(0, len, suffix) == 0) {
        return std::string(suffix);
      }
    }
  }
  return std::string();
}

// Exhaustive search over all subsequences of the shorter input.
inline OracleResult oracle_lcs_excluding(std::string_view x,
                                         std::string_view y,
                                         std::span<const std::string> patterns) {
  std::string_view shorter = x, longer = y;
  if (shorter.size() > longer.size()) std::swap(shorter, longer);
  if (shorter.size() > kOracleCap) {
    throw InstanceTooLarge(shorter.size(), kOracleCap);
  }

  OracleResult res;
  std::string z;
  z.reserve(shorter.size());
  for (std::uint32_t mask = 0; mask < (1u << shorter.size()); ++mask) {
    z.clear();
    for (std::size_t i = 0; i < shorter.size(); ++i) {
      if (mask & (1u << i)) z.push_back(shorter[i]);
    }
    if (z.size() < res.length) continue;
    if (!is_subsequence(z, longer)) continue;
    if (contains_any_substring(z, patterns)) continue;
    if (z.size() > res.length) {
      res.length = static_cast<std::uint32_t>(z.size());
      res.witnesses.clear();
    }
    res.witnesses.push_back(z);
  }
  std::sort(res.witnesses.begin(), res.witnesses.end());
  res.witnesses.erase(
      std::unique(res.witnesses.begin(), res.witnesses.end()),
      res.witnesses.end());
  return res;
}

}  // namespace eclcs

#endif  // ECLCS_ORACLE_HPP
