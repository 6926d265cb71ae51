#ifndef ECLCS_JSON_DUMP_HPP
#define ECLCS_JSON_DUMP_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "eclcs/automaton.hpp"
#include "eclcs/solver.hpp"

namespace eclcs {

inline bool utf8_valid(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c0 = static_cast<unsigned char>(s[i]);
    if (c0 < 0x80) {
      ++i;
      continue;
    }
    std::size_t len;
    std::uint32_t cp;
    if ((c0 & 0xE0) == 0xC0) {
      len = 2;
      cp = c0 & 0x1Fu;
    } else if ((c0 & 0xF0) == 0xE0) {
      len = 3;
      cp = c0 & 0x0Fu;
    } else if ((c0 & 0xF8) == 0xF0) {
      len = 4;
      cp = c0 & 0x07u;
    } else {
      return false;
    }
    if (i + len > s.size()) return false;
    for (std::size_t k = 1; k < len; ++k) {
      const auto cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3Fu);
    }
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
        (len == 4 && cp < 0x10000)) {
      return false;  // overlong encoding
    }
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
    i += len;
  }
  return true;
}

inline std::string hex_encode(std::string_view s) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(2 * s.size());
  for (char ch : s) {
    const auto b = static_cast<unsigned char>(ch);
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xF]);
  }
  return out;
}

inline nlohmann::json solve_result_to_json(const SolveResult& res) {
  nlohmann::json j;
  j["length"] = res.length;
  if (res.lcs.has_value()) {
    j["lcs"] = *res.lcs;
    if (!utf8_valid(*res.lcs)) j["lcs_hex"] = hex_encode(*res.lcs);
  } else {
    j["lcs"] = nullptr;
  }
  j["terminal_state"] = res.terminal_state;
  nlohmann::json removed = nlohmann::json::array();
  for (const RemovedConstraint& rc : res.removed) {
    removed.push_back({{"pattern", rc.pattern}, {"reason", rc.reason}});
  }
  j["removed_constraints"] = std::move(removed);
  j["n"] = res.stats.n;
  j["m"] = res.stats.m;
  j["d"] = res.stats.d;
  j["r"] = res.stats.r;
  j["s"] = res.stats.s;
  j["elapsed_ms"] = res.stats.elapsed_ms;
  return j;
}

// Debug dump of the automaton: states with labels, failure links, and the
// lambda row over the pattern alphabet ("MATCH" for the match sentinel).
// Alphabet bytes are listed as integers so non-printable bytes survive.
inline nlohmann::json automaton_to_json(const ExclusionAutomaton& a) {
  nlohmann::json j;
  j["s"] = a.state_count();
  j["patterns"] = a.patterns();
  nlohmann::json alphabet = nlohmann::json::array();
  for (unsigned char c : a.alphabet()) alphabet.push_back(static_cast<int>(c));
  j["alphabet"] = std::move(alphabet);
  nlohmann::json states = nlohmann::json::array();
  for (StateId k = 0; k < a.state_count(); ++k) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t col = 0; col < a.alphabet().size(); ++col) {
      const StateId t = a.table_entry(k, col);
      if (t == kMatch) {
        row.push_back("MATCH");
      } else {
        row.push_back(t);
      }
    }
    states.push_back({{"id", k},
                      {"label", a.state_label(k)},
                      {"pre", a.state_pre(k)},
                      {"lambda", std::move(row)}});
  }
  j["states"] = std::move(states);
  return j;
}

// Unstable debug shape: the automaton dump extended with the full f cube,
// indexed f[i][j][k].
inline nlohmann::json table_to_json(const DPTable& tab,
                                    const ExclusionAutomaton& a) {
  nlohmann::json j = automaton_to_json(a);
  j["n"] = tab.n();
  j["m"] = tab.m();
  nlohmann::json cube = nlohmann::json::array();
  for (std::size_t i = 0; i <= tab.n(); ++i) {
    nlohmann::json plane = nlohmann::json::array();
    for (std::size_t jj = 0; jj <= tab.m(); ++jj) {
      nlohmann::json cell = nlohmann::json::array();
      for (std::size_t k = 0; k < tab.s(); ++k) {
        cell.push_back(tab.at(i, jj, k));
      }
      plane.push_back(std::move(cell));
    }
    cube.push_back(std::move(plane));
  }
  j["f"] = std::move(cube);
  return j;
}

}  // namespace eclcs

#endif  // ECLCS_JSON_DUMP_HPP
