#ifndef ECLCS_SOLVER_HPP
#define ECLCS_SOLVER_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eclcs/automaton.hpp"
#include "eclcs/constraint_set.hpp"
#include "eclcs/errors.hpp"

namespace eclcs {

// f(i, j, k): length of the longest common subsequence of X[1:i] and Y[1:j]
// excluding P whose automaton state is k. Stored dense, state index fastest.
class DPTable {
 public:
  DPTable(std::size_t n, std::size_t m, std::size_t s)
      : n_(n), m_(m), s_(s), f_((n + 1) * (m + 1) * s, 0) {}

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  std::size_t s() const { return s_; }

  std::uint32_t at(std::size_t i, std::size_t j, std::size_t k) const {
    return f_[(i * (m_ + 1) + j) * s_ + k];
  }
  std::uint32_t& at(std::size_t i, std::size_t j, std::size_t k) {
    return f_[(i * (m_ + 1) + j) * s_ + k];
  }

  const std::uint32_t* cell(std::size_t i, std::size_t j) const {
    return f_.data() + (i * (m_ + 1) + j) * s_;
  }
  std::uint32_t* cell(std::size_t i, std::size_t j) {
    return f_.data() + (i * (m_ + 1) + j) * s_;
  }

 private:
  std::size_t n_, m_, s_;
  std::vector<std::uint32_t> f_;
};

namespace detail {

// One DP cell update. up/left/diag point at the s-wide neighbor cells; col is
// the lambda column of the matched character (null when the character is
// outside the pattern alphabet, where every transition goes to the root).
inline void fill_cell(std::uint32_t* cur, const std::uint32_t* up,
                      const std::uint32_t* left, const std::uint32_t* diag,
                      const StateId* col, std::size_t s) {
  for (std::size_t k = 0; k < s; ++k) {
    cur[k] = std::max(up[k], left[k]);
  }
  if (diag == nullptr) return;
  for (std::size_t k = 0; k < s; ++k) {
    const StateId t = col ? col[k] : 0;
    if (t == kMatch) continue;
    const std::uint32_t cand = diag[k] + 1;
    if (cand > cur[t]) cur[t] = cand;
  }
}

}  // namespace detail

inline DPTable solve_table(std::string_view x, std::string_view y,
                           const ExclusionAutomaton& a) {
  const std::size_t n = x.size(), m = y.size(), s = a.state_count();
  DPTable tab(n, m, s);
  for (std::size_t i = 1; i <= n; ++i) {
    const unsigned char xi = static_cast<unsigned char>(x[i - 1]);
    const StateId* col = a.column_ptr(xi);
    for (std::size_t j = 1; j <= m; ++j) {
      const bool match = xi == static_cast<unsigned char>(y[j - 1]);
      detail::fill_cell(tab.cell(i, j), tab.cell(i - 1, j), tab.cell(i, j - 1),
                        match ? tab.cell(i - 1, j - 1) : nullptr, col, s);
    }
  }
  return tab;
}

// Max of f(n, m, .) with the smallest state attaining it.
inline std::pair<std::uint32_t, StateId> table_max(const DPTable& tab) {
  std::uint32_t best = 0;
  StateId arg = 0;
  const std::uint32_t* last = tab.cell(tab.n(), tab.m());
  for (std::size_t k = 0; k < tab.s(); ++k) {
    if (last[k] > best) {
      best = last[k];
      arg = static_cast<StateId>(k);
    }
  }
  return {best, arg};
}

// Same recurrence keeping only rows i-1 and i; O(m*s) memory, no backtrace.
inline std::pair<std::uint32_t, StateId> solve_length_rolling(
    std::string_view x, std::string_view y, const ExclusionAutomaton& a) {
  const std::size_t n = x.size(), m = y.size(), s = a.state_count();
  std::vector<std::uint32_t> prev((m + 1) * s, 0), cur((m + 1) * s, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    const unsigned char xi = static_cast<unsigned char>(x[i - 1]);
    const StateId* col = a.column_ptr(xi);
    std::fill(cur.begin(), cur.begin() + s, 0);
    for (std::size_t j = 1; j <= m; ++j) {
      const bool match = xi == static_cast<unsigned char>(y[j - 1]);
      detail::fill_cell(&cur[j * s], &prev[j * s], &cur[(j - 1) * s],
                        match ? &prev[(j - 1) * s] : nullptr, col, s);
    }
    std::swap(prev, cur);
  }
  std::uint32_t best = 0;
  StateId arg = 0;
  for (std::size_t k = 0; k < s; ++k) {
    if (prev[m * s + k] > best) {
      best = prev[m * s + k];
      arg = static_cast<StateId>(k);
    }
  }
  return {best, arg};
}

// Reconstruct a witness for entry (i, j, k). Predecessor preference: the
// diagonal match branch with the smallest source state, then up, then left.
inline std::string backtrace(const DPTable& tab, std::string_view x,
                             std::string_view y, const ExclusionAutomaton& a,
                             std::size_t i, std::size_t j, StateId k) {
  const std::size_t s = tab.s();
  std::string out;
  while (tab.at(i, j, k) > 0) {
    const std::uint32_t v = tab.at(i, j, k);
    if (i == 0 || j == 0) throw InconsistentTable(i, j, k);
    const unsigned char xi = static_cast<unsigned char>(x[i - 1]);
    bool stepped = false;
    if (xi == static_cast<unsigned char>(y[j - 1])) {
      const StateId* col = a.column_ptr(xi);
      for (std::size_t q = 0; q < s; ++q) {
        const StateId t = col ? col[q] : 0;
        if (t == k && tab.at(i - 1, j - 1, q) == v - 1) {
          out.push_back(static_cast<char>(xi));
          --i;
          --j;
          k = static_cast<StateId>(q);
          stepped = true;
          break;
        }
      }
    }
    if (stepped) continue;
    if (tab.at(i - 1, j, k) == v) {
      --i;
    } else if (tab.at(i, j - 1, k) == v) {
      --j;
    } else {
      throw InconsistentTable(i, j, k);
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

struct SolveOptions {
  bool length_only = false;  // rolling layers, no witness
  bool want_witness = true;  // forces the full table even with length_only
};

struct SolveStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t d = 0;
  std::size_t r = 0;
  std::size_t s = 0;
  double elapsed_ms = 0.0;
};

struct SolveResult {
  std::uint32_t length = 0;
  std::optional<std::string> lcs;
  StateId terminal_state = 0;
  std::vector<RemovedConstraint> removed;
  SolveStats stats;
};

// Full pipeline: normalize, build the automaton, run the DP, optionally
// backtrace. With a witness the terminal state is the witness's own sigma
// state (always among the argmax states); otherwise the smallest argmax.
inline SolveResult solve(std::string_view x, std::string_view y,
                         std::span<const std::string> raw_patterns,
                         SolveOptions opts = {}) {
  constexpr std::size_t kMaxLen = std::size_t{1} << 31;
  if (x.size() >= kMaxLen) throw InstanceTooLarge(x.size(), kMaxLen - 1);
  if (y.size() >= kMaxLen) throw InstanceTooLarge(y.size(), kMaxLen - 1);

  const auto t0 = std::chrono::steady_clock::now();
  const ConstraintSet cs = normalize(raw_patterns);
  const ExclusionAutomaton a = build_automaton(cs);

  SolveResult res;
  res.removed = cs.removed;
  if (opts.want_witness) {
    const DPTable tab = solve_table(x, y, a);
    const auto [len, arg] = table_max(tab);
    std::string z = backtrace(tab, x, y, a, x.size(), y.size(), arg);
    res.length = len;
    res.terminal_state = a.sigma_string(z);
    res.lcs = std::move(z);
  } else if (opts.length_only) {
    const auto [len, arg] = solve_length_rolling(x, y, a);
    res.length = len;
    res.terminal_state = arg;
  } else {
    const DPTable tab = solve_table(x, y, a);
    const auto [len, arg] = table_max(tab);
    res.length = len;
    res.terminal_state = arg;
  }
  const auto t1 = std::chrono::steady_clock::now();

  res.stats.n = x.size();
  res.stats.m = y.size();
  res.stats.d = cs.d;
  res.stats.r = cs.r;
  res.stats.s = a.state_count();
  res.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  return res;
}

}  // namespace eclcs

#endif  // ECLCS_SOLVER_HPP
