#ifndef ECLCS_INSTANCE_HPP
#define ECLCS_INSTANCE_HPP

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eclcs/errors.hpp"

namespace eclcs {

struct Instance {
  std::string x;
  std::string y;
  std::vector<std::string> patterns;
  std::string source;  // file paths or "inline"/"generated" provenance
};

inline std::string read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw std::runtime_error("cannot read file: " + path);
  return std::move(buf).str();
}

// Sequence files are raw bytes with at most one trailing newline stripped.
inline std::string load_sequence(const std::string& path) {
  std::string data = read_file_bytes(path);
  if (!data.empty() && data.back() == '\n') data.pop_back();
  return data;
}

// Pattern files are newline-separated, one pattern per line. A final newline
// is allowed; any other blank line would denote an empty pattern.
inline std::vector<std::string> load_patterns(const std::string& path) {
  const std::string data = read_file_bytes(path);
  if (data.empty()) return {};
  std::vector<std::string> parts;
  std::string cur;
  for (char c : data) {
    if (c == '\n') {
      parts.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!data.empty() && data.back() != '\n') parts.push_back(std::move(cur));
  for (const std::string& p : parts) {
    if (p.empty()) throw EmptyConstraint();
  }
  return parts;
}

inline void write_file_bytes(const std::string& path,
                             const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("cannot write file: " + path);
}

struct GenParams {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  unsigned alphabet = 4;          // lowercase letters a.. (1..26)
  std::size_t num_patterns = 0;
  std::size_t max_pattern_len = 3;
};

// Deterministic generator: uniform characters over the first `alphabet`
// lowercase letters, uniform pattern lengths in [1, max_pattern_len]. Draw
// order is X, then Y, then each pattern (length, then characters), so the
// same seed always produces byte-identical output.
inline Instance generate_instance(const GenParams& p) {
  if (p.alphabet < 1 || p.alphabet > 26) {
    throw std::invalid_argument("alphabet size must be in [1, 26]");
  }
  if (p.num_patterns > 0 && p.max_pattern_len < 1) {
    throw std::invalid_argument("max pattern length must be at least 1");
  }
  std::mt19937_64 rng(p.seed);
  const auto next_char = [&rng, &p]() {
    return static_cast<char>('a' + rng() % p.alphabet);
  };
  Instance inst;
  inst.x.reserve(p.n);
  for (std::size_t i = 0; i < p.n; ++i) inst.x.push_back(next_char());
  inst.y.reserve(p.m);
  for (std::size_t j = 0; j < p.m; ++j) inst.y.push_back(next_char());
  for (std::size_t t = 0; t < p.num_patterns; ++t) {
    const std::size_t len = 1 + rng() % p.max_pattern_len;
    std::string pat;
    pat.reserve(len);
    for (std::size_t u = 0; u < len; ++u) pat.push_back(next_char());
    inst.patterns.push_back(std::move(pat));
  }
  inst.source = "generated(seed=" + std::to_string(p.seed) + ")";
  return inst;
}

// Constraint sets for benchmarking with total length exactly r. All patterns
// share one length (equal-length distinct strings are never substrings of one
// another, so normalization keeps all of them and r is exact). The first
// characters encode the pattern index, making the patterns distinct and, for
// up to 26 patterns, giving disjoint trie branches so the state count s grows
// linearly with r.
inline std::vector<std::string> generate_bench_patterns(std::uint64_t seed,
                                                        std::size_t r,
                                                        std::size_t piece = 8) {
  if (r == 0) return {};
  std::size_t len = 1;
  for (std::size_t cand = std::min(piece, r); cand >= 1; --cand) {
    if (r % cand == 0) {
      len = cand;
      break;
    }
  }
  const std::size_t d = r / len;
  const std::size_t digits = std::min<std::size_t>(len, 3);
  std::size_t capacity = 1;
  for (std::size_t u = 0; u < digits; ++u) capacity *= 26;
  if (d > capacity) {
    throw std::invalid_argument(
        "bench constraint total length " + std::to_string(r) +
        " is not realizable with distinct patterns of length " +
        std::to_string(len));
  }
  std::mt19937_64 rng(seed);
  std::vector<std::string> patterns;
  patterns.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::string pat(len, 'a');
    std::size_t rest = i;
    for (std::size_t u = 0; u < digits; ++u) {
      pat[u] = static_cast<char>('a' + rest % 26);
      rest /= 26;
    }
    for (std::size_t u = digits; u < len; ++u) {
      pat[u] = static_cast<char>('a' + rng() % 26);
    }
    patterns.push_back(std::move(pat));
  }
  return patterns;
}

}  // namespace eclcs

#endif  // ECLCS_INSTANCE_HPP
