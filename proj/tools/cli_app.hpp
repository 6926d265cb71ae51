#ifndef ECLCS_TOOLS_CLI_APP_HPP
#define ECLCS_TOOLS_CLI_APP_HPP

#include <cstdint>
#include <cstdio>
#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "eclcs/eclcs.hpp"

namespace eclcs::cli {

// Exit codes: 0 success/agree, 1 oracle disagreement, 2 runtime error,
// 64 usage error.
inline constexpr int kExitAgree = 0;
inline constexpr int kExitDisagree = 1;
inline constexpr int kExitRuntime = 2;
inline constexpr int kExitUsage = 64;

struct InstanceFlags {
  std::string x_file, x_str;
  std::string y_file, y_str;
  std::string constraints_file;
  std::vector<std::string> p_strs;
  CLI::Option* x_file_opt = nullptr;
  CLI::Option* y_file_opt = nullptr;
  CLI::Option* constraints_opt = nullptr;
};

inline void add_instance_flags(CLI::App* cmd, InstanceFlags& f) {
  auto* gx = cmd->add_option_group("input X");
  f.x_file_opt = gx->add_option(
      "--x", f.x_file, "file holding X (bytes; one trailing newline stripped)");
  gx->add_option("--x-str", f.x_str, "X given inline");
  gx->require_option(1);
  auto* gy = cmd->add_option_group("input Y");
  f.y_file_opt = gy->add_option(
      "--y", f.y_file, "file holding Y (bytes; one trailing newline stripped)");
  gy->add_option("--y-str", f.y_str, "Y given inline");
  gy->require_option(1);
  f.constraints_opt = cmd->add_option(
      "--constraints", f.constraints_file,
      "file holding the patterns, one per line (blank lines rejected)");
  auto* op = cmd->add_option("--p-str", f.p_strs,
                             "constraint pattern given inline (repeatable)");
  f.constraints_opt->excludes(op);
  op->excludes(f.constraints_opt);
}

inline Instance load_instance(const InstanceFlags& f) {
  Instance inst;
  std::string src;
  if (f.x_file_opt->count() > 0) {
    inst.x = load_sequence(f.x_file);
    src += "x=" + f.x_file;
  } else {
    inst.x = f.x_str;
    src += "x=inline";
  }
  if (f.y_file_opt->count() > 0) {
    inst.y = load_sequence(f.y_file);
    src += " y=" + f.y_file;
  } else {
    inst.y = f.y_str;
    src += " y=inline";
  }
  if (f.constraints_opt->count() > 0) {
    inst.patterns = load_patterns(f.constraints_file);
    src += " p=" + f.constraints_file;
  } else {
    inst.patterns = f.p_strs;
    src += " p=inline";
  }
  inst.source = std::move(src);
  return inst;
}

inline int run_solve(const InstanceFlags& f, bool length_only, bool json_mode,
                     const std::string& dump_automaton_path,
                     const std::string& dump_table_path, std::ostream& out) {
  const Instance inst = load_instance(f);
  SolveOptions opts;
  opts.length_only = length_only;
  opts.want_witness = !length_only;
  const SolveResult res = solve(inst.x, inst.y, inst.patterns, opts);

  if (!dump_automaton_path.empty() || !dump_table_path.empty()) {
    const ConstraintSet cs = normalize(inst.patterns);
    const ExclusionAutomaton a = build_automaton(cs);
    if (!dump_automaton_path.empty()) {
      write_file_bytes(dump_automaton_path,
                       automaton_to_json(a).dump(2) + "\n");
    }
    if (!dump_table_path.empty()) {
      const DPTable tab = solve_table(inst.x, inst.y, a);
      write_file_bytes(dump_table_path, table_to_json(tab, a).dump(2) + "\n");
    }
  }

  if (json_mode) {
    out << solve_result_to_json(res).dump(
               2, ' ', false, nlohmann::json::error_handler_t::replace)
        << "\n";
  } else {
    out << "length: " << res.length << "\n";
    if (res.lcs.has_value()) out << "lcs: " << *res.lcs << "\n";
  }
  return kExitAgree;
}

inline int finish_oracle_report(std::uint32_t solver_len,
                                std::uint32_t oracle_len, std::ostream& out) {
  const bool agree = solver_len == oracle_len;
  out << "solver: " << solver_len << ", oracle: " << oracle_len << ", "
      << (agree ? "AGREE" : "DISAGREE") << "\n";
  return agree ? kExitAgree : kExitDisagree;
}

inline int run_oracle(const InstanceFlags& f, std::ostream& out) {
  const Instance inst = load_instance(f);
  SolveOptions opts;
  opts.length_only = true;
  opts.want_witness = false;
  const SolveResult res = solve(inst.x, inst.y, inst.patterns, opts);
  const OracleResult ora =
      oracle_lcs_excluding(inst.x, inst.y, inst.patterns);
  return finish_oracle_report(res.length, ora.length, out);
}

inline int run_gen(const GenParams& params, const std::string& out_prefix) {
  const Instance inst = generate_instance(params);
  write_file_bytes(out_prefix + ".x", inst.x + "\n");
  write_file_bytes(out_prefix + ".y", inst.y + "\n");
  std::string pfile;
  for (const std::string& pat : inst.patterns) {
    pfile += pat;
    pfile += '\n';
  }
  write_file_bytes(out_prefix + ".p", pfile);
  return kExitAgree;
}

inline std::vector<std::size_t> parse_size_list(const std::string& csv) {
  std::vector<std::size_t> out;
  if (csv.empty()) return out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const std::size_t comma = csv.find(',', pos);
    const std::string tok =
        csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid size list entry: '" + tok + "'");
    }
    if (used != tok.size()) {
      throw std::invalid_argument("invalid size list entry: '" + tok + "'");
    }
    out.push_back(static_cast<std::size_t>(v));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline std::vector<std::pair<std::size_t, std::size_t>> parse_sizes(
    const std::string& csv) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (csv.empty()) return out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const std::size_t comma = csv.find(',', pos);
    const std::string tok =
        csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
    const std::size_t x = tok.find('x');
    if (x == std::string::npos) {
      throw std::invalid_argument("size entries take the form NxM: '" + tok +
                                  "'");
    }
    const auto n = parse_size_list(tok.substr(0, x));
    const auto m = parse_size_list(tok.substr(x + 1));
    if (n.size() != 1 || m.size() != 1) {
      throw std::invalid_argument("size entries take the form NxM: '" + tok +
                                  "'");
    }
    out.emplace_back(n[0], m[0]);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline int run_bench(const std::string& sizes_csv, const std::string& r_csv,
                     std::uint64_t seed, std::ostream& out) {
  const auto sizes = parse_sizes(sizes_csv);
  const auto rs = parse_size_list(r_csv);
  out << "n,m,r,s,elapsed_ms\n";
  std::uint64_t row = 0;
  for (const auto& [n, m] : sizes) {
    for (const std::size_t r : rs) {
      const std::uint64_t derived = seed + (++row) * 0x9E3779B97F4A7C15ull;
      const std::vector<std::string> patterns =
          generate_bench_patterns(derived, r);
      GenParams gp;
      gp.seed = derived;
      gp.n = n;
      gp.m = m;
      gp.alphabet = 26;
      const Instance inst = generate_instance(gp);
      const ConstraintSet cs = normalize(patterns);
      const ExclusionAutomaton a = build_automaton(cs);
      const auto t0 = std::chrono::steady_clock::now();
      const auto [len, st] = solve_length_rolling(inst.x, inst.y, a);
      const auto t1 = std::chrono::steady_clock::now();
      (void)len;
      (void)st;
      const double ms =
          std::chrono::duration<double, std::milli>(t1 - t0).count();
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", ms);
      out << n << "," << m << "," << r << "," << a.state_count() << "," << buf
          << "\n";
    }
  }
  return kExitAgree;
}

inline int run_cli(int argc, const char* const* argv,
                   std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
  CLI::App app{
      "longest common subsequence of X and Y that excludes every constraint "
      "pattern as a substring"};
  app.require_subcommand(1);

  InstanceFlags solve_flags;
  bool length_only = false;
  bool json_mode = false;
  std::string dump_automaton_path, dump_table_path;
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "solve an instance and print the result");
  add_instance_flags(solve_cmd, solve_flags);
  solve_cmd->add_flag("--length-only", length_only,
                      "skip witness reconstruction (rolling DP layers)");
  solve_cmd->add_flag("--json", json_mode, "emit the result as JSON");
  solve_cmd->add_option("--dump-automaton", dump_automaton_path,
                        "write the automaton debug JSON to this path");
  solve_cmd->add_option("--dump-table", dump_table_path,
                        "write the DP cube debug JSON to this path (unstable)");

  InstanceFlags oracle_flags;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "run solver and brute-force oracle, report AGREE/DISAGREE");
  add_instance_flags(oracle_cmd, oracle_flags);

  GenParams gen_params;
  std::string out_prefix;
  CLI::App* gen_cmd = app.add_subcommand(
      "gen", "generate a random instance deterministically from a seed");
  gen_cmd->add_option("--seed", gen_params.seed, "RNG seed");
  gen_cmd->add_option("--n", gen_params.n, "length of X");
  gen_cmd->add_option("--m", gen_params.m, "length of Y");
  gen_cmd
      ->add_option("--alphabet", gen_params.alphabet,
                   "alphabet size (lowercase letters)")
      ->check(CLI::Range(1, 26));
  gen_cmd->add_option("--num-patterns", gen_params.num_patterns,
                      "number of constraint patterns");
  gen_cmd
      ->add_option("--max-pattern-len", gen_params.max_pattern_len,
                   "pattern lengths are uniform in [1, this]")
      ->check(CLI::Range(1, 1 << 20));
  gen_cmd->add_option("--out-prefix", out_prefix,
                      "write <prefix>.x, <prefix>.y, <prefix>.p")
      ->required();

  std::string sizes_csv, r_csv;
  std::uint64_t bench_seed = 0;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "time length-only solves over generated instances, CSV output");
  bench_cmd->add_option("--sizes", sizes_csv,
                        "comma-separated NxM pairs, e.g. 500x500,1000x500");
  bench_cmd->add_option("--r", r_csv,
                        "comma-separated total constraint lengths");
  bench_cmd->add_option("--seed", bench_seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) {
      return run_solve(solve_flags, length_only, json_mode,
                       dump_automaton_path, dump_table_path, out);
    }
    if (oracle_cmd->parsed()) return run_oracle(oracle_flags, out);
    if (gen_cmd->parsed()) return run_gen(gen_params, out_prefix);
    if (bench_cmd->parsed()) return run_bench(sizes_csv, r_csv, bench_seed, out);
  } catch (const EmptyConstraint& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const InstanceTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitRuntime;
}

}  // namespace eclcs::cli

#endif  // ECLCS_TOOLS_CLI_APP_HPP
