#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace pyrt::cli {

// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kFailed = 1,  // verification or benchmark failure
  kUsage = 2,
  kIo = 3,      // I/O, parse or resource error
};

struct RouteOptions {
  std::string graph;
  std::string perm = "id";
  std::string algo;
  std::string out;  // empty: do not write a trace file
};

struct IntRange {
  int lo = 0;
  int hi = 0;
};

// "a..b" or a single integer.
std::optional<IntRange> parse_range(std::string_view text);

struct BenchOptions {
  IntRange m{2, 6};
  IntRange d{1, 2};
  int trials = 100;
  std::uint64_t seed = 0;
  std::string csv;  // empty: CSV goes to `out`, the summary to `err`
};

// Seed of one benchmark trial:
// mix64(seed ^ mix64((m << 48) | (d << 32) | trial)).
std::uint64_t trial_seed(std::uint64_t seed, int m, int d, int trial);

int cmd_route(const RouteOptions& options, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& trace_path, std::ostream& out,
               std::ostream& err);
int cmd_oracle(const std::string& graph, const std::optional<std::string>& perm,
               std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);
int cmd_info(const std::string& graph, std::ostream& out, std::ostream& err);

}  // namespace pyrt::cli
