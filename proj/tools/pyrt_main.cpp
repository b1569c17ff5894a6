#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pyrt/cli.hpp"

namespace {

pyrt::cli::IntRange range_or_throw(const std::string& text, const char* flag) {
  const auto r = pyrt::cli::parse_range(text);
  if (!r) {
    throw CLI::ValidationError(flag, "expected <int> or <lo>..<hi>, got '" +
                                         text + "'");
  }
  return *r;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace pyrt::cli;

  CLI::App app{"Permutation routing via matchings on pyramids and meshes"};
  app.require_subcommand(1);

  RouteOptions route;
  auto* route_cmd = app.add_subcommand("route", "Route a permutation and print the step count");
  route_cmd->add_option("--graph", route.graph, "Graph spec, e.g. multigrid:m=3,d=2")->required();
  route_cmd->add_option("--perm", route.perm, "id | rev | seed:<u64> | cycles:(a b)(c d e) | array:[...]");
  route_cmd->add_option("--algo", route.algo, "pyramid | mesh | path | oddeven")->required();
  route_cmd->add_option("--out", route.out, "Write the trace JSON here");

  std::string trace_path;
  auto* verify_cmd = app.add_subcommand("verify", "Replay and check a trace file");
  verify_cmd->add_option("trace", trace_path, "Trace JSON file")->required();

  std::string oracle_graph;
  std::optional<std::string> oracle_perm;
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "Exact routing time (with --perm) or routing number by BFS");
  oracle_cmd->add_option("--graph", oracle_graph, "Graph spec")->required();
  oracle_cmd->add_option("--perm", oracle_perm, "Permutation descriptor");

  BenchOptions bench;
  std::string bench_m = "2..6";
  std::string bench_d = "1..2";
  auto* bench_cmd = app.add_subcommand("bench", "Route seeded random permutations on multi-grids and emit CSV");
  bench_cmd->add_option("--m", bench_m, "Level range, e.g. 2..6");
  bench_cmd->add_option("--d", bench_d, "Dimension range, e.g. 1..2");
  bench_cmd->add_option("--trials", bench.trials, "Trials per (m, d)");
  bench_cmd->add_option("--seed", bench.seed, "Base seed");
  bench_cmd->add_option("--csv", bench.csv, "CSV output path (default: stdout)");

  std::string info_graph;
  auto* info_cmd = app.add_subcommand("info", "Print N, level sizes and phi_k for a graph spec");
  info_cmd->add_option("--graph", info_graph, "Graph spec")->required();

  try {
    app.parse(argc, argv);
    if (bench_cmd->parsed()) {
      bench.m = range_or_throw(bench_m, "--m");
      bench.d = range_or_throw(bench_d, "--d");
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (route_cmd->parsed()) return cmd_route(route, std::cout, std::cerr);
  if (verify_cmd->parsed()) return cmd_verify(trace_path, std::cout, std::cerr);
  if (oracle_cmd->parsed()) {
    return cmd_oracle(oracle_graph, oracle_perm, std::cout, std::cerr);
  }
  if (bench_cmd->parsed()) return cmd_bench(bench, std::cout, std::cerr);
  if (info_cmd->parsed()) return cmd_info(info_graph, std::cout, std::cerr);
  return kUsage;
}
