#include "pyrt/cli.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <vector>

#include "pyrt/descriptors.hpp"
#include "pyrt/engine.hpp"
#include "pyrt/error.hpp"
#include "pyrt/mesh_router.hpp"
#include "pyrt/oracle.hpp"
#include "pyrt/pyramid_router.hpp"
#include "pyrt/trace_io.hpp"

namespace pyrt::cli {
namespace {

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size()) {
    return std::nullopt;
  }
  return value;
}

bool is_pyramid_like(const GraphSpec& g) {
  return g.family == GraphSpec::Family::kPyramid ||
         g.family == GraphSpec::Family::kMultigrid;
}

std::string format_ratio(double ratio) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", ratio);
  return buf;
}

}  // namespace

std::optional<IntRange> parse_range(std::string_view text) {
  const std::size_t dots = text.find("..");
  if (dots == std::string_view::npos) {
    const auto v = parse_int(text);
    if (!v) return std::nullopt;
    return IntRange{*v, *v};
  }
  const auto lo = parse_int(text.substr(0, dots));
  const auto hi = parse_int(text.substr(dots + 2));
  if (!lo || !hi || *lo > *hi) return std::nullopt;
  return IntRange{*lo, *hi};
}

std::uint64_t trial_seed(std::uint64_t seed, int m, int d, int trial) {
  const std::uint64_t key = (static_cast<std::uint64_t>(m) << 48) |
                            (static_cast<std::uint64_t>(d) << 32) |
                            static_cast<std::uint32_t>(trial);
  return mix64(seed ^ mix64(key));
}

int cmd_route(const RouteOptions& options, std::ostream& out,
              std::ostream& err) {
  GraphSpec spec;
  Permutation pi;
  try {
    spec = parse_graph_spec(options.graph);
    pi = parse_permutation(options.perm, spec.vertex_count());
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const std::string& algo = options.algo;
  std::uint64_t bound = 0;
  if (algo == "pyramid") {
    if (!is_pyramid_like(spec)) {
      err << "error: --algo pyramid needs a pyramid: or multigrid: graph\n";
      return kUsage;
    }
    bound = step_bound(spec.pyramid);
  } else if (algo == "mesh") {
    const bool mesh_like = spec.family == GraphSpec::Family::kMesh ||
                           spec.family == GraphSpec::Family::kPath;
    if (!mesh_like || !std::has_single_bit(spec.side)) {
      err << "error: --algo mesh needs a mesh: or path: graph with a "
             "power-of-two side\n";
      return kUsage;
    }
    bound = mesh_step_bound(spec.side, spec.dim);
  } else if (algo == "path" || algo == "oddeven") {
    const bool path_like = spec.family == GraphSpec::Family::kPath ||
                           (spec.family == GraphSpec::Family::kMesh && spec.dim == 1);
    if (!path_like) {
      err << "error: --algo " << algo << " needs a path: graph\n";
      return kUsage;
    }
    bound = spec.side;
  } else {
    err << "error: unknown --algo '" << algo
        << "' (expected pyramid, mesh, path or oddeven)\n";
    return kUsage;
  }

  Trace trace;
  try {
    const Graph graph = spec.build();
    if (algo == "pyramid") {
      trace = route_pyramid(spec.pyramid, pi);
    } else if (algo == "mesh") {
      trace = route_mesh(spec.side, spec.dim, pi);
    } else {
      trace = route_path(spec.side, pi);
    }
    validate_trace({graph, pi}, trace);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const TraceError& e) {
    err << "error: routed trace failed validation: " << e.what() << '\n';
    return kFailed;
  }
  trace.meta = {spec.to_string(), options.perm, algo};

  if (!options.out.empty()) {
    try {
      write_trace_file(options.out, trace, pi);
    } catch (const IoError& e) {
      err << "error: " << e.what() << '\n';
      return kIo;
    }
  }
  out << "steps=" << trace.length() << " bound=" << bound << '\n';
  return kOk;
}

int cmd_verify(const std::string& trace_path, std::ostream& out,
               std::ostream& err) {
  TraceDocument doc;
  GraphSpec spec;
  std::optional<Graph> graph;
  try {
    doc = read_trace_file(trace_path);
    spec = parse_graph_spec(doc.trace.meta.graph);
    graph.emplace(spec.build());
    if (doc.perm.size() != graph->vertex_count()) {
      throw ParseError("\"perm\" has " + std::to_string(doc.perm.size()) +
                       " entries, graph has " +
                       std::to_string(graph->vertex_count()) + " vertices");
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  }
  try {
    const std::size_t steps = validate_trace({*graph, doc.perm}, doc.trace);
    out << "valid steps=" << steps << '\n';
    return kOk;
  } catch (const TraceError& e) {
    err << e.what() << '\n';
    return kFailed;
  }
}

int cmd_oracle(const std::string& graph_text,
               const std::optional<std::string>& perm, std::ostream& out,
               std::ostream& err) {
  GraphSpec spec;
  try {
    spec = parse_graph_spec(graph_text);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  try {
    const Graph graph = spec.build();
    if (perm) {
      const Permutation pi = parse_permutation(*perm, graph.vertex_count());
      out << "rt=" << exact_rt({graph, pi}) << '\n';
    } else {
      out << "routing_number=" << exact_routing_number(graph) << '\n';
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  }
  return kOk;
}

int cmd_bench(const BenchOptions& options, std::ostream& out,
              std::ostream& err) {
  if (options.m.lo < 1 || options.d.lo < 1 || options.trials < 0) {
    err << "error: bench needs m >= 1, d >= 1 and trials >= 0\n";
    return kUsage;
  }
  std::ofstream file;
  if (!options.csv.empty()) {
    file.open(options.csv, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot open '" << options.csv << "' for writing\n";
      return kIo;
    }
  }
  std::ostream& csv = options.csv.empty() ? out : file;
  std::ostream& summary = options.csv.empty() ? err : out;

  csv << "m,d,N,trial,steps,bound,ratio\n";
  std::map<int, double> max_ratio;
  for (int m = options.m.lo; m <= options.m.hi; ++m) {
    for (int d = options.d.lo; d <= options.d.hi; ++d) {
      const PyramidSpec spec{m, d};
      std::optional<Graph> graph;
      try {
        graph.emplace(build_multigrid(spec));
      } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
      }
      const std::uint64_t n = spec.vertex_count();
      const std::uint64_t bound = step_bound(spec);
      const double scale = d * std::pow(static_cast<double>(n), 1.0 / d);
      for (int trial = 0; trial < options.trials; ++trial) {
        const Permutation pi =
            random_permutation(n, trial_seed(options.seed, m, d, trial));
        std::size_t steps = 0;
        try {
          steps = validate_trace({*graph, pi}, route_pyramid(spec, pi));
        } catch (const Error& e) {
          err << "error: m=" << m << " d=" << d << " trial=" << trial << ": "
              << e.what() << '\n';
          return kFailed;
        }
        if (steps > bound) {
          err << "error: m=" << m << " d=" << d << " trial=" << trial
              << ": steps=" << steps << " exceeds bound=" << bound << '\n';
          return kFailed;
        }
        const double ratio = static_cast<double>(steps) / scale;
        max_ratio[d] = std::max(max_ratio[d], ratio);
        csv << m << ',' << d << ',' << n << ',' << trial << ',' << steps << ','
            << bound << ',' << format_ratio(ratio) << '\n';
      }
    }
  }
  csv.flush();
  if (!csv) {
    err << "error: failed writing CSV\n";
    return kIo;
  }
  for (const auto& [d, ratio] : max_ratio) {
    summary << "max_ratio d=" << d << ' ' << format_ratio(ratio) << '\n';
  }
  return kOk;
}

int cmd_info(const std::string& graph_text, std::ostream& out,
             std::ostream& err) {
  GraphSpec spec;
  try {
    spec = parse_graph_spec(graph_text);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  out << "graph=" << spec.to_string() << '\n';
  out << "N=" << spec.vertex_count() << '\n';
  if (!is_pyramid_like(spec)) {
    out << "side=" << spec.side << '\n' << "d=" << spec.dim << '\n';
    if (std::has_single_bit(spec.side)) {
      out << "mesh_bound=" << mesh_step_bound(spec.side, spec.dim) << '\n';
    }
    return kOk;
  }
  const PyramidSpec& p = spec.pyramid;
  out << "m=" << p.levels << '\n' << "d=" << p.dim << '\n';
  for (int l = 0; l < p.levels; ++l) {
    out << "n_" << l << '=' << p.level_size(l) << '\n';
  }
  for (int k = 1; k < p.levels; ++k) {
    out << "phi_" << k << '=' << phi(p, k) << '\n';
  }
  out << "step_bound=" << step_bound(p) << '\n';
  return kOk;
}

}  // namespace pyrt::cli
