#include "pyrt/trace_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "pyrt/error.hpp"

namespace pyrt {
namespace {

using ordered_json = nlohmann::ordered_json;

std::uint32_t as_index(const ordered_json& value, const char* what) {
  if (!value.is_number_unsigned() ||
      value.get<std::uint64_t>() > std::numeric_limits<std::uint32_t>::max()) {
    throw ParseError(std::string(what) + " must be a non-negative integer");
  }
  return value.get<std::uint32_t>();
}

}  // namespace

std::string trace_to_json(const Trace& trace, const Permutation& perm) {
  ordered_json doc;
  doc["graph"] = trace.meta.graph;
  doc["perm"] = std::vector<std::uint32_t>(perm.images().begin(),
                                           perm.images().end());
  doc["algo"] = trace.meta.algo;
  ordered_json steps = ordered_json::array();
  for (const Matching& m : trace.steps()) {
    ordered_json step = ordered_json::array();
    for (const auto& [u, v] : m.swaps()) step.push_back({u, v});
    steps.push_back(std::move(step));
  }
  doc["steps"] = std::move(steps);
  return doc.dump();
}

TraceDocument trace_from_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("trace is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("trace must be a JSON object");
  for (const char* key : {"graph", "perm", "algo", "steps"}) {
    if (!doc.contains(key)) {
      throw ParseError(std::string("trace is missing \"") + key + "\"");
    }
  }
  if (!doc["graph"].is_string() || !doc["algo"].is_string()) {
    throw ParseError("\"graph\" and \"algo\" must be strings");
  }
  if (!doc["perm"].is_array() || !doc["steps"].is_array()) {
    throw ParseError("\"perm\" and \"steps\" must be arrays");
  }

  std::vector<std::uint32_t> images;
  for (const auto& x : doc["perm"]) images.push_back(as_index(x, "perm entry"));

  std::vector<Matching> steps;
  for (const auto& step : doc["steps"]) {
    if (!step.is_array()) throw ParseError("each step must be an array");
    std::vector<Edge> swaps;
    for (const auto& pair : step) {
      if (!pair.is_array() || pair.size() != 2) {
        throw ParseError("each swap must be a [u, v] pair");
      }
      swaps.emplace_back(as_index(pair[0], "vertex id"),
                         as_index(pair[1], "vertex id"));
    }
    steps.emplace_back(std::move(swaps));
  }

  TraceDocument out;
  try {
    out.perm = Permutation(std::move(images));
  } catch (const ArgumentError& e) {
    throw ParseError(std::string("\"perm\": ") + e.what());
  }
  out.trace = Trace(std::move(steps));
  out.trace.meta.graph = doc["graph"].get<std::string>();
  out.trace.meta.algo = doc["algo"].get<std::string>();
  return out;
}

void write_trace_file(const std::filesystem::path& path, const Trace& trace,
                      const Permutation& perm) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << trace_to_json(trace, perm) << '\n';
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

TraceDocument read_trace_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return trace_from_json(buffer.str());
}

}  // namespace pyrt
