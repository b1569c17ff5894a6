#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "pyrt/engine.hpp"
#include "pyrt/permutation.hpp"

namespace pyrt {

// Trace file layout, keys in this order:
//   {"graph": "<spec string>", "perm": [<int>...], "algo": "<name>",
//    "steps": [[[u,v],...], ...]}
// Steps are in time order. trace.meta supplies "graph" and "algo"; the
// permutation descriptor is not stored.
struct TraceDocument {
  Trace trace;
  Permutation perm;
};

std::string trace_to_json(const Trace& trace, const Permutation& perm);
// Throws ParseError on malformed input.
TraceDocument trace_from_json(std::string_view text);

// Throw IoError when the file cannot be written or read.
void write_trace_file(const std::filesystem::path& path, const Trace& trace,
                      const Permutation& perm);
TraceDocument read_trace_file(const std::filesystem::path& path);

}  // namespace pyrt
