#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "pyrt/types.hpp"

namespace pyrt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad caller input: out-of-range parameters, malformed permutations, etc.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A requested structure exceeds a configured size cap.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::uint64_t requested)
      : Error(what), requested_(requested) {}
  std::uint64_t requested() const { return requested_; }

 private:
  std::uint64_t requested_;
};

// An internal invariant of a router was violated. Reaching this is a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class UnsupportedDegreeError : public Error {
 public:
  explicit UnsupportedDegreeError(std::uint64_t degree)
      : Error("unsupported-degree: " + std::to_string(degree) +
              " is not a power of two"),
        degree_(degree) {}
  std::uint64_t degree() const { return degree_; }

 private:
  std::uint64_t degree_;
};

enum class TraceFault { kInvalidEdge, kNotAMatching, kNotRouted };

const char* to_string(TraceFault fault);

// Raised while applying or replaying matchings. `step` is the zero-based
// index into the trace when the failure came from a replay.
class TraceError : public Error {
 public:
  TraceError(TraceFault fault, std::optional<std::size_t> step, VertexId vertex,
             const std::string& detail);

  TraceFault fault() const { return fault_; }
  std::optional<std::size_t> step() const { return step_; }
  VertexId vertex() const { return vertex_; }

 private:
  TraceFault fault_;
  std::optional<std::size_t> step_;
  VertexId vertex_;
};

class ParallelConflictError : public Error {
 public:
  explicit ParallelConflictError(VertexId vertex)
      : Error("parallel-conflict: vertex " + std::to_string(vertex) +
              " is touched by more than one trace"),
        vertex_(vertex) {}
  VertexId vertex() const { return vertex_; }

 private:
  VertexId vertex_;
};

// Malformed descriptor strings or trace files.
class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace pyrt
