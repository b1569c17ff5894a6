#include "pyrt/descriptors.hpp"

#include <cctype>
#include <charconv>
#include <map>

#include "pyrt/error.hpp"

namespace pyrt {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::uint64_t parse_u64(std::string_view s, std::string_view context) {
  s = trim(s);
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size()) {
    throw ParseError("expected a non-negative integer in " +
                     std::string(context) + ", got '" + std::string(s) + "'");
  }
  return value;
}

int parse_small(std::string_view s, std::string_view context) {
  const std::uint64_t v = parse_u64(s, context);
  if (v > 1u << 20) {
    throw ParseError("value " + std::to_string(v) + " too large in " +
                     std::string(context));
  }
  return static_cast<int>(v);
}

std::map<std::string, std::string_view> parse_params(std::string_view body,
                                                     std::string_view context) {
  std::map<std::string, std::string_view> params;
  while (!body.empty()) {
    const std::size_t comma = body.find(',');
    const std::string_view item = body.substr(0, comma);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected key=value in '" + std::string(context) + "'");
    }
    const std::string key(trim(item.substr(0, eq)));
    if (!params.emplace(key, item.substr(eq + 1)).second) {
      throw ParseError("duplicate key '" + key + "' in '" +
                       std::string(context) + "'");
    }
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return params;
}

std::string_view take(std::map<std::string, std::string_view>& params,
                      const std::string& key, std::string_view context) {
  const auto it = params.find(key);
  if (it == params.end()) {
    throw ParseError("missing '" + key + "' in '" + std::string(context) + "'");
  }
  const std::string_view value = it->second;
  params.erase(it);
  return value;
}

}  // namespace

std::string GraphSpec::to_string() const {
  switch (family) {
    case Family::kPyramid:
      return "pyramid:m=" + std::to_string(pyramid.levels) +
             ",d=" + std::to_string(pyramid.dim);
    case Family::kMultigrid:
      return "multigrid:m=" + std::to_string(pyramid.levels) +
             ",d=" + std::to_string(pyramid.dim);
    case Family::kMesh:
      return "mesh:side=" + std::to_string(side) + ",d=" + std::to_string(dim);
    case Family::kPath:
      return "path:n=" + std::to_string(side);
  }
  return {};
}

std::uint64_t GraphSpec::vertex_count() const {
  switch (family) {
    case Family::kPyramid:
    case Family::kMultigrid:
      return pyramid.vertex_count();
    case Family::kMesh: {
      std::uint64_t n = 1;
      for (int k = 0; k < dim; ++k) n *= side;
      return n;
    }
    case Family::kPath:
      return side;
  }
  return 0;
}

Graph GraphSpec::build(const BuildLimits& limits) const {
  switch (family) {
    case Family::kPyramid:
      return build_pyramid(pyramid, limits);
    case Family::kMultigrid:
      return build_multigrid(pyramid, limits);
    case Family::kMesh:
      return build_mesh(side, dim, limits);
    case Family::kPath:
      return build_path(side, limits);
  }
  throw ArgumentError("unknown graph family");
}

GraphSpec parse_graph_spec(std::string_view text) {
  text = trim(text);
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("graph spec '" + std::string(text) +
                     "' must look like family:key=value,...");
  }
  const std::string_view family = text.substr(0, colon);
  const std::string_view body = text.substr(colon + 1);
  GraphSpec spec;
  if (family == "path" && body.find('=') == std::string_view::npos) {
    spec.family = GraphSpec::Family::kPath;
    spec.side = parse_u64(body, text);
  } else {
    auto params = parse_params(body, text);
    if (family == "pyramid" || family == "multigrid") {
      spec.family = family == "pyramid" ? GraphSpec::Family::kPyramid
                                        : GraphSpec::Family::kMultigrid;
      spec.pyramid.levels = parse_small(take(params, "m", text), text);
      spec.pyramid.dim = parse_small(take(params, "d", text), text);
      spec.dim = spec.pyramid.dim;
    } else if (family == "mesh") {
      spec.family = GraphSpec::Family::kMesh;
      spec.side = parse_u64(take(params, "side", text), text);
      spec.dim = parse_small(take(params, "d", text), text);
    } else if (family == "path") {
      spec.family = GraphSpec::Family::kPath;
      spec.side = parse_u64(take(params, "n", text), text);
    } else {
      throw ParseError("unknown graph family '" + std::string(family) + "'");
    }
    if (!params.empty()) {
      throw ParseError("unknown key '" + params.begin()->first + "' in '" +
                       std::string(text) + "'");
    }
  }
  const bool pyramid_like = spec.family == GraphSpec::Family::kPyramid ||
                            spec.family == GraphSpec::Family::kMultigrid;
  if ((pyramid_like && (spec.pyramid.levels < 1 || spec.pyramid.dim < 1)) ||
      (!pyramid_like && (spec.side < 1 || spec.dim < 1))) {
    throw ParseError("graph spec '" + std::string(text) +
                     "' needs every size parameter >= 1");
  }
  return spec;
}

Permutation parse_permutation(std::string_view text, std::size_t n) {
  text = trim(text);
  if (text == "id") return Permutation::identity(n);
  if (text == "rev") return Permutation::reversal(n);

  const std::size_t colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  const std::string_view body =
      colon == std::string_view::npos ? std::string_view() : text.substr(colon + 1);
  try {
    if (kind == "seed" && colon != std::string_view::npos) {
      return random_permutation(n, parse_u64(body, text));
    }
    if (kind == "array" && colon != std::string_view::npos) {
      std::string_view list = trim(body);
      if (list.size() < 2 || list.front() != '[' || list.back() != ']') {
        throw ParseError("array descriptor must be [a,b,...]");
      }
      list = trim(list.substr(1, list.size() - 2));
      std::vector<std::uint32_t> images;
      while (!list.empty()) {
        const std::size_t comma = list.find(',');
        images.push_back(
            static_cast<std::uint32_t>(parse_u64(list.substr(0, comma), text)));
        if (comma == std::string_view::npos) break;
        list.remove_prefix(comma + 1);
      }
      if (images.size() != n) {
        throw ParseError("array descriptor has " + std::to_string(images.size()) +
                         " entries, graph has " + std::to_string(n) + " vertices");
      }
      return Permutation(std::move(images));
    }
    if (kind == "cycles" && colon != std::string_view::npos) {
      std::vector<Cycle> cs;
      std::string_view rest = trim(body);
      while (!rest.empty()) {
        if (rest.front() != '(') throw ParseError("expected '(' in cycles");
        const std::size_t close = rest.find(')');
        if (close == std::string_view::npos) {
          throw ParseError("unclosed '(' in cycles");
        }
        Cycle c;
        std::string_view inner = rest.substr(1, close - 1);
        while (!(inner = trim(inner)).empty()) {
          const std::size_t stop = inner.find_first_of(" ,\t");
          c.push_back(
              static_cast<std::uint32_t>(parse_u64(inner.substr(0, stop), text)));
          if (stop == std::string_view::npos) break;
          inner.remove_prefix(stop + 1);
        }
        cs.push_back(std::move(c));
        rest = trim(rest.substr(close + 1));
      }
      return from_cycles(n, cs);
    }
  } catch (const ArgumentError& e) {
    throw ParseError("permutation '" + std::string(text) + "': " + e.what());
  }
  throw ParseError("unknown permutation descriptor '" + std::string(text) + "'");
}

}  // namespace pyrt
