#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "json.hpp"

#include "hyperinfect/hypergraph.hpp"

namespace hyperinfect::io {

// Text format (.hg), 1-based labels, '#' starts a comment:
//
//   vertices 4
//   edge 1 2
//   edge 3 4
//
// JSON mirror: {"vertices": 4, "edges": [[1, 2], [3, 4]]}

Hypergraph parse_hg(std::string_view text);
std::string to_hg(const Hypergraph& h);

Hypergraph from_json(const nlohmann::json& j);
nlohmann::json to_json(const Hypergraph& h);

/// Dispatches on the first significant character: '{' means JSON.
Hypergraph parse_any(std::string_view text);

/// Reads a file, or stdin when path is "-".
std::string read_input(const std::string& path);
Hypergraph load(const std::string& path);

/// Writes .hg unless the path ends in ".json". "-" writes to stdout.
void save(const Hypergraph& h, const std::string& path);

nlohmann::json labels_json(const VertexSet& s);

}  // namespace hyperinfect::io
