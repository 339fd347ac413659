#pragma once

#include <optional>
#include <string>

#include "homtop/graph.hpp"

namespace homtop {

// Graph interchange format:
//   {"vertices": ["a", ...], "edges": [["a","b"], ...], "basepoint": "a"|null}
// Loops are edges ["v","v"]; the edge list is undirected with each pair
// stored once.  Parsing rejects duplicate labels, unknown vertices in edges
// or the basepoint, and a basepoint without a loop.
struct ParsedGraph {
  Graph graph;
  std::optional<int> basepoint;

  PointedGraph pointed() const;  // fails when the basepoint is absent
};

ParsedGraph graph_from_json_text(const std::string& text);
std::string graph_to_json_text(const Graph& g, std::optional<int> basepoint);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace homtop
