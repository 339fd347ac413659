#include "homtop/json_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace homtop {

using Json = nlohmann::json;

PointedGraph ParsedGraph::pointed() const {
  check(basepoint.has_value(), Status::invalid_argument, "graph has no basepoint");
  return PointedGraph(graph, *basepoint);
}

ParsedGraph graph_from_json_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    fail(Status::parse_error, std::string("invalid JSON: ") + e.what());
  }
  check(doc.is_object(), Status::parse_error, "graph document must be an object");
  check(doc.contains("vertices") && doc["vertices"].is_array(), Status::parse_error,
        "missing \"vertices\" array");
  check(doc.contains("edges") && doc["edges"].is_array(), Status::parse_error,
        "missing \"edges\" array");

  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index;
  for (const Json& v : doc["vertices"]) {
    check(v.is_string(), Status::parse_error, "vertex labels must be strings");
    std::string label = v.get<std::string>();
    check(!index.count(label), Status::parse_error, "duplicate vertex label: " + label);
    index.emplace(label, static_cast<int>(labels.size()));
    labels.push_back(std::move(label));
  }

  Graph g(static_cast<int>(labels.size()), labels);
  auto vertex = [&](const Json& v) {
    check(v.is_string(), Status::parse_error, "edge endpoints must be vertex labels");
    auto it = index.find(v.get<std::string>());
    check(it != index.end(), Status::parse_error, "unknown vertex in edge: " + v.get<std::string>());
    return it->second;
  };
  for (const Json& e : doc["edges"]) {
    check(e.is_array() && e.size() == 2, Status::parse_error, "edges must be [u, v] pairs");
    g.add_edge(vertex(e[0]), vertex(e[1]));
  }

  ParsedGraph out{std::move(g), std::nullopt};
  if (doc.contains("basepoint") && !doc["basepoint"].is_null()) {
    check(doc["basepoint"].is_string(), Status::parse_error, "basepoint must be a label or null");
    auto it = index.find(doc["basepoint"].get<std::string>());
    check(it != index.end(), Status::parse_error,
          "unknown basepoint: " + doc["basepoint"].get<std::string>());
    check(out.graph.looped(it->second), Status::parse_error,
          "basepoint must carry a loop: " + doc["basepoint"].get<std::string>());
    out.basepoint = it->second;
  }
  return out;
}

std::string graph_to_json_text(const Graph& g, std::optional<int> basepoint) {
  Json doc;
  doc["vertices"] = Json::array();
  for (int v = 0; v < g.order(); ++v) doc["vertices"].push_back(g.label(v));
  doc["edges"] = Json::array();
  for (auto [u, v] : g.edges()) doc["edges"].push_back(Json::array({g.label(u), g.label(v)}));
  if (basepoint)
    doc["basepoint"] = g.label(*basepoint);
  else
    doc["basepoint"] = nullptr;
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  check(in.good(), Status::invalid_argument, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  check(out.good(), Status::invalid_argument, "cannot open file for writing: " + path);
  out << text;
  check(out.good(), Status::invalid_argument, "write failed: " + path);
}

}  // namespace homtop
