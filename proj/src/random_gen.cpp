#include "homtop/random_gen.hpp"

namespace homtop {

namespace {

std::vector<std::string> generic_labels(int n) {
  std::vector<std::string> labels(n);
  labels[0] = "x";
  for (int v = 1; v < n; ++v) labels[v] = "v" + std::to_string(v);
  return labels;
}

}  // namespace

PointedGraph random_pointed_graph(Rng& rng, int min_vertices, int max_vertices) {
  check(1 <= min_vertices && min_vertices <= max_vertices, Status::invalid_argument,
        "bad vertex range");
  int n = min_vertices + static_cast<int>(rng.below(static_cast<uint64_t>(max_vertices - min_vertices + 1)));
  static constexpr uint64_t kEdgeTenths[] = {3, 5, 7};
  uint64_t p = kEdgeTenths[rng.below(3)];

  Graph g(n, generic_labels(n));
  g.add_edge(0, 0);
  for (int v = 1; v < n; ++v)
    if (rng.chance(1, 2)) g.add_edge(v, v);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(p, 10)) g.add_edge(u, v);
  return PointedGraph(std::move(g), 0);
}

std::vector<PointedGraph> all_pointed_graphs(int max_vertices) {
  check(max_vertices >= 1 && max_vertices <= 6, Status::invalid_argument,
        "exhaustive enumeration supports up to 6 vertices");
  std::vector<PointedGraph> out;
  for (int n = 1; n <= max_vertices; ++n) {
    int pairs = n * (n - 1) / 2;
    for (uint64_t loops = 0; loops < (1ull << (n - 1)); ++loops)
      for (uint64_t edges = 0; edges < (1ull << pairs); ++edges) {
        Graph g(n, generic_labels(n));
        g.add_edge(0, 0);
        for (int v = 1; v < n; ++v)
          if ((loops >> (v - 1)) & 1) g.add_edge(v, v);
        int bit = 0;
        for (int u = 0; u < n; ++u)
          for (int v = u + 1; v < n; ++v, ++bit)
            if ((edges >> bit) & 1) g.add_edge(u, v);
        out.emplace_back(std::move(g), 0);
      }
  }
  return out;
}

}  // namespace homtop
