#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homtop/util.hpp"

namespace homtop {

// Finite undirected graph, loops allowed.  Adjacency is a symmetric bit
// matrix stored as 64-bit row words; everything in this library runs at
// desk scale, so dense rows are the simplest thing that works.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::vector<std::string> labels);

  int order() const { return n_; }
  int row_words() const { return words_; }

  bool adjacent(int u, int v) const {
    return (adj_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1;
  }
  bool looped(int v) const { return adjacent(v, v); }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  const uint64_t* row(int v) const { return adj_.data() + static_cast<size_t>(v) * words_; }

  // Does N(v) (as a set, loops included) sit inside N(u)?
  bool neighborhood_subset(int v, int u) const;

  int edge_count() const;  // unordered pairs, loops counted once
  int loop_count() const;
  int degree(int v) const;  // |N(v)|, loop contributes one
  std::vector<int> neighbors(int v) const;

  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of(const std::string& label) const;  // -1 when absent

  // Unordered edge list with u <= v, sorted.
  std::vector<std::pair<int, int>> edges() const;

  // Induced subgraph on `keep` (order preserved); labels carried over.
  Graph induced(const std::vector<int>& keep) const;

  bool same_adjacency(const Graph& other) const;

  void validate() const;  // symmetry is structural; checks label uniqueness

private:
  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> adj_;
  std::vector<std::string> labels_;
};

// Graph with a distinguished looped basepoint.
struct PointedGraph {
  Graph graph;
  int basepoint = 0;

  PointedGraph() = default;
  PointedGraph(Graph g, int bp);

  int order() const { return graph.order(); }
  const std::string& basepoint_label() const { return graph.label(basepoint); }
  void validate() const;
};

// Vertex map between two graphs.  Carries value copies of both endpoints:
// cheap at this scale and keeps maps self-describing.
struct GraphMap {
  Graph source;
  Graph target;
  std::vector<int> map;

  int operator()(int v) const { return map[v]; }

  // f(u) ~ f(v) whenever u ~ v (loops included).
  bool is_graph_map() const;
  bool is_pointed(int source_bp, int target_bp) const;
};

GraphMap compose(const GraphMap& second, const GraphMap& first);  // second(first(v))
GraphMap identity_map(const Graph& g);

// Pointed isomorphism search by brute permutation with degree pruning.
// Intended for test-scale graphs only.
bool pointed_isomorphic(const PointedGraph& a, const PointedGraph& b);
bool graphs_isomorphic(const Graph& a, const Graph& b);

// Canonical adjacency encoding of a pointed graph: basepoint pinned to
// position 0, remaining vertices permuted to the lexicographically least
// bit string.  Used for dedup at enumeration scale (<= ~8 vertices).
std::vector<uint64_t> canonical_form(const PointedGraph& g);

}  // namespace homtop
