#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homtop/graph.hpp"

namespace homtop {

// Reflexive interval 0 -- 1 -- ... -- n (every vertex looped), pointed at 0.
PointedGraph make_interval(int n);

// G_* : G plus a fresh looped basepoint "*", disjoint from everything else.
PointedGraph add_disjoint_basepoint(const Graph& g, const std::string& label = "*");

// 1_* : a single looped vertex "1" plus the disjoint looped basepoint "*".
PointedGraph make_one_star();

// (g,h) ~ (g',h')  iff  g ~ g' and h ~ h'.
Graph categorical_product(const Graph& a, const Graph& b);

// (g,h) ~ (g',h')  iff  (g ~ g' and h = h') or (g = g' and h ~ h').
Graph cartesian_product(const Graph& a, const Graph& b);

// Smash product A /\ B: quotient of the categorical product collapsing
// {basepoint} x B and A x {basepoint} to a single basepoint class.
// `classes[a*|B|+b]` gives the vertex of the quotient holding (a, b).
struct SmashProduct {
  PointedGraph quotient;
  std::vector<int> classes;

  int vertex_of(int a, int b, int b_order) const { return classes[a * b_order + b]; }
};
SmashProduct smash_product(const PointedGraph& a, const PointedGraph& b);

// Exponential H^G: vertices are all set maps V(G) -> V(H) fixing the
// basepoints, f ~ g iff f(v) ~ g(w) for every edge v ~ w of G.  Looped
// vertices are exactly the pointed graph homomorphisms.
class Exponential {
public:
  Exponential(const PointedGraph& target, const PointedGraph& source, int max_vertices = 1 << 20);

  const PointedGraph& graph() const { return graph_; }
  const PointedGraph& source() const { return source_; }
  const PointedGraph& target() const { return target_; }

  int index_of_map(const std::vector<int>& images) const;  // full image vector
  std::vector<int> map_of_index(int idx) const;

  // f ~ g under the exponential adjacency (works off raw image vectors,
  // usable without materialising the graph).
  static bool maps_adjacent(const PointedGraph& source, const PointedGraph& target,
                            const std::vector<int>& f, const std::vector<int>& g);

private:
  PointedGraph source_;
  PointedGraph target_;
  PointedGraph graph_;
  std::vector<int> free_vertices_;  // non-basepoint vertices of the source, ascending
};

PointedGraph exponential(const PointedGraph& target, const PointedGraph& source);

// Adjunction G_*(A /\ B, C) <-> G_*(A, C^B).
// Maps are represented as full image vectors on the respective sources.
struct AdjunctionContext {
  PointedGraph a, b, c;
  SmashProduct smash;      // A /\ B
  Exponential exp;         // C^B

  AdjunctionContext(const PointedGraph& a_, const PointedGraph& b_, const PointedGraph& c_);
};

// phi(f)(a)(b) = f([a, b]); f must be a pointed graph map A /\ B -> C.
std::vector<int> adjunction_forward(const AdjunctionContext& ctx, const std::vector<int>& f);
// psi(g)([a, b]) = g(a)(b); g must be a pointed graph map A -> C^B.
std::vector<int> adjunction_backward(const AdjunctionContext& ctx, const std::vector<int>& g);

// Enumerate pointed graph homomorphisms (G, x) -> (H, y) as image vectors,
// in lexicographic order of the image tuple.
std::vector<std::vector<int>> enumerate_pointed_homs(const PointedGraph& g, const PointedGraph& h);
std::vector<std::vector<int>> enumerate_homs(const Graph& g, const Graph& h);  // unpointed

// Fold: a non-basepoint vertex v with N(v) subseteq N(u) retracts onto u.
struct Fold {
  int u;  // absorbing vertex
  int v;  // removed vertex
};

// Smallest (v, u) lexicographically, or nullopt if the graph is stiff.
std::optional<Fold> find_fold(const PointedGraph& g);
std::optional<Fold> find_fold_unpointed(const Graph& g, int protect = -1);

struct FoldResult {
  PointedGraph folded;   // G \ v
  GraphMap retraction;   // G -> G \ v  (v -> u, identity elsewhere)
  GraphMap inclusion;    // G \ v -> G
  Fold fold;
};
FoldResult apply_fold(const PointedGraph& g, const Fold& fold);

GraphMap unfold_inclusion(const PointedGraph& g, const Fold& fold);

// Iterate find_fold/apply_fold to a stiff core.
struct DismantleResult {
  PointedGraph core;
  std::vector<Fold> folds;          // in applied order, vertices named in the graph at that step
  std::vector<std::string> removed_labels;
  GraphMap retraction;              // composite G -> core
};
DismantleResult dismantle(const PointedGraph& g);

}  // namespace homtop
