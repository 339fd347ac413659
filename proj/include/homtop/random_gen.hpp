#pragma once

#include <vector>

#include "homtop/graph.hpp"
#include "homtop/util.hpp"

namespace homtop {

// Erdos-Renyi pointed graph: vertex count uniform in [min_vertices,
// max_vertices], edge probability drawn from {0.3, 0.5, 0.7}, loops added
// with probability 1/2, basepoint (vertex 0) forced looped.
PointedGraph random_pointed_graph(Rng& rng, int min_vertices, int max_vertices);

// Every labeled pointed graph on 1..max_vertices vertices: basepoint first
// and always looped, remaining loops and all edges range over all masks.
// Enumeration order is (order, loop mask, edge mask), so it is stable.
std::vector<PointedGraph> all_pointed_graphs(int max_vertices);

}  // namespace homtop
