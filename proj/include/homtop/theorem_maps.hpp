#pragma once

#include <vector>

#include "homtop/graph.hpp"
#include "homtop/graph_ops.hpp"
#include "homtop/loop_space.hpp"

namespace homtop {

// Stage data for the fibration-sequence maps.  gamma <= gamma' are looped
// cliques of G (elements of Hom_*(1_*, G)) with a distinguished v in gamma;
// H_n and H'_n are the subgraphs of G^{I_n} induced by the maps whose
// endpoint f(n) lands in gamma resp. gamma'.
struct SequenceData {
  SequenceData(const PointedGraph& g, std::vector<int> gamma, std::vector<int> gamma_prime,
               int v, int n);

  PointedGraph g;
  std::vector<int> gamma, gamma_prime;
  int v = -1;
  int n = 0;

  Exponential stage_n;   // G^{I_n}
  Exponential stage_n1;  // G^{I_{n+1}}

  std::vector<int> hn, hpn, hn1, hpn1;  // exponential indices per fiber, ascending
  Graph hn_graph, hpn_graph, hn1_graph, hpn1_graph;

  GraphMap k_n;   // H_n -> H'_n          inclusion
  GraphMap k_n1;  // H_{n+1} -> H'_{n+1}  inclusion
  GraphMap i_n;   // H'_n -> H'_{n+1}     extend by the last value
  GraphMap j_n;   // H_n -> H_{n+1}       extend by the last value
  GraphMap h_n;   // H'_n -> H_{n+1}      append the distinguished v

  Graph hpn_cross;      // H'_n x I_1 (categorical)
  Graph hn_cross;       // H_n x I_1
  GraphMap homotopy_a;  // A : H'_n x I_1 -> H'_{n+1}, A(.,0) = i_n, A(.,1) = k_{n+1} h_n
  GraphMap homotopy_b;  // B : H_n x I_1 -> H_{n+1},  B(.,0) = j_n, B(.,1) = h_n k_n
};

// Component label per looped vertex (-1 for unlooped vertices): pi_0 of the
// looped part, i.e. the x-homotopy classes of maps out of one looped vertex.
std::vector<int> looped_component_labels(const Graph& g);

}  // namespace homtop
