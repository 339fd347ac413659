#ifndef HOMTOP_SIMPLICIAL_HPP
#define HOMTOP_SIMPLICIAL_HPP

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "homtop/graph.hpp"

namespace homtop {

// Abstract simplicial complex stored by its maximal faces.  Vertices are
// 0..n-1 in some ambient set; vertices outside every facet are not part of
// the complex.
struct SimplicialComplex {
  int n = 0;
  std::vector<std::vector<int>> facets;  // each sorted ascending; pairwise incomparable

  static SimplicialComplex from_faces(int n, std::vector<std::vector<int>> faces);

  int dim() const;
  bool vertex_present(int v) const;
  std::vector<int> vertices() const;

  // Every face (nonempty), sorted by (dimension, lex).  Throws limit_exceeded
  // past the cap.
  std::vector<std::vector<int>> all_faces(size_t cap = 200000) const;

  std::vector<std::array<int, 2>> edge_faces() const;
  std::vector<std::array<int, 3>> triangle_faces() const;

  long long euler(size_t cap = 200000) const;  // V - E + F - ...
  int component_count() const;
};

// Flag complex on the looped part of g: faces are the sets of looped
// vertices that are pairwise adjacent.
SimplicialComplex clique_complex(const Graph& g);

// Vertices, edges and triangles only; enough for pi0, H1 and the degree-2
// part of a presentation.
struct TwoSkeleton {
  int n = 0;
  std::vector<int> vertices;
  std::vector<std::array<int, 2>> edges;      // lex sorted
  std::vector<std::array<int, 3>> triangles;  // lex sorted
};

TwoSkeleton two_skeleton(const SimplicialComplex& k);
TwoSkeleton clique_two_skeleton(const Graph& g, size_t cap = 10'000'000);

// Elementary collapses down to a single vertex.  A face is free when it has
// exactly one face immediately above it; that face is then automatically its
// only proper coface and is maximal, so removing the pair is an elementary
// collapse.  Free faces are consumed lowest dimension first, lex order
// breaking ties.
struct CollapseCertificate {
  bool success = false;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> steps;
  std::vector<std::vector<int>> remaining;
};

CollapseCertificate collapse_to_point(const SimplicialComplex& k, size_t max_faces = 200000);

// Independent replay of a certificate against the full face list.
bool verify_collapse(const SimplicialComplex& k, const CollapseCertificate& cert,
                     size_t max_faces = 200000);

}  // namespace homtop

#endif
