#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "homtop/graph_ops.hpp"

namespace homtop {

// Poset of multihoms eta: V(G) -> 2^V(H) \ {0} ordered by pointwise
// containment.  Target vertex sets are stored as 64-bit masks, so targets
// are limited to 64 vertices (ample at this scale; the builder checks).
//
// Elements are sorted lexicographically by their mask tuple in source
// vertex order, which pins element indices independently of search order.
class HomPoset {
public:
  Graph source_graph;
  Graph target_graph;
  int source_bp = -1;  // -1 marks the unpointed variant
  int target_bp = -1;

  int stride = 0;  // masks per element == source order

  size_t size() const { return stride == 0 ? 0 : masks_.size() / stride; }
  bool pointed() const { return source_bp >= 0; }

  const uint64_t* at(size_t i) const { return masks_.data() + i * stride; }

  bool leq(size_t i, size_t j) const {
    const uint64_t* a = at(i);
    const uint64_t* b = at(j);
    for (int v = 0; v < stride; ++v) {
      if (a[v] & ~b[v]) return false;
    }
    return true;
  }

  long long lookup(const uint64_t* m) const;

  bool is_atom(size_t i) const;
  const std::vector<uint32_t>& atoms() const { return atoms_; }
  long long basepoint_element() const { return basepoint_element_; }

  // Immediate successors in containment order (add one target vertex to one
  // coordinate).  Deterministic: coordinate ascending, then vertex ascending.
  std::vector<uint32_t> covers_above(size_t i) const;
  size_t cover_edge_count() const;

  // Enumerate the one-bit extensions of element mask m that are again
  // multihoms: calls fn(v, bit) for each coordinate v (basepoint fixed when
  // pointed) and each target bit not in m[v] whose addition respects all
  // edges at v.  Adding one vertex to one coordinate only has to be checked
  // against edges at that coordinate, so extensions of a poset element are
  // themselves elements; callers can consume the masks without an index
  // lookup.  Deterministic: coordinate ascending, then vertex ascending.
  template <typename Fn>
  void for_each_cover_bit(const uint64_t* m, Fn&& fn) const {
    int nh = target_graph.order();
    for (int v = 0; v < stride; ++v) {
      if (pointed() && v == source_bp) continue;
      for (int t = 0; t < nh; ++t) {
        uint64_t bit = uint64_t{1} << t;
        if (m[v] & bit) continue;
        bool ok = true;
        uint64_t nbr_mask = target_graph.row(t)[0];  // target <= 64 vertices
        for (int w = 0; w < stride && ok; ++w) {
          if (!source_graph.adjacent(v, w)) continue;
          uint64_t need = (w == v) ? (m[v] | bit) : m[w];
          if (need & ~nbr_mask) ok = false;
        }
        if (ok) fn(v, bit);
      }
    }
  }

  // Direct re-check of the multihom conditions; used by validation tests.
  bool element_valid(const uint64_t* m) const;

  // Builder interface.
  void push_element(const uint64_t* m);
  void finalize();

private:
  std::vector<uint64_t> masks_;
  std::vector<uint32_t> atoms_;
  long long basepoint_element_ = -1;
};

struct HomBuildOptions {
  size_t max_elements = 2'000'000;
};

HomPoset build_hom_star(const PointedGraph& g, const PointedGraph& h, HomBuildOptions opt = {});
HomPoset build_hom(const Graph& g, const Graph& h, HomBuildOptions opt = {});

// Looped vertices of H^G with the exponential adjacency, i.e. the pointed
// homs G -> H; vertex order matches enumerate_pointed_homs.  Built without
// materialising H^G.
struct AtomHomGraph {
  PointedGraph graph;
  std::vector<std::vector<int>> homs;  // image vectors, lexicographic
};
AtomHomGraph atom_hom_graph(const PointedGraph& g, const PointedGraph& h);

// Monotone map between hom posets, images materialised per element.
struct PosetMap {
  const HomPoset* source = nullptr;
  const HomPoset* target = nullptr;
  std::vector<uint32_t> image;

  bool monotone_on_covers() const;
};

// Postcomposition with f: H -> H' as a map Hom_*(T, H) -> Hom_*(T, H').
PosetMap induced_map_target(const HomPoset& p, const GraphMap& f, const HomPoset& q);
// Precomposition with f: G -> G' as a map Hom_*(G', T) -> Hom_*(G, T).
PosetMap induced_map_source(const HomPoset& p, const GraphMap& f, const HomPoset& q);

// { p in source : m(p) <= q }, ascending indices.
std::vector<uint32_t> quillen_fiber(const PosetMap& m, size_t q);

// All strictly comparable pairs (i < j in the order, not indices); guarded.
std::vector<std::pair<uint32_t, uint32_t>> comparable_pairs(const HomPoset& p, size_t cap);

}  // namespace homtop
