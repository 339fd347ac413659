#ifndef HOMTOP_INVARIANTS_HPP
#define HOMTOP_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "homtop/graph.hpp"
#include "homtop/graph_ops.hpp"
#include "homtop/hom_poset.hpp"
#include "homtop/simplicial.hpp"
#include "homtop/snf.hpp"

namespace homtop {

struct H1Summary {
  long long rank = 0;
  std::vector<BigInt> torsion;  // nontrivial invariant factors, ascending

  bool operator==(const H1Summary& o) const { return rank == o.rank && torsion == o.torsion; }
  bool operator!=(const H1Summary& o) const { return !(*this == o); }
};

H1Summary h1_of_two_skeleton(const TwoSkeleton& s);

struct ComponentLabels {
  int count = 0;
  std::vector<int> label;  // numbered by first appearance along ascending atom order
};

ComponentLabels poset_components(const HomPoset& p);
ComponentLabels atom_components(const AtomHomGraph& a);

// pi0 / basepoint component / euler / H1 / collapsibility for a hom complex,
// computed either from the full multihom poset ("exact") or from the
// homomorphism graph after dismantling ("fast").  Both describe the same
// homotopy type; the pair is cross-checked in the tests.
struct InvariantProfile {
  long long pi0 = 0;
  long long basepoint_component = 0;
  BigInt euler = 0;
  H1Summary h1;
  std::optional<bool> collapsible;
  std::string route;

  bool agrees(const InvariantProfile& o) const {
    return pi0 == o.pi0 && basepoint_component == o.basepoint_component && euler == o.euler &&
           h1 == o.h1;
  }
};

struct InvariantOptions {
  size_t exact_poset_cap = 600;
  size_t skeleton_cap = 2'000'000;   // edge+triangle budget
  size_t collapse_cap = 50'000;      // face budget for the collapsibility attempt
  size_t euler_node_cap = 1 << 22;   // recursion budget for the fast Euler characteristic
  bool attempt_collapse = true;
};

InvariantProfile poset_profile_exact(const HomPoset& p, const InvariantOptions& opt = {});
InvariantProfile hom_profile_fast(const PointedGraph& g, const PointedGraph& h,
                                  const InvariantOptions& opt = {});
// exact when the poset fits under exact_poset_cap, fast otherwise
InvariantProfile hom_profile(const PointedGraph& g, const PointedGraph& h,
                             const InvariantOptions& opt = {});

// order complex pieces
BigInt poset_euler(const HomPoset& p);
TwoSkeleton order_two_skeleton(const HomPoset& p, size_t cap = 2'000'000);
SimplicialComplex order_complex(const HomPoset& p, size_t max_chains = 200000);

// clique complex Euler characteristic of the looped part, computed by
// deleting a vertex and its link (with dismantling in between)
BigInt clique_complex_euler(const Graph& g, size_t node_cap = 1 << 22);

// x-homotopy classes of pointed maps G -> H: components of the hom graph
struct XHomotopyClasses {
  AtomHomGraph atoms;
  ComponentLabels classes;
};
XHomotopyClasses x_homotopy_classes(const PointedGraph& g, const PointedGraph& h);

// edge-path presentation of pi1 of the component of base_vertex
struct GroupPresentation {
  int generators = 0;
  std::vector<std::vector<int>> relators;  // letters +-(i+1) for generator i
};

GroupPresentation pi1_presentation(const TwoSkeleton& s, int base_vertex);
H1Summary abelianized(const GroupPresentation& g);
// random presentation-preserving rewrites (invert/swap/conjugate/multiply,
// introduce a defined generator); the group is unchanged
GroupPresentation tietze_variant(const GroupPresentation& g, Rng& rng, int moves);

}  // namespace homtop

#endif
