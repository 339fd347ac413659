#ifndef HOMTOP_CLOSURE_HPP
#define HOMTOP_CLOSURE_HPP

#include <cstdint>
#include <vector>

#include "homtop/graph.hpp"
#include "homtop/graph_ops.hpp"
#include "homtop/hom_poset.hpp"

namespace homtop {

// Relates P = Hom_*(A ^ B, C) to Q = Hom_*(A, C^B) for pointed graphs A, B, C
// (^ is the smash product).  The transfer j sends a multihom on the smash to a
// multihom valued in the exponential, and the box completion c is a closure
// operator on Q whose fixed points are exactly j(P).
class AdjunctionClosure {
 public:
  AdjunctionClosure(const PointedGraph& a, const PointedGraph& b, const PointedGraph& c,
                    HomBuildOptions opt = {});

  // Same, but reuses a previously built copy of Hom_*(A, C^B) when it matches
  // this instance (checked against the graphs; a stale hint just rebuilds).
  // C^B depends only on the orders and basepoints of B and C together with
  // C's adjacency, so distinct middle graphs often share the poset.
  AdjunctionClosure(const PointedGraph& a, const PointedGraph& b, const PointedGraph& c,
                    const HomPoset& exp_hint, HomBuildOptions opt = {});

  const AdjunctionContext& context() const { return ctx_; }
  const HomPoset& smash_poset() const { return p_; }  // Hom_*(A ^ B, C)
  const HomPoset& exp_poset() const { return q_; }    // Hom_*(A, C^B)

  // j(alpha)(a) = { f in C^B : f(b) in alpha([a,b]) for every b }
  std::vector<uint64_t> j_masks(const uint64_t* alpha) const;
  size_t j_of(size_t p_index) const;

  // c(gamma)(a) = { f : f(b) in proj_b(gamma(a)) for every b }; acts
  // coordinatewise, so the whole operator is determined by its effect
  // c_box on a single set of exponential vertices.
  uint64_t c_box(uint64_t set) const;
  std::vector<uint64_t> c_masks(const uint64_t* gamma) const;
  size_t c_of(size_t q_index) const;

  bool is_closed(size_t q_index) const;
  std::vector<uint32_t> closed_elements() const;
  std::vector<uint32_t> j_image() const;

 private:
  AdjunctionContext ctx_;
  HomPoset p_, q_;
  std::vector<std::vector<int>> exp_images_;  // vertex of C^B -> full image vector on V(B)
};

// A fold v -> u (N(v) subset of N(u), v not the basepoint) in the first
// coordinate of P = Hom_*(G, H).  phi pads the v-value with the u-value and is
// a closure operator; psi, defined where eta(u) <= eta(v), replaces the
// v-value by the u-value.  The composite psi(phi(.)) retracts P onto a copy of
// Hom_*(G \ v, H).
class SourceFold {
 public:
  SourceFold(const PointedGraph& g, const PointedGraph& h, Fold fold, HomBuildOptions opt = {});

  const HomPoset& poset() const { return p_; }
  const HomPoset& folded_poset() const { return pf_; }
  const PointedGraph& folded_graph() const { return fold_result_.folded; }
  const Fold& fold() const { return fold_result_.fold; }

  size_t phi(size_t i) const;
  bool in_x(size_t i) const;  // eta(u) subset of eta(v)
  size_t psi(size_t i) const;
  size_t retract(size_t i) const;  // psi(phi(i)); fixed points have eta(v) == eta(u)

  size_t to_folded(size_t i) const;    // defined when eta(v) == eta(u)
  size_t from_folded(size_t i) const;  // duplicate the u-value onto v

 private:
  PointedGraph g_, h_;
  FoldResult fold_result_;
  HomPoset p_, pf_;
};

// The same fold acting in the second coordinate of P = Hom_*(H, G).  rho adds
// u wherever v appears and is a closure operator; sigma, defined where every
// value containing v also contains u, deletes v.  The composite
// sigma(rho(.)) retracts P onto a copy of Hom_*(H, G \ v).
class TargetFold {
 public:
  TargetFold(const PointedGraph& h, const PointedGraph& g, Fold fold, HomBuildOptions opt = {});

  const HomPoset& poset() const { return p_; }
  const HomPoset& folded_poset() const { return pf_; }
  const PointedGraph& folded_graph() const { return fold_result_.folded; }
  const Fold& fold() const { return fold_result_.fold; }

  size_t rho(size_t i) const;
  bool in_y(size_t i) const;  // v in beta(w) implies u in beta(w)
  size_t sigma(size_t i) const;
  size_t retract(size_t i) const;  // sigma(rho(i)); fixed points avoid v

  size_t to_folded(size_t i) const;    // defined when no value contains v
  size_t from_folded(size_t i) const;

 private:
  PointedGraph h_, g_;
  FoldResult fold_result_;
  HomPoset p_, pf_;
  std::vector<int> new_bit_;  // old target vertex -> folded index (-1 for v)
};

}  // namespace homtop

#endif
