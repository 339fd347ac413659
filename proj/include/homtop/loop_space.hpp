#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "homtop/graph.hpp"
#include "homtop/graph_ops.hpp"
#include "homtop/util.hpp"

namespace homtop {

// A truncated path/loop is a word w(0..N) of vertex ids; the ambient bound N
// is implicit in the length.  Loop words satisfy w(0) = w(N) = basepoint and
// stabilize inside the window.
using Word = std::vector<int>;

// Smallest s with w(i) = basepoint for all i >= s (0 for the constant word).
int stabilization(const Word& w, int basepoint);

// Adjacency in G^{I_N}: w ~ w' iff w(i) ~ w'(j) for all |i - j| <= 1.
bool words_adjacent(const Graph& g, const Word& a, const Word& b);

bool is_based_word(const Word& w, int basepoint);      // endpoints at the basepoint
bool is_closed_walk(const Graph& g, const Word& w);    // consecutive values adjacent
bool is_looped_walk(const Graph& g, const Word& w);    // closed walk through looped vertices

Word constant_word(int bound, int basepoint);

// [f]^{-1}: i <= N_f -> f(N_f - i), x afterwards.  Same bound as f.
Word loop_inverse(const Word& f, int basepoint);

// (f ._{N_g} g)(i) = g(i) for i < N_g and f(i - N_g) otherwise ("g runs
// first").  shift = -1 uses the stabilization index of g; an explicit shift
// must be >= that index.  Fails with limit_exceeded ("window exceeded") when
// shift + N_f overflows the bound.
Word loop_concat(const Word& f, const Word& g, int basepoint, int shift = -1);

// The h_j family joining f ._{N_g + 1} g (row 0) to f ._{N_g} g (last row):
//   h_j(i) = g(i)             for i < N_g
//            f(i - N_g)       for N_g <= i < N_g + j
//            f(i - N_g - 1)   for i >= N_g + j     (with f(-1) := x).
// Rows j = 0 .. N_f + 1; consecutive rows are adjacent words.
std::vector<Word> shift_homotopy(const Word& f, const Word& g, int basepoint);

// Cyclic vertex order when g is a reflexive cycle (every vertex looped,
// exactly two distinct neighbours, single cycle of length >= 3).
std::optional<std::vector<int>> detect_reflexive_cycle(const Graph& g);

// Signed step sum / m of a closed walk on a reflexive m-cycle given in cyclic
// order; nullopt when some step is not between cyclic neighbours.
std::optional<int> cycle_winding(const std::vector<int>& cycle, const Word& w);

// Contraction of a null-winding closed walk on a reflexive cycle: lift the
// walk to the line and cap the lift at heights H, H-1, ..., 0.  Consecutive
// rows are adjacent; the last row is constant.  nullopt when the walk winds.
std::optional<std::vector<Word>> cycle_null_contraction(const std::vector<int>& cycle,
                                                        const Word& w);

// Omega_N G with the full vertex set: every word w(0..N) over V(G) with
// w(0) = w(N) = basepoint, no walk condition.  Used for the exponential
// commutation isomorphisms where arbitrary set maps matter.
class FullLoopGraph {
 public:
  FullLoopGraph(const PointedGraph& g, int bound, std::size_t max_vertices = 1u << 20);

  const PointedGraph& pointed() const { return pointed_; }
  const PointedGraph& ambient() const { return ambient_; }
  int bound() const { return bound_; }
  std::size_t size() const { return count_; }

  std::size_t index_of_word(const Word& w) const;
  Word word_of_index(std::size_t idx) const;

 private:
  PointedGraph ambient_;
  int bound_ = 0;
  std::size_t count_ = 0;
  PointedGraph pointed_;
};

struct LoopComponentInfo {
  int id = 0;
  std::size_t size = 0;
  std::size_t representative = 0;        // minimal (stabilization, word) member
  std::optional<int> winding;            // uniform member winding, when defined
};

struct LoopGroup {
  int identity = -1;
  std::vector<std::array<int, 3>> products;         // [a, b, class of rep_a * rep_b]
  std::vector<std::array<int, 2>> undefined_pairs;  // window exceeded
  std::vector<int> inverses;                        // per class; -1 when out of window
  bool identity_ok = true;   // [c_x].[f] = [f].[c_x] = [f] wherever defined
  bool inverse_ok = true;    // [f].[f]^{-1} = [c_x] wherever defined
  int assoc_checked = 0;     // in-window triples compared
  bool assoc_ok = true;
};

// Omega_N G materialized on closed walks: vertices are the based closed walks
// of length N (the eventually-constant paths that can carry a loop); a vertex
// is looped iff the walk runs through looped vertices only.  Components use
// the full word adjacency; when the ambient graph is a reflexive cycle every
// vertex gets a winding number and every scanned edge is audited against it.
class LoopGraph {
 public:
  LoopGraph(const PointedGraph& g, int bound, std::size_t max_vertices = 2'000'000);

  const PointedGraph& ambient() const { return ambient_; }
  int bound() const { return bound_; }
  std::size_t size() const { return words_.size(); }
  const Word& word(std::size_t i) const { return words_[i]; }
  bool looped(std::size_t i) const { return looped_[i] != 0; }
  std::size_t looped_count() const { return looped_count_; }
  std::optional<std::size_t> index_of(const Word& w) const;

  int component_count() const { return component_count_; }
  int component_of(std::size_t i) const { return component_[i]; }
  const std::vector<LoopComponentInfo>& components() const { return info_; }

  // The looped vertices as a pointed graph (word adjacency, based at the
  // constant word).  This is the ambient for an iterated loop graph: walks
  // through looped vertices of Omega G are exactly its closed walks.
  PointedGraph looped_part(std::size_t max_vertices = 4096) const;

  bool has_cycle_winding() const { return cycle_.has_value(); }
  std::optional<int> vertex_winding(std::size_t i) const;

  // True when every edge seen by the component scan joined equal windings.
  bool winding_preserved() const { return winding_preserved_; }
  std::uint64_t edges_scanned() const { return edges_scanned_; }

  LoopGroup group() const;

 private:
  void enumerate(std::size_t max_vertices);
  void scan_edges();

  PointedGraph ambient_;
  int bound_ = 0;
  std::vector<Word> words_;             // lexicographically ascending
  std::vector<char> looped_;
  std::size_t looped_count_ = 0;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> index_;
  std::optional<std::vector<int>> cycle_;
  std::vector<int> winding_;            // per vertex, valid when cycle_ is set
  std::vector<int> component_;
  int component_count_ = 0;
  std::vector<LoopComponentInfo> info_;
  bool winding_preserved_ = true;
  std::uint64_t edges_scanned_ = 0;
};

// G^{I_n} as an exponential stage (vertices are all set maps fixing the
// basepoint of I_n, i.e. words starting at x).
Exponential path_graph(const PointedGraph& g, int n);

// j_n : G^{I_n} -> G^{I_{n+1}}, extend by the last value.
GraphMap stabilization_map(const Exponential& stage_n, const Exponential& stage_next);

// phi_n : G^{I_n} -> G, f -> f(n).
GraphMap endpoint_map(const Exponential& stage_n);

// Mutually inverse isomorphisms (Omega_N G)^T <-> Omega_N(G^T):
//   alpha(f)(i)(t) = f(t)(i)  and  beta(g)(t)(i) = g(i)(t).
struct OmegaExpIso {
  PointedGraph lhs;   // (Omega_N G)^T
  PointedGraph rhs;   // Omega_N (G^T)
  GraphMap alpha;     // lhs -> rhs
  GraphMap beta;      // rhs -> lhs
};
OmegaExpIso omega_exp_iso(const PointedGraph& g, const PointedGraph& t, int bound);

}  // namespace homtop
