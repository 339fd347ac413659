#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>
#include <set>
#include <vector>

#include "homtop/closure.hpp"
#include "homtop/graph_ops.hpp"
#include "homtop/hom_poset.hpp"
#include "homtop/random_gen.hpp"
#include "homtop/util.hpp"

#include "oracles.hpp"

using namespace homtop;

namespace {

std::vector<std::vector<uint64_t>> poset_mask_tuples(const HomPoset& p) {
  std::vector<std::vector<uint64_t>> out;
  for (size_t i = 0; i < p.size(); ++i)
    out.emplace_back(p.at(i), p.at(i) + p.stride);
  return out;
}

int popcount_diff(const uint64_t* a, const uint64_t* b, int stride) {
  int total = 0;
  for (int v = 0; v < stride; ++v) total += std::popcount(a[v] ^ b[v]);
  return total;
}

}  // namespace

TEST_CASE("multihom posets match the odometer oracle") {
  auto graphs = all_pointed_graphs(3);
  for (const auto& g : graphs)
    for (const auto& h : graphs) {
      HomPoset p = build_hom_star(g, h);
      auto ref = oracle::all_multihoms(g.graph, h.graph, g.basepoint, h.basepoint);
      REQUIRE(p.size() == ref.size());
      CHECK(poset_mask_tuples(p) == ref);  // same sort order pins indices
      CHECK(p.size() >= 1);                // the constant-basepoint multihom always exists
      CHECK(p.basepoint_element() >= 0);
    }
}

TEST_CASE("unpointed posets can be empty") {
  Graph loopless(2, {"a", "b"});
  loopless.add_edge(0, 1);
  Graph single(1, {"z"});
  single.add_edge(0, 0);
  // maps from a looped vertex into a loopless graph do not exist
  HomPoset p = build_hom(single, loopless);
  CHECK(p.size() == 0);
  CHECK(oracle::all_multihoms(single, loopless).empty());
}

TEST_CASE("atoms are the pointed homs in enumeration order") {
  auto graphs = all_pointed_graphs(3);
  for (size_t gi = 0; gi < graphs.size(); gi += 5)
    for (size_t hi = 0; hi < graphs.size(); hi += 3) {
      const auto& g = graphs[gi];
      const auto& h = graphs[hi];
      HomPoset p = build_hom_star(g, h);
      auto homs = enumerate_pointed_homs(g, h);
      REQUIRE(p.atoms().size() == homs.size());
      for (size_t k = 0; k < homs.size(); ++k) {
        const uint64_t* m = p.at(p.atoms()[k]);
        for (int v = 0; v < g.graph.order(); ++v)
          CHECK(m[v] == (1ULL << homs[k][static_cast<size_t>(v)]));
        CHECK(p.is_atom(p.atoms()[k]));
      }
    }
}

TEST_CASE("leq is containment and lookup inverts at") {
  PointedGraph g = make_interval(2);
  PointedGraph h{[] {
                   Graph c(3, {"x", "a", "b"});
                   c.add_edge(0, 0);
                   c.add_edge(1, 1);
                   c.add_edge(0, 1);
                   c.add_edge(1, 2);
                   return c;
                 }(),
                 0};
  HomPoset p = build_hom_star(g, h);
  for (size_t i = 0; i < p.size(); ++i) {
    CHECK(p.lookup(p.at(i)) == static_cast<long long>(i));
    CHECK(p.leq(i, i));
    CHECK(p.element_valid(p.at(i)));
    for (size_t j = 0; j < p.size(); ++j) {
      bool contained = true;
      for (int v = 0; v < p.stride; ++v)
        if (p.at(i)[v] & ~p.at(j)[v]) contained = false;
      CHECK(p.leq(i, j) == contained);
      if (i != j && p.leq(i, j)) CHECK(!p.leq(j, i));
    }
  }
}

TEST_CASE("covers add exactly one target vertex with nothing between") {
  auto graphs = all_pointed_graphs(3);
  const auto& g = graphs[30];
  const auto& h = graphs[36];
  HomPoset p = build_hom_star(g, h);
  size_t cover_total = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    auto above = p.covers_above(i);
    std::set<uint32_t> covers(above.begin(), above.end());
    cover_total += covers.size();
    for (size_t j = 0; j < p.size(); ++j) {
      bool expect = i != j && p.leq(i, j) && popcount_diff(p.at(i), p.at(j), p.stride) == 1;
      CHECK((covers.count(static_cast<uint32_t>(j)) > 0) == expect);
    }
  }
  CHECK(p.cover_edge_count() == cover_total);
}

TEST_CASE("poset build respects the element cap") {
  PointedGraph g = make_interval(3);
  Graph k(4, {"x", "a", "b", "c"});
  for (int v = 0; v < 4; ++v) k.add_edge(v, v);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) k.add_edge(u, v);
  PointedGraph kr{k, 0};
  CHECK_THROWS_AS(build_hom_star(g, kr, HomBuildOptions{10}), Error);
  try {
    build_hom_star(g, kr, HomBuildOptions{10});
  } catch (const Error& e) {
    CHECK(e.status() == Status::limit_exceeded);
  }
}

TEST_CASE("hom graph adjacency is the all-pairs condition") {
  auto graphs = all_pointed_graphs(3);
  const auto& g = graphs[25];
  const auto& h = graphs[34];
  AtomHomGraph a = atom_hom_graph(g, h);
  REQUIRE(a.homs == enumerate_pointed_homs(g, h));
  for (size_t i = 0; i < a.homs.size(); ++i)
    for (size_t j = 0; j < a.homs.size(); ++j) {
      bool expect = true;
      for (int v = 0; v < g.graph.order(); ++v)
        for (int w = v; w < g.graph.order(); ++w)
          if (g.graph.adjacent(v, w)) {
            int fv = a.homs[i][static_cast<size_t>(v)], fw = a.homs[j][static_cast<size_t>(w)];
            int gv = a.homs[j][static_cast<size_t>(v)], gw = a.homs[i][static_cast<size_t>(w)];
            if (!h.graph.adjacent(fv, fw) || !h.graph.adjacent(gv, gw)) expect = false;
          }
      CHECK(a.graph.graph.adjacent(static_cast<int>(i), static_cast<int>(j)) == expect);
    }
  CHECK(a.graph.basepoint >= 0);
  CHECK(a.graph.graph.looped(a.graph.basepoint));
}

TEST_CASE("adjunction closure on a pinned triple") {
  auto graphs = all_pointed_graphs(2);
  const PointedGraph& a = graphs[3];  // looped pair with an edge
  const PointedGraph& b = graphs[4];
  const PointedGraph& c = graphs[3];
  AdjunctionClosure ac(a, b, c);
  const HomPoset& p = ac.smash_poset();
  const HomPoset& q = ac.exp_poset();

  std::set<size_t> image;
  for (size_t i = 0; i < p.size(); ++i) {
    size_t ji = ac.j_of(i);
    image.insert(ji);
    CHECK(ac.is_closed(ji));
    for (size_t k = 0; k < p.size(); ++k)
      if (p.leq(i, k)) CHECK(q.leq(ji, ac.j_of(k)));
  }
  CHECK(image.size() == p.size());

  std::vector<uint32_t> closed;
  for (size_t i = 0; i < q.size(); ++i) {
    size_t ci = ac.c_of(i);
    CHECK(q.leq(i, ci));
    CHECK(ac.c_of(ci) == ci);
    if (ci == i) closed.push_back(static_cast<uint32_t>(i));
  }
  CHECK(ac.closed_elements() == closed);
  std::vector<uint32_t> jimg(image.begin(), image.end());
  CHECK(ac.j_image() == jimg);
  CHECK(closed == jimg);
}

TEST_CASE("source fold closure operators on a pinned pair") {
  PointedGraph g = make_interval(2);
  auto graphs = all_pointed_graphs(3);
  const PointedGraph& h = graphs[36];
  auto fold = find_fold(g);
  REQUIRE(fold.has_value());
  SourceFold sf(g, h, *fold);
  const HomPoset& p = sf.poset();
  const HomPoset& pf = sf.folded_poset();
  size_t fixed = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    CHECK(p.leq(i, sf.phi(i)));
    CHECK(sf.phi(sf.phi(i)) == sf.phi(i));
    if (sf.in_x(i)) CHECK(p.leq(sf.psi(i), i));
    size_t r = sf.retract(i);
    CHECK(sf.retract(r) == r);
    if (r == i) {
      ++fixed;
      CHECK(sf.from_folded(sf.to_folded(i)) == i);
    }
  }
  CHECK(fixed == pf.size());
  // folded poset equals the direct construction on G \ v
  HomPoset direct = build_hom_star(sf.folded_graph(), h);
  CHECK(pf.size() == direct.size());
}

TEST_CASE("target fold closure operators on a pinned pair") {
  PointedGraph g = make_interval(2);
  auto graphs = all_pointed_graphs(3);
  const PointedGraph& h = graphs[36];
  auto fold = find_fold(g);
  REQUIRE(fold.has_value());
  TargetFold tf(h, g, *fold);
  const HomPoset& p = tf.poset();
  const HomPoset& pf = tf.folded_poset();
  size_t fixed = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    CHECK(p.leq(i, tf.rho(i)));
    CHECK(tf.rho(tf.rho(i)) == tf.rho(i));
    if (tf.in_y(i)) CHECK(p.leq(tf.sigma(i), i));
    size_t r = tf.retract(i);
    CHECK(tf.retract(r) == r);
    if (r == i) {
      ++fixed;
      CHECK(tf.from_folded(tf.to_folded(i)) == i);
    }
  }
  CHECK(fixed == pf.size());
  HomPoset direct = build_hom_star(h, tf.folded_graph());
  CHECK(pf.size() == direct.size());
}

TEST_CASE("poset maps induced by graph maps are monotone") {
  PointedGraph g = make_interval(1);
  PointedGraph h = make_interval(2);
  // map I_2 -> I_1 collapsing the far end
  GraphMap f{h.graph, g.graph, {0, 1, 1}};
  REQUIRE(f.is_graph_map());
  HomPoset p = build_hom_star(g, h);   // Hom(I_1, I_2)
  HomPoset q = build_hom_star(h, h);   // Hom(I_2, I_2)
  PosetMap m = induced_map_source(p, f, q);  // precompose with f
  CHECK(m.monotone_on_covers());
  for (size_t i = 0; i < p.size(); ++i) {
    size_t img = m.image[i];
    // each coordinate of the image is the source value pulled through f
    for (int v = 0; v < h.graph.order(); ++v)
      CHECK(q.at(img)[v] == p.at(i)[f.map[static_cast<size_t>(v)]]);
  }
  for (size_t t = 0; t < q.size(); ++t) {
    auto fib = quillen_fiber(m, t);
    for (uint32_t e : fib) CHECK(q.leq(m.image[e], t));
  }
}

TEST_CASE("comparable pairs enumerates the strict order") {
  PointedGraph g = make_one_star();
  auto graphs = all_pointed_graphs(3);
  const PointedGraph& h = graphs[36];
  HomPoset p = build_hom_star(g, h);
  auto pairs = comparable_pairs(p, 1 << 20);
  size_t direct = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < p.size(); ++j)
      if (i != j && p.leq(i, j)) ++direct;
  CHECK(pairs.size() == direct);
  for (auto [i, j] : pairs) {
    CHECK(i != j);
    CHECK(p.leq(i, j));
  }
}
