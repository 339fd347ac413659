#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "homtop/graph.hpp"
#include "homtop/graph_ops.hpp"
#include "homtop/random_gen.hpp"
#include "homtop/util.hpp"

#include "oracles.hpp"

using namespace homtop;

namespace {

Graph path3_loops() {
  Graph g(3, {"a", "b", "c"});
  g.add_edge(0, 0);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  return g;
}

}  // namespace

TEST_CASE("graph storage and queries") {
  Graph g = path3_loops();
  CHECK(g.order() == 3);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK(!g.adjacent(0, 2));
  CHECK(g.looped(0));
  CHECK(!g.looped(1));
  CHECK(g.edge_count() == 3);
  CHECK(g.loop_count() == 1);
  CHECK(g.label(2) == "c");
  CHECK(g.index_of("b") == 1);

  auto nb0 = g.neighbors(0);
  CHECK(std::set<int>(nb0.begin(), nb0.end()) == std::set<int>({0, 1}));
  auto edges = g.edges();
  CHECK(edges.size() == 3);
  for (auto [u, v] : edges) CHECK(u <= v);

  g.remove_edge(0, 1);
  CHECK(!g.adjacent(0, 1));
  CHECK(g.edge_count() == 2);
}

TEST_CASE("induced subgraph keeps adjacency and labels") {
  Graph g = path3_loops();
  Graph sub = g.induced({0, 2});
  CHECK(sub.order() == 2);
  CHECK(sub.label(0) == "a");
  CHECK(sub.label(1) == "c");
  CHECK(sub.looped(0));
  CHECK(!sub.adjacent(0, 1));
}

TEST_CASE("pointed graph validation requires a looped basepoint") {
  Graph g = path3_loops();
  CHECK_NOTHROW(PointedGraph(g, 0).validate());
  CHECK_THROWS_AS(PointedGraph(g, 1).validate(), Error);
}

TEST_CASE("interval graphs") {
  for (int n = 0; n <= 3; ++n) {
    PointedGraph in = make_interval(n);
    CHECK(in.graph.order() == n + 1);
    CHECK(in.basepoint == 0);
    for (int v = 0; v <= n; ++v) {
      CHECK(in.graph.looped(v));
      CHECK(in.graph.label(v) == std::to_string(v));
      if (v < n) CHECK(in.graph.adjacent(v, v + 1));
      if (v + 2 <= n) CHECK(!in.graph.adjacent(v, v + 2));
    }
  }
}

TEST_CASE("one star is two disjoint looped vertices") {
  PointedGraph os = make_one_star();
  CHECK(os.graph.order() == 2);
  CHECK(os.graph.label(0) == "1");
  CHECK(os.graph.label(1) == "*");
  CHECK(os.basepoint == 1);
  CHECK(os.graph.looped(0));
  CHECK(os.graph.looped(1));
  CHECK(!os.graph.adjacent(0, 1));
}

TEST_CASE("products follow their definitions") {
  Graph a = path3_loops();
  Graph b(2, {"u", "v"});
  b.add_edge(0, 1);
  b.add_edge(1, 1);

  Graph cat = categorical_product(a, b);
  Graph box = cartesian_product(a, b);
  REQUIRE(cat.order() == 6);
  REQUIRE(box.order() == 6);
  for (int va = 0; va < 3; ++va)
    for (int vb = 0; vb < 2; ++vb)
      for (int wa = 0; wa < 3; ++wa)
        for (int wb = 0; wb < 2; ++wb) {
          int p = va * 2 + vb, q = wa * 2 + wb;
          bool cat_expect = a.adjacent(va, wa) && b.adjacent(vb, wb);
          bool box_expect = (va == wa && b.adjacent(vb, wb)) || (vb == wb && a.adjacent(va, wa));
          CHECK(cat.adjacent(p, q) == cat_expect);
          CHECK(box.adjacent(p, q) == box_expect);
        }
  CHECK(cat.label(1) == "(a,v)");
}

TEST_CASE("smash product identifies the axes") {
  PointedGraph k2{[] {
                    Graph g(2, {"x", "a"});
                    g.add_edge(0, 0);
                    g.add_edge(0, 1);
                    return g;
                  }(),
                  0};
  SmashProduct sp = smash_product(k2, k2);
  // (2-1)*(2-1) + 1 vertices: the collapsed axes plus (a, a)
  CHECK(sp.quotient.graph.order() == 2);
  CHECK(sp.quotient.graph.looped(sp.quotient.basepoint));
  for (int va = 0; va < 2; ++va)
    for (int vb = 0; vb < 2; ++vb) {
      int cls = sp.vertex_of(va, vb, 2);
      if (va == 0 || vb == 0)
        CHECK(cls == sp.quotient.basepoint);
      else
        CHECK(cls != sp.quotient.basepoint);
    }
}

TEST_CASE("exponential vertices are set maps with the hom adjacency") {
  PointedGraph tgt{path3_loops(), 0};
  PointedGraph src = make_one_star();
  Exponential e(tgt, src);
  // maps fix the basepoint, one free coordinate
  CHECK(e.graph().graph.order() == 3);
  for (int i = 0; i < 3; ++i) {
    auto m = e.map_of_index(i);
    CHECK(e.index_of_map(m) == i);
    CHECK(m[static_cast<size_t>(src.basepoint)] == tgt.basepoint);
  }
  // looped vertices are exactly the pointed homs
  auto homs = oracle::all_homs(src.graph, tgt.graph, src.basepoint, tgt.basepoint);
  std::set<std::vector<int>> hom_set(homs.begin(), homs.end());
  for (int i = 0; i < 3; ++i)
    CHECK(e.graph().graph.looped(i) == (hom_set.count(e.map_of_index(i)) > 0));
}

TEST_CASE("pointed hom enumeration matches the brute-force oracle") {
  auto graphs = all_pointed_graphs(3);
  REQUIRE(graphs.size() == 37);
  for (const auto& g : graphs)
    for (const auto& h : graphs) {
      auto lib = enumerate_pointed_homs(g, h);
      auto ref = oracle::all_homs(g.graph, h.graph, g.basepoint, h.basepoint);
      CHECK(lib == ref);
    }
}

TEST_CASE("unpointed hom enumeration matches the oracle") {
  Graph a = path3_loops();
  Graph b(2, {"u", "v"});
  b.add_edge(0, 1);
  b.add_edge(0, 0);
  CHECK(enumerate_homs(a, b) == oracle::all_homs(a, b));
  CHECK(enumerate_homs(b, a) == oracle::all_homs(b, a));
}

TEST_CASE("adjunction bijection on a pinned triple") {
  auto graphs = all_pointed_graphs(3);
  const PointedGraph& a = graphs[12];
  const PointedGraph& b = graphs[20];
  const PointedGraph& c = graphs[33];
  AdjunctionContext ctx(a, b, c);
  auto left = enumerate_pointed_homs(ctx.smash.quotient, c);
  auto right = enumerate_pointed_homs(a, ctx.exp.graph());
  REQUIRE(left.size() == right.size());
  std::set<std::vector<int>> images;
  for (const auto& f : left) {
    auto fwd = adjunction_forward(ctx, f);
    CHECK(std::binary_search(right.begin(), right.end(), fwd));
    CHECK(adjunction_backward(ctx, fwd) == f);
    images.insert(fwd);
  }
  CHECK(images.size() == left.size());
}

TEST_CASE("folds and dismantling") {
  PointedGraph in3 = make_interval(3);
  auto fold = find_fold(in3);
  REQUIRE(fold.has_value());
  // the free endpoint folds onto its neighbour
  CHECK(fold->v != in3.basepoint);
  FoldResult fr = apply_fold(in3, *fold);
  CHECK(fr.folded.graph.order() == 3);
  CHECK(fr.retraction.is_graph_map());
  CHECK(fr.inclusion.is_graph_map());
  GraphMap around = compose(fr.retraction, fr.inclusion);
  for (int v = 0; v < fr.folded.graph.order(); ++v)
    CHECK(around.map[static_cast<size_t>(v)] == v);

  DismantleResult d = dismantle(in3);
  CHECK(d.core.graph.order() == 1);
  CHECK(d.folds.size() == 3);
  CHECK(d.retraction.is_graph_map());
  CHECK(d.core.graph.label(d.core.basepoint) == "0");

  // with a loop only at y, the opposite corner folds onto it
  Graph c4(4, {"y", "1", "2", "3"});
  c4.add_edge(0, 0);
  c4.add_edge(0, 1);
  c4.add_edge(1, 2);
  c4.add_edge(2, 3);
  c4.add_edge(3, 0);
  CHECK(dismantle(PointedGraph{c4, 0}).core.graph.order() == 1);

  // the reflexive 4-cycle is stiff: no neighborhood contains another
  for (int v = 0; v < 4; ++v) c4.add_edge(v, v);
  CHECK(!find_fold(PointedGraph{c4, 0}).has_value());
}

TEST_CASE("isomorphism helpers see through relabeling") {
  Graph g = path3_loops();
  Graph h(3, {"p", "q", "r"});
  h.add_edge(2, 2);
  h.add_edge(2, 1);
  h.add_edge(1, 0);
  CHECK(graphs_isomorphic(g, h));
  CHECK(pointed_isomorphic(PointedGraph{g, 0}, PointedGraph{h, 2}));
  Graph k = path3_loops();
  k.add_edge(0, 2);
  CHECK(!graphs_isomorphic(g, k));
}

TEST_CASE("rng is a deterministic stream") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng c(43);
  bool differs = false;
  Rng a2(42);
  for (int i = 0; i < 10; ++i) differs = differs || (a2.next() != c.next());
  CHECK(differs);
}

TEST_CASE("random pointed graphs are valid and seeded") {
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    PointedGraph g = random_pointed_graph(rng, 2, 4);
    CHECK(g.graph.order() >= 2);
    CHECK(g.graph.order() <= 4);
    CHECK(g.graph.looped(g.basepoint));
    CHECK_NOTHROW(g.validate());
  }
  Rng r1(11), r2(11);
  for (int t = 0; t < 10; ++t) {
    PointedGraph a = random_pointed_graph(r1, 1, 4);
    PointedGraph b = random_pointed_graph(r2, 1, 4);
    CHECK(a.graph.same_adjacency(b.graph));
    CHECK(a.basepoint == b.basepoint);
  }
}

TEST_CASE("exhaustive pointed graph enumeration") {
  auto g3 = all_pointed_graphs(3);
  CHECK(g3.size() == 37);
  auto g4 = all_pointed_graphs(4);
  CHECK(g4.size() == 549);
  std::set<std::vector<uint64_t>> canon;
  for (const auto& g : g4) {
    CHECK(g.graph.looped(g.basepoint));
    CHECK_NOTHROW(g.validate());
    std::vector<uint64_t> key;
    for (int v = 0; v < g.graph.order(); ++v) {
      const uint64_t* row = g.graph.row(v);
      key.push_back(row[0]);
    }
    key.push_back(static_cast<uint64_t>(g.graph.order()));
    canon.insert(key);
  }
  // all enumerated labeled graphs are distinct
  CHECK(canon.size() == g4.size());
}
