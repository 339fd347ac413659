#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <vector>

#include "homtop/graph_ops.hpp"
#include "homtop/loop_space.hpp"
#include "homtop/theorem_maps.hpp"
#include "homtop/util.hpp"

#include "oracles.hpp"

using namespace homtop;

namespace {

PointedGraph reflexive_cycle(int m) {
  std::vector<std::string> labels{"x"};
  for (int v = 1; v < m; ++v) labels.push_back(std::to_string(v));
  Graph g(m, labels);
  for (int v = 0; v < m; ++v) {
    g.add_edge(v, v);
    g.add_edge(v, (v + 1) % m);
  }
  return PointedGraph{g, 0};
}

// four-cycle with a loop only at the basepoint
PointedGraph loop_y_cycle() {
  Graph g(4, {"y", "1", "2", "3"});
  g.add_edge(0, 0);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 0);
  return PointedGraph{g, 0};
}

Word pad(Word w, int bound, int basepoint) {
  w.resize(static_cast<size_t>(bound) + 1, basepoint);
  return w;
}

}  // namespace

TEST_CASE("word primitives") {
  PointedGraph c4 = reflexive_cycle(4);
  int bp = c4.basepoint;

  Word c = constant_word(6, bp);
  CHECK(c == Word{0, 0, 0, 0, 0, 0, 0});
  CHECK(stabilization(c, bp) == 0);
  CHECK(is_based_word(c, bp));
  CHECK(is_looped_walk(c4.graph, c));

  Word f = pad({0, 1, 2, 3, 0}, 6, bp);
  CHECK(stabilization(f, bp) == 4);
  CHECK(is_based_word(f, bp));
  CHECK(is_closed_walk(c4.graph, f));
  CHECK(is_looped_walk(c4.graph, f));
  CHECK(!is_based_word(pad({0, 1}, 6, 1), bp));
  CHECK(!is_closed_walk(c4.graph, pad({0, 2, 0}, 6, bp)));  // 0-2 is a jump

  CHECK(loop_inverse(f, bp) == pad({0, 3, 2, 1, 0}, 6, bp));
  CHECK(loop_inverse(loop_inverse(f, bp), bp) == f);

  // adjacency needs every window pair adjacent
  CHECK(words_adjacent(c4.graph, c, pad({0, 1, 0}, 6, bp)));
  CHECK(!words_adjacent(c4.graph, pad({0, 1, 0}, 6, bp), pad({0, 3, 0}, 6, bp)));

  PointedGraph ly = loop_y_cycle();
  Word visit = pad({0, 1, 2, 3, 0}, 6, 0);
  CHECK(is_closed_walk(ly.graph, visit));
  CHECK(!is_looped_walk(ly.graph, visit));  // 1,2,3 are unlooped
  CHECK(words_adjacent(ly.graph, constant_word(6, 0), pad({0, 1, 0}, 6, 0)));
  CHECK(!words_adjacent(ly.graph, pad({0, 1, 0}, 6, 0), pad({0, 1, 0}, 6, 0)));
}

TEST_CASE("loop graph vertices are exactly the based closed walks") {
  std::vector<std::pair<PointedGraph, int>> cases = {
      {loop_y_cycle(), 4}, {loop_y_cycle(), 5}, {reflexive_cycle(4), 4},
      {reflexive_cycle(5), 5}, {make_interval(2), 4}};
  for (const auto& [g, bound] : cases) {
    LoopGraph lg(g, bound);
    std::vector<Word> got;
    for (size_t i = 0; i < lg.size(); ++i) got.push_back(lg.word(i));
    CHECK(got == oracle::closed_walks(g.graph, g.basepoint, bound));

    size_t looped = 0;
    for (size_t i = 0; i < lg.size(); ++i) {
      bool all = true;
      for (int v : lg.word(i)) all = all && g.graph.looped(v);
      CHECK(lg.looped(i) == all);
      if (all) ++looped;
      CHECK(lg.index_of(lg.word(i)) == i);
    }
    CHECK(lg.looped_count() == looped);
  }
  // a word outside the graph
  LoopGraph lg(loop_y_cycle(), 4);
  CHECK(!lg.index_of(pad({0, 2, 0}, 4, 0)).has_value());
}

TEST_CASE("loop components follow the word adjacency") {
  for (const auto& [g, bound] : std::vector<std::pair<PointedGraph, int>>{
           {reflexive_cycle(4), 5}, {loop_y_cycle(), 5}}) {
    LoopGraph lg(g, bound);
    int ref = oracle::component_count(static_cast<int>(lg.size()), [&](int a, int b) {
      return words_adjacent(g.graph, lg.word(static_cast<size_t>(a)),
                            lg.word(static_cast<size_t>(b)));
    });
    CHECK(lg.component_count() == ref);

    for (size_t i = 0; i < lg.size(); ++i)
      for (size_t j = i + 1; j < lg.size(); ++j)
        if (words_adjacent(g.graph, lg.word(i), lg.word(j)))
          CHECK(lg.component_of(i) == lg.component_of(j));

    size_t total = 0;
    for (const LoopComponentInfo& info : lg.components()) {
      CHECK(info.id == lg.component_of(info.representative));
      total += info.size;
      int rep_stab = stabilization(lg.word(info.representative), g.basepoint);
      for (size_t i = 0; i < lg.size(); ++i)
        if (lg.component_of(i) == info.id)
          CHECK(stabilization(lg.word(i), g.basepoint) >= rep_stab);
    }
    CHECK(total == lg.size());
  }
}

TEST_CASE("reflexive cycle detection") {
  CHECK(detect_reflexive_cycle(reflexive_cycle(4).graph) == std::vector<int>{0, 1, 2, 3});
  CHECK(detect_reflexive_cycle(reflexive_cycle(5).graph) == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(!detect_reflexive_cycle(make_interval(3).graph).has_value());
  CHECK(!detect_reflexive_cycle(loop_y_cycle().graph).has_value());

  PointedGraph chord = reflexive_cycle(4);
  chord.graph.add_edge(0, 2);
  CHECK(!detect_reflexive_cycle(chord.graph).has_value());

  // triangles detect, but the loop graph refuses to assign windings there:
  // rotating a triangle walk one step at a time changes the naive step sum
  CHECK(detect_reflexive_cycle(reflexive_cycle(3).graph).has_value());
  CHECK(!LoopGraph(reflexive_cycle(3), 4).has_cycle_winding());
  CHECK(LoopGraph(reflexive_cycle(4), 4).has_cycle_winding());
}

TEST_CASE("winding numbers") {
  std::vector<int> cyc{0, 1, 2, 3};
  CHECK(cycle_winding(cyc, pad({0, 1, 2, 3, 0}, 4, 0)) == 1);
  CHECK(cycle_winding(cyc, pad({0, 3, 2, 1, 0}, 4, 0)) == -1);
  CHECK(cycle_winding(cyc, constant_word(4, 0)) == 0);
  CHECK(cycle_winding(cyc, pad({0, 1, 0, 1, 0}, 4, 0)) == 0);
  CHECK(cycle_winding(cyc, Word{0, 1, 2, 3, 0, 1, 2, 3, 0}) == 2);
  CHECK(!cycle_winding(cyc, pad({0, 2, 0}, 4, 0)).has_value());

  LoopGraph lg(reflexive_cycle(4), 6);
  REQUIRE(lg.has_cycle_winding());
  CHECK(lg.winding_preserved());
  CHECK(lg.edges_scanned() > 0);
  for (size_t i = 0; i < lg.size(); ++i)
    CHECK(lg.vertex_winding(i) == cycle_winding(cyc, lg.word(i)));
  for (const LoopComponentInfo& info : lg.components()) {
    REQUIRE(info.winding.has_value());
    CHECK(lg.vertex_winding(info.representative) == *info.winding);
  }
}

TEST_CASE("null contractions cap the lift") {
  PointedGraph c5 = reflexive_cycle(5);
  std::vector<int> cyc = *detect_reflexive_cycle(c5.graph);

  auto check_rows = [&](const Word& w) {
    auto rows = cycle_null_contraction(cyc, w);
    REQUIRE(rows.has_value());
    REQUIRE(!rows->empty());
    CHECK(rows->front() == w);
    CHECK(rows->back() == constant_word(static_cast<int>(w.size()) - 1, w.front()));
    for (const Word& row : *rows) {
      CHECK(is_based_word(row, w.front()));
      CHECK(is_closed_walk(c5.graph, row));
    }
    for (size_t r = 0; r + 1 < rows->size(); ++r)
      CHECK(words_adjacent(c5.graph, (*rows)[r], (*rows)[r + 1]));
    return rows->size();
  };

  CHECK(check_rows(pad({0, 1, 2, 1, 0}, 5, 0)) == 3);   // rises to height 2
  CHECK(check_rows(pad({0, 4, 3, 4, 0}, 5, 0)) == 3);   // dips to height -2
  CHECK(check_rows(pad({0, 1, 0, 4, 0}, 5, 0)) == 2);   // crosses both sides
  CHECK(check_rows(constant_word(5, 0)) == 1);
  CHECK(!cycle_null_contraction(cyc, pad({0, 1, 2, 3, 4, 0}, 5, 0)).has_value());
  CHECK(!cycle_null_contraction(cyc, pad({0, 4, 3, 2, 1, 0}, 5, 0)).has_value());

  // contraction exists exactly for the null-winding loop-graph vertices
  LoopGraph lg(c5, 5);
  for (size_t i = 0; i < lg.size(); ++i) {
    auto rows = cycle_null_contraction(cyc, lg.word(i));
    CHECK(rows.has_value() == (lg.vertex_winding(i) == 0));
  }
}

TEST_CASE("concatenation runs the second factor first") {
  PointedGraph c4 = reflexive_cycle(4);
  int bp = c4.basepoint;
  Word f = pad({0, 1, 2, 3, 0}, 10, bp);

  Word ff = loop_concat(f, f, bp);
  CHECK(ff == pad({0, 1, 2, 3, 0, 1, 2, 3, 0}, 10, bp));
  CHECK(stabilization(ff, bp) == stabilization(f, bp) * 2);

  CHECK(loop_concat(f, f, bp, 5) == pad({0, 1, 2, 3, 0, 0, 1, 2, 3, 0}, 10, bp));
  CHECK(loop_concat(f, constant_word(10, bp), bp) == f);
  CHECK(loop_concat(constant_word(10, bp), f, bp) == f);

  CHECK_THROWS_WITH_AS(loop_concat(f, f, bp, 3), doctest::Contains("shift"), Error);
  try {
    loop_concat(f, f, bp, 7);  // 7 + 4 exceeds the bound of 10
    FAIL("expected window overflow");
  } catch (const Error& e) {
    CHECK(e.status() == Status::limit_exceeded);
    CHECK(std::string(e.what()).find("window exceeded") != std::string::npos);
  }

  // inverse concatenation contracts: winding cancels
  Word fi = loop_inverse(f, bp);
  Word prod = loop_concat(fi, f, bp);
  CHECK(cycle_winding({0, 1, 2, 3}, prod) == 0);
  CHECK(cycle_null_contraction({0, 1, 2, 3}, prod).has_value());
}

TEST_CASE("shift homotopy joins the two concatenations") {
  PointedGraph c4 = reflexive_cycle(4);
  int bp = c4.basepoint;
  Word f = pad({0, 1, 2, 3, 0}, 10, bp);
  Word g = pad({0, 3, 2, 1, 0}, 10, bp);

  auto rows = shift_homotopy(f, g, bp);
  int nf = stabilization(f, bp), ng = stabilization(g, bp);
  REQUIRE(static_cast<int>(rows.size()) == nf + 2);
  CHECK(rows.front() == loop_concat(f, g, bp, ng + 1));
  CHECK(rows.back() == loop_concat(f, g, bp, ng));
  for (const Word& row : rows) {
    CHECK(is_based_word(row, bp));
    CHECK(is_closed_walk(c4.graph, row));
  }
  for (size_t r = 0; r + 1 < rows.size(); ++r)
    CHECK(words_adjacent(c4.graph, rows[r], rows[r + 1]));
}

TEST_CASE("full loop graph enumerates every based word") {
  PointedGraph ly = loop_y_cycle();
  FullLoopGraph fl(ly, 4);
  CHECK(fl.size() == 64);  // 4^3 interior choices
  CHECK(fl.bound() == 4);
  CHECK(fl.pointed().graph.order() == 64);

  Word cw = constant_word(4, ly.basepoint);
  CHECK(fl.word_of_index(static_cast<size_t>(fl.pointed().basepoint)) == cw);

  size_t looped = 0;
  for (size_t i = 0; i < fl.size(); ++i) {
    Word w = fl.word_of_index(i);
    CHECK(is_based_word(w, ly.basepoint));
    CHECK(fl.index_of_word(w) == i);
    for (size_t j = i; j < fl.size(); ++j) {
      bool adj = words_adjacent(ly.graph, w, fl.word_of_index(j));
      CHECK(fl.pointed().graph.adjacent(static_cast<int>(i), static_cast<int>(j)) == adj);
    }
    if (fl.pointed().graph.looped(static_cast<int>(i))) ++looped;
  }
  CHECK(looped == 1);  // only the constant word walks on loops

  CHECK_THROWS_AS(fl.index_of_word(Word{0, 0}), Error);
  CHECK_THROWS_AS(fl.index_of_word(Word{0, 1, 1, 1, 1}), Error);
  CHECK_THROWS_AS(FullLoopGraph(reflexive_cycle(4), 20), Error);
  CHECK_THROWS_AS(LoopGraph(reflexive_cycle(4), 8, 10), Error);
}

TEST_CASE("loops commute with exponentials on a pinned pair") {
  Graph k2(2, {"x", "a"});
  k2.add_edge(0, 0);
  k2.add_edge(0, 1);
  PointedGraph t{k2, 0};
  OmegaExpIso iso = omega_exp_iso(loop_y_cycle(), t, 2);

  CHECK(iso.lhs.graph.order() == iso.rhs.graph.order());
  CHECK(iso.alpha.is_graph_map());
  CHECK(iso.beta.is_graph_map());
  CHECK(iso.alpha.is_pointed(iso.lhs.basepoint, iso.rhs.basepoint));
  CHECK(iso.beta.is_pointed(iso.rhs.basepoint, iso.lhs.basepoint));
  for (int v = 0; v < iso.lhs.graph.order(); ++v) CHECK(iso.beta(iso.alpha(v)) == v);
  for (int v = 0; v < iso.rhs.graph.order(); ++v) CHECK(iso.alpha(iso.beta(v)) == v);
}

TEST_CASE("loop group of the reflexive square") {
  LoopGraph lg(reflexive_cycle(4), 8);
  REQUIRE(lg.component_count() == 5);

  std::map<int, int> winding_of;  // class id -> winding
  std::set<int> seen;
  for (const LoopComponentInfo& info : lg.components()) {
    REQUIRE(info.winding.has_value());
    winding_of[info.id] = *info.winding;
    seen.insert(*info.winding);
    if (std::abs(*info.winding) == 2) {
      CHECK(info.size == 1);  // no slack: every step must advance
      CHECK(stabilization(lg.word(info.representative), 0) == 8);
    }
  }
  CHECK(seen == std::set<int>{-2, -1, 0, 1, 2});

  LoopGroup gr = lg.group();
  CHECK(gr.identity == lg.component_of(*lg.index_of(constant_word(8, 0))));
  CHECK(winding_of[gr.identity] == 0);
  CHECK(gr.identity_ok);
  CHECK(gr.inverse_ok);
  CHECK(gr.assoc_ok);
  CHECK(gr.assoc_checked > 0);

  for (const auto& [a, b, c] : gr.products)
    CHECK(winding_of[c] == winding_of[a] + winding_of[b]);
  for (int a = 0; a < 5; ++a) CHECK(winding_of[gr.inverses[a]] == -winding_of[a]);

  // products are defined exactly when the representatives fit side by side
  CHECK(gr.products.size() == 13);
  CHECK(gr.undefined_pairs.size() == 12);
  for (const auto& [a, b] : gr.undefined_pairs)
    CHECK(std::abs(winding_of[a]) + std::abs(winding_of[b]) >= 3);

  // commutativity on this abelian example
  std::map<std::pair<int, int>, int> table;
  for (const auto& [a, b, c] : gr.products) table[{a, b}] = c;
  for (const auto& [ab, c] : table) {
    auto it = table.find({ab.second, ab.first});
    REQUIRE(it != table.end());
    CHECK(it->second == c);
  }
}

TEST_CASE("looped part is the ambient for iterated loops") {
  LoopGraph square(reflexive_cycle(4), 4);
  PointedGraph lp = square.looped_part();
  CHECK(lp.graph.order() == static_cast<int>(square.looped_count()));
  CHECK(lp.graph.order() == static_cast<int>(square.size()));  // fully reflexive ambient
  CHECK(lp.basepoint == 0);  // the constant word sorts first
  lp.validate();

  LoopGraph ly(loop_y_cycle(), 4);
  PointedGraph lp2 = ly.looped_part();
  CHECK(lp2.graph.order() == 1);

  // a second loop: walks in the looped part of Omega
  LoopGraph omega2(lp, 2);
  CHECK(omega2.size() >= 1);
  CHECK(omega2.component_count() >= 1);
}

TEST_CASE("path stages stabilize compatibly") {
  PointedGraph g = loop_y_cycle();
  Exponential s1 = path_graph(g, 1);
  Exponential s2 = path_graph(g, 2);
  CHECK(s1.graph().graph.order() == 4);
  CHECK(s2.graph().graph.order() == 16);

  GraphMap j = stabilization_map(s1, s2);
  GraphMap e1 = endpoint_map(s1);
  GraphMap e2 = endpoint_map(s2);
  CHECK(j.is_graph_map());
  CHECK(e1.is_graph_map());
  CHECK(e2.is_graph_map());
  CHECK(j.is_pointed(s1.graph().basepoint, s2.graph().basepoint));
  CHECK(e1.is_pointed(s1.graph().basepoint, g.basepoint));

  std::set<int> image;
  for (int v = 0; v < s1.graph().graph.order(); ++v) {
    image.insert(j(v));
    CHECK(e2(j(v)) == e1(v));  // extending by the last value keeps the endpoint
    std::vector<int> before = s1.map_of_index(v);
    std::vector<int> after = s2.map_of_index(j(v));
    before.push_back(before.back());
    CHECK(after == before);
  }
  CHECK(image.size() == static_cast<size_t>(s1.graph().graph.order()));
}

TEST_CASE("sequence stages and their homotopies") {
  PointedGraph g = reflexive_cycle(4);
  SequenceData sd(g, {0}, {0, 1}, 0, 1);

  CHECK(sd.k_n.is_graph_map());
  CHECK(sd.k_n1.is_graph_map());
  CHECK(sd.i_n.is_graph_map());
  CHECK(sd.j_n.is_graph_map());
  CHECK(sd.h_n.is_graph_map());
  CHECK(sd.homotopy_a.is_graph_map());
  CHECK(sd.homotopy_b.is_graph_map());

  // fibers nest: H_n sits inside H'_n
  CHECK(sd.hn_graph.order() <= sd.hpn_graph.order());
  CHECK(std::includes(sd.hpn.begin(), sd.hpn.end(), sd.hn.begin(), sd.hn.end()));

  // homotopy endpoints match the named maps (cross index is a * 2 + t)
  for (int a = 0; a < sd.hpn_graph.order(); ++a) {
    CHECK(sd.homotopy_a(a * 2 + 0) == sd.i_n(a));
    CHECK(sd.homotopy_a(a * 2 + 1) == sd.k_n1(sd.h_n(a)));
  }
  for (int a = 0; a < sd.hn_graph.order(); ++a) {
    CHECK(sd.homotopy_b(a * 2 + 0) == sd.j_n(a));
    CHECK(sd.homotopy_b(a * 2 + 1) == sd.h_n(sd.k_n(a)));
  }

  CHECK_THROWS_AS(SequenceData(g, {0, 2}, {0, 1, 2}, 0, 1), Error);  // 0-2 not an edge
  CHECK_THROWS_AS(SequenceData(g, {0, 1}, {0}, 0, 1), Error);        // gamma not inside gamma'
  CHECK_THROWS_AS(SequenceData(g, {0, 1}, {0, 1}, 2, 1), Error);     // v outside gamma
  PointedGraph ly = loop_y_cycle();
  CHECK_THROWS_AS(SequenceData(ly, {1}, {1}, 1, 1), Error);          // 1 is unlooped
}

TEST_CASE("looped component labels") {
  std::vector<int> ly = looped_component_labels(loop_y_cycle().graph);
  CHECK(ly == std::vector<int>{0, -1, -1, -1});

  std::vector<int> c4 = looped_component_labels(reflexive_cycle(4).graph);
  CHECK(c4 == std::vector<int>{0, 0, 0, 0});

  std::vector<int> os = looped_component_labels(make_one_star().graph);
  std::vector<int> sorted = os;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{0, 1});  // two looped islands

  Graph mix(4, {"a", "b", "c", "d"});
  mix.add_edge(0, 0);
  mix.add_edge(1, 1);
  mix.add_edge(0, 1);
  mix.add_edge(3, 3);
  mix.add_edge(2, 3);  // c unlooped, d looped but c does not join them
  CHECK(looped_component_labels(mix) == std::vector<int>{0, 0, -1, 1});
}
