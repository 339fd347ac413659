#include "homtop/theorem_maps.hpp"

#include <algorithm>

namespace homtop {

namespace {

bool looped_clique(const Graph& g, const std::vector<int>& set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i; j < set.size(); ++j)
      if (!g.adjacent(set[i], set[j])) return false;
  return true;
}

// Positions of `sub` inside `all` (both ascending); -1 when absent.
std::vector<int> positions(const std::vector<int>& all) {
  std::vector<int> pos;
  if (!all.empty()) pos.assign(*std::max_element(all.begin(), all.end()) + 1, -1);
  for (std::size_t i = 0; i < all.size(); ++i) pos[all[i]] = static_cast<int>(i);
  return pos;
}

}  // namespace

SequenceData::SequenceData(const PointedGraph& g_, std::vector<int> gamma_, std::vector<int> gamma_prime_,
                           int v_, int n_arg)
    : g(g_),
      gamma(std::move(gamma_)),
      gamma_prime(std::move(gamma_prime_)),
      v(v_),
      n(n_arg),
      stage_n(path_graph(g_, n_arg)),
      stage_n1(path_graph(g_, n_arg + 1)) {
  std::sort(gamma.begin(), gamma.end());
  std::sort(gamma_prime.begin(), gamma_prime.end());
  check(!gamma.empty(), Status::invalid_argument, "gamma must be nonempty");
  check(std::includes(gamma_prime.begin(), gamma_prime.end(), gamma.begin(), gamma.end()),
        Status::invalid_argument, "gamma must be contained in gamma'");
  check(looped_clique(g.graph, gamma) && looped_clique(g.graph, gamma_prime),
        Status::invalid_argument, "gamma and gamma' must be looped cliques");
  check(std::binary_search(gamma.begin(), gamma.end(), v), Status::invalid_argument,
        "the distinguished vertex must lie in gamma");

  auto in = [](const std::vector<int>& set, int x) {
    return std::binary_search(set.begin(), set.end(), x);
  };
  auto fiber = [&](const Exponential& stage, const std::vector<int>& set) {
    std::vector<int> out;
    for (int idx = 0; idx < stage.graph().order(); ++idx)
      if (in(set, stage.map_of_index(idx).back())) out.push_back(idx);
    return out;
  };
  hn = fiber(stage_n, gamma);
  hpn = fiber(stage_n, gamma_prime);
  hn1 = fiber(stage_n1, gamma);
  hpn1 = fiber(stage_n1, gamma_prime);
  hn_graph = stage_n.graph().graph.induced(hn);
  hpn_graph = stage_n.graph().graph.induced(hpn);
  hn1_graph = stage_n1.graph().graph.induced(hn1);
  hpn1_graph = stage_n1.graph().graph.induced(hpn1);

  std::vector<int> pos_hpn = positions(hpn);
  std::vector<int> pos_hn1 = positions(hn1);
  std::vector<int> pos_hpn1 = positions(hpn1);

  auto build = [&](const std::vector<int>& dom, const Graph& dom_graph, const Graph& cod_graph,
                   const std::vector<int>& cod_pos, auto&& image_of) {
    GraphMap f{dom_graph, cod_graph, {}};
    f.map.resize(dom.size());
    for (std::size_t i = 0; i < dom.size(); ++i) {
      int img = image_of(dom[i]);
      check(img >= 0 && img < static_cast<int>(cod_pos.size()) && cod_pos[img] >= 0,
            Status::internal, "sequence map image left the stated fiber");
      f.map[i] = cod_pos[img];
    }
    return f;
  };
  auto extend_last = [&](int idx) {
    std::vector<int> img = stage_n.map_of_index(idx);
    img.push_back(img.back());
    return stage_n1.index_of_map(img);
  };
  auto append_v = [&](int idx) {
    std::vector<int> img = stage_n.map_of_index(idx);
    img.push_back(v);
    return stage_n1.index_of_map(img);
  };

  k_n = build(hn, hn_graph, hpn_graph, pos_hpn, [&](int idx) { return idx; });
  k_n1 = build(hn1, hn1_graph, hpn1_graph, pos_hpn1, [&](int idx) { return idx; });
  i_n = build(hpn, hpn_graph, hpn1_graph, pos_hpn1, extend_last);
  j_n = build(hn, hn_graph, hn1_graph, pos_hn1, extend_last);
  h_n = build(hpn, hpn_graph, hn1_graph, pos_hn1, append_v);

  Graph i1 = make_interval(1).graph;
  hpn_cross = categorical_product(hpn_graph, i1);
  hn_cross = categorical_product(hn_graph, i1);

  homotopy_a = GraphMap{hpn_cross, hpn1_graph, {}};
  homotopy_a.map.resize(hpn.size() * 2);
  for (std::size_t i = 0; i < hpn.size(); ++i) {
    homotopy_a.map[i * 2 + 0] = i_n.map[i];
    homotopy_a.map[i * 2 + 1] = k_n1.map[h_n.map[i]];
  }
  homotopy_b = GraphMap{hn_cross, hn1_graph, {}};
  homotopy_b.map.resize(hn.size() * 2);
  for (std::size_t i = 0; i < hn.size(); ++i) {
    homotopy_b.map[i * 2 + 0] = j_n.map[i];
    homotopy_b.map[i * 2 + 1] = h_n.map[k_n.map[i]];
  }
}

std::vector<int> looped_component_labels(const Graph& g) {
  int n = g.order();
  UnionFind uf(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    if (!g.looped(u)) continue;
    for (int w = u + 1; w < n; ++w)
      if (g.looped(w) && g.adjacent(u, w)) uf.unite(static_cast<std::size_t>(u), static_cast<std::size_t>(w));
  }
  std::vector<int> label(n, -1), root_label(n, -1);
  int next = 0;
  for (int u = 0; u < n; ++u) {
    if (!g.looped(u)) continue;
    std::size_t r = uf.find(static_cast<std::size_t>(u));
    if (root_label[r] < 0) root_label[r] = next++;
    label[u] = root_label[r];
  }
  return label;
}

}  // namespace homtop
