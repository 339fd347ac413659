#include "homtop/invariants.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace homtop {

namespace {

std::vector<int> looped_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.looped(v)) out.push_back(v);
  }
  return out;
}

Graph drop_vertex(const Graph& g, int v) {
  std::vector<int> keep;
  keep.reserve(g.order() - 1);
  for (int w = 0; w < g.order(); ++w) {
    if (w != v) keep.push_back(w);
  }
  return g.induced(keep);
}

Graph dismantle_graph(Graph g) {
  while (auto f = find_fold_unpointed(g)) g = drop_vertex(g, f->v);
  return g;
}

std::vector<int> free_reduce(const std::vector<int>& w) {
  std::vector<int> out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x) out.pop_back();
    else out.push_back(x);
  }
  return out;
}

}  // namespace

H1Summary h1_of_two_skeleton(const TwoSkeleton& s) {
  std::vector<int> pos(s.n, -1);
  for (size_t i = 0; i < s.vertices.size(); ++i) pos[s.vertices[i]] = static_cast<int>(i);

  long long nv = static_cast<long long>(s.vertices.size());
  long long ne = static_cast<long long>(s.edges.size());

  UnionFind uf(s.vertices.size());
  for (const auto& e : s.edges) uf.unite(pos[e[0]], pos[e[1]]);
  std::set<int> roots;
  for (size_t i = 0; i < s.vertices.size(); ++i) roots.insert(uf.find(static_cast<int>(i)));
  long long c = static_cast<long long>(roots.size());

  auto edge_id = [&](int a, int b) {
    std::array<int, 2> key{a, b};
    auto it = std::lower_bound(s.edges.begin(), s.edges.end(), key);
    check(it != s.edges.end() && *it == key, Status::internal, "triangle edge missing");
    return static_cast<int>(it - s.edges.begin());
  };

  SparseIntMatrix d2(static_cast<int>(s.triangles.size()), static_cast<int>(ne));
  for (size_t t = 0; t < s.triangles.size(); ++t) {
    auto [a, b, cc] = s.triangles[t];
    d2.add(static_cast<int>(t), edge_id(b, cc), 1);
    d2.add(static_cast<int>(t), edge_id(a, cc), -1);
    d2.add(static_cast<int>(t), edge_id(a, b), 1);
  }
  SnfResult snf = smith_normal_form(d2);

  H1Summary h;
  h.rank = ne - (nv - c) - snf.rank;
  h.torsion = snf.torsion();
  return h;
}

ComponentLabels poset_components(const HomPoset& p) {
  size_t n = p.size();
  UnionFind uf(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (p.leq(i, j)) uf.unite(static_cast<int>(i), static_cast<int>(j));
    }
  }
  ComponentLabels out;
  out.label.assign(n, -1);
  std::map<int, int> id_of_root;
  for (uint32_t a : p.atoms()) {
    int r = uf.find(a);
    if (!id_of_root.count(r)) id_of_root[r] = out.count++;
  }
  for (size_t i = 0; i < n; ++i) {
    auto it = id_of_root.find(uf.find(static_cast<int>(i)));
    check(it != id_of_root.end(), Status::internal, "poset element not above any atom");
    out.label[i] = it->second;
  }
  return out;
}

ComponentLabels atom_components(const AtomHomGraph& a) {
  int n = a.graph.order();
  UnionFind uf(n);
  for (auto [u, v] : a.graph.graph.edges()) uf.unite(u, v);
  ComponentLabels out;
  out.label.assign(n, -1);
  std::map<int, int> id_of_root;
  for (int v = 0; v < n; ++v) {
    int r = uf.find(v);
    if (!id_of_root.count(r)) id_of_root[r] = out.count++;
    out.label[v] = id_of_root[r];
  }
  return out;
}

BigInt poset_euler(const HomPoset& p) {
  size_t n = p.size();
  std::vector<BigInt> t(n);
  BigInt chi = 0;
  for (size_t i = 0; i < n; ++i) {
    BigInt below = 0;
    for (size_t j = 0; j < i; ++j) {
      if (p.leq(j, i)) below += t[j];
    }
    t[i] = 1 - below;
    chi += t[i];
  }
  return chi;
}

TwoSkeleton order_two_skeleton(const HomPoset& p, size_t cap) {
  size_t n = p.size();
  TwoSkeleton s;
  s.n = static_cast<int>(n);
  s.vertices.resize(n);
  for (size_t i = 0; i < n; ++i) s.vertices[i] = static_cast<int>(i);

  std::vector<std::vector<int>> ups(n);
  size_t budget = cap;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (p.leq(i, j)) {
        check(budget-- > 0, Status::limit_exceeded, "order skeleton cap exceeded");
        ups[i].push_back(static_cast<int>(j));
        s.edges.push_back({static_cast<int>(i), static_cast<int>(j)});
      }
    }
  }
  for (size_t i = 0; i < n; ++i) {
    for (int j : ups[i]) {
      for (int k : ups[j]) {
        check(budget-- > 0, Status::limit_exceeded, "order skeleton cap exceeded");
        s.triangles.push_back({static_cast<int>(i), j, k});
      }
    }
  }
  std::sort(s.triangles.begin(), s.triangles.end());
  return s;
}

SimplicialComplex order_complex(const HomPoset& p, size_t max_chains) {
  size_t n = p.size();
  std::vector<std::vector<uint32_t>> ups(n);
  std::vector<char> has_below(n, 0);
  for (size_t i = 0; i < n; ++i) {
    ups[i] = p.covers_above(i);
    for (uint32_t j : ups[i]) has_below[j] = 1;
  }
  std::vector<std::vector<int>> chains;
  std::vector<int> cur;
  auto rec = [&](auto&& self, size_t i) -> void {
    cur.push_back(static_cast<int>(i));
    if (ups[i].empty()) {
      check(chains.size() < max_chains, Status::limit_exceeded, "maximal chain cap exceeded");
      chains.push_back(cur);
    } else {
      for (uint32_t j : ups[i]) self(self, j);
    }
    cur.pop_back();
  };
  for (size_t i = 0; i < n; ++i) {
    if (!has_below[i]) rec(rec, i);
  }
  return SimplicialComplex::from_faces(static_cast<int>(n), std::move(chains));
}

BigInt clique_complex_euler(const Graph& g, size_t node_cap) {
  size_t budget = node_cap;
  auto rec = [&](auto&& self, Graph cur) -> BigInt {
    check(budget-- > 0, Status::limit_exceeded, "euler recursion budget exceeded");
    cur = dismantle_graph(std::move(cur));
    int n = cur.order();
    if (n == 0) return 0;
    if (n == 1) return 1;
    int v = 0;
    for (int w = 1; w < n; ++w) {
      if (cur.degree(w) < cur.degree(v)) v = w;
    }
    std::vector<int> link;
    for (int w : cur.neighbors(v)) {
      if (w != v) link.push_back(w);
    }
    BigInt rest = self(self, drop_vertex(cur, v));
    BigInt lk = self(self, cur.induced(link));
    return rest + 1 - lk;
  };
  return rec(rec, g.induced(looped_vertices(g)));
}

InvariantProfile poset_profile_exact(const HomPoset& p, const InvariantOptions& opt) {
  InvariantProfile r;
  r.route = "exact";
  ComponentLabels comp = poset_components(p);
  r.pi0 = comp.count;
  r.basepoint_component = p.basepoint_element() >= 0 ? comp.label[p.basepoint_element()] : -1;
  r.euler = poset_euler(p);
  r.h1 = h1_of_two_skeleton(order_two_skeleton(p, opt.skeleton_cap));
  if (opt.attempt_collapse) {
    try {
      CollapseCertificate cert = collapse_to_point(order_complex(p, opt.collapse_cap),
                                                   opt.collapse_cap);
      r.collapsible = cert.success;
    } catch (const Error& e) {
      if (e.status() != Status::limit_exceeded) throw;
      r.collapsible = std::nullopt;
    }
  }
  return r;
}

InvariantProfile hom_profile_fast(const PointedGraph& g, const PointedGraph& h,
                                  const InvariantOptions& opt) {
  InvariantProfile r;
  r.route = "fast";
  AtomHomGraph atoms = atom_hom_graph(g, h);
  ComponentLabels comp = atom_components(atoms);
  r.pi0 = comp.count;
  r.basepoint_component = comp.label[atoms.graph.basepoint];

  Graph core = dismantle_graph(atoms.graph.graph);
  r.euler = clique_complex_euler(core, opt.euler_node_cap);
  r.h1 = h1_of_two_skeleton(clique_two_skeleton(core, opt.skeleton_cap));
  if (opt.attempt_collapse) {
    try {
      CollapseCertificate cert = collapse_to_point(clique_complex(core), opt.collapse_cap);
      r.collapsible = cert.success;
    } catch (const Error& e) {
      if (e.status() != Status::limit_exceeded) throw;
      r.collapsible = std::nullopt;
    }
  }
  return r;
}

InvariantProfile hom_profile(const PointedGraph& g, const PointedGraph& h,
                             const InvariantOptions& opt) {
  try {
    HomBuildOptions bo;
    bo.max_elements = opt.exact_poset_cap;
    HomPoset p = build_hom_star(g, h, bo);
    return poset_profile_exact(p, opt);
  } catch (const Error& e) {
    if (e.status() != Status::limit_exceeded) throw;
    return hom_profile_fast(g, h, opt);
  }
}

XHomotopyClasses x_homotopy_classes(const PointedGraph& g, const PointedGraph& h) {
  XHomotopyClasses out{atom_hom_graph(g, h), {}};
  out.classes = atom_components(out.atoms);
  return out;
}

GroupPresentation pi1_presentation(const TwoSkeleton& s, int base_vertex) {
  std::vector<int> pos(s.n, -1);
  for (size_t i = 0; i < s.vertices.size(); ++i) pos[s.vertices[i]] = static_cast<int>(i);
  check(base_vertex >= 0 && base_vertex < s.n && pos[base_vertex] >= 0, Status::invalid_argument,
        "base vertex is not in the complex");

  std::vector<std::vector<int>> adj(s.vertices.size());
  for (const auto& e : s.edges) {
    adj[pos[e[0]]].push_back(e[1]);
    adj[pos[e[1]]].push_back(e[0]);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  // breadth-first spanning tree of the basepoint component
  std::vector<char> seen(s.vertices.size(), 0);
  std::set<std::array<int, 2>> tree;
  std::vector<int> queue{base_vertex};
  seen[pos[base_vertex]] = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int v : adj[pos[u]]) {
      if (seen[pos[v]]) continue;
      seen[pos[v]] = 1;
      tree.insert({std::min(u, v), std::max(u, v)});
      queue.push_back(v);
    }
  }

  GroupPresentation pres;
  std::map<std::array<int, 2>, int> gen_id;  // non-tree edge -> generator (1-based letter)
  for (const auto& e : s.edges) {
    if (!seen[pos[e[0]]] || tree.count(e)) continue;
    gen_id[e] = ++pres.generators;
  }

  auto word = [&](int a, int b) {  // letter for traversing a -> b, 0 for tree edges
    std::array<int, 2> key{std::min(a, b), std::max(a, b)};
    auto it = gen_id.find(key);
    if (it == gen_id.end()) return 0;
    return a < b ? it->second : -it->second;
  };

  for (const auto& t : s.triangles) {
    if (!seen[pos[t[0]]]) continue;
    std::vector<int> rel;
    for (int letter : {word(t[0], t[1]), word(t[1], t[2]), word(t[2], t[0])}) {
      if (letter != 0) rel.push_back(letter);
    }
    rel = free_reduce(rel);
    if (!rel.empty()) pres.relators.push_back(std::move(rel));
  }
  return pres;
}

H1Summary abelianized(const GroupPresentation& g) {
  SparseIntMatrix m(static_cast<int>(g.relators.size()), g.generators);
  for (size_t r = 0; r < g.relators.size(); ++r) {
    for (int letter : g.relators[r]) {
      int gen = std::abs(letter) - 1;
      m.add(static_cast<int>(r), gen, letter > 0 ? 1 : -1);
    }
  }
  SnfResult snf = smith_normal_form(m);
  H1Summary h;
  h.rank = g.generators - snf.rank;
  h.torsion = snf.torsion();
  return h;
}

GroupPresentation tietze_variant(const GroupPresentation& g, Rng& rng, int moves) {
  GroupPresentation out = g;
  for (int step = 0; step < moves; ++step) {
    int kind = static_cast<int>(rng.below(5));
    size_t nr = out.relators.size();
    if (nr == 0 && kind != 4) kind = 4;
    switch (kind) {
      case 0: {  // invert a relator
        auto& r = out.relators[rng.below(nr)];
        std::reverse(r.begin(), r.end());
        for (int& x : r) x = -x;
        break;
      }
      case 1: {  // swap two relators
        size_t i = rng.below(nr), j = rng.below(nr);
        std::swap(out.relators[i], out.relators[j]);
        break;
      }
      case 2: {  // conjugate by a generator
        if (out.generators == 0) break;
        auto& r = out.relators[rng.below(nr)];
        int x = static_cast<int>(rng.below(out.generators)) + 1;
        if (rng.below(2)) x = -x;
        std::vector<int> w;
        w.push_back(x);
        w.insert(w.end(), r.begin(), r.end());
        w.push_back(-x);
        r = free_reduce(w);
        break;
      }
      case 3: {  // multiply one relator by another
        if (nr < 2) break;
        size_t i = rng.below(nr), j = rng.below(nr);
        if (i == j) break;
        std::vector<int> w = out.relators[i];
        w.insert(w.end(), out.relators[j].begin(), out.relators[j].end());
        out.relators[i] = free_reduce(w);
        break;
      }
      default: {  // introduce a defined generator x = w
        std::vector<int> w;
        size_t len = rng.below(3);
        for (size_t i = 0; i < len && out.generators > 0; ++i) {
          int x = static_cast<int>(rng.below(out.generators)) + 1;
          w.push_back(rng.below(2) ? x : -x);
        }
        int fresh = ++out.generators;
        std::vector<int> rel{fresh};
        for (auto it = w.rbegin(); it != w.rend(); ++it) rel.push_back(-*it);
        out.relators.push_back(free_reduce(rel));
        break;
      }
    }
  }
  return out;
}

}  // namespace homtop
