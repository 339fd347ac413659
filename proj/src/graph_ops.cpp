#include "homtop/graph_ops.hpp"

#include <algorithm>
#include <numeric>

namespace homtop {

PointedGraph make_interval(int n) {
  check(n >= 0, Status::invalid_argument, "interval length must be nonnegative");
  std::vector<std::string> labels(n + 1);
  for (int i = 0; i <= n; ++i) labels[i] = std::to_string(i);
  Graph g(n + 1, std::move(labels));
  for (int i = 0; i <= n; ++i) {
    g.add_edge(i, i);
    if (i + 1 <= n) g.add_edge(i, i + 1);
  }
  return PointedGraph(std::move(g), 0);
}

PointedGraph add_disjoint_basepoint(const Graph& g, const std::string& label) {
  check(g.index_of(label) < 0, Status::invalid_argument,
        "basepoint label already present: " + label);
  std::vector<std::string> labels = g.labels();
  labels.push_back(label);
  Graph out(g.order() + 1, std::move(labels));
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  out.add_edge(g.order(), g.order());
  return PointedGraph(std::move(out), g.order());
}

PointedGraph make_one_star() {
  Graph g(1, {"1"});
  g.add_edge(0, 0);
  return add_disjoint_basepoint(g);
}

namespace {
std::string pair_label(const Graph& a, const Graph& b, int va, int vb) {
  return "(" + a.label(va) + "," + b.label(vb) + ")";
}
}  // namespace

Graph categorical_product(const Graph& a, const Graph& b) {
  int na = a.order(), nb = b.order();
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(na) * nb);
  for (int va = 0; va < na; ++va)
    for (int vb = 0; vb < nb; ++vb) labels.push_back(pair_label(a, b, va, vb));
  Graph out(na * nb, std::move(labels));
  for (int va = 0; va < na; ++va)
    for (int vb = 0; vb < nb; ++vb)
      for (int ua = va; ua < na; ++ua)
        for (int ub = 0; ub < nb; ++ub) {
          int p = va * nb + vb, q = ua * nb + ub;
          if (q < p) continue;
          if (a.adjacent(va, ua) && b.adjacent(vb, ub)) out.add_edge(p, q);
        }
  return out;
}

Graph cartesian_product(const Graph& a, const Graph& b) {
  int na = a.order(), nb = b.order();
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(na) * nb);
  for (int va = 0; va < na; ++va)
    for (int vb = 0; vb < nb; ++vb) labels.push_back(pair_label(a, b, va, vb));
  Graph out(na * nb, std::move(labels));
  for (int va = 0; va < na; ++va)
    for (int vb = 0; vb < nb; ++vb)
      for (int ua = va; ua < na; ++ua)
        for (int ub = 0; ub < nb; ++ub) {
          int p = va * nb + vb, q = ua * nb + ub;
          if (q < p) continue;
          bool adj = (a.adjacent(va, ua) && vb == ub) || (va == ua && b.adjacent(vb, ub));
          if (adj) out.add_edge(p, q);
        }
  return out;
}

SmashProduct smash_product(const PointedGraph& a, const PointedGraph& b) {
  int na = a.order(), nb = b.order();
  UnionFind uf(na * nb);
  for (int va = 0; va < na; ++va) uf.unite(va * nb + b.basepoint, a.basepoint * nb + b.basepoint);
  for (int vb = 0; vb < nb; ++vb) uf.unite(a.basepoint * nb + vb, a.basepoint * nb + b.basepoint);

  // number the classes in order of smallest member
  std::vector<int> class_of(na * nb, -1);
  std::vector<int> roots;
  for (int p = 0; p < na * nb; ++p) {
    int r = uf.find(p);
    if (class_of[r] < 0) {
      class_of[r] = static_cast<int>(roots.size());
      roots.push_back(r);
    }
    class_of[p] = class_of[r];
  }

  std::vector<std::string> labels(roots.size());
  for (size_t c = 0; c < roots.size(); ++c) {
    int va = roots[c] / nb, vb = roots[c] % nb;
    labels[c] = "[" + pair_label(a.graph, b.graph, va, vb) + "]";
  }
  Graph q(static_cast<int>(roots.size()), std::move(labels));

  // adjacency through any pair of representatives, i.e. the image of the
  // categorical product's adjacency under the quotient
  for (int p = 0; p < na * nb; ++p) {
    int pa = p / nb, pb = p % nb;
    for (int r = p; r < na * nb; ++r) {
      int ra = r / nb, rb = r % nb;
      if (a.graph.adjacent(pa, ra) && b.graph.adjacent(pb, rb))
        q.add_edge(class_of[p], class_of[r]);
    }
  }

  SmashProduct out{PointedGraph(std::move(q), class_of[a.basepoint * nb + b.basepoint]),
                   std::move(class_of)};
  return out;
}

Exponential::Exponential(const PointedGraph& target, const PointedGraph& source, int max_vertices)
    : source_(source), target_(target) {
  int ns = source.order(), nt = target.order();
  for (int v = 0; v < ns; ++v) {
    if (v != source.basepoint) free_vertices_.push_back(v);
  }
  double size = 1;
  for (size_t i = 0; i < free_vertices_.size(); ++i) size *= nt;
  check(size <= max_vertices, Status::limit_exceeded,
        "exponential graph too large: " + std::to_string(nt) + "^" +
            std::to_string(free_vertices_.size()));
  int n = static_cast<int>(size);

  std::vector<std::string> labels(n);
  std::vector<std::vector<int>> images(n);
  for (int idx = 0; idx < n; ++idx) {
    std::vector<int> img(ns, target.basepoint);
    int rest = idx;
    for (size_t i = 0; i < free_vertices_.size(); ++i) {
      img[free_vertices_[i]] = rest % nt;
      rest /= nt;
    }
    std::string label = "(";
    for (int v = 0; v < ns; ++v) {
      if (v) label += ",";
      label += target.graph.label(img[v]);
    }
    label += ")";
    labels[idx] = std::move(label);
    images[idx] = std::move(img);
  }

  Graph g(n, std::move(labels));
  auto src_edges = source.graph.edges();
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      bool adj = true;
      for (auto [v, w] : src_edges) {
        if (!target.graph.adjacent(images[i][v], images[j][w]) ||
            !target.graph.adjacent(images[i][w], images[j][v])) {
          adj = false;
          break;
        }
      }
      if (adj) g.add_edge(i, j);
    }
  }
  graph_ = PointedGraph(std::move(g), index_of_map(std::vector<int>(ns, target.basepoint)));
}

int Exponential::index_of_map(const std::vector<int>& images) const {
  check(images[source_.basepoint] == target_.basepoint, Status::invalid_argument,
        "map does not fix the basepoint");
  int idx = 0;
  for (size_t i = free_vertices_.size(); i-- > 0;) {
    idx = idx * target_.order() + images[free_vertices_[i]];
  }
  return idx;
}

std::vector<int> Exponential::map_of_index(int idx) const {
  std::vector<int> img(source_.order(), target_.basepoint);
  for (size_t i = 0; i < free_vertices_.size(); ++i) {
    img[free_vertices_[i]] = idx % target_.order();
    idx /= target_.order();
  }
  return img;
}

bool Exponential::maps_adjacent(const PointedGraph& source, const PointedGraph& target,
                                const std::vector<int>& f, const std::vector<int>& g) {
  for (auto [v, w] : source.graph.edges()) {
    if (!target.graph.adjacent(f[v], g[w]) || !target.graph.adjacent(f[w], g[v])) return false;
  }
  return true;
}

PointedGraph exponential(const PointedGraph& target, const PointedGraph& source) {
  return Exponential(target, source).graph();
}

AdjunctionContext::AdjunctionContext(const PointedGraph& a_, const PointedGraph& b_,
                                     const PointedGraph& c_)
    : a(a_), b(b_), c(c_), smash(smash_product(a_, b_)), exp(c_, b_) {}

std::vector<int> adjunction_forward(const AdjunctionContext& ctx, const std::vector<int>& f) {
  int nb = ctx.b.order();
  std::vector<int> g(ctx.a.order());
  for (int va = 0; va < ctx.a.order(); ++va) {
    std::vector<int> img(nb);
    for (int vb = 0; vb < nb; ++vb) img[vb] = f[ctx.smash.vertex_of(va, vb, nb)];
    g[va] = ctx.exp.index_of_map(img);
  }
  return g;
}

std::vector<int> adjunction_backward(const AdjunctionContext& ctx, const std::vector<int>& g) {
  int nb = ctx.b.order();
  std::vector<int> f(ctx.smash.quotient.order(), -1);
  for (int va = 0; va < ctx.a.order(); ++va) {
    std::vector<int> img = ctx.exp.map_of_index(g[va]);
    for (int vb = 0; vb < nb; ++vb) {
      int cls = ctx.smash.vertex_of(va, vb, nb);
      int value = img[vb];
      check(f[cls] < 0 || f[cls] == value, Status::internal,
            "adjunction_backward: map not constant on a smash class");
      f[cls] = value;
    }
  }
  return f;
}

std::vector<std::vector<int>> enumerate_homs(const Graph& g, const Graph& h) {
  std::vector<std::vector<int>> out;
  std::vector<int> img(g.order(), 0);
  auto edges = g.edges();
  while (true) {
    bool ok = true;
    for (auto [v, w] : edges) {
      if (!h.adjacent(img[v], img[w])) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(img);
    int i = g.order() - 1;
    while (i >= 0 && img[i] == h.order() - 1) img[i--] = 0;
    if (i < 0) break;
    ++img[i];
  }
  return out;
}

std::vector<std::vector<int>> enumerate_pointed_homs(const PointedGraph& g, const PointedGraph& h) {
  std::vector<std::vector<int>> out;
  std::vector<int> img(g.order(), 0);
  img[g.basepoint] = h.basepoint;
  auto edges = g.graph.edges();
  // odometer over the non-basepoint coordinates, most significant first:
  // yields lexicographic order of the image tuple
  while (true) {
    bool ok = true;
    for (auto [v, w] : edges) {
      if (!h.graph.adjacent(img[v], img[w])) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(img);
    int i = g.order() - 1;
    while (i >= 0 && (i == g.basepoint || img[i] == h.order() - 1)) {
      if (i != g.basepoint) img[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++img[i];
  }
  return out;
}

std::optional<Fold> find_fold_unpointed(const Graph& g, int protect) {
  for (int v = 0; v < g.order(); ++v) {
    if (v == protect) continue;
    for (int u = 0; u < g.order(); ++u) {
      if (u == v) continue;
      if (g.neighborhood_subset(v, u)) return Fold{u, v};
    }
  }
  return std::nullopt;
}

std::optional<Fold> find_fold(const PointedGraph& g) {
  return find_fold_unpointed(g.graph, g.basepoint);
}

FoldResult apply_fold(const PointedGraph& g, const Fold& fold) {
  int n = g.order();
  check(fold.v != g.basepoint, Status::invalid_argument, "cannot fold away the basepoint");
  check(fold.u != fold.v && fold.u >= 0 && fold.v >= 0 && fold.u < n && fold.v < n,
        Status::invalid_argument, "fold vertices out of range");
  check(g.graph.neighborhood_subset(fold.v, fold.u), Status::invalid_argument,
        "not a fold: N(v) is not contained in N(u)");

  std::vector<int> keep;
  for (int w = 0; w < n; ++w) {
    if (w != fold.v) keep.push_back(w);
  }
  Graph folded_graph = g.graph.induced(keep);

  std::vector<int> new_index(n, -1);
  for (size_t i = 0; i < keep.size(); ++i) new_index[keep[i]] = static_cast<int>(i);

  FoldResult out;
  out.fold = fold;
  out.folded = PointedGraph(folded_graph, new_index[g.basepoint]);

  out.retraction.source = g.graph;
  out.retraction.target = folded_graph;
  out.retraction.map.resize(n);
  for (int w = 0; w < n; ++w) out.retraction.map[w] = new_index[w == fold.v ? fold.u : w];

  out.inclusion.source = folded_graph;
  out.inclusion.target = g.graph;
  out.inclusion.map = keep;
  return out;
}

GraphMap unfold_inclusion(const PointedGraph& g, const Fold& fold) {
  return apply_fold(g, fold).inclusion;
}

DismantleResult dismantle(const PointedGraph& g) {
  DismantleResult out;
  out.core = g;
  out.retraction = identity_map(g.graph);
  while (auto fold = find_fold(out.core)) {
    out.folds.push_back(*fold);
    out.removed_labels.push_back(out.core.graph.label(fold->v));
    FoldResult step = apply_fold(out.core, *fold);
    out.retraction = compose(step.retraction, out.retraction);
    out.core = step.folded;
  }
  return out;
}

}  // namespace homtop
