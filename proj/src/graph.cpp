#include "homtop/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace homtop {

namespace {
constexpr int kMaxDenseVertices = 1 << 16;

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "v" + std::to_string(i);
  return labels;
}
}  // namespace

Graph::Graph(int n) : Graph(n, default_labels(n)) {}

Graph::Graph(int n, std::vector<std::string> labels) : n_(n), labels_(std::move(labels)) {
  check(n >= 0, Status::invalid_argument, "graph order must be nonnegative");
  check(n <= kMaxDenseVertices, Status::limit_exceeded,
        "graph too large for dense adjacency: " + std::to_string(n));
  check(static_cast<int>(labels_.size()) == n, Status::invalid_argument,
        "label count does not match vertex count");
  words_ = (n + 63) / 64;
  adj_.assign(static_cast<size_t>(n) * words_, 0);
}

void Graph::add_edge(int u, int v) {
  check(u >= 0 && u < n_ && v >= 0 && v < n_, Status::invalid_argument, "edge endpoint out of range");
  adj_[static_cast<size_t>(u) * words_ + (v >> 6)] |= uint64_t{1} << (v & 63);
  adj_[static_cast<size_t>(v) * words_ + (u >> 6)] |= uint64_t{1} << (u & 63);
}

void Graph::remove_edge(int u, int v) {
  check(u >= 0 && u < n_ && v >= 0 && v < n_, Status::invalid_argument, "edge endpoint out of range");
  adj_[static_cast<size_t>(u) * words_ + (v >> 6)] &= ~(uint64_t{1} << (v & 63));
  adj_[static_cast<size_t>(v) * words_ + (u >> 6)] &= ~(uint64_t{1} << (u & 63));
}

bool Graph::neighborhood_subset(int v, int u) const {
  const uint64_t* rv = row(v);
  const uint64_t* ru = row(u);
  for (int w = 0; w < words_; ++w) {
    if (rv[w] & ~ru[w]) return false;
  }
  return true;
}

int Graph::edge_count() const {
  int count = 0;
  for (int v = 0; v < n_; ++v) {
    for (int u = v; u < n_; ++u) {
      if (adjacent(v, u)) ++count;
    }
  }
  return count;
}

int Graph::loop_count() const {
  int count = 0;
  for (int v = 0; v < n_; ++v) {
    if (looped(v)) ++count;
  }
  return count;
}

int Graph::degree(int v) const {
  int d = 0;
  const uint64_t* rv = row(v);
  for (int w = 0; w < words_; ++w) d += std::popcount(rv[w]);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u) {
    if (adjacent(v, u)) out.push_back(u);
  }
  return out;
}

int Graph::index_of(const std::string& label) const {
  for (int v = 0; v < n_; ++v) {
    if (labels_[v] == label) return v;
  }
  return -1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < n_; ++v) {
    for (int u = v; u < n_; ++u) {
      if (adjacent(v, u)) out.emplace_back(v, u);
    }
  }
  return out;
}

Graph Graph::induced(const std::vector<int>& keep) const {
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (int v : keep) {
    check(v >= 0 && v < n_, Status::invalid_argument, "induced: vertex out of range");
    labels.push_back(labels_[v]);
  }
  Graph out(static_cast<int>(keep.size()), std::move(labels));
  for (size_t i = 0; i < keep.size(); ++i) {
    for (size_t j = i; j < keep.size(); ++j) {
      if (adjacent(keep[i], keep[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return out;
}

bool Graph::same_adjacency(const Graph& other) const {
  return n_ == other.n_ && adj_ == other.adj_;
}

void Graph::validate() const {
  std::set<std::string> seen;
  for (const auto& label : labels_) {
    check(seen.insert(label).second, Status::invalid_argument, "duplicate vertex label: " + label);
  }
}

PointedGraph::PointedGraph(Graph g, int bp) : graph(std::move(g)), basepoint(bp) { validate(); }

void PointedGraph::validate() const {
  check(graph.order() > 0, Status::invalid_argument, "pointed graph needs at least one vertex");
  check(basepoint >= 0 && basepoint < graph.order(), Status::invalid_argument,
        "basepoint out of range");
  check(graph.looped(basepoint), Status::invalid_argument,
        "basepoint must carry a loop: " + graph.label(basepoint));
}

bool GraphMap::is_graph_map() const {
  for (int v = 0; v < source.order(); ++v) {
    check(map[v] >= 0 && map[v] < target.order(), Status::invalid_argument,
          "map image out of range");
    for (int u = v; u < source.order(); ++u) {
      if (source.adjacent(v, u) && !target.adjacent(map[v], map[u])) return false;
    }
  }
  return true;
}

bool GraphMap::is_pointed(int source_bp, int target_bp) const {
  return map[source_bp] == target_bp && is_graph_map();
}

GraphMap compose(const GraphMap& second, const GraphMap& first) {
  check(first.target.order() == second.source.order(), Status::invalid_argument,
        "compose: middle graphs disagree");
  GraphMap out;
  out.source = first.source;
  out.target = second.target;
  out.map.resize(first.source.order());
  for (int v = 0; v < first.source.order(); ++v) out.map[v] = second.map[first.map[v]];
  return out;
}

GraphMap identity_map(const Graph& g) {
  GraphMap out;
  out.source = g;
  out.target = g;
  out.map.resize(g.order());
  std::iota(out.map.begin(), out.map.end(), 0);
  return out;
}

namespace {

// Backtracking isomorphism with (degree, loop) signature pruning.
bool iso_search(const Graph& a, const Graph& b, std::vector<int>& image,
                std::vector<bool>& used, int v) {
  int n = a.order();
  if (v == n) return true;
  if (image[v] >= 0) {
    // pre-pinned vertex (basepoint); verify consistency with earlier choices
    int w = image[v];
    for (int u = 0; u < v; ++u) {
      if (image[u] >= 0 && a.adjacent(v, u) != b.adjacent(w, image[u])) return false;
    }
    return iso_search(a, b, image, used, v + 1);
  }
  for (int w = 0; w < n; ++w) {
    if (used[w]) continue;
    if (a.looped(v) != b.looped(w) || a.degree(v) != b.degree(w)) continue;
    bool ok = true;
    for (int u = 0; u <= v; ++u) {
      int iu = (u == v) ? w : image[u];
      if (iu < 0) continue;
      if (a.adjacent(v, u) != b.adjacent(w, iu)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    image[v] = w;
    used[w] = true;
    if (iso_search(a, b, image, used, v + 1)) return true;
    image[v] = -1;
    used[w] = false;
  }
  return false;
}

}  // namespace

bool graphs_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count() ||
      a.loop_count() != b.loop_count())
    return false;
  std::vector<int> image(a.order(), -1);
  std::vector<bool> used(a.order(), false);
  return iso_search(a, b, image, used, 0);
}

bool pointed_isomorphic(const PointedGraph& a, const PointedGraph& b) {
  if (a.order() != b.order() || a.graph.edge_count() != b.graph.edge_count() ||
      a.graph.loop_count() != b.graph.loop_count())
    return false;
  std::vector<int> image(a.order(), -1);
  std::vector<bool> used(a.order(), false);
  image[a.basepoint] = b.basepoint;
  used[b.basepoint] = true;
  return iso_search(a.graph, b.graph, image, used, 0);
}

std::vector<uint64_t> canonical_form(const PointedGraph& g) {
  int n = g.order();
  check(n <= 10, Status::limit_exceeded, "canonical_form is for enumeration scale only");
  std::vector<int> rest;
  for (int v = 0; v < n; ++v) {
    if (v != g.basepoint) rest.push_back(v);
  }
  std::sort(rest.begin(), rest.end());
  std::vector<uint64_t> best;
  do {
    std::vector<int> order;
    order.push_back(g.basepoint);
    order.insert(order.end(), rest.begin(), rest.end());
    // pack upper triangle (loops included) as a bit string
    std::vector<uint64_t> code(1 + static_cast<size_t>(n * (n + 1) / 2 + 63) / 64, 0);
    code[0] = static_cast<uint64_t>(n);
    int bit = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j, ++bit) {
        if (g.graph.adjacent(order[i], order[j]))
          code[1 + (bit >> 6)] |= uint64_t{1} << (bit & 63);
      }
    }
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

}  // namespace homtop
