#include "homtop/hom_poset.hpp"

#include <algorithm>
#include <bit>

namespace homtop {

long long HomPoset::lookup(const uint64_t* m) const {
  // finalize() leaves elements lexicographically sorted by mask tuple.
  size_t lo = 0;
  size_t hi = size();
  while (lo < hi) {
    size_t mid = lo + (hi - lo) / 2;
    if (std::lexicographical_compare(at(mid), at(mid) + stride, m, m + stride)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < size() && std::equal(m, m + stride, at(lo))) return static_cast<long long>(lo);
  return -1;
}

bool HomPoset::is_atom(size_t i) const {
  const uint64_t* m = at(i);
  for (int v = 0; v < stride; ++v) {
    if (std::popcount(m[v]) != 1) return false;
  }
  return true;
}

void HomPoset::push_element(const uint64_t* m) { masks_.insert(masks_.end(), m, m + stride); }

void HomPoset::finalize() {
  size_t n = size();
  std::vector<uint32_t> perm(n);
  for (size_t i = 0; i < n; ++i) perm[i] = static_cast<uint32_t>(i);
  std::sort(perm.begin(), perm.end(), [&](uint32_t a, uint32_t b) {
    return std::lexicographical_compare(at(a), at(a) + stride, at(b), at(b) + stride);
  });
  std::vector<uint64_t> sorted;
  sorted.reserve(masks_.size());
  for (uint32_t i : perm) sorted.insert(sorted.end(), at(i), at(i) + stride);
  masks_ = std::move(sorted);

  atoms_.clear();
  for (size_t i = 0; i < n; ++i) {
    if (is_atom(i)) atoms_.push_back(static_cast<uint32_t>(i));
  }

  basepoint_element_ = -1;
  if (source_bp >= 0 && target_bp >= 0 && n > 0) {
    std::vector<uint64_t> bp(stride, uint64_t{1} << target_bp);
    basepoint_element_ = lookup(bp.data());
  }
}

bool HomPoset::element_valid(const uint64_t* m) const {
  for (int v = 0; v < stride; ++v) {
    if (m[v] == 0) return false;
  }
  if (source_bp >= 0 && m[source_bp] != (uint64_t{1} << target_bp)) return false;
  for (auto [v, w] : source_graph.edges()) {
    uint64_t mv = m[v];
    while (mv) {
      int a = std::countr_zero(mv);
      mv &= mv - 1;
      uint64_t mw = m[w];
      while (mw) {
        int b = std::countr_zero(mw);
        mw &= mw - 1;
        if (!target_graph.adjacent(a, b)) return false;
      }
    }
  }
  return true;
}

std::vector<uint32_t> HomPoset::covers_above(size_t i) const {
  std::vector<uint32_t> out;
  const uint64_t* m = at(i);
  std::vector<uint64_t> probe(m, m + stride);
  for_each_cover_bit(m, [&](int v, uint64_t bit) {
    probe[v] = m[v] | bit;
    long long idx = lookup(probe.data());
    probe[v] = m[v];
    check(idx >= 0, Status::internal, "covers_above: valid extension missing from poset");
    out.push_back(static_cast<uint32_t>(idx));
  });
  return out;
}

size_t HomPoset::cover_edge_count() const {
  size_t total = 0;
  for (size_t i = 0; i < size(); ++i) total += covers_above(i).size();
  return total;
}

namespace {

struct HomSearch {
  const Graph& g;
  const Graph& h;
  HomPoset& poset;
  size_t max_elements;
  std::vector<int> order;               // assignment order
  std::vector<uint64_t> admissible;     // per source vertex, given assignments so far
  std::vector<uint64_t> element;        // masks per source vertex
  std::vector<char> assigned;
  uint64_t looped_mask = 0;

  HomSearch(const Graph& g_, const Graph& h_, HomPoset& p, size_t cap)
      : g(g_), h(h_), poset(p), max_elements(cap) {
    for (int t = 0; t < h.order(); ++t) {
      if (h.looped(t)) looped_mask |= uint64_t{1} << t;
    }
    uint64_t full = (h.order() == 64) ? ~uint64_t{0} : ((uint64_t{1} << h.order()) - 1);
    admissible.assign(g.order(), full);
    element.assign(g.order(), 0);
    assigned.assign(g.order(), 0);
  }

  uint64_t common_neighbors(uint64_t set) const {
    uint64_t acc = ~uint64_t{0};
    while (set) {
      int t = std::countr_zero(set);
      set &= set - 1;
      acc &= h.row(t)[0];
    }
    return acc;
  }

  void emit() {
    check(poset.size() < max_elements, Status::limit_exceeded,
          "hom poset exceeds element cap (" + std::to_string(max_elements) + ")");
    poset.push_element(element.data());
  }

  // enumerate admissible sets for order[pos] and recurse
  void assign(size_t pos) {
    if (pos == order.size()) {
      emit();
      return;
    }
    int v = order[pos];
    uint64_t adm = admissible[v];
    if (g.looped(v)) adm &= looped_mask;
    if (!adm) return;

    std::vector<int> bits;
    for (uint64_t m = adm; m; m &= m - 1) bits.push_back(std::countr_zero(m));

    std::vector<uint64_t> saved(admissible);
    auto use = [&](uint64_t set) {
      element[v] = set;
      assigned[v] = 1;
      bool feasible = true;
      uint64_t common = common_neighbors(set);
      for (int w = 0; w < g.order() && feasible; ++w) {
        if (assigned[w] || !g.adjacent(v, w) || w == v) continue;
        admissible[w] &= common;
        if (!admissible[w]) feasible = false;
      }
      if (feasible) assign(pos + 1);
      std::copy(saved.begin(), saved.end(), admissible.begin());
      assigned[v] = 0;
      element[v] = 0;
    };

    if (g.looped(v)) {
      // subsets spanning a clique (loops included) inside adm
      std::vector<int> chosen;
      auto rec = [&](auto&& self, uint64_t set, uint64_t candidates) -> void {
        if (set) use(set);
        uint64_t c = candidates;
        while (c) {
          int t = std::countr_zero(c);
          c &= c - 1;
          uint64_t bit = uint64_t{1} << t;
          self(self, set | bit, candidates & h.row(t)[0] & ~(bit | (bit - 1)));
        }
      };
      rec(rec, 0, adm);
    } else {
      // all nonempty subsets of adm
      auto rec = [&](auto&& self, uint64_t set, std::size_t next) -> void {
        if (set) use(set);
        for (size_t i = next; i < bits.size(); ++i) {
          self(self, set | (uint64_t{1} << bits[i]), i + 1);
        }
      };
      rec(rec, 0, 0);
    }
  }
};

HomPoset build_common(const Graph& g, const Graph& h, int g_bp, int h_bp, HomBuildOptions opt) {
  check(h.order() <= 64, Status::limit_exceeded, "hom poset target limited to 64 vertices");
  check(g.order() > 0 && h.order() > 0, Status::invalid_argument, "hom poset needs nonempty graphs");
  HomPoset poset;
  poset.source_graph = g;
  poset.target_graph = h;
  poset.source_bp = g_bp;
  poset.target_bp = h_bp;
  poset.stride = g.order();

  HomSearch search(g, h, poset, opt.max_elements);

  // assignment order: decreasing degree, then ascending index (basepoint pinned)
  for (int v = 0; v < g.order(); ++v) {
    if (v != g_bp) search.order.push_back(v);
  }
  std::stable_sort(search.order.begin(), search.order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });

  if (g_bp >= 0) {
    search.element[g_bp] = uint64_t{1} << h_bp;
    search.assigned[g_bp] = 1;
    uint64_t common = search.common_neighbors(search.element[g_bp]);
    bool feasible = true;
    for (int w = 0; w < g.order(); ++w) {
      if (w == g_bp || !g.adjacent(g_bp, w)) continue;
      search.admissible[w] &= common;
      if (!search.admissible[w]) feasible = false;
    }
    if (feasible) search.assign(0);
  } else {
    search.assign(0);
  }

  poset.finalize();
  return poset;
}

}  // namespace

HomPoset build_hom_star(const PointedGraph& g, const PointedGraph& h, HomBuildOptions opt) {
  g.validate();
  h.validate();
  return build_common(g.graph, h.graph, g.basepoint, h.basepoint, opt);
}

HomPoset build_hom(const Graph& g, const Graph& h, HomBuildOptions opt) {
  return build_common(g, h, -1, -1, opt);
}

AtomHomGraph atom_hom_graph(const PointedGraph& g, const PointedGraph& h) {
  AtomHomGraph out;
  out.homs = enumerate_pointed_homs(g, h);
  int n = static_cast<int>(out.homs.size());
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    std::string l = "(";
    for (int v = 0; v < g.order(); ++v) {
      if (v) l += ",";
      l += h.graph.label(out.homs[i][v]);
    }
    labels[i] = l + ")";
  }
  Graph atom(n, std::move(labels));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (Exponential::maps_adjacent(g, h, out.homs[i], out.homs[j])) atom.add_edge(i, j);
    }
  }
  std::vector<int> bp_img(g.order(), h.basepoint);
  int bp = -1;
  for (int i = 0; i < n; ++i) {
    if (out.homs[i] == bp_img) bp = i;
  }
  check(bp >= 0, Status::internal, "atom_hom_graph: constant basepoint hom missing");
  out.graph = PointedGraph(std::move(atom), bp);
  return out;
}

bool PosetMap::monotone_on_covers() const {
  for (size_t i = 0; i < source->size(); ++i) {
    for (uint32_t j : source->covers_above(i)) {
      if (!target->leq(image[i], image[j])) return false;
    }
  }
  return true;
}

PosetMap induced_map_target(const HomPoset& p, const GraphMap& f, const HomPoset& q) {
  check(f.source.same_adjacency(p.target_graph) && f.target.same_adjacency(q.target_graph),
        Status::invalid_argument, "induced_map_target: graph map endpoints disagree");
  check(p.source_graph.same_adjacency(q.source_graph), Status::invalid_argument,
        "induced_map_target: posets must share the source graph");
  PosetMap out{&p, &q, {}};
  out.image.resize(p.size());
  std::vector<uint64_t> img(p.stride);
  for (size_t i = 0; i < p.size(); ++i) {
    const uint64_t* m = p.at(i);
    for (int v = 0; v < p.stride; ++v) {
      uint64_t acc = 0;
      for (uint64_t set = m[v]; set; set &= set - 1) {
        acc |= uint64_t{1} << f.map[std::countr_zero(set)];
      }
      img[v] = acc;
    }
    long long idx = q.lookup(img.data());
    check(idx >= 0, Status::internal, "induced_map_target: image element missing");
    out.image[i] = static_cast<uint32_t>(idx);
  }
  return out;
}

PosetMap induced_map_source(const HomPoset& p, const GraphMap& f, const HomPoset& q) {
  check(f.target.same_adjacency(p.source_graph) && f.source.same_adjacency(q.source_graph),
        Status::invalid_argument, "induced_map_source: graph map endpoints disagree");
  check(p.target_graph.same_adjacency(q.target_graph), Status::invalid_argument,
        "induced_map_source: posets must share the target graph");
  PosetMap out{&p, &q, {}};
  out.image.resize(p.size());
  std::vector<uint64_t> img(q.stride);
  for (size_t i = 0; i < p.size(); ++i) {
    const uint64_t* m = p.at(i);
    for (int v = 0; v < q.stride; ++v) img[v] = m[f.map[v]];
    long long idx = q.lookup(img.data());
    check(idx >= 0, Status::internal, "induced_map_source: image element missing");
    out.image[i] = static_cast<uint32_t>(idx);
  }
  return out;
}

std::vector<uint32_t> quillen_fiber(const PosetMap& m, size_t q) {
  std::vector<uint32_t> out;
  for (size_t i = 0; i < m.source->size(); ++i) {
    if (m.target->leq(m.image[i], q)) out.push_back(static_cast<uint32_t>(i));
  }
  return out;
}

std::vector<std::pair<uint32_t, uint32_t>> comparable_pairs(const HomPoset& p, size_t cap) {
  std::vector<std::pair<uint32_t, uint32_t>> out;
  size_t n = p.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (p.leq(i, j)) {
        check(out.size() < cap, Status::limit_exceeded, "comparable_pairs cap exceeded");
        out.emplace_back(static_cast<uint32_t>(i), static_cast<uint32_t>(j));
      }
    }
  }
  return out;
}

}  // namespace homtop
