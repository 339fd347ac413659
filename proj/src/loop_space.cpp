#include "homtop/loop_space.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>

namespace homtop {

namespace {

std::uint64_t word_hash(const Word& w) {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (int v : w) h = hash_mix(h, static_cast<std::uint64_t>(v) + 1);
  return h;
}

std::string word_label(const Graph& g, const Word& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += g.label(w[i]);
  }
  s += ")";
  return s;
}

// BFS distances to `from` (graphs here are symmetric).
std::vector<int> distances(const Graph& g, int from) {
  std::vector<int> dist(g.order(), -1);
  std::deque<int> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : g.neighbors(v))
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
  }
  return dist;
}

}  // namespace

int stabilization(const Word& w, int basepoint) {
  int s = static_cast<int>(w.size());
  while (s > 0 && w[s - 1] == basepoint) --s;
  return s;
}

bool words_adjacent(const Graph& g, const Word& a, const Word& b) {
  check(a.size() == b.size(), Status::invalid_argument, "word lengths differ");
  int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    if (!g.adjacent(a[i], b[i])) return false;
    if (i + 1 < n && (!g.adjacent(a[i], b[i + 1]) || !g.adjacent(a[i + 1], b[i]))) return false;
  }
  return true;
}

bool is_based_word(const Word& w, int basepoint) {
  return !w.empty() && w.front() == basepoint && w.back() == basepoint;
}

bool is_closed_walk(const Graph& g, const Word& w) {
  if (w.empty()) return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (!g.adjacent(w[i], w[i + 1])) return false;
  return true;
}

bool is_looped_walk(const Graph& g, const Word& w) {
  if (!is_closed_walk(g, w)) return false;
  for (int v : w)
    if (!g.looped(v)) return false;
  return true;
}

Word constant_word(int bound, int basepoint) {
  return Word(static_cast<std::size_t>(bound) + 1, basepoint);
}

Word loop_inverse(const Word& f, int basepoint) {
  check(is_based_word(f, basepoint), Status::invalid_argument, "loop word must start and end at the basepoint");
  int nf = stabilization(f, basepoint);
  Word r(f.size(), basepoint);
  for (int i = 0; i <= nf; ++i) r[i] = f[nf - i];
  return r;
}

Word loop_concat(const Word& f, const Word& g, int basepoint, int shift) {
  check(f.size() == g.size(), Status::invalid_argument, "concat requires a common bound");
  check(is_based_word(f, basepoint) && is_based_word(g, basepoint), Status::invalid_argument,
        "loop words must start and end at the basepoint");
  int bound = static_cast<int>(f.size()) - 1;
  int ng = stabilization(g, basepoint);
  if (shift < 0) shift = ng;
  check(shift >= ng, Status::invalid_argument, "shift below the stabilization index of g");
  int nf = stabilization(f, basepoint);
  check(shift + nf <= bound, Status::limit_exceeded, "window exceeded: bound " + std::to_string(bound) +
                                                         " < " + std::to_string(shift + nf));
  Word r(f.size(), basepoint);
  for (int i = 0; i <= bound; ++i) r[i] = i < shift ? g[i] : f[i - shift];
  return r;
}

std::vector<Word> shift_homotopy(const Word& f, const Word& g, int basepoint) {
  check(f.size() == g.size(), Status::invalid_argument, "shift homotopy requires a common bound");
  int bound = static_cast<int>(f.size()) - 1;
  int ng = stabilization(g, basepoint);
  int nf = stabilization(f, basepoint);
  check(ng + nf + 1 <= bound, Status::limit_exceeded, "window exceeded: bound " + std::to_string(bound) +
                                                          " < " + std::to_string(ng + nf + 1));
  auto f_at = [&](int i) { return i < 0 ? basepoint : f[i]; };
  std::vector<Word> rows;
  for (int j = 0; j <= nf + 1; ++j) {
    Word row(f.size(), basepoint);
    for (int i = 0; i <= bound; ++i) {
      if (i < ng)
        row[i] = g[i];
      else if (i < ng + j)
        row[i] = f[i - ng];
      else
        row[i] = f_at(i - ng - 1);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::optional<std::vector<int>> detect_reflexive_cycle(const Graph& g) {
  int m = g.order();
  if (m < 3) return std::nullopt;
  std::vector<std::vector<int>> nbr(m);
  for (int v = 0; v < m; ++v) {
    if (!g.looped(v)) return std::nullopt;
    for (int u : g.neighbors(v))
      if (u != v) nbr[v].push_back(u);
    if (static_cast<int>(nbr[v].size()) != 2) return std::nullopt;
  }
  std::vector<int> order{0, nbr[0][0]};
  while (static_cast<int>(order.size()) < m) {
    int cur = order.back(), prev = order[order.size() - 2];
    int next = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
    if (next == 0) return std::nullopt;  // closed early: not a single cycle
    order.push_back(next);
  }
  int last = order.back();
  if (nbr[last][0] != 0 && nbr[last][1] != 0) return std::nullopt;
  return order;
}

std::optional<int> cycle_winding(const std::vector<int>& cycle, const Word& w) {
  int m = static_cast<int>(cycle.size());
  std::vector<int> pos(m, -1);
  for (int i = 0; i < m; ++i) pos[cycle[i]] = i;
  long long total = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    int d = ((pos[w[i + 1]] - pos[w[i]]) % m + m) % m;
    if (d == 0)
      continue;
    else if (d == 1)
      ++total;
    else if (d == m - 1)
      --total;
    else
      return std::nullopt;
  }
  return static_cast<int>(total / m);
}

std::optional<std::vector<Word>> cycle_null_contraction(const std::vector<int>& cycle, const Word& w) {
  int m = static_cast<int>(cycle.size());
  std::vector<int> pos(m, -1);
  for (int i = 0; i < m; ++i) pos[cycle[i]] = i;
  int p0 = pos[w.front()];
  std::vector<int> lift(w.size(), 0);
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    int d = ((pos[w[i + 1]] - pos[w[i]]) % m + m) % m;
    if (d == 0)
      lift[i + 1] = lift[i];
    else if (d == 1)
      lift[i + 1] = lift[i] + 1;
    else if (d == m - 1)
      lift[i + 1] = lift[i] - 1;
    else
      return std::nullopt;
  }
  if (lift.back() != 0) return std::nullopt;  // winds: not null-homotopic this way
  int hi = *std::max_element(lift.begin(), lift.end());
  int lo = *std::min_element(lift.begin(), lift.end());
  std::vector<Word> rows;
  int steps = std::max(hi, -lo);
  for (int k = 0; k <= steps; ++k) {
    int cap_hi = std::max(hi - k, 0), cap_lo = std::min(lo + k, 0);
    Word row(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      int h = std::clamp(lift[i], cap_lo, cap_hi);
      row[i] = cycle[((p0 + h) % m + m) % m];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

FullLoopGraph::FullLoopGraph(const PointedGraph& g, int bound, std::size_t max_vertices)
    : ambient_(g), bound_(bound) {
  check(bound >= 0, Status::invalid_argument, "bound must be nonnegative");
  int nv = g.order();
  std::size_t count = 1;
  for (int p = 1; p < bound; ++p) {
    check(count <= max_vertices / std::max(nv, 1), Status::limit_exceeded,
          "full loop graph exceeds the vertex budget");
    count *= static_cast<std::size_t>(nv);
  }
  check(count <= max_vertices, Status::limit_exceeded, "full loop graph exceeds the vertex budget");
  count_ = count;

  std::vector<Word> words(count_);
  std::vector<std::string> labels(count_);
  for (std::size_t idx = 0; idx < count_; ++idx) {
    words[idx] = word_of_index(idx);
    labels[idx] = word_label(g.graph, words[idx]);
  }
  Graph graph(static_cast<int>(count_), std::move(labels));
  for (std::size_t i = 0; i < count_; ++i)
    for (std::size_t j = i; j < count_; ++j)
      if (words_adjacent(g.graph, words[i], words[j]))
        graph.add_edge(static_cast<int>(i), static_cast<int>(j));
  std::size_t bp = index_of_word(constant_word(bound_, g.basepoint));
  pointed_ = PointedGraph(std::move(graph), static_cast<int>(bp));
}

std::size_t FullLoopGraph::index_of_word(const Word& w) const {
  check(static_cast<int>(w.size()) == bound_ + 1, Status::invalid_argument, "word length mismatch");
  check(is_based_word(w, ambient_.basepoint), Status::invalid_argument,
        "word must start and end at the basepoint");
  std::size_t idx = 0;
  for (int p = bound_ - 1; p >= 1; --p) idx = idx * static_cast<std::size_t>(ambient_.order()) + w[p];
  return idx;
}

Word FullLoopGraph::word_of_index(std::size_t idx) const {
  check(idx < count_, Status::invalid_argument, "word index out of range");
  Word w(static_cast<std::size_t>(bound_) + 1, ambient_.basepoint);
  for (int p = 1; p < bound_; ++p) {
    w[p] = static_cast<int>(idx % static_cast<std::size_t>(ambient_.order()));
    idx /= static_cast<std::size_t>(ambient_.order());
  }
  return w;
}

LoopGraph::LoopGraph(const PointedGraph& g, int bound, std::size_t max_vertices)
    : ambient_(g), bound_(bound) {
  check(bound >= 1, Status::invalid_argument, "bound must be >= 1");
  enumerate(max_vertices);

  cycle_ = detect_reflexive_cycle(g.graph);
  if (cycle_ && cycle_->size() < 4) cycle_.reset();  // winding is not edge-invariant on a reflexive triangle
  if (cycle_) {
    winding_.resize(words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = cycle_winding(*cycle_, words_[i]);
      check(w.has_value(), Status::internal, "walk on a cycle ambient without a winding number");
      winding_[i] = *w;
    }
  }
  scan_edges();
}

void LoopGraph::enumerate(std::size_t max_vertices) {
  const Graph& g = ambient_.graph;
  int x = ambient_.basepoint;
  std::vector<int> dist = distances(g, x);
  Word buf(static_cast<std::size_t>(bound_) + 1, x);

  if (bound_ == 1) {
    words_.push_back(buf);  // (x, x); the basepoint loop closes it
  } else {
    auto rec = [&](auto&& self, int p) -> void {
      if (p == bound_) {
        if (g.adjacent(buf[bound_ - 1], x)) {
          check(words_.size() < max_vertices, Status::limit_exceeded,
                "loop graph exceeds the vertex budget");
          words_.push_back(buf);
        }
        return;
      }
      int remaining = bound_ - p;  // steps left to come home
      for (int v : g.neighbors(buf[p - 1])) {
        if (dist[v] < 0 || dist[v] > remaining) continue;
        buf[p] = v;
        self(self, p + 1);
      }
      buf[p] = x;
    };
    rec(rec, 1);
  }

  looped_.assign(words_.size(), 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    bool ok = true;
    for (int v : words_[i])
      if (!g.looped(v)) {
        ok = false;
        break;
      }
    looped_[i] = ok ? 1 : 0;
    if (ok) ++looped_count_;
    index_[word_hash(words_[i])].push_back(static_cast<std::uint32_t>(i));
  }
}

std::optional<std::size_t> LoopGraph::index_of(const Word& w) const {
  auto it = index_.find(word_hash(w));
  if (it == index_.end()) return std::nullopt;
  for (std::uint32_t i : it->second)
    if (words_[i] == w) return static_cast<std::size_t>(i);
  return std::nullopt;
}

void LoopGraph::scan_edges() {
  const Graph& g = ambient_.graph;
  int x = ambient_.basepoint;
  int words_per_row = g.row_words();
  std::size_t n = words_.size();
  UnionFind uf(n);

  Word buf(static_cast<std::size_t>(bound_) + 1, x);
  // cand[p] = N(w(p-1)) & N(w(p)) & N(w(p+1)) as a bit row, flat per position.
  std::vector<std::uint64_t> cand(static_cast<std::size_t>(bound_ + 1) * words_per_row, 0);
  std::vector<std::uint64_t> avail(static_cast<std::size_t>(bound_ + 1) * words_per_row, 0);

  for (std::size_t i = 0; i < n; ++i) {
    const Word& w = words_[i];
    for (int p = 1; p < bound_; ++p)
      for (int t = 0; t < words_per_row; ++t)
        cand[static_cast<std::size_t>(p) * words_per_row + t] =
            g.row(w[p - 1])[t] & g.row(w[p])[t] & g.row(w[p + 1])[t];
    auto rec = [&](auto&& self, int p) -> void {
      if (p == bound_) {
        auto found = index_of(buf);
        check(found.has_value(), Status::internal, "loop graph neighbor not materialized");
        std::size_t j = *found;
        if (j <= i) return;
        ++edges_scanned_;
        uf.unite(i, j);
        if (cycle_ && winding_[i] != winding_[j]) winding_preserved_ = false;
        return;
      }
      std::uint64_t* slot = avail.data() + static_cast<std::size_t>(p) * words_per_row;
      const std::uint64_t* prev_row = g.row(buf[p - 1]);
      for (int t = 0; t < words_per_row; ++t) {
        slot[t] = cand[static_cast<std::size_t>(p) * words_per_row + t] & prev_row[t];
        if (p == bound_ - 1) slot[t] &= g.row(x)[t];
      }
      for (int t = 0; t < words_per_row; ++t) {
        std::uint64_t bits = slot[t];
        while (bits) {
          int v = t * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          buf[p] = v;
          self(self, p + 1);
        }
      }
      buf[p] = x;
    };
    if (bound_ > 1) rec(rec, 1);
  }

  // Labels ordered by first appearance along the lexicographic vertex order.
  std::vector<int> root_label(n, -1);
  component_.assign(n, -1);
  component_count_ = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = uf.find(i);
    if (root_label[r] < 0) root_label[r] = component_count_++;
    component_[i] = root_label[r];
  }

  info_.assign(component_count_, {});
  std::vector<int> best_stab(component_count_, std::numeric_limits<int>::max());
  for (std::size_t i = 0; i < n; ++i) {
    int c = component_[i];
    auto& inf = info_[c];
    inf.id = c;
    ++inf.size;
    int s = stabilization(words_[i], x);
    if (s < best_stab[c]) {
      best_stab[c] = s;
      inf.representative = i;
    }
    if (cycle_) {
      if (inf.size == 1)
        inf.winding = winding_[i];
      else if (inf.winding && *inf.winding != winding_[i])
        inf.winding.reset();
    }
  }
}

PointedGraph LoopGraph::looped_part(std::size_t max_vertices) const {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (looped_[i]) keep.push_back(i);
  check(keep.size() <= max_vertices, Status::limit_exceeded,
        "looped part exceeds the vertex budget");
  std::vector<std::string> labels(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    labels[i] = word_label(ambient_.graph, words_[keep[i]]);
  Graph out(static_cast<int>(keep.size()), std::move(labels));
  int bp = -1;
  Word cw = constant_word(bound_, ambient_.basepoint);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (words_[keep[i]] == cw) bp = static_cast<int>(i);
    for (std::size_t j = i; j < keep.size(); ++j)
      if (words_adjacent(ambient_.graph, words_[keep[i]], words_[keep[j]]))
        out.add_edge(static_cast<int>(i), static_cast<int>(j));
  }
  check(bp >= 0, Status::internal, "constant word missing from the looped part");
  return PointedGraph(std::move(out), bp);
}

std::optional<int> LoopGraph::vertex_winding(std::size_t i) const {
  if (!cycle_) return std::nullopt;
  return winding_[i];
}

LoopGroup LoopGraph::group() const {
  LoopGroup gr;
  int x = ambient_.basepoint;
  int k = component_count_;
  auto id_idx = index_of(constant_word(bound_, x));
  check(id_idx.has_value(), Status::internal, "constant word missing from the loop graph");
  gr.identity = component_[*id_idx];

  std::vector<std::vector<int>> table(k, std::vector<int>(k, -1));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      const Word& fa = words_[info_[a].representative];
      const Word& fb = words_[info_[b].representative];
      if (stabilization(fa, x) + stabilization(fb, x) > bound_) {
        gr.undefined_pairs.push_back({a, b});
        continue;
      }
      Word prod = loop_concat(fa, fb, x);  // [f_a] . [f_b], f_b runs first
      auto idx = index_of(prod);
      check(idx.has_value(), Status::internal, "concatenated walk missing from the loop graph");
      int c = component_[*idx];
      table[a][b] = c;
      gr.products.push_back({a, b, c});
    }

  for (int a = 0; a < k; ++a) {
    if (table[gr.identity][a] >= 0 && table[gr.identity][a] != a) gr.identity_ok = false;
    if (table[a][gr.identity] >= 0 && table[a][gr.identity] != a) gr.identity_ok = false;
  }
  gr.inverses.assign(k, -1);
  for (int a = 0; a < k; ++a) {
    Word inv = loop_inverse(words_[info_[a].representative], x);
    auto idx = index_of(inv);
    check(idx.has_value(), Status::internal, "inverse walk missing from the loop graph");
    gr.inverses[a] = component_[*idx];
    int p = table[a][gr.inverses[a]];
    int q = table[gr.inverses[a]][a];
    if (p >= 0 && p != gr.identity) gr.inverse_ok = false;
    if (q >= 0 && q != gr.identity) gr.inverse_ok = false;
  }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (table[a][b] < 0) continue;
      for (int c = 0; c < k; ++c) {
        if (table[b][c] < 0) continue;
        int left = table[table[a][b]][c];
        int right = table[a][table[b][c]];
        if (left < 0 || right < 0) continue;
        ++gr.assoc_checked;
        if (left != right) gr.assoc_ok = false;
      }
    }
  return gr;
}

Exponential path_graph(const PointedGraph& g, int n) { return Exponential(g, make_interval(n)); }

GraphMap stabilization_map(const Exponential& stage_n, const Exponential& stage_next) {
  int n = stage_n.source().order() - 1;
  check(stage_next.source().order() == n + 2, Status::invalid_argument,
        "stages must be consecutive path graphs");
  check(stage_n.target().order() == stage_next.target().order(), Status::invalid_argument,
        "stages must share the ambient graph");
  GraphMap f{stage_n.graph().graph, stage_next.graph().graph, {}};
  f.map.resize(stage_n.graph().order());
  for (int idx = 0; idx < stage_n.graph().order(); ++idx) {
    std::vector<int> img = stage_n.map_of_index(idx);
    img.push_back(img.back());
    f.map[idx] = stage_next.index_of_map(img);
  }
  return f;
}

GraphMap endpoint_map(const Exponential& stage_n) {
  GraphMap f{stage_n.graph().graph, stage_n.target().graph, {}};
  f.map.resize(stage_n.graph().order());
  for (int idx = 0; idx < stage_n.graph().order(); ++idx)
    f.map[idx] = stage_n.map_of_index(idx).back();
  return f;
}

OmegaExpIso omega_exp_iso(const PointedGraph& g, const PointedGraph& t, int bound) {
  FullLoopGraph omega_g(g, bound);
  Exponential lhs(omega_g.pointed(), t);          // (Omega_N G)^T
  Exponential g_t(g, t);                          // G^T
  FullLoopGraph rhs(g_t.graph(), bound);          // Omega_N (G^T)

  OmegaExpIso iso{lhs.graph(), rhs.pointed(), {}, {}};
  iso.alpha = GraphMap{lhs.graph().graph, rhs.pointed().graph, {}};
  iso.beta = GraphMap{rhs.pointed().graph, lhs.graph().graph, {}};
  int nt = t.order();

  iso.alpha.map.resize(lhs.graph().order());
  for (int idx = 0; idx < lhs.graph().order(); ++idx) {
    std::vector<int> f = lhs.map_of_index(idx);  // per vertex of T: a word index in Omega_N G
    Word out(static_cast<std::size_t>(bound) + 1);
    for (int i = 0; i <= bound; ++i) {
      std::vector<int> slice(nt);
      for (int v = 0; v < nt; ++v) slice[v] = omega_g.word_of_index(f[v])[i];
      out[i] = g_t.index_of_map(slice);
    }
    iso.alpha.map[idx] = static_cast<int>(rhs.index_of_word(out));
  }

  iso.beta.map.resize(rhs.pointed().order());
  for (int idx = 0; idx < rhs.pointed().order(); ++idx) {
    Word w = rhs.word_of_index(static_cast<std::size_t>(idx));
    std::vector<int> f(nt);
    for (int v = 0; v < nt; ++v) {
      Word slice(static_cast<std::size_t>(bound) + 1);
      for (int i = 0; i <= bound; ++i) slice[i] = g_t.map_of_index(w[i])[v];
      f[v] = static_cast<int>(omega_g.index_of_word(slice));
    }
    iso.beta.map[idx] = lhs.index_of_map(f);
  }
  return iso;
}

}  // namespace homtop
