#include "homtop/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "homtop/util.hpp"

namespace homtop {

namespace {

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) ++i, ++j;
    else if (a[i] > b[j]) ++j;
    else return false;
  }
  return i == a.size();
}

struct DimLexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

uint64_t face_hash(const std::vector<int>& f) {
  uint64_t h = 0x243f6a8885a308d3ull;
  for (int v : f) h = hash_mix(h, static_cast<uint64_t>(v));
  return h;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_faces(int n, std::vector<std::vector<int>> faces) {
  for (auto& f : faces) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (int v : f) check(v >= 0 && v < n, Status::invalid_argument, "face vertex out of range");
  }
  faces.erase(std::remove_if(faces.begin(), faces.end(),
                             [](const std::vector<int>& f) { return f.empty(); }),
              faces.end());
  std::sort(faces.begin(), faces.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a < b;
            });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

  SimplicialComplex k;
  k.n = n;
  for (auto& f : faces) {
    bool dominated = false;
    for (const auto& kept : k.facets) {
      if (subset_of(f, kept)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) k.facets.push_back(std::move(f));
  }
  std::sort(k.facets.begin(), k.facets.end());
  return k;
}

int SimplicialComplex::dim() const {
  int d = -1;
  for (const auto& f : facets) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

bool SimplicialComplex::vertex_present(int v) const {
  for (const auto& f : facets) {
    if (std::binary_search(f.begin(), f.end(), v)) return true;
  }
  return false;
}

std::vector<int> SimplicialComplex::vertices() const {
  std::vector<int> out;
  for (const auto& f : facets) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<int>> SimplicialComplex::all_faces(size_t cap) const {
  std::set<std::vector<int>, DimLexLess> seen;
  std::vector<int> cur;
  for (const auto& f : facets) {
    auto rec = [&](auto&& self, size_t next) -> void {
      if (!cur.empty()) {
        check(seen.size() < cap || seen.count(cur), Status::limit_exceeded,
              "face enumeration cap exceeded");
        seen.insert(cur);
      }
      for (size_t i = next; i < f.size(); ++i) {
        cur.push_back(f[i]);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::array<int, 2>> SimplicialComplex::edge_faces() const {
  std::set<std::array<int, 2>> seen;
  for (const auto& f : facets) {
    for (size_t i = 0; i < f.size(); ++i) {
      for (size_t j = i + 1; j < f.size(); ++j) seen.insert({f[i], f[j]});
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::array<int, 3>> SimplicialComplex::triangle_faces() const {
  std::set<std::array<int, 3>> seen;
  for (const auto& f : facets) {
    for (size_t i = 0; i < f.size(); ++i) {
      for (size_t j = i + 1; j < f.size(); ++j) {
        for (size_t l = j + 1; l < f.size(); ++l) seen.insert({f[i], f[j], f[l]});
      }
    }
  }
  return {seen.begin(), seen.end()};
}

long long SimplicialComplex::euler(size_t cap) const {
  long long chi = 0;
  for (const auto& f : all_faces(cap)) chi += (f.size() % 2 == 1) ? 1 : -1;
  return chi;
}

int SimplicialComplex::component_count() const {
  if (facets.empty()) return 0;
  UnionFind uf(n);
  std::vector<char> present(n, 0);
  for (const auto& f : facets) {
    for (int v : f) present[v] = 1;
    for (size_t i = 1; i < f.size(); ++i) uf.unite(f[0], f[i]);
  }
  std::unordered_set<int> roots;
  for (int v = 0; v < n; ++v) {
    if (present[v]) roots.insert(uf.find(v));
  }
  return static_cast<int>(roots.size());
}

SimplicialComplex clique_complex(const Graph& g) {
  std::vector<int> looped;
  for (int v = 0; v < g.order(); ++v) {
    if (g.looped(v)) looped.push_back(v);
  }
  int m = static_cast<int>(looped.size());
  check(m <= 64, Status::limit_exceeded, "clique complex limited to 64 looped vertices");

  std::vector<uint64_t> adj(m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i != j && g.adjacent(looped[i], looped[j])) adj[i] |= uint64_t{1} << j;
    }
  }

  std::vector<std::vector<int>> cliques;
  // Bron-Kerbosch with pivoting
  auto expand = [&](auto&& self, uint64_t r, uint64_t p, uint64_t x) -> void {
    if (!p && !x) {
      std::vector<int> c;
      for (uint64_t s = r; s; s &= s - 1) c.push_back(looped[std::countr_zero(s)]);
      cliques.push_back(std::move(c));
      return;
    }
    uint64_t px = p | x;
    int pivot = -1, best = -1;
    for (uint64_t s = px; s; s &= s - 1) {
      int u = std::countr_zero(s);
      int deg = std::popcount(p & adj[u]);
      if (deg > best) best = deg, pivot = u;
    }
    uint64_t cand = p & ~adj[pivot];
    for (uint64_t s = cand; s; s &= s - 1) {
      int v = std::countr_zero(s);
      uint64_t bit = uint64_t{1} << v;
      self(self, r | bit, p & adj[v], x & adj[v]);
      p &= ~bit;
      x |= bit;
    }
  };
  if (m > 0) {
    uint64_t all = (m == 64) ? ~uint64_t{0} : ((uint64_t{1} << m) - 1);
    expand(expand, 0, all, 0);
  }
  return SimplicialComplex::from_faces(g.order(), std::move(cliques));
}

TwoSkeleton two_skeleton(const SimplicialComplex& k) {
  TwoSkeleton s;
  s.n = k.n;
  s.vertices = k.vertices();
  s.edges = k.edge_faces();
  s.triangles = k.triangle_faces();
  return s;
}

TwoSkeleton clique_two_skeleton(const Graph& g, size_t cap) {
  TwoSkeleton s;
  s.n = g.order();
  for (int v = 0; v < g.order(); ++v) {
    if (g.looped(v)) s.vertices.push_back(v);
  }
  size_t budget = cap;
  for (int u : s.vertices) {
    const uint64_t* ru = g.row(u);
    for (int v : s.vertices) {
      if (v <= u || !(ru[v >> 6] >> (v & 63) & 1)) continue;
      check(budget-- > 0, Status::limit_exceeded, "two-skeleton cap exceeded");
      s.edges.push_back({u, v});
      const uint64_t* rv = g.row(v);
      for (int w : s.vertices) {
        if (w <= v) continue;
        uint64_t both = ru[w >> 6] & rv[w >> 6];
        if (both >> (w & 63) & 1) {
          check(budget-- > 0, Status::limit_exceeded, "two-skeleton cap exceeded");
          s.triangles.push_back({u, v, w});
        }
      }
    }
  }
  std::sort(s.edges.begin(), s.edges.end());
  std::sort(s.triangles.begin(), s.triangles.end());
  return s;
}

CollapseCertificate collapse_to_point(const SimplicialComplex& k, size_t max_faces) {
  CollapseCertificate cert;
  auto faces = k.all_faces(max_faces);
  size_t nf = faces.size();

  std::unordered_map<uint64_t, std::vector<uint32_t>> index;
  for (size_t i = 0; i < nf; ++i) index[face_hash(faces[i])].push_back(static_cast<uint32_t>(i));
  auto find_face = [&](const std::vector<int>& f) -> long long {
    auto it = index.find(face_hash(f));
    if (it == index.end()) return -1;
    for (uint32_t i : it->second) {
      if (faces[i] == f) return i;
    }
    return -1;
  };

  // immediate subface ids per face
  std::vector<std::vector<uint32_t>> subs(nf);
  std::vector<std::vector<uint32_t>> cofs(nf);
  std::vector<int> cof_count(nf, 0);
  for (size_t i = 0; i < nf; ++i) {
    if (faces[i].size() == 1) continue;
    std::vector<int> sub(faces[i].begin() + 1, faces[i].end());
    for (size_t drop = 0; drop < faces[i].size(); ++drop) {
      long long j = find_face(sub);
      check(j >= 0, Status::internal, "face list not downward closed");
      subs[i].push_back(static_cast<uint32_t>(j));
      cofs[j].push_back(static_cast<uint32_t>(i));
      ++cof_count[j];
      if (drop + 1 < faces[i].size()) sub[drop] = faces[i][drop];
    }
  }

  std::vector<char> active(nf, 1);
  std::priority_queue<uint32_t, std::vector<uint32_t>, std::greater<>> free_faces;
  for (size_t i = 0; i < nf; ++i) {
    if (cof_count[i] == 1) free_faces.push(static_cast<uint32_t>(i));
  }

  auto drop_face = [&](uint32_t id) {
    active[id] = 0;
    for (uint32_t s : subs[id]) {
      if (active[s] && --cof_count[s] == 1) free_faces.push(s);
    }
  };

  while (!free_faces.empty()) {
    uint32_t sigma = free_faces.top();
    free_faces.pop();
    if (!active[sigma] || cof_count[sigma] != 1) continue;
    uint32_t tau = 0;
    for (uint32_t c : cofs[sigma]) {
      if (active[c]) tau = c;
    }
    drop_face(sigma);
    drop_face(tau);
    cert.steps.emplace_back(faces[sigma], faces[tau]);
  }

  for (size_t i = 0; i < nf; ++i) {
    if (active[i]) cert.remaining.push_back(faces[i]);
  }
  cert.success = cert.remaining.size() == 1 && cert.remaining[0].size() == 1;
  return cert;
}

bool verify_collapse(const SimplicialComplex& k, const CollapseCertificate& cert,
                     size_t max_faces) {
  auto faces = k.all_faces(max_faces);
  std::set<std::vector<int>> active(faces.begin(), faces.end());
  auto immediate_cofaces = [&](const std::vector<int>& f) {
    std::vector<std::vector<int>> out;
    for (int v = 0; v < k.n; ++v) {
      if (std::binary_search(f.begin(), f.end(), v)) continue;
      std::vector<int> up(f);
      up.insert(std::upper_bound(up.begin(), up.end(), v), v);
      if (active.count(up)) out.push_back(std::move(up));
    }
    return out;
  };

  for (const auto& [sigma, tau] : cert.steps) {
    if (!active.count(sigma) || !active.count(tau)) return false;
    if (tau.size() != sigma.size() + 1 || !subset_of(sigma, tau)) return false;
    auto up_sigma = immediate_cofaces(sigma);
    if (up_sigma.size() != 1 || up_sigma[0] != tau) return false;
    if (!immediate_cofaces(tau).empty()) return false;
    active.erase(sigma);
    active.erase(tau);
  }

  std::set<std::vector<int>> left(cert.remaining.begin(), cert.remaining.end());
  if (left != active) return false;
  return cert.success == (active.size() == 1 && active.begin()->size() == 1);
}

}  // namespace homtop
