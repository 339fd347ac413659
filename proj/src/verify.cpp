#include "homtop/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "homtop/closure.hpp"
#include "homtop/graph.hpp"
#include "homtop/graph_ops.hpp"
#include "homtop/hom_poset.hpp"
#include "homtop/invariants.hpp"
#include "homtop/loop_space.hpp"
#include "homtop/random_gen.hpp"
#include "homtop/simplicial.hpp"
#include "homtop/theorem_maps.hpp"
#include "homtop/util.hpp"

namespace homtop {
namespace {

int resolve_threads(const CheckOptions& opt) {
  if (opt.threads > 0) return opt.threads;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i) for i in [0, count); fn returns a failure record or nullopt.
// Results are collected by instance index so the report is deterministic
// regardless of scheduling.
template <class Fn>
std::vector<InstanceResult> for_each_instance(std::size_t count, int threads, Fn&& fn) {
  std::vector<std::optional<InstanceResult>> slots(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) break;
      try {
        slots[i] = fn(i);
      } catch (const std::exception& e) {
        slots[i] = InstanceResult{"instance " + std::to_string(i), false,
                                  std::string("exception: ") + e.what()};
      }
    }
  };
  int t = std::max(1, std::min<int>(threads, static_cast<int>(count == 0 ? 1 : count)));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(t - 1));
  for (int k = 0; k + 1 < t; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::vector<InstanceResult> failures;
  for (auto& s : slots)
    if (s.has_value()) failures.push_back(std::move(*s));
  return failures;
}

std::string describe(const PointedGraph& pg) {
  const Graph& g = pg.graph;
  std::ostringstream os;
  os << "{vertices=[";
  for (int v = 0; v < g.order(); ++v) os << (v ? "," : "") << g.label(v);
  os << "];edges=[";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    os << (first ? "" : ",") << g.label(u) << "-" << g.label(v);
    first = false;
  }
  os << "];basepoint=" << pg.basepoint_label() << "}";
  return os.str();
}

std::string profile_string(const InvariantProfile& p) {
  std::ostringstream os;
  os << "pi0=" << p.pi0 << " euler=" << p.euler << " h1=Z^" << p.h1.rank;
  if (!p.h1.torsion.empty()) {
    os << "+(";
    for (std::size_t i = 0; i < p.h1.torsion.size(); ++i)
      os << (i ? "," : "") << "Z/" << p.h1.torsion[i];
    os << ")";
  }
  os << " [" << p.route << "]";
  return os.str();
}

// pi0 / euler / H1 only: component numbering is not comparable between two
// different posets, so basepoint_component stays out of cross-poset checks.
bool same_homotopy_profile(const InvariantProfile& a, const InvariantProfile& b) {
  return a.pi0 == b.pi0 && a.euler == b.euler && a.h1 == b.h1;
}

// Exhaustive batteries hit the same hom poset many times (distinct triples can
// yield element-for-element identical posets), so memoise exact profiles by
// poset content.  Pure memoisation: the profile is a function of the poset
// bytes, and every per-instance comparison still runs.
class ProfileCache {
public:
  InvariantProfile exact(const HomPoset& p, const InvariantOptions& opt) {
    if (p.size() < 64) return poset_profile_exact(p, opt);  // cheaper than keying
    std::string key = key_of(p);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    InvariantProfile prof = poset_profile_exact(p, opt);
    std::lock_guard<std::mutex> lock(mu_);
    if (map_.size() < kMaxEntries) map_.emplace(std::move(key), prof);
    return prof;
  }

private:
  static std::string key_of(const HomPoset& p) {
    const std::size_t n = p.size();
    std::string key;
    key.reserve(32 + n * static_cast<std::size_t>(p.stride) * 8);
    auto put64 = [&key](uint64_t v) {
      for (int b = 0; b < 8; ++b) key.push_back(static_cast<char>(v >> (8 * b)));
    };
    put64(static_cast<uint64_t>(p.stride));
    put64(static_cast<uint64_t>(n));
    put64(static_cast<uint64_t>(static_cast<int64_t>(p.source_bp)));
    put64(static_cast<uint64_t>(static_cast<int64_t>(p.target_bp)));
    for (std::size_t i = 0; i < n; ++i) {
      const uint64_t* m = p.at(i);
      for (int v = 0; v < p.stride; ++v) put64(m[v]);
    }
    return key;
  }

  static constexpr std::size_t kMaxEntries = 4000;
  std::mutex mu_;
  std::unordered_map<std::string, InvariantProfile> map_;
};

void append_graph_key(std::string& key, const PointedGraph& pg) {
  auto put64 = [&key](uint64_t v) {
    for (int b = 0; b < 8; ++b) key.push_back(static_cast<char>(v >> (8 * b)));
  };
  put64(static_cast<uint64_t>(pg.graph.order()));
  put64(static_cast<uint64_t>(static_cast<int64_t>(pg.basepoint)));
  for (int v = 0; v < pg.graph.order(); ++v) put64(pg.graph.row(v)[0]);
}

// Shares large hom posets between instances whose (source, target) graphs
// have identical adjacency; the consumer revalidates every hint against its
// own graphs, so the cache can only save work, never change results.  FIFO
// eviction under a byte budget keeps memory bounded.
class PosetHintCache {
public:
  std::shared_ptr<const HomPoset> find(const std::string& key) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    return it == map_.end() ? nullptr : it->second;
  }

  void store(const std::string& key, const HomPoset& poset) {
    if (poset.size() < kMinElements) return;
    std::size_t bytes = poset.size() * static_cast<std::size_t>(poset.stride) * sizeof(uint64_t);
    std::lock_guard<std::mutex> lock(mu_);
    if (!map_.emplace(key, std::make_shared<const HomPoset>(poset)).second) return;
    fifo_.push_back(key);
    bytes_ += bytes;
    while (bytes_ > kByteBudget && !fifo_.empty()) {
      auto oldest = map_.find(fifo_.front());
      fifo_.pop_front();
      if (oldest != map_.end()) {
        bytes_ -= oldest->second->size() * static_cast<std::size_t>(oldest->second->stride) *
                  sizeof(uint64_t);
        map_.erase(oldest);
      }
    }
  }

private:
  static constexpr std::size_t kMinElements = 4096;       // small posets rebuild in <1ms
  static constexpr std::size_t kByteBudget = 64ull << 20;  // mask storage only
  std::mutex mu_;
  std::deque<std::string> fifo_;
  std::unordered_map<std::string, std::shared_ptr<const HomPoset>> map_;
  std::size_t bytes_ = 0;
};

InvariantProfile profile_of_poset_or_graphs(const HomPoset& p, const PointedGraph& g,
                                            const PointedGraph& h, const InvariantOptions& opt,
                                            ProfileCache* cache = nullptr) {
  if (p.size() <= opt.exact_poset_cap) {
    return cache ? cache->exact(p, opt) : poset_profile_exact(p, opt);
  }
  return hom_profile_fast(g, h, opt);
}

struct FailList {
  std::vector<InstanceResult> items;
  void add(std::string instance, std::string detail) {
    items.push_back(InstanceResult{std::move(instance), false, std::move(detail)});
  }
};

// ---------------------------------------------------------------------------
// adjunction: the hom-set bijection Hom(A ^ B, C) <-> Hom(A, C^B)
// ---------------------------------------------------------------------------

CheckReport check_adjunction(const CheckOptions& opt) {
  const auto graphs = all_pointed_graphs(opt.size);
  const std::size_t m = graphs.size();
  const std::size_t count = m * m * m;
  std::atomic<long long> total_maps{0};

  auto failures = for_each_instance(count, resolve_threads(opt), [&](std::size_t idx)
                                        -> std::optional<InstanceResult> {
    const std::size_t ia = idx / (m * m), ib = (idx / m) % m, ic = idx % m;
    const PointedGraph& a = graphs[ia];
    const PointedGraph& b = graphs[ib];
    const PointedGraph& c = graphs[ic];
    std::string inst = "A=#" + std::to_string(ia) + " B=#" + std::to_string(ib) +
                       " C=#" + std::to_string(ic);
    auto fail = [&](const std::string& why) {
      return InstanceResult{inst, false,
                            why + "; A=" + describe(a) + " B=" + describe(b) +
                                " C=" + describe(c)};
    };

    AdjunctionContext ctx(a, b, c);
    const PointedGraph& smash = ctx.smash.quotient;
    const PointedGraph& expg = ctx.exp.graph();
    auto left = enumerate_pointed_homs(smash, c);
    auto right = enumerate_pointed_homs(a, expg);
    if (left.size() != right.size())
      return fail("hom-set sizes differ: |Hom(A^B,C)|=" + std::to_string(left.size()) +
                  " |Hom(A,C^B)|=" + std::to_string(right.size()));
    total_maps.fetch_add(static_cast<long long>(left.size()));

    std::set<std::vector<int>> right_set(right.begin(), right.end());
    std::set<std::vector<int>> forward_images;
    for (const auto& f : left) {
      std::vector<int> fwd = adjunction_forward(ctx, f);
      GraphMap fm{a.graph, expg.graph, fwd};
      if (!fm.is_graph_map() || !fm.is_pointed(a.basepoint, expg.basepoint))
        return fail("forward image is not a pointed graph map");
      if (!right_set.count(fwd)) return fail("forward image missing from Hom(A,C^B)");
      if (!forward_images.insert(fwd).second) return fail("forward map is not injective");
      if (adjunction_backward(ctx, fwd) != f) return fail("backward(forward(f)) != f");
    }
    std::set<std::vector<int>> left_set(left.begin(), left.end());
    for (const auto& gmap : right) {
      std::vector<int> back = adjunction_backward(ctx, gmap);
      GraphMap bm{smash.graph, c.graph, back};
      if (!bm.is_graph_map() || !bm.is_pointed(smash.basepoint, c.basepoint))
        return fail("backward image is not a pointed graph map");
      if (!left_set.count(back)) return fail("backward image missing from Hom(A^B,C)");
      if (adjunction_forward(ctx, back) != gmap) return fail("forward(backward(g)) != g");
    }
    return std::nullopt;
  });

  CheckReport rep;
  rep.name = "adjunction";
  rep.checked = count;
  rep.failures = std::move(failures);
  rep.pass = rep.failures.empty();
  rep.summary = std::to_string(count) + " triples over " + std::to_string(m) +
                " pointed graphs; " + std::to_string(total_maps.load()) +
                " pointed maps matched in both directions";
  return rep;
}

// ---------------------------------------------------------------------------
// adjoint-closure: j/c between the multihom posets, closure axioms,
// closed elements = image of j, invariants agree
// ---------------------------------------------------------------------------

CheckReport check_adjoint_closure(const CheckOptions& opt) {
  const auto graphs = all_pointed_graphs(opt.size);
  const std::size_t m = graphs.size();
  const std::size_t count = m * m * m;
  ProfileCache cache;
  PosetHintCache hints;
  const HomPoset no_hint;

  auto failures = for_each_instance(count, resolve_threads(opt), [&](std::size_t idx)
                                        -> std::optional<InstanceResult> {
    // B runs innermost: C^B frequently repeats as B varies (dense C even
    // gives the same exponential for every B of a given order), so
    // consecutive instances can share the Q-side poset via the hint cache.
    const std::size_t ia = idx / (m * m), ic = (idx / m) % m, ib = idx % m;
    const PointedGraph& a = graphs[ia];
    const PointedGraph& b = graphs[ib];
    const PointedGraph& c = graphs[ic];
    std::string inst = "A=#" + std::to_string(ia) + " B=#" + std::to_string(ib) +
                       " C=#" + std::to_string(ic);
    auto fail = [&](const std::string& why) {
      return InstanceResult{inst, false,
                            why + "; A=" + describe(a) + " B=" + describe(b) +
                                " C=" + describe(c)};
    };

    std::string hint_key;
    append_graph_key(hint_key, a);
    append_graph_key(hint_key, exponential(c, b));
    std::shared_ptr<const HomPoset> hint = hints.find(hint_key);

    AdjunctionClosure ac(a, b, c, hint ? *hint : no_hint);
    const HomPoset& p = ac.smash_poset();
    const HomPoset& q = ac.exp_poset();
    if (!hint) hints.store(hint_key, q);

    // j: P -> Q injective and monotone
    std::vector<std::size_t> j(p.size());
    std::set<std::size_t> seen;
    for (std::size_t i = 0; i < p.size(); ++i) {
      j[i] = ac.j_of(i);
      if (!seen.insert(j[i]).second) return fail("j is not injective at P element " + std::to_string(i));
    }
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::uint32_t k : p.covers_above(i))
        if (!q.leq(j[i], j[k]))
          return fail("j not monotone on cover " + std::to_string(i) + "<" + std::to_string(k));

    // c: Q -> Q is a closure operator.  c acts coordinatewise (c_masks is
    // c_box per coordinate), so each axiom is an assertion about coordinate
    // masks; dense tables memoize c_box and the common-neighbour sets over
    // every subset that occurs.  Membership of the image in Q is checked
    // against the multihom conditions themselves: basepoint pinned and all
    // source-edge constraints met.
    const int ne = q.target_graph.order();
    const int qs = q.stride;
    std::vector<uint64_t> box_tab, cn_tab;
    if (ne <= 16) {
      box_tab.assign(std::size_t{1} << ne, ~uint64_t{0});  // ~0 unreachable: ne <= 16
      cn_tab.assign(std::size_t{1} << ne, ~uint64_t{0});
    }
    auto cbox = [&](uint64_t s) -> uint64_t {
      if (box_tab.empty()) return ac.c_box(s);
      uint64_t& slot = box_tab[s];
      if (slot == ~uint64_t{0}) slot = ac.c_box(s);
      return slot;
    };
    auto common_nbrs = [&](uint64_t s) -> uint64_t {
      uint64_t* slot = cn_tab.empty() ? nullptr : &cn_tab[s];
      if (slot && *slot != ~uint64_t{0}) return *slot;
      uint64_t acc = ne == 64 ? ~uint64_t{0} : (uint64_t{1} << ne) - 1;
      for (uint64_t rest = s; rest; rest &= rest - 1)
        acc &= q.target_graph.row(std::countr_zero(rest))[0];
      if (slot) *slot = acc;
      return acc;
    };

    const auto a_edges = q.source_graph.edges();
    std::vector<uint32_t> closed;
    std::vector<uint64_t> cm(qs);
    for (std::size_t i = 0; i < q.size(); ++i) {
      const uint64_t* mi = q.at(i);
      bool fixed = true;
      for (int v = 0; v < qs; ++v) {
        cm[v] = cbox(mi[v]);
        if (mi[v] & ~cm[v]) return fail("c not inflationary at Q element " + std::to_string(i));
        if (cbox(cm[v]) != cm[v]) return fail("c not idempotent at Q element " + std::to_string(i));
        if (cm[v] != mi[v]) fixed = false;
      }
      if (q.pointed() && cm[q.source_bp] != mi[q.source_bp])
        return fail("c image moves the basepoint at Q element " + std::to_string(i));
      for (auto [v, w] : a_edges)
        if (cm[w] & ~common_nbrs(cm[v]))
          return fail("c image leaves the poset at Q element " + std::to_string(i));
      if (fixed) closed.push_back(static_cast<uint32_t>(i));
      // a cover adds one bit at one coordinate, leaving the other image
      // coordinates unchanged, so monotonicity is containment at that one
      bool mono = true;
      q.for_each_cover_bit(mi, [&](int v, uint64_t bit) {
        if (cm[v] & ~cbox(mi[v] | bit)) mono = false;
      });
      if (!mono) return fail("c not monotone on a cover above Q element " + std::to_string(i));
    }

    // fixed points of c are exactly the image of j
    if (closed != ac.j_image())
      return fail("closed elements differ from the image of j");

    // both posets present the same homotopy type
    InvariantOptions iopt;
    iopt.attempt_collapse = false;
    const PointedGraph& smash = ac.context().smash.quotient;
    const PointedGraph& expg = ac.context().exp.graph();
    InvariantProfile pp = profile_of_poset_or_graphs(p, smash, c, iopt, &cache);
    InvariantProfile qp = profile_of_poset_or_graphs(q, a, expg, iopt, &cache);
    if (!same_homotopy_profile(pp, qp))
      return fail("invariants differ: P {" + profile_string(pp) + "} vs Q {" +
                  profile_string(qp) + "}");
    return std::nullopt;
  });

  CheckReport rep;
  rep.name = "adjoint-closure";
  rep.checked = count;
  rep.failures = std::move(failures);
  rep.pass = rep.failures.empty();
  rep.summary = std::to_string(count) +
                " triples: j injective+monotone, c closure axioms, fixed(c)=im(j), "
                "(pi0, euler, H1) agree across the adjunction";
  return rep;
}

// ---------------------------------------------------------------------------
// component: poset components match hom-graph components atom by atom
// ---------------------------------------------------------------------------

CheckReport check_component(const CheckOptions& opt) {
  const auto graphs = all_pointed_graphs(opt.size);
  const std::size_t m = graphs.size();
  const std::size_t count = m * m;

  auto failures = for_each_instance(count, resolve_threads(opt), [&](std::size_t idx)
                                        -> std::optional<InstanceResult> {
    const std::size_t ig = idx / m, ih = idx % m;
    const PointedGraph& g = graphs[ig];
    const PointedGraph& h = graphs[ih];
    std::string inst = "G=#" + std::to_string(ig) + " H=#" + std::to_string(ih);
    auto fail = [&](const std::string& why) {
      return InstanceResult{inst, false, why + "; G=" + describe(g) + " H=" + describe(h)};
    };

    HomPoset p = build_hom_star(g, h);
    ComponentLabels pc = poset_components(p);
    AtomHomGraph ag = atom_hom_graph(g, h);
    ComponentLabels acp = atom_components(ag);
    if (pc.count != acp.count)
      return fail("component counts differ: poset=" + std::to_string(pc.count) +
                  " hom-graph=" + std::to_string(acp.count));
    const auto& atoms = p.atoms();
    if (atoms.size() != ag.homs.size())
      return fail("atom count " + std::to_string(atoms.size()) + " != hom count " +
                  std::to_string(ag.homs.size()));
    for (std::size_t k = 0; k < atoms.size(); ++k)
      if (pc.label[atoms[k]] != acp.label[k])
        return fail("atom " + std::to_string(k) + " lands in poset class " +
                    std::to_string(pc.label[atoms[k]]) + " but hom-graph class " +
                    std::to_string(acp.label[k]));
    return std::nullopt;
  });

  CheckReport rep;
  rep.name = "component";
  rep.checked = count;
  rep.failures = std::move(failures);
  rep.pass = rep.failures.empty();
  rep.summary = std::to_string(count) +
                " pairs: multihom poset components coincide with homomorphism-graph "
                "components on every atom";
  return rep;
}

// ---------------------------------------------------------------------------
// fold-invariance: folds induce closures whose images are the folded posets,
// and the homotopy profile is unchanged in both variables
// ---------------------------------------------------------------------------

struct FoldInstance {
  PointedGraph g;  // has a fold u <- v
  PointedGraph h;
  Fold fold;
};

CheckReport check_fold_invariance(const CheckOptions& opt) {
  const std::size_t trials = opt.trials > 0 ? opt.trials : 50;
  Rng rng(opt.seed);
  std::vector<FoldInstance> instances;
  std::size_t draws = 0;
  while (instances.size() < trials && draws < trials * 400) {
    ++draws;
    PointedGraph g = random_pointed_graph(rng, 2, 4);
    PointedGraph h = random_pointed_graph(rng, 2, 4);
    auto fold = find_fold(g);
    if (!fold) continue;
    instances.push_back(FoldInstance{std::move(g), std::move(h), *fold});
  }

  auto failures = for_each_instance(instances.size(), resolve_threads(opt), [&](std::size_t idx)
                                        -> std::optional<InstanceResult> {
    const FoldInstance& in = instances[idx];
    std::string inst = "trial " + std::to_string(idx);
    auto fail = [&](const std::string& why) {
      return InstanceResult{inst, false,
                            why + "; G=" + describe(in.g) + " H=" + describe(in.h) +
                                " fold " + in.g.graph.label(in.fold.v) + "->" +
                                in.g.graph.label(in.fold.u)};
    };
    FoldResult fr = apply_fold(in.g, in.fold);

    {  // source side: Hom_*(G, H) with the fold in the first variable
      SourceFold sf(in.g, in.h, in.fold);
      const HomPoset& p = sf.poset();
      const HomPoset& pf = sf.folded_poset();
      for (std::size_t i = 0; i < p.size(); ++i) {
        std::size_t ph = sf.phi(i);
        if (!p.leq(i, ph)) return fail("phi not inflationary at " + std::to_string(i));
        if (sf.phi(ph) != ph) return fail("phi not idempotent at " + std::to_string(i));
        for (std::uint32_t k : p.covers_above(i))
          if (!p.leq(ph, sf.phi(k)))
            return fail("phi not monotone on cover " + std::to_string(i) + "<" +
                        std::to_string(k));
        if (sf.in_x(i)) {
          std::size_t ps = sf.psi(i);
          if (!p.leq(ps, i)) return fail("psi not deflationary on X at " + std::to_string(i));
          if (!sf.in_x(ps) || sf.psi(ps) != ps)
            return fail("psi not idempotent on X at " + std::to_string(i));
        }
        std::size_t r = sf.retract(i);
        if (sf.retract(r) != r) return fail("retract not idempotent at " + std::to_string(i));
        bool fixed = (r == i);
        bool stated = p.at(i)[static_cast<std::size_t>(in.fold.v)] ==
                      p.at(i)[static_cast<std::size_t>(in.fold.u)];
        if (fixed != stated)
          return fail("retract fixed set mismatch with eta(v)=eta(u) at " + std::to_string(i));
      }
      // image of the retraction is order-isomorphic to Hom_*(G \ v, H)
      std::vector<std::size_t> fixed;
      for (std::size_t i = 0; i < p.size(); ++i)
        if (sf.retract(i) == i) fixed.push_back(i);
      if (fixed.size() != pf.size())
        return fail("fixed-set size " + std::to_string(fixed.size()) +
                    " != folded poset size " + std::to_string(pf.size()));
      std::vector<char> hit(pf.size(), 0);
      for (std::size_t i : fixed) {
        std::size_t t = sf.to_folded(i);
        if (t >= pf.size() || hit[t]) return fail("to_folded not injective into the folded poset");
        hit[t] = 1;
        if (sf.from_folded(t) != i) return fail("from_folded(to_folded) != id");
      }
      for (std::size_t i : fixed)
        for (std::size_t k : fixed) {
          bool a = p.leq(i, k);
          bool b = pf.leq(sf.to_folded(i), sf.to_folded(k));
          if (a != b) return fail("to_folded does not preserve/reflect order");
        }
      InvariantOptions iopt;
      iopt.attempt_collapse = false;
      InvariantProfile before = hom_profile(in.g, in.h, iopt);
      InvariantProfile after = hom_profile(fr.folded, in.h, iopt);
      if (!same_homotopy_profile(before, after))
        return fail("source-fold profile changed: {" + profile_string(before) + "} vs {" +
                    profile_string(after) + "}");
    }

    {  // target side: Hom_*(H, G) with the fold in the second variable
      TargetFold tf(in.h, in.g, in.fold);
      const HomPoset& p = tf.poset();
      const HomPoset& pf = tf.folded_poset();
      for (std::size_t i = 0; i < p.size(); ++i) {
        std::size_t rh = tf.rho(i);
        if (!p.leq(i, rh)) return fail("rho not inflationary at " + std::to_string(i));
        if (tf.rho(rh) != rh) return fail("rho not idempotent at " + std::to_string(i));
        for (std::uint32_t k : p.covers_above(i))
          if (!p.leq(rh, tf.rho(k)))
            return fail("rho not monotone on cover " + std::to_string(i) + "<" +
                        std::to_string(k));
        if (tf.in_y(i)) {
          std::size_t sg = tf.sigma(i);
          if (!p.leq(sg, i)) return fail("sigma not deflationary on Y at " + std::to_string(i));
          if (!tf.in_y(sg) || tf.sigma(sg) != sg)
            return fail("sigma not idempotent on Y at " + std::to_string(i));
        }
        std::size_t r = tf.retract(i);
        if (tf.retract(r) != r) return fail("target retract not idempotent at " + std::to_string(i));
        bool fixed = (r == i);
        bool avoids_v = true;
        for (int a = 0; a < p.stride; ++a)
          if (p.at(i)[static_cast<std::size_t>(a)] >> in.fold.v & 1) {
            avoids_v = false;
            break;
          }
        if (fixed != avoids_v)
          return fail("target retract fixed set mismatch at " + std::to_string(i));
      }
      std::vector<std::size_t> fixed;
      for (std::size_t i = 0; i < p.size(); ++i)
        if (tf.retract(i) == i) fixed.push_back(i);
      if (fixed.size() != pf.size())
        return fail("target fixed-set size != folded poset size");
      std::vector<char> hit(pf.size(), 0);
      for (std::size_t i : fixed) {
        std::size_t t = tf.to_folded(i);
        if (t >= pf.size() || hit[t]) return fail("target to_folded not injective");
        hit[t] = 1;
        if (tf.from_folded(t) != i) return fail("target from_folded(to_folded) != id");
      }
      for (std::size_t i : fixed)
        for (std::size_t k : fixed)
          if (p.leq(i, k) != pf.leq(tf.to_folded(i), tf.to_folded(k)))
            return fail("target to_folded does not preserve/reflect order");
      InvariantOptions iopt;
      iopt.attempt_collapse = false;
      InvariantProfile before = hom_profile(in.h, in.g, iopt);
      InvariantProfile after = hom_profile(in.h, fr.folded, iopt);
      if (!same_homotopy_profile(before, after))
        return fail("target-fold profile changed: {" + profile_string(before) + "} vs {" +
                    profile_string(after) + "}");
    }
    return std::nullopt;
  });

  CheckReport rep;
  rep.name = "fold-invariance";
  rep.checked = instances.size();
  rep.failures = std::move(failures);
  rep.pass = rep.failures.empty() && instances.size() == trials;
  if (instances.size() != trials)
    rep.failures.push_back(InstanceResult{
        "setup", false,
        "only drew " + std::to_string(instances.size()) + " foldable instances of " +
            std::to_string(trials)});
  rep.summary = std::to_string(instances.size()) +
                " seeded instances: closures phi/psi and rho/sigma verified, retract images "
                "order-isomorphic to the folded posets, profiles preserved on both sides";
  return rep;
}

// ---------------------------------------------------------------------------
// interval-contractible: Hom_*(I_n, G) collapses to a point
// ---------------------------------------------------------------------------

CheckReport check_interval_contractible(const CheckOptions& opt) {
  const std::size_t trials = opt.trials > 0 ? opt.trials : 25;
  const int max_n = std::max(1, std::min(opt.n, 3));
  Rng rng(opt.seed);
  std::vector<PointedGraph> gs;
  gs.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) gs.push_back(random_pointed_graph(rng, 1, 4));
  const std::size_t count = trials * static_cast<std::size_t>(max_n);

  auto failures = for_each_instance(count, resolve_threads(opt), [&](std::size_t idx)
                                        -> std::optional<InstanceResult> {
    const std::size_t t = idx / static_cast<std::size_t>(max_n);
    const int n = 1 + static_cast<int>(idx % static_cast<std::size_t>(max_n));
    const PointedGraph& g = gs[t];
    std::string inst = "trial " + std::to_string(t) + " n=" + std::to_string(n);
    auto fail = [&](const std::string& why) {
      return InstanceResult{inst, false, why + "; G=" + describe(g)};
    };

    PointedGraph interval = make_interval(n);
    HomPoset p = build_hom_star(interval, g);
    ComponentLabels pc = poset_components(p);
    if (pc.count != 1) return fail("pi0=" + std::to_string(pc.count) + ", expected 1");
    BigInt chi = poset_euler(p);
    if (chi != 1) return fail("euler=" + chi.str() + ", expected 1");
    H1Summary h1 = h1_of_two_skeleton(order_two_skeleton(p));
    if (h1.rank != 0 || !h1.torsion.empty())
      return fail("H1 nontrivial: rank=" + std::to_string(h1.rank));
    SimplicialComplex k = order_complex(p);
    CollapseCertificate cert = collapse_to_point(k);
    if (!cert.success) return fail("no collapse certificate found");
    if (!verify_collapse(k, cert)) return fail("collapse certificate failed replay");
    return std::nullopt;
  });

  CheckReport rep;
  rep.name = "interval-contractible";
  rep.checked = count;
  rep.failures = std::move(failures);
  rep.pass = rep.failures.empty();
  rep.summary = std::to_string(count) + " instances (" + std::to_string(trials) +
                " seeded graphs x n<=" + std::to_string(max_n) +
                "): pi0=1, euler=1, H1=0, discrete-Morse collapse certificate replayed";
  return rep;
}

// ---------------------------------------------------------------------------
// path-contractible: Hom_*(1_*, G^{I_n}) is contractible-looking
// ---------------------------------------------------------------------------

CheckReport check_path_contractible(const CheckOptions& opt) {
  const std::size_t trials = opt.trials > 0 ? opt.trials : 25;
  const int max_n = std::max(1, std::min(opt.n, 3));
  Rng rng(opt.seed);
  std::vector<PointedGraph> gs;
  gs.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) gs.push_back(random_pointed_graph(rng, 1, 4));
  const std::size_t count = trials * static_cast<std::size_t>(max_n);
  PointedGraph one_star = make_one_star();

  auto failures = for_each_instance(count, resolve_threads(opt), [&](std::size_t idx)
                                        -> std::optional<InstanceResult> {
    const std::size_t t = idx / static_cast<std::size_t>(max_n);
    const int n = 1 + static_cast<int>(idx % static_cast<std::size_t>(max_n));
    const PointedGraph& g = gs[t];
    std::string inst = "trial " + std::to_string(t) + " n=" + std::to_string(n);
    auto fail = [&](const std::string& why) {
      return InstanceResult{inst, false, why + "; G=" + describe(g)};
    };

    Exponential path = path_graph(g, n);
    const PointedGraph& pg = path.graph();
    InvariantOptions iopt;
    iopt.attempt_collapse = false;
    InvariantProfile prof = hom_profile(one_star, pg, iopt);
    if (prof.pi0 != 1) return fail("pi0=" + std::to_string(prof.pi0) + " (" + profile_string(prof) + ")");
    if (prof.euler != 1) return fail("euler=" + prof.euler.str() + " (" + profile_string(prof) + ")");
    if (prof.h1.rank != 0 || !prof.h1.torsion.empty())
      return fail("H1 nontrivial (" + profile_string(prof) + ")");
    return std::nullopt;
  });

  CheckReport rep;
  rep.name = "path-contractible";
  rep.checked = count;
  rep.failures = std::move(failures);
  rep.pass = rep.failures.empty();
  rep.summary = std::to_string(count) + " instances: Hom_*(1_*, G^{I_n}) has pi0=1, euler=1, H1=0";
  return rep;
}

// ---------------------------------------------------------------------------
// commute: (Omega_N G)^T = Omega_N (G^T) via explicit inverse graph maps
// ---------------------------------------------------------------------------

CheckReport check_commute(const CheckOptions& opt) {
  const auto graphs = all_pointed_graphs(opt.size);
  const std::size_t m = graphs.size();
  const int max_bound = opt.bound > 0 ? opt.bound : 3;
  const std::size_t count = m * m * static_cast<std::size_t>(max_bound);

  auto failures = for_each_instance(count, resolve_threads(opt), [&](std::size_t idx)
                                        -> std::optional<InstanceResult> {
    const std::size_t pair = idx / static_cast<std::size_t>(max_bound);
    const int bound = 1 + static_cast<int>(idx % static_cast<std::size_t>(max_bound));
    const std::size_t ig = pair / m, it = pair % m;
    const PointedGraph& g = graphs[ig];
    const PointedGraph& t = graphs[it];
    std::string inst =
        "G=#" + std::to_string(ig) + " T=#" + std::to_string(it) + " N=" + std::to_string(bound);
    auto fail = [&](const std::string& why) {
      return InstanceResult{inst, false, why + "; G=" + describe(g) + " T=" + describe(t)};
    };

    OmegaExpIso iso = omega_exp_iso(g, t, bound);
    if (iso.alpha.source.order() != iso.beta.target.order() ||
        iso.alpha.target.order() != iso.beta.source.order())
      return fail("alpha/beta endpoints disagree");
    if (!iso.alpha.is_graph_map()) return fail("alpha is not a graph map");
    if (!iso.beta.is_graph_map()) return fail("beta is not a graph map");
    if (!iso.alpha.is_pointed(iso.lhs.basepoint, iso.rhs.basepoint))
      return fail("alpha is not pointed");
    if (!iso.beta.is_pointed(iso.rhs.basepoint, iso.lhs.basepoint))
      return fail("beta is not pointed");
    GraphMap ba = compose(iso.beta, iso.alpha);
    GraphMap ab = compose(iso.alpha, iso.beta);
    for (int v = 0; v < iso.lhs.graph.order(); ++v)
      if (ba.map[static_cast<std::size_t>(v)] != v) return fail("beta(alpha) != id");
    for (int v = 0; v < iso.rhs.graph.order(); ++v)
      if (ab.map[static_cast<std::size_t>(v)] != v) return fail("alpha(beta) != id");
    return std::nullopt;
  });

  CheckReport rep;
  rep.name = "commute";
  rep.checked = count;
  rep.failures = std::move(failures);
  rep.pass = rep.failures.empty();
  rep.summary = std::to_string(count) +
                " (G, T, N) instances: alpha and beta are mutually inverse pointed graph maps";
  return rep;
}

// ---------------------------------------------------------------------------
// loop-example: the reflexive 4-cycle walkthrough (inverse, contraction
// table, concatenation absorbed by the constant loop)
// ---------------------------------------------------------------------------

PointedGraph reflexive_four_cycle() {
  Graph g(4, {"y", "1", "2", "3"});
  for (int v = 0; v < 4; ++v) g.add_edge(v, v);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 0);
  return PointedGraph{g, 0};
}

CheckReport check_loop_example(const CheckOptions& opt) {
  // the walkthrough needs at least ten steps to place f . f^-1 at shift 5
  const int bound = std::max(opt.bound, 10);
  FailList fails;
  std::size_t checked = 0;
  auto expect = [&](bool ok, const std::string& what, const std::string& detail) {
    ++checked;
    if (!ok) fails.add(what, detail);
  };
  auto pad = [&](Word w) {
    w.resize(static_cast<std::size_t>(bound) + 1, 0);
    return w;
  };

  PointedGraph h = reflexive_four_cycle();
  Word f = pad({0, 1, 2, 3, 0});
  expect(is_based_word(f, h.basepoint) && is_looped_walk(h.graph, f), "walk",
         "f=(y,1,2,3,y,...) is a based loop");
  Word fi = loop_inverse(f, h.basepoint);
  expect(fi == pad({0, 3, 2, 1, 0}), "inverse", "loop_inverse(f) should be (y,3,2,1,y,...)");

  // concatenate at shift 5: the inverse runs after a five-step copy of f
  Word prod = loop_concat(fi, f, h.basepoint, 5);
  expect(prod == pad({0, 1, 2, 3, 0, 0, 3, 2, 1, 0}), "concat",
         "f .5 f^-1 should start (y,1,2,3,y,y,3,2,1,y,y)");

  auto cycle = detect_reflexive_cycle(h.graph);
  expect(cycle.has_value() && cycle->size() == 4, "cycle", "ambient reflexive 4-cycle detected");
  std::vector<Word> expected_rows = {
      pad({0, 1, 2, 3, 0, 0, 3, 2, 1, 0}), pad({0, 1, 2, 3, 3, 3, 3, 2, 1, 0}),
      pad({0, 1, 2, 2, 2, 2, 2, 2, 1, 0}), pad({0, 1, 1, 1, 1, 1, 1, 1, 1, 0}),
      pad({0}),
  };
  if (cycle) {
    auto rows = cycle_null_contraction(*cycle, prod);
    expect(rows.has_value(), "contraction", "null contraction exists for f .5 f^-1");
    if (rows) {
      expect(rows->size() == expected_rows.size(), "contraction rows",
             "expected 5 rows, got " + std::to_string(rows->size()));
      for (std::size_t r = 0; r < rows->size() && r < expected_rows.size(); ++r) {
        std::ostringstream os;
        os << "row " << (r + 1) << ": (";
        for (std::size_t i = 0; i < (*rows)[r].size(); ++i)
          os << (i ? "," : "") << h.graph.label((*rows)[r][i]);
        os << ")";
        expect((*rows)[r] == expected_rows[r], "contraction row " + std::to_string(r + 1),
               os.str());
      }
      for (std::size_t r = 0; r + 1 < rows->size(); ++r)
        expect(words_adjacent(h.graph, (*rows)[r], (*rows)[r + 1]),
               "contraction adjacency " + std::to_string(r + 1),
               "rows " + std::to_string(r + 1) + " and " + std::to_string(r + 2) +
                   " must be adjacent loops");
    }
  }

  LoopGraph lg(h, bound);
  Word prod4 = loop_concat(fi, f, h.basepoint);  // minimal window, shift 4
  auto i_f = lg.index_of(f), i_fi = lg.index_of(fi), i_p = lg.index_of(prod);
  auto i_p4 = lg.index_of(prod4);
  auto i_c = lg.index_of(constant_word(bound, h.basepoint));
  expect(i_f && i_fi && i_p && i_p4 && i_c, "membership",
         "all named loops appear in the loop graph");
  if (!(i_f && i_fi && i_p && i_p4 && i_c)) {
    CheckReport rep;
    rep.name = "loop-example";
    rep.checked = checked;
    rep.failures = std::move(fails.items);
    rep.pass = false;
    return rep;
  }
  int cf = lg.component_of(*i_f);
  int cprod = lg.component_of(*i_p);
  int cprod4 = lg.component_of(*i_p4);
  int cconst = lg.component_of(*i_c);
  expect(cprod == cconst && cprod4 == cconst, "absorption",
         "[f].[f]^-1 lies in the component of the constant loop c_y");
  expect(cf != cconst, "nontrivial", "[f] itself is not null-homotopic at this bound");
  LoopGroup grp = lg.group();
  expect(grp.identity == cconst, "identity", "group identity is the constant-loop component");
  expect(grp.identity_ok, "identity law", "identity products must hold where defined");
  expect(grp.inverse_ok, "inverse law", "inverse products must land in the identity");

  CheckReport rep;
  rep.name = "loop-example";
  rep.checked = checked;
  rep.failures = std::move(fails.items);
  rep.pass = rep.failures.empty();
  rep.summary = "reflexive 4-cycle at bound " + std::to_string(bound) +
                ": inverse formula, 5-row null contraction regenerated and adjacency-checked, "
                "[f].[f]^-1 absorbed by c_y";
  return rep;
}

// ---------------------------------------------------------------------------
// fundamental-group: the reflexive 5-cycle has H1 = Z, and its loop graph
// components realize winding numbers with addition as the product
// ---------------------------------------------------------------------------

CheckReport check_fundamental_group(const CheckOptions& opt) {
  const int bound = opt.bound > 0 ? opt.bound : 12;
  FailList fails;
  std::size_t checked = 0;
  auto expect = [&](bool ok, const std::string& what, const std::string& detail) {
    ++checked;
    if (!ok) fails.add(what, detail);
  };

  Graph c5(5, {"x", "1", "2", "3", "4"});
  for (int v = 0; v < 5; ++v) {
    c5.add_edge(v, v);
    c5.add_edge(v, (v + 1) % 5);
  }
  PointedGraph g{c5, 0};

  HomPoset p = build_hom_star(make_one_star(), g);
  InvariantProfile prof = poset_profile_exact(p);
  expect(prof.pi0 == 1, "pi0", "expected one component, got " + std::to_string(prof.pi0));
  expect(prof.euler == 0, "euler", "expected euler 0, got " + prof.euler.str());
  expect(prof.h1.rank == 1 && prof.h1.torsion.empty(), "h1",
         "expected H1 = Z, got " + profile_string(prof));

  TwoSkeleton sk = order_two_skeleton(p);
  long long base = p.basepoint_element();
  expect(base >= 0, "basepoint element", "constant multihom present");
  GroupPresentation pres = pi1_presentation(sk, static_cast<int>(base));
  H1Summary ab = abelianized(pres);
  expect(ab.rank == 1 && ab.torsion.empty(), "pi1 abelianized",
         "edge-path presentation should abelianize to Z");
  Rng rng(opt.seed);
  for (int variant = 0; variant < 4; ++variant) {
    GroupPresentation alt = tietze_variant(pres, rng, 6);
    H1Summary ab2 = abelianized(alt);
    expect(ab2 == ab, "tietze variant " + std::to_string(variant),
           "abelianization must be presentation-invariant");
  }

  LoopGraph lg(g, bound);
  expect(lg.component_count() == 5, "loop components",
         "expected 5 components at bound " + std::to_string(bound) + ", got " +
             std::to_string(lg.component_count()));
  expect(lg.has_cycle_winding(), "winding defined", "ambient graph is a reflexive cycle");
  expect(lg.winding_preserved(), "winding preserved",
         "every scanned loop-graph edge must preserve winding");
  std::set<long long> windings;
  std::map<long long, long long> winding_of;  // component -> winding
  for (const auto& info : lg.components()) {
    expect(info.winding.has_value(), "component winding",
           "component " + std::to_string(info.id) + " has uniform winding");
    if (info.winding) {
      windings.insert(*info.winding);
      winding_of[info.id] = *info.winding;
    }
  }
  expect(windings == std::set<long long>({-2, -1, 0, 1, 2}), "winding range",
         "components should realize windings -2..2");

  LoopGroup grp = lg.group();
  expect(winding_of.count(grp.identity) && winding_of[grp.identity] == 0, "identity winding",
         "identity component has winding 0");
  std::size_t products = 0;
  for (const auto& t : grp.products) {
    ++products;
    expect(winding_of[t[2]] == winding_of[t[0]] + winding_of[t[1]],
           "product winding " + std::to_string(t[0]) + "*" + std::to_string(t[1]),
           "components multiply by adding windings");
  }
  for (const auto& u : grp.undefined_pairs)
    expect(std::abs(winding_of[u[0]]) + std::abs(winding_of[u[1]]) > 0, "undefined pair",
           "out-of-window products only occur for long representatives");
  expect(grp.identity_ok && grp.inverse_ok && grp.assoc_ok, "group laws",
         "identity/inverse/associativity must hold inside the window");
  expect(products > 0, "products", "some products must fit in the window");

  CheckReport rep;
  rep.name = "fundamental-group";
  rep.checked = checked;
  rep.failures = std::move(fails.items);
  rep.pass = rep.failures.empty();
  rep.summary = "reflexive 5-cycle: H1 = Z (exact route + edge-path presentation), loop graph "
                "at bound " + std::to_string(bound) +
                " has 5 winding components multiplying additively (" +
                std::to_string(lg.size()) + " loops, " + std::to_string(lg.edges_scanned()) +
                " edges scanned)";
  return rep;
}

// ---------------------------------------------------------------------------
// circle-search: first (G, H) whose pointed hom complex looks like a circle
// ---------------------------------------------------------------------------

std::vector<PointedGraph> circle_targets() {
  std::vector<PointedGraph> out;
  const std::array<std::pair<int, int>, 6> pairs = {
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  for (int loops = 0; loops < 8; ++loops) {
    for (int edges = 0; edges < 64; ++edges) {
      Graph h(4, {"y", "1", "2", "3"});
      h.add_edge(0, 0);
      for (int b = 0; b < 3; ++b)
        if (loops >> b & 1) h.add_edge(b + 1, b + 1);
      for (int b = 0; b < 6; ++b)
        if (edges >> b & 1) h.add_edge(pairs[static_cast<std::size_t>(b)].first,
                                       pairs[static_cast<std::size_t>(b)].second);
      out.push_back(PointedGraph{h, 0});
    }
  }
  return out;
}

CheckReport check_circle_search(const CheckOptions& opt) {
  const auto gs = all_pointed_graphs(std::max(opt.size, 4));
  const auto hs = circle_targets();
  CheckReport rep;
  rep.name = "circle-search";
  InvariantOptions iopt;
  iopt.attempt_collapse = false;

  std::size_t scanned = 0;
  for (std::size_t ig = 0; ig < gs.size(); ++ig) {
    for (std::size_t ih = 0; ih < hs.size(); ++ih) {
      ++scanned;
      HomPoset p = build_hom_star(gs[ig], hs[ih]);
      InvariantProfile prof = poset_profile_exact(p, iopt);
      if (prof.pi0 == 1 && prof.euler == 0 && prof.h1.rank == 1 && prof.h1.torsion.empty()) {
        InvariantProfile fast = hom_profile_fast(gs[ig], hs[ih], iopt);
        rep.checked = scanned;
        if (!same_homotopy_profile(prof, fast)) {
          rep.failures.push_back(InstanceResult{
              "G=#" + std::to_string(ig) + " H=#" + std::to_string(ih), false,
              "exact and fast profiles disagree on the hit: {" + profile_string(prof) +
                  "} vs {" + profile_string(fast) + "}"});
          rep.pass = false;
          return rep;
        }
        rep.pass = true;
        rep.summary = "hit after " + std::to_string(scanned) + " pairs: G=" + describe(gs[ig]) +
                      " H=" + describe(hs[ih]) + " gives pi0=1, euler=0, H1=Z " +
                      "(confirmed on both routes; " + std::to_string(p.size()) +
                      " poset elements)";
        return rep;
      }
    }
  }
  rep.checked = scanned;
  rep.pass = false;
  rep.failures.push_back(InstanceResult{
      "search", false,
      "no pair with pi0=1, euler=0, H1=Z found among " + std::to_string(scanned) + " pairs"});
  return rep;
}

// ---------------------------------------------------------------------------
// sequence: the comparison maps between consecutive path fibrations are
// graph maps and the two squares commute up to looped components
// ---------------------------------------------------------------------------

struct SequenceInstance {
  std::size_t ig = 0;
  std::vector<int> gamma;
  std::vector<int> gamma_prime;
  int v = 0;
  int n = 0;
};

CheckReport check_sequence(const CheckOptions& opt) {
  const auto graphs = all_pointed_graphs(opt.size);
  const int max_stage = std::min(opt.n, 2);
  std::vector<SequenceInstance> instances;
  for (std::size_t ig = 0; ig < graphs.size(); ++ig) {
    const Graph& g = graphs[ig].graph;
    std::vector<int> looped;
    for (int v = 0; v < g.order(); ++v)
      if (g.looped(v)) looped.push_back(v);
    const int l = static_cast<int>(looped.size());
    std::vector<std::vector<int>> cliques;
    for (int mask = 1; mask < (1 << l); ++mask) {
      std::vector<int> s;
      for (int b = 0; b < l; ++b)
        if (mask >> b & 1) s.push_back(looped[static_cast<std::size_t>(b)]);
      bool clique = true;
      for (std::size_t i = 0; i < s.size() && clique; ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
          if (!g.adjacent(s[i], s[j])) {
            clique = false;
            break;
          }
      if (clique) cliques.push_back(std::move(s));
    }
    for (const auto& gamma : cliques)
      for (const auto& gamma_prime : cliques) {
        if (!std::includes(gamma_prime.begin(), gamma_prime.end(), gamma.begin(), gamma.end()))
          continue;
        for (int v : gamma)
          for (int n = 0; n <= max_stage; ++n)
            instances.push_back(SequenceInstance{ig, gamma, gamma_prime, v, n});
      }
  }

  auto failures = for_each_instance(instances.size(), resolve_threads(opt), [&](std::size_t idx)
                                        -> std::optional<InstanceResult> {
    const SequenceInstance& in = instances[idx];
    const PointedGraph& g = graphs[in.ig];
    std::ostringstream iss;
    iss << "G=#" << in.ig << " gamma={";
    for (std::size_t i = 0; i < in.gamma.size(); ++i)
      iss << (i ? "," : "") << g.graph.label(in.gamma[i]);
    iss << "} gamma'={";
    for (std::size_t i = 0; i < in.gamma_prime.size(); ++i)
      iss << (i ? "," : "") << g.graph.label(in.gamma_prime[i]);
    iss << "} v=" << g.graph.label(in.v) << " n=" << in.n;
    std::string inst = iss.str();
    auto fail = [&](const std::string& why) {
      return InstanceResult{inst, false, why + "; G=" + describe(g)};
    };

    SequenceData sd(g, in.gamma, in.gamma_prime, in.v, in.n);
    if (!sd.k_n.is_graph_map()) return fail("k_n is not a graph map");
    if (!sd.k_n1.is_graph_map()) return fail("k_{n+1} is not a graph map");
    if (!sd.i_n.is_graph_map()) return fail("i_n is not a graph map");
    if (!sd.j_n.is_graph_map()) return fail("j_n is not a graph map");
    if (!sd.h_n.is_graph_map()) return fail("h_n is not a graph map");
    auto injective = [](const GraphMap& f) {
      std::set<int> img(f.map.begin(), f.map.end());
      return img.size() == f.map.size();
    };
    if (!injective(sd.k_n) || !injective(sd.k_n1)) return fail("inclusion k is not injective");
    if (!injective(sd.i_n)) return fail("i_n is not injective");
    if (!injective(sd.j_n)) return fail("j_n is not injective");

    // homotopies are graph maps on the product with I_1
    if (!sd.homotopy_a.is_graph_map()) return fail("homotopy A is not a graph map");
    if (!sd.homotopy_b.is_graph_map()) return fail("homotopy B is not a graph map");

    // independent oracle: a product-with-I_1 homotopy between maps p, q is a
    // graph map iff for every edge (f, f2) all four mixed images are edges
    auto homotopy_ok = [](const Graph& dom, const Graph& cod, const GraphMap& pm,
                          const GraphMap& qm) {
      for (int f = 0; f < dom.order(); ++f)
        for (int f2 = f; f2 < dom.order(); ++f2) {
          if (!dom.adjacent(f, f2)) continue;
          if (!cod.adjacent(pm.map[static_cast<std::size_t>(f)],
                            pm.map[static_cast<std::size_t>(f2)]) ||
              !cod.adjacent(qm.map[static_cast<std::size_t>(f)],
                            qm.map[static_cast<std::size_t>(f2)]) ||
              !cod.adjacent(pm.map[static_cast<std::size_t>(f)],
                            qm.map[static_cast<std::size_t>(f2)]) ||
              !cod.adjacent(qm.map[static_cast<std::size_t>(f)],
                            pm.map[static_cast<std::size_t>(f2)]))
            return false;
        }
      return true;
    };
    GraphMap kh{sd.hpn_graph, sd.hpn1_graph, {}};
    kh.map.resize(static_cast<std::size_t>(sd.hpn_graph.order()));
    for (int f = 0; f < sd.hpn_graph.order(); ++f)
      kh.map[static_cast<std::size_t>(f)] =
          sd.k_n1.map[static_cast<std::size_t>(sd.h_n.map[static_cast<std::size_t>(f)])];
    // endpoints of A
    for (int f = 0; f < sd.hpn_graph.order(); ++f) {
      if (sd.homotopy_a.map[static_cast<std::size_t>(f) * 2 + 0] !=
          sd.i_n.map[static_cast<std::size_t>(f)])
        return fail("A(.,0) != i_n");
      if (sd.homotopy_a.map[static_cast<std::size_t>(f) * 2 + 1] !=
          kh.map[static_cast<std::size_t>(f)])
        return fail("A(.,1) != k_{n+1} h_n");
    }
    if (!homotopy_ok(sd.hpn_graph, sd.hpn1_graph, sd.i_n, kh))
      return fail("oracle rejects homotopy A");

    GraphMap hk{sd.hn_graph, sd.hn1_graph, {}};
    hk.map.resize(static_cast<std::size_t>(sd.hn_graph.order()));
    for (int f = 0; f < sd.hn_graph.order(); ++f)
      hk.map[static_cast<std::size_t>(f)] =
          sd.h_n.map[static_cast<std::size_t>(sd.k_n.map[static_cast<std::size_t>(f)])];
    for (int f = 0; f < sd.hn_graph.order(); ++f) {
      if (sd.homotopy_b.map[static_cast<std::size_t>(f) * 2 + 0] !=
          sd.j_n.map[static_cast<std::size_t>(f)])
        return fail("B(.,0) != j_n");
      if (sd.homotopy_b.map[static_cast<std::size_t>(f) * 2 + 1] !=
          hk.map[static_cast<std::size_t>(f)])
        return fail("B(.,1) != h_n k_n");
    }
    if (!homotopy_ok(sd.hn_graph, sd.hn1_graph, sd.j_n, hk))
      return fail("oracle rejects homotopy B");

    // on looped vertices the squares commute up to component
    std::vector<int> labels_a = looped_component_labels(sd.hpn1_graph);
    for (int f = 0; f < sd.hpn_graph.order(); ++f) {
      if (!sd.hpn_graph.looped(f)) continue;
      int a = sd.i_n.map[static_cast<std::size_t>(f)];
      int b = kh.map[static_cast<std::size_t>(f)];
      if (labels_a[static_cast<std::size_t>(a)] != labels_a[static_cast<std::size_t>(b)])
        return fail("i_n and k_{n+1} h_n split a looped vertex across components");
    }
    std::vector<int> labels_b = looped_component_labels(sd.hn1_graph);
    for (int f = 0; f < sd.hn_graph.order(); ++f) {
      if (!sd.hn_graph.looped(f)) continue;
      int a = sd.j_n.map[static_cast<std::size_t>(f)];
      int b = hk.map[static_cast<std::size_t>(f)];
      if (labels_b[static_cast<std::size_t>(a)] != labels_b[static_cast<std::size_t>(b)])
        return fail("j_n and h_n k_n split a looped vertex across components");
    }
    return std::nullopt;
  });

  CheckReport rep;
  rep.name = "sequence";
  rep.checked = instances.size();
  rep.failures = std::move(failures);
  rep.pass = rep.failures.empty();
  rep.summary = std::to_string(instances.size()) +
                " (G, gamma, gamma', v, n) instances: comparison maps are graph maps, "
                "homotopies verified against the product-edge oracle, squares commute "
                "up to looped components";
  return rep;
}

// ---------------------------------------------------------------------------

struct CheckEntry {
  const char* name;
  CheckReport (*fn)(const CheckOptions&);
};

constexpr CheckEntry kChecks[] = {
    {"adjunction", check_adjunction},
    {"adjoint-closure", check_adjoint_closure},
    {"component", check_component},
    {"fold-invariance", check_fold_invariance},
    {"interval-contractible", check_interval_contractible},
    {"path-contractible", check_path_contractible},
    {"commute", check_commute},
    {"loop-example", check_loop_example},
    {"fundamental-group", check_fundamental_group},
    {"circle-search", check_circle_search},
    {"sequence", check_sequence},
};

}  // namespace

const std::vector<std::string>& verify_check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : kChecks) out.push_back(e.name);
    return out;
  }();
  return names;
}

CheckReport run_verify_check(const std::string& name, const CheckOptions& opt) {
  for (const auto& e : kChecks)
    if (name == e.name) return e.fn(opt);
  std::string msg = "unknown check '" + name + "'; available checks:";
  for (const auto& e : kChecks) msg += std::string(" ") + e.name;
  throw Error(Status::invalid_argument, msg);
}

}  // namespace homtop
