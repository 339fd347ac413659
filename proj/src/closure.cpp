#include "homtop/closure.hpp"

#include <algorithm>
#include <bit>

namespace homtop {

namespace {

// The exponential hom poset is a function of the graphs alone (finalize
// sorts elements lexicographically), so a hint with matching adjacency and
// basepoints is byte-identical to a fresh build.
bool exp_hint_matches(const HomPoset& hint, const PointedGraph& a, const PointedGraph& expg) {
  return hint.stride == a.graph.order() && hint.source_bp == a.basepoint &&
         hint.target_bp == expg.basepoint && hint.source_graph.same_adjacency(a.graph) &&
         hint.target_graph.same_adjacency(expg.graph);
}

}  // namespace

AdjunctionClosure::AdjunctionClosure(const PointedGraph& a, const PointedGraph& b,
                                     const PointedGraph& c, HomBuildOptions opt)
    : ctx_(a, b, c),
      p_(build_hom_star(ctx_.smash.quotient, c, opt)),
      q_(build_hom_star(a, ctx_.exp.graph(), opt)) {
  int ne = ctx_.exp.graph().graph.order();
  exp_images_.reserve(ne);
  for (int t = 0; t < ne; ++t) exp_images_.push_back(ctx_.exp.map_of_index(t));
}

AdjunctionClosure::AdjunctionClosure(const PointedGraph& a, const PointedGraph& b,
                                     const PointedGraph& c, const HomPoset& exp_hint,
                                     HomBuildOptions opt)
    : ctx_(a, b, c),
      p_(build_hom_star(ctx_.smash.quotient, c, opt)),
      q_(exp_hint_matches(exp_hint, a, ctx_.exp.graph())
             ? exp_hint
             : build_hom_star(a, ctx_.exp.graph(), opt)) {
  // Adopt this instance's labels; the hint only has to agree on adjacency.
  q_.source_graph = a.graph;
  q_.target_graph = ctx_.exp.graph().graph;
  int ne = ctx_.exp.graph().graph.order();
  exp_images_.reserve(ne);
  for (int t = 0; t < ne; ++t) exp_images_.push_back(ctx_.exp.map_of_index(t));
}

std::vector<uint64_t> AdjunctionClosure::j_masks(const uint64_t* alpha) const {
  int na = ctx_.a.graph.order();
  int nb = ctx_.b.graph.order();
  int ne = static_cast<int>(exp_images_.size());
  std::vector<uint64_t> out(na, 0);
  for (int av = 0; av < na; ++av) {
    for (int t = 0; t < ne; ++t) {
      bool ok = true;
      for (int bv = 0; bv < nb && ok; ++bv) {
        uint64_t allowed = alpha[ctx_.smash.vertex_of(av, bv, nb)];
        if (!(allowed >> exp_images_[t][bv] & 1)) ok = false;
      }
      if (ok) out[av] |= uint64_t{1} << t;
    }
  }
  return out;
}

size_t AdjunctionClosure::j_of(size_t p_index) const {
  auto masks = j_masks(p_.at(p_index));
  long long idx = q_.lookup(masks.data());
  check(idx >= 0, Status::internal, "transfer j left the exponential hom poset");
  return static_cast<size_t>(idx);
}

uint64_t AdjunctionClosure::c_box(uint64_t set) const {
  int nb = ctx_.b.graph.order();
  int ne = static_cast<int>(exp_images_.size());
  uint64_t proj[64] = {};
  for (uint64_t s = set; s; s &= s - 1) {
    const auto& img = exp_images_[std::countr_zero(s)];
    for (int bv = 0; bv < nb; ++bv) proj[bv] |= uint64_t{1} << img[bv];
  }
  uint64_t out = 0;
  for (int t = 0; t < ne; ++t) {
    bool ok = true;
    for (int bv = 0; bv < nb && ok; ++bv) {
      if (!(proj[bv] >> exp_images_[t][bv] & 1)) ok = false;
    }
    if (ok) out |= uint64_t{1} << t;
  }
  return out;
}

std::vector<uint64_t> AdjunctionClosure::c_masks(const uint64_t* gamma) const {
  int na = ctx_.a.graph.order();
  std::vector<uint64_t> out(na, 0);
  for (int av = 0; av < na; ++av) out[av] = c_box(gamma[av]);
  return out;
}

size_t AdjunctionClosure::c_of(size_t q_index) const {
  auto masks = c_masks(q_.at(q_index));
  long long idx = q_.lookup(masks.data());
  check(idx >= 0, Status::internal, "box completion left the exponential hom poset");
  return static_cast<size_t>(idx);
}

bool AdjunctionClosure::is_closed(size_t q_index) const {
  auto masks = c_masks(q_.at(q_index));
  return std::equal(masks.begin(), masks.end(), q_.at(q_index));
}

std::vector<uint32_t> AdjunctionClosure::closed_elements() const {
  std::vector<uint32_t> out;
  for (size_t i = 0; i < q_.size(); ++i) {
    if (is_closed(i)) out.push_back(static_cast<uint32_t>(i));
  }
  return out;
}

std::vector<uint32_t> AdjunctionClosure::j_image() const {
  std::vector<uint32_t> out;
  out.reserve(p_.size());
  for (size_t i = 0; i < p_.size(); ++i) out.push_back(static_cast<uint32_t>(j_of(i)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SourceFold::SourceFold(const PointedGraph& g, const PointedGraph& h, Fold fold, HomBuildOptions opt)
    : g_(g),
      h_(h),
      fold_result_(apply_fold(g, fold)),
      p_(build_hom_star(g, h, opt)),
      pf_(build_hom_star(fold_result_.folded, h, opt)) {}

size_t SourceFold::phi(size_t i) const {
  std::vector<uint64_t> m(p_.at(i), p_.at(i) + p_.stride);
  m[fold_result_.fold.v] |= m[fold_result_.fold.u];
  long long idx = p_.lookup(m.data());
  check(idx >= 0, Status::internal, "phi left the hom poset");
  return static_cast<size_t>(idx);
}

bool SourceFold::in_x(size_t i) const {
  const uint64_t* m = p_.at(i);
  return (m[fold_result_.fold.u] & ~m[fold_result_.fold.v]) == 0;
}

size_t SourceFold::psi(size_t i) const {
  check(in_x(i), Status::invalid_argument, "psi needs eta(u) inside eta(v)");
  std::vector<uint64_t> m(p_.at(i), p_.at(i) + p_.stride);
  m[fold_result_.fold.v] = m[fold_result_.fold.u];
  long long idx = p_.lookup(m.data());
  check(idx >= 0, Status::internal, "psi left the hom poset");
  return static_cast<size_t>(idx);
}

size_t SourceFold::retract(size_t i) const { return psi(phi(i)); }

size_t SourceFold::to_folded(size_t i) const {
  const uint64_t* m = p_.at(i);
  check(m[fold_result_.fold.v] == m[fold_result_.fold.u], Status::invalid_argument,
        "element is not in the retract image");
  std::vector<uint64_t> mf(pf_.stride);
  for (int k = 0; k < pf_.stride; ++k) mf[k] = m[fold_result_.inclusion.map[k]];
  long long idx = pf_.lookup(mf.data());
  check(idx >= 0, Status::internal, "folded image element missing");
  return static_cast<size_t>(idx);
}

size_t SourceFold::from_folded(size_t i) const {
  const uint64_t* mf = pf_.at(i);
  std::vector<uint64_t> m(p_.stride, 0);
  for (int k = 0; k < pf_.stride; ++k) m[fold_result_.inclusion.map[k]] = mf[k];
  m[fold_result_.fold.v] = m[fold_result_.fold.u];
  long long idx = p_.lookup(m.data());
  check(idx >= 0, Status::internal, "unfolded element missing");
  return static_cast<size_t>(idx);
}

TargetFold::TargetFold(const PointedGraph& h, const PointedGraph& g, Fold fold, HomBuildOptions opt)
    : h_(h),
      g_(g),
      fold_result_(apply_fold(g, fold)),
      p_(build_hom_star(h, g, opt)),
      pf_(build_hom_star(h, fold_result_.folded, opt)) {
  new_bit_.assign(g.graph.order(), -1);
  for (int k = 0; k < fold_result_.folded.graph.order(); ++k) {
    new_bit_[fold_result_.inclusion.map[k]] = k;
  }
}

size_t TargetFold::rho(size_t i) const {
  uint64_t bit_u = uint64_t{1} << fold_result_.fold.u;
  uint64_t bit_v = uint64_t{1} << fold_result_.fold.v;
  std::vector<uint64_t> m(p_.at(i), p_.at(i) + p_.stride);
  for (auto& set : m) {
    if (set & bit_v) set |= bit_u;
  }
  long long idx = p_.lookup(m.data());
  check(idx >= 0, Status::internal, "rho left the hom poset");
  return static_cast<size_t>(idx);
}

bool TargetFold::in_y(size_t i) const {
  uint64_t bit_u = uint64_t{1} << fold_result_.fold.u;
  uint64_t bit_v = uint64_t{1} << fold_result_.fold.v;
  const uint64_t* m = p_.at(i);
  for (int w = 0; w < p_.stride; ++w) {
    if ((m[w] & bit_v) && !(m[w] & bit_u)) return false;
  }
  return true;
}

size_t TargetFold::sigma(size_t i) const {
  check(in_y(i), Status::invalid_argument, "sigma needs u alongside every v");
  uint64_t bit_v = uint64_t{1} << fold_result_.fold.v;
  std::vector<uint64_t> m(p_.at(i), p_.at(i) + p_.stride);
  for (auto& set : m) set &= ~bit_v;
  long long idx = p_.lookup(m.data());
  check(idx >= 0, Status::internal, "sigma left the hom poset");
  return static_cast<size_t>(idx);
}

size_t TargetFold::retract(size_t i) const { return sigma(rho(i)); }

size_t TargetFold::to_folded(size_t i) const {
  uint64_t bit_v = uint64_t{1} << fold_result_.fold.v;
  const uint64_t* m = p_.at(i);
  std::vector<uint64_t> mf(pf_.stride, 0);
  for (int w = 0; w < p_.stride; ++w) {
    check(!(m[w] & bit_v), Status::invalid_argument, "element is not in the retract image");
    for (uint64_t set = m[w]; set; set &= set - 1) {
      mf[w] |= uint64_t{1} << new_bit_[std::countr_zero(set)];
    }
  }
  long long idx = pf_.lookup(mf.data());
  check(idx >= 0, Status::internal, "folded image element missing");
  return static_cast<size_t>(idx);
}

size_t TargetFold::from_folded(size_t i) const {
  const uint64_t* mf = pf_.at(i);
  std::vector<uint64_t> m(p_.stride, 0);
  for (int w = 0; w < p_.stride; ++w) {
    for (uint64_t set = mf[w]; set; set &= set - 1) {
      m[w] |= uint64_t{1} << fold_result_.inclusion.map[std::countr_zero(set)];
    }
  }
  long long idx = p_.lookup(m.data());
  check(idx >= 0, Status::internal, "unfolded element missing");
  return static_cast<size_t>(idx);
}

}  // namespace homtop
