#include "homtop.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "json.hpp"

#include "homtop/graph.hpp"
#include "homtop/graph_ops.hpp"
#include "homtop/hom_poset.hpp"
#include "homtop/invariants.hpp"
#include "homtop/json_io.hpp"
#include "homtop/loop_space.hpp"
#include "homtop/reports.hpp"
#include "homtop/util.hpp"
#include "homtop/verify.hpp"

using homtop::Json;

struct homtop_graph {
  homtop::ParsedGraph parsed;
};

namespace {

thread_local std::string g_last_error;

homtop_status status_code(homtop::Status s) {
  switch (s) {
    case homtop::Status::ok: return HOMTOP_OK;
    case homtop::Status::parse_error: return HOMTOP_PARSE_ERROR;
    case homtop::Status::invalid_argument: return HOMTOP_INVALID_ARGUMENT;
    case homtop::Status::limit_exceeded: return HOMTOP_LIMIT_EXCEEDED;
    case homtop::Status::internal: return HOMTOP_INTERNAL_ERROR;
  }
  return HOMTOP_INTERNAL_ERROR;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
homtop_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return HOMTOP_OK;
  } catch (const homtop::Error& e) {
    g_last_error = e.what();
    return status_code(e.status());
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return HOMTOP_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HOMTOP_INTERNAL_ERROR;
  }
}

const homtop::ParsedGraph& require(const homtop_graph* g) {
  homtop::check(g != nullptr, homtop::Status::invalid_argument, "null graph handle");
  return g->parsed;
}

std::string document(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

extern "C" {

const char* homtop_version(void) { return "0.1.0"; }

const char* homtop_last_error(void) { return g_last_error.c_str(); }

void homtop_string_free(char* s) { std::free(s); }

homtop_status homtop_graph_from_json(const char* text, homtop_graph** out) {
  return guarded([&] {
    homtop::check(text != nullptr && out != nullptr, homtop::Status::invalid_argument,
                  "null argument");
    auto parsed = homtop::graph_from_json_text(text);
    *out = new homtop_graph{std::move(parsed)};
  });
}

homtop_status homtop_graph_to_json(const homtop_graph* g, char** out) {
  return guarded([&] {
    homtop::check(out != nullptr, homtop::Status::invalid_argument, "null out");
    const auto& p = require(g);
    *out = copy_string(homtop::graph_to_json_text(p.graph, p.basepoint));
  });
}

void homtop_graph_free(homtop_graph* g) { delete g; }

int homtop_graph_order(const homtop_graph* g) {
  return g == nullptr ? -1 : g->parsed.graph.order();
}

long long homtop_graph_edge_count(const homtop_graph* g) {
  return g == nullptr ? -1 : static_cast<long long>(g->parsed.graph.edge_count());
}

int homtop_graph_basepoint(const homtop_graph* g) {
  if (g == nullptr || !g->parsed.basepoint) return -1;
  return *g->parsed.basepoint;
}

homtop_status homtop_hom_report(const homtop_graph* source, const homtop_graph* target,
                                int pointed, char** out_json) {
  return guarded([&] {
    homtop::check(out_json != nullptr, homtop::Status::invalid_argument, "null out");
    const auto& s = require(source);
    const auto& t = require(target);
    Json doc;
    doc["pointed"] = pointed != 0;
    if (pointed != 0) {
      homtop::PointedGraph ps = s.pointed();
      homtop::PointedGraph pt = t.pointed();
      homtop::HomPoset p = homtop::build_hom_star(ps, pt);
      doc["source"] = homtop::graph_report(ps.graph, ps.basepoint);
      doc["target"] = homtop::graph_report(pt.graph, pt.basepoint);
      doc["poset"] = homtop::poset_report(p);
      doc["invariants"] = homtop::invariant_report(homtop::hom_profile(ps, pt));
    } else {
      homtop::HomPoset p = homtop::build_hom(s.graph, t.graph);
      doc["source"] = homtop::graph_report(s.graph, std::nullopt);
      doc["target"] = homtop::graph_report(t.graph, std::nullopt);
      doc["poset"] = homtop::poset_report(p);
      doc["invariants"] = homtop::invariant_report(homtop::poset_profile_exact(p));
    }
    *out_json = copy_string(document(doc));
  });
}

homtop_status homtop_product(const homtop_graph* a, const homtop_graph* b, const char* kind,
                             char** out_json) {
  return guarded([&] {
    homtop::check(kind != nullptr && out_json != nullptr, homtop::Status::invalid_argument,
                  "null argument");
    const auto& pa = require(a);
    const auto& pb = require(b);
    std::string k = kind;
    std::string text;
    if (k == "categorical" || k == "cartesian") {
      homtop::Graph prod = k == "categorical"
                               ? homtop::categorical_product(pa.graph, pb.graph)
                               : homtop::cartesian_product(pa.graph, pb.graph);
      std::optional<int> bp;
      if (pa.basepoint && pb.basepoint)
        bp = *pa.basepoint * pb.graph.order() + *pb.basepoint;
      text = homtop::graph_to_json_text(prod, bp);
    } else if (k == "smash") {
      homtop::SmashProduct sp = homtop::smash_product(pa.pointed(), pb.pointed());
      text = homtop::graph_to_json_text(sp.quotient.graph, sp.quotient.basepoint);
    } else if (k == "exponential") {
      homtop::Exponential e(pa.pointed(), pb.pointed());
      text = homtop::graph_to_json_text(e.graph().graph, e.graph().basepoint);
    } else {
      homtop::fail(homtop::Status::invalid_argument,
                   "unknown product kind '" + k +
                       "'; expected categorical, cartesian, smash or exponential");
    }
    *out_json = copy_string(text);
  });
}

homtop_status homtop_fold_report(const homtop_graph* g, char** out_json) {
  return guarded([&] {
    homtop::check(out_json != nullptr, homtop::Status::invalid_argument, "null out");
    const auto& p = require(g);
    homtop::PointedGraph pg = p.pointed();
    homtop::DismantleResult d = homtop::dismantle(pg);
    *out_json = copy_string(document(homtop::fold_report(pg, d)));
  });
}

homtop_status homtop_loop_report(const homtop_graph* g, int bound, int depth, char** out_json) {
  return guarded([&] {
    homtop::check(out_json != nullptr, homtop::Status::invalid_argument, "null out");
    homtop::check(bound >= 1, homtop::Status::invalid_argument, "bound must be at least 1");
    homtop::check(depth == 1 || depth == 2, homtop::Status::invalid_argument,
                  "depth must be 1 or 2");
    const auto& p = require(g);
    homtop::PointedGraph pg = p.pointed();
    Json doc;
    doc["depth"] = depth;
    homtop::LoopGraph first(pg, bound);
    if (depth == 1) {
      doc["report"] = homtop::loop_report(first);
    } else {
      homtop::PointedGraph ambient = first.looped_part();
      doc["inner_loops"] = ambient.graph.order();
      homtop::LoopGraph second(ambient, bound);
      doc["report"] = homtop::loop_report(second);
    }
    *out_json = copy_string(document(doc));
  });
}

homtop_status homtop_verify_list(char** out_json) {
  return guarded([&] {
    homtop::check(out_json != nullptr, homtop::Status::invalid_argument, "null out");
    Json doc = Json::array();
    for (const std::string& name : homtop::verify_check_names()) doc.push_back(name);
    *out_json = copy_string(document(doc));
  });
}

homtop_status homtop_verify(const char* check, const char* options_json, char** out_json,
                            int* out_pass) {
  return guarded([&] {
    homtop::check(check != nullptr && out_json != nullptr, homtop::Status::invalid_argument,
                  "null argument");
    homtop::CheckOptions opt;
    if (options_json != nullptr && options_json[0] != '\0') {
      Json o;
      try {
        o = Json::parse(options_json);
      } catch (const std::exception& e) {
        homtop::fail(homtop::Status::parse_error,
                     std::string("invalid options JSON: ") + e.what());
      }
      homtop::check(o.is_object(), homtop::Status::parse_error, "options must be an object");
      if (o.contains("size")) opt.size = o["size"].get<int>();
      if (o.contains("trials")) opt.trials = o["trials"].get<int>();
      if (o.contains("seed")) opt.seed = o["seed"].get<std::uint64_t>();
      if (o.contains("n")) opt.n = o["n"].get<int>();
      if (o.contains("bound")) opt.bound = o["bound"].get<int>();
      if (o.contains("threads")) opt.threads = o["threads"].get<int>();
    }
    homtop::CheckReport rep = homtop::run_verify_check(check, opt);
    if (out_pass != nullptr) *out_pass = rep.pass ? 1 : 0;
    *out_json = copy_string(document(homtop::verify_report(rep)));
  });
}

homtop_status homtop_render_text(const char* json, char** out_text) {
  return guarded([&] {
    homtop::check(json != nullptr && out_text != nullptr, homtop::Status::invalid_argument,
                  "null argument");
    Json doc;
    try {
      doc = Json::parse(json);
    } catch (const std::exception& e) {
      homtop::fail(homtop::Status::parse_error, std::string("invalid JSON: ") + e.what());
    }
    *out_text = copy_string(homtop::render_text(doc));
  });
}

}  // extern "C"
