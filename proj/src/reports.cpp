#include "homtop/reports.hpp"

#include <cstdint>
#include <limits>
#include <sstream>

namespace homtop {

Json big_int_json(const BigInt& value) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (value >= lo && value <= hi) return Json(static_cast<std::int64_t>(value));
  return Json(value.str());
}

Json graph_report(const Graph& g, std::optional<int> basepoint) {
  Json doc;
  doc["vertices"] = Json::array();
  for (int v = 0; v < g.order(); ++v) doc["vertices"].push_back(g.label(v));
  doc["edges"] = Json::array();
  for (auto [u, v] : g.edges()) doc["edges"].push_back(Json::array({g.label(u), g.label(v)}));
  if (basepoint)
    doc["basepoint"] = g.label(*basepoint);
  else
    doc["basepoint"] = nullptr;
  return doc;
}

Json poset_report(const HomPoset& p) {
  Json doc;
  doc["elements"] = p.size();
  doc["atoms"] = p.atoms().size();
  if (p.basepoint_element() >= 0)
    doc["basepoint"] = p.basepoint_element();
  else
    doc["basepoint"] = nullptr;
  doc["order_edges"] = p.cover_edge_count();
  return doc;
}

Json invariant_report(const InvariantProfile& prof) {
  Json doc;
  doc["pi0"] = prof.pi0;
  doc["basepoint_component"] = prof.basepoint_component;
  doc["euler"] = big_int_json(prof.euler);
  Json h1;
  h1["rank"] = prof.h1.rank;
  h1["torsion"] = Json::array();
  for (const BigInt& t : prof.h1.torsion) h1["torsion"].push_back(big_int_json(t));
  doc["h1"] = h1;
  if (prof.collapsible)
    doc["collapsible"] = *prof.collapsible;
  else
    doc["collapsible"] = nullptr;
  return doc;
}

Json loop_report(const LoopGraph& lg) {
  Json doc;
  doc["bound"] = lg.bound();
  doc["loop_vertices"] = lg.size();
  doc["components"] = Json::array();
  for (const LoopComponentInfo& info : lg.components()) {
    Json c;
    c["id"] = info.id;
    c["size"] = info.size;
    if (info.winding)
      c["winding"] = *info.winding;
    else
      c["winding"] = nullptr;
    doc["components"].push_back(c);
  }
  LoopGroup grp = lg.group();
  Json group;
  group["identity"] = grp.identity;
  group["products"] = Json::array();
  for (const auto& t : grp.products) group["products"].push_back(Json::array({t[0], t[1], t[2]}));
  group["undefined_pairs"] = Json::array();
  for (const auto& u : grp.undefined_pairs)
    group["undefined_pairs"].push_back(Json::array({u[0], u[1]}));
  doc["group"] = group;
  return doc;
}

Json fold_report(const PointedGraph& g, const DismantleResult& d) {
  Json doc;
  doc["graph"] = graph_report(g.graph, g.basepoint);
  doc["core"] = graph_report(d.core.graph, d.core.basepoint);
  doc["folds"] = Json::array();
  for (const Fold& f : d.folds) doc["folds"].push_back(Json::array({f.u, f.v}));
  doc["removed"] = Json::array();
  for (const std::string& label : d.removed_labels) doc["removed"].push_back(label);
  return doc;
}

Json verify_report(const CheckReport& report) {
  Json doc;
  doc["check"] = report.name;
  doc["checked"] = report.checked;
  doc["pass"] = report.pass;
  doc["summary"] = report.summary;
  doc["failures"] = Json::array();
  for (const InstanceResult& r : report.failures) {
    Json f;
    f["instance"] = r.instance;
    f["detail"] = r.detail;
    doc["failures"].push_back(f);
  }
  return doc;
}

namespace {

void render_value(const Json& v, const std::string& prefix, std::ostringstream& os) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      const Json& child = it.value();
      if (child.is_object() || (child.is_array() && !child.empty() &&
                                (child.front().is_object() || child.front().is_array()))) {
        os << prefix << it.key() << ":\n";
        render_value(child, prefix + "  ", os);
      } else {
        os << prefix << it.key() << ": " << child.dump() << "\n";
      }
    }
  } else if (v.is_array()) {
    for (const Json& child : v) {
      if (child.is_object() || child.is_array()) {
        os << prefix << "-\n";
        render_value(child, prefix + "  ", os);
      } else {
        os << prefix << "- " << child.dump() << "\n";
      }
    }
  } else {
    os << prefix << v.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const Json& doc) {
  std::ostringstream os;
  render_value(doc, "", os);
  return os.str();
}

}  // namespace homtop
