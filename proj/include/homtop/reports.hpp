#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "homtop/graph.hpp"
#include "homtop/graph_ops.hpp"
#include "homtop/hom_poset.hpp"
#include "homtop/invariants.hpp"
#include "homtop/loop_space.hpp"
#include "homtop/verify.hpp"

namespace homtop {

using Json = nlohmann::json;

// Integers leave as JSON numbers while they fit 64 bits, else as decimal
// strings; keeps the documents machine-friendly without silent truncation.
Json big_int_json(const BigInt& value);

Json graph_report(const Graph& g, std::optional<int> basepoint);

// {"elements", "atoms", "basepoint", "order_edges"}; order_edges counts the
// Hasse diagram (cover) edges.
Json poset_report(const HomPoset& p);

// {"pi0", "basepoint_component", "euler", "h1": {"rank", "torsion"},
//  "collapsible": bool|null}
Json invariant_report(const InvariantProfile& prof);

// {"bound", "loop_vertices", "components": [{"id", "size", "winding"}],
//  "group": {"identity", "products", "undefined_pairs"}}
Json loop_report(const LoopGraph& lg);

// {"graph", "core", "folds": [[u, v]...], "removed": [labels...]}
Json fold_report(const PointedGraph& g, const DismantleResult& d);

Json verify_report(const CheckReport& report);

// Plain-text renditions for --format text.
std::string render_text(const Json& doc);

}  // namespace homtop
