#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>
#include <vector>

#include "homtop.h"
#include "homtop/loop_space.hpp"
#include "homtop/verify.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { homtop_string_free(p); }
  std::string get() const { return p ? std::string(p) : std::string(); }
};

struct GraphHandle {
  homtop_graph* g = nullptr;
  ~GraphHandle() { homtop_graph_free(g); }
};

GraphHandle parse(const std::string& text) {
  GraphHandle h;
  REQUIRE(homtop_graph_from_json(text.c_str(), &h.g) == HOMTOP_OK);
  REQUIRE(h.g != nullptr);
  return h;
}

const char* kOneStar = R"({"vertices":["1","*"],"edges":[["1","1"],["*","*"]],"basepoint":"*"})";
const char* kC5r = R"({
  "vertices": ["x", "1", "2", "3", "4"],
  "edges": [["x","x"],["1","1"],["2","2"],["3","3"],["4","4"],
            ["x","1"],["1","2"],["2","3"],["3","4"],["4","x"]],
  "basepoint": "x"
})";
const char* kC4r = R"({
  "vertices": ["x", "1", "2", "3"],
  "edges": [["x","x"],["1","1"],["2","2"],["3","3"],
            ["x","1"],["1","2"],["2","3"],["3","x"]],
  "basepoint": "x"
})";
const char* kK2Pointed = R"({"vertices":["x","a"],"edges":[["x","x"],["x","a"]],"basepoint":"x"})";
const char* kK2Plain = R"({"vertices":["a","b"],"edges":[["a","b"]],"basepoint":null})";

}  // namespace

TEST_CASE("version and error slots") {
  REQUIRE(homtop_version() != nullptr);
  CHECK(std::string(homtop_version()).find('.') != std::string::npos);
  homtop_string_free(nullptr);  // must be safe
  homtop_graph_free(nullptr);
}

TEST_CASE("graph json round trip") {
  GraphHandle g = parse(kC5r);
  CHECK(homtop_graph_order(g.g) == 5);
  CHECK(homtop_graph_edge_count(g.g) == 10);
  CHECK(homtop_graph_basepoint(g.g) == 0);
  CHECK(std::string(homtop_last_error()).empty());

  Str out;
  REQUIRE(homtop_graph_to_json(g.g, &out.p) == HOMTOP_OK);
  json doc = json::parse(out.get());
  CHECK(doc["vertices"].size() == 5);
  CHECK(doc["edges"].size() == 10);
  CHECK(doc["basepoint"] == "x");

  GraphHandle again = parse(out.get());
  Str out2;
  REQUIRE(homtop_graph_to_json(again.g, &out2.p) == HOMTOP_OK);
  CHECK(out.get() == out2.get());

  GraphHandle plain = parse(kK2Plain);
  CHECK(homtop_graph_basepoint(plain.g) == -1);
  CHECK(homtop_graph_order(plain.g) == 2);
}

TEST_CASE("graph json rejections") {
  auto expect_reject = [](const char* text, homtop_status want) {
    homtop_graph* g = nullptr;
    homtop_status st = homtop_graph_from_json(text, &g);
    CHECK(st == want);
    CHECK(g == nullptr);
    CHECK(!std::string(homtop_last_error()).empty());
  };
  expect_reject(R"({"vertices":["a","a"],"edges":[]})", HOMTOP_PARSE_ERROR);
  expect_reject(R"({"vertices":["a"],"edges":[["a","b"]]})", HOMTOP_PARSE_ERROR);
  expect_reject(R"({"vertices":["a","b"],"edges":[["a","b"]],"basepoint":"a"})",
                HOMTOP_PARSE_ERROR);  // unlooped basepoint
  expect_reject(R"({"vertices":["a"],)", HOMTOP_PARSE_ERROR);
  expect_reject(R"([1,2,3])", HOMTOP_PARSE_ERROR);
}

TEST_CASE("hom report carries the poset and its invariants") {
  GraphHandle src = parse(kOneStar);
  GraphHandle tgt = parse(kC5r);
  Str out;
  REQUIRE(homtop_hom_report(src.g, tgt.g, 1, &out.p) == HOMTOP_OK);
  json doc = json::parse(out.get());
  CHECK(doc["poset"]["elements"] == 10);
  CHECK(doc["poset"]["atoms"] == 5);
  CHECK(doc["invariants"]["pi0"] == 1);
  CHECK(doc["invariants"]["euler"] == 0);
  CHECK(doc["invariants"]["h1"]["rank"] == 1);
  CHECK(doc["invariants"]["h1"]["torsion"].empty());
  CHECK(doc["invariants"]["collapsible"] == false);

  Str text;
  REQUIRE(homtop_render_text(out.p, &text.p) == HOMTOP_OK);
  CHECK(text.get().find("elements") != std::string::npos);
  CHECK(text.get().find("rank") != std::string::npos);

  // unpointed route: the two nonempty multihoms K2 -> K2
  GraphHandle plain = parse(kK2Plain);
  Str unp;
  REQUIRE(homtop_hom_report(plain.g, plain.g, 0, &unp.p) == HOMTOP_OK);
  CHECK(json::parse(unp.get())["poset"]["elements"] == 2);

  // pointed route demands basepoints
  Str bad;
  CHECK(homtop_hom_report(plain.g, tgt.g, 1, &bad.p) == HOMTOP_INVALID_ARGUMENT);
  CHECK(!std::string(homtop_last_error()).empty());
}

TEST_CASE("products through the c api") {
  GraphHandle k2 = parse(kK2Pointed);

  Str smash;
  REQUIRE(homtop_product(k2.g, k2.g, "smash", &smash.p) == HOMTOP_OK);
  CHECK(json::parse(smash.get())["vertices"].size() == 2);

  Str cat;
  REQUIRE(homtop_product(k2.g, k2.g, "categorical", &cat.p) == HOMTOP_OK);
  json catdoc = json::parse(cat.get());
  CHECK(catdoc["vertices"].size() == 4);
  CHECK(catdoc["basepoint"] == "(x,x)");

  Str cart;
  REQUIRE(homtop_product(k2.g, k2.g, "cartesian", &cart.p) == HOMTOP_OK);
  CHECK(json::parse(cart.get())["vertices"].size() == 4);

  Str expo;
  REQUIRE(homtop_product(k2.g, k2.g, "exponential", &expo.p) == HOMTOP_OK);
  json expdoc = json::parse(expo.get());
  CHECK(expdoc["vertices"].size() == 2);

  // every product output parses back as a graph
  for (const Str* s : {&smash, &cat, &cart, &expo}) {
    GraphHandle back = parse(s->get());
    CHECK(homtop_graph_order(back.g) >= 2);
  }

  Str bad;
  CHECK(homtop_product(k2.g, k2.g, "tensor", &bad.p) == HOMTOP_INVALID_ARGUMENT);
  CHECK(std::string(homtop_last_error()).find("tensor") != std::string::npos);
}

TEST_CASE("fold report dismantles to the core") {
  const char* interval = R"({
    "vertices": ["0", "1", "2", "3"],
    "edges": [["0","0"],["1","1"],["2","2"],["3","3"],["0","1"],["1","2"],["2","3"]],
    "basepoint": "0"
  })";
  GraphHandle g = parse(interval);
  Str out;
  REQUIRE(homtop_fold_report(g.g, &out.p) == HOMTOP_OK);
  json doc = json::parse(out.get());
  CHECK(doc["core"]["vertices"] == json::array({"0"}));
  CHECK(doc["folds"].size() == 3);
  CHECK(doc["removed"].size() == 3);
  CHECK(doc["graph"]["vertices"].size() == 4);
}

TEST_CASE("loop report matches the library") {
  GraphHandle g = parse(kC4r);
  Str out;
  REQUIRE(homtop_loop_report(g.g, 6, 1, &out.p) == HOMTOP_OK);
  json doc = json::parse(out.get());
  CHECK(doc["depth"] == 1);
  const json& rep = doc["report"];
  CHECK(rep["bound"] == 6);

  // cross-check against a direct construction
  homtop::Graph ref(4, {"x", "1", "2", "3"});
  for (int v = 0; v < 4; ++v) {
    ref.add_edge(v, v);
    ref.add_edge(v, (v + 1) % 4);
  }
  homtop::LoopGraph lg(homtop::PointedGraph{ref, 0}, 6);
  CHECK(rep["loop_vertices"] == lg.size());
  REQUIRE(rep["components"].size() == static_cast<size_t>(lg.component_count()));
  std::set<int> windings;
  for (const json& comp : rep["components"]) {
    size_t id = comp["id"].get<size_t>();
    CHECK(comp["size"] == lg.components()[id].size);
    REQUIRE(!comp["winding"].is_null());
    windings.insert(comp["winding"].get<int>());
  }
  CHECK(windings == std::set<int>{-1, 0, 1});
  CHECK(rep["group"]["identity"] == 0);
  CHECK(!rep["group"]["products"].empty());

  Str deep;
  REQUIRE(homtop_loop_report(g.g, 4, 2, &deep.p) == HOMTOP_OK);
  json deepdoc = json::parse(deep.get());
  CHECK(deepdoc["depth"] == 2);
  CHECK(deepdoc["inner_loops"].get<long long>() >= 1);

  Str bad;
  CHECK(homtop_loop_report(g.g, 0, 1, &bad.p) == HOMTOP_INVALID_ARGUMENT);
  CHECK(homtop_loop_report(g.g, 4, 3, &bad.p) == HOMTOP_INVALID_ARGUMENT);
}

TEST_CASE("verify surface") {
  Str names;
  REQUIRE(homtop_verify_list(&names.p) == HOMTOP_OK);
  json list = json::parse(names.get());
  REQUIRE(list.is_array());
  const std::vector<std::string>& ref = homtop::verify_check_names();
  REQUIRE(list.size() == ref.size());
  for (size_t i = 0; i < ref.size(); ++i) CHECK(list[i] == ref[i]);

  int pass = -1;
  Str out;
  REQUIRE(homtop_verify("adjunction", R"({"size":2})", &out.p, &pass) == HOMTOP_OK);
  CHECK(pass == 1);
  json doc = json::parse(out.get());
  CHECK(doc["check"] == "adjunction");
  CHECK(doc["checked"] == 125);
  CHECK(doc["pass"] == true);
  CHECK(doc["failures"].empty());
  CHECK(out.get().find("\"pass\": true") != std::string::npos);

  Str bad;
  int bad_pass = -1;
  CHECK(homtop_verify("no-such-check", nullptr, &bad.p, &bad_pass) == HOMTOP_INVALID_ARGUMENT);
  CHECK(std::string(homtop_last_error()).find("fold-invariance") != std::string::npos);

  Str opt_bad;
  CHECK(homtop_verify("adjunction", "{not json", &opt_bad.p, &bad_pass) == HOMTOP_PARSE_ERROR);
}

TEST_CASE("reports are byte deterministic") {
  auto run = [] {
    int pass = -1;
    Str out;
    REQUIRE(homtop_verify("fold-invariance", R"({"trials":3,"seed":7})", &out.p, &pass) ==
            HOMTOP_OK);
    CHECK(pass == 1);
    return out.get();
  };
  std::string a = run(), b = run();
  CHECK(a == b);

  GraphHandle g = parse(kC4r);
  Str r1, r2;
  REQUIRE(homtop_loop_report(g.g, 5, 1, &r1.p) == HOMTOP_OK);
  REQUIRE(homtop_loop_report(g.g, 5, 1, &r2.p) == HOMTOP_OK);
  CHECK(r1.get() == r2.get());
}

TEST_CASE("render text rejects bad documents") {
  Str out;
  CHECK(homtop_render_text("{oops", &out.p) == HOMTOP_PARSE_ERROR);
  REQUIRE(homtop_render_text(R"({"a": 1, "b": [1, 2]})", &out.p) == HOMTOP_OK);
  CHECK(out.get().find("a") != std::string::npos);
  CHECK(out.get().find('\n') != std::string::npos);
}
