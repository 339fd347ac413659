#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "homtop.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct GraphHandle {
  homtop_graph* g = nullptr;
  ~GraphHandle() { homtop_graph_free(g); }
};

struct StringHandle {
  char* s = nullptr;
  ~StringHandle() { homtop_string_free(s); }
};

int fail_usage(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kExitUsage;
}

bool read_file(const std::string& path, std::string& out, std::string& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err = "cannot open " + path;
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

bool load_graph(const std::string& path, GraphHandle& handle, std::string& err) {
  std::string text;
  if (!read_file(path, text, err)) return false;
  if (homtop_graph_from_json(text.c_str(), &handle.g) != HOMTOP_OK) {
    err = path + ": " + homtop_last_error();
    return false;
  }
  return true;
}

// Renders (optionally as text) and writes to --out or stdout.
int deliver(const char* json, const std::string& format, const std::string& out_path) {
  std::string payload;
  if (format == "text") {
    StringHandle text;
    if (homtop_render_text(json, &text.s) != HOMTOP_OK)
      return fail_usage(homtop_last_error());
    payload = text.s;
  } else {
    payload = json;
  }
  if (out_path.empty()) {
    std::cout << payload;
    return kExitPass;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) return fail_usage("cannot write " + out_path);
  out << payload;
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pointed graph homomorphism complexes, folds, loops and verified statements"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "json";
  std::uint64_t seed = 42;
  app.add_option("--out", out_path, "write the report to this file instead of stdout");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", seed, "seed for randomized checks");

  // hom SOURCE TARGET
  auto* hom = app.add_subcommand("hom", "multihom poset and invariants of Hom(source, target)");
  hom->fallthrough();
  std::string hom_source, hom_target;
  bool unpointed = false;
  hom->add_option("source", hom_source, "source graph JSON file")->required();
  hom->add_option("target", hom_target, "target graph JSON file")->required();
  hom->add_flag("--unpointed", unpointed, "ignore basepoints and use all multihoms");

  // product A B --kind k
  auto* product = app.add_subcommand("product", "categorical/cartesian/smash/exponential product");
  product->fallthrough();
  std::string prod_a, prod_b, kind = "categorical";
  product->add_option("a", prod_a, "first graph JSON file")->required();
  product->add_option("b", prod_b, "second graph JSON file")->required();
  product->add_option("--kind", kind, "product kind")
      ->check(CLI::IsMember({"categorical", "cartesian", "smash", "exponential"}));

  // fold G
  auto* fold = app.add_subcommand("fold", "dismantle a pointed graph by folds");
  fold->fallthrough();
  std::string fold_g;
  fold->add_option("graph", fold_g, "graph JSON file")->required();

  // loop G --bound N --depth D
  auto* loop = app.add_subcommand("loop", "loop graph of based closed walks");
  loop->fallthrough();
  std::string loop_g;
  int bound = 4;
  int depth = 1;
  loop->add_option("graph", loop_g, "graph JSON file")->required();
  loop->add_option("--bound", bound, "walk length truncation");
  loop->add_option("--depth", depth, "1 = loops, 2 = loops of the looped part")
      ->check(CLI::Range(1, 2));

  // verify CHECK [tuning]
  auto* verify = app.add_subcommand("verify", "run a named verification check");
  verify->fallthrough();
  std::string check_name;
  int size = 3, trials = 0, n = 3, vbound = 0, threads = 0;
  verify->add_option("check", check_name, "check name (see --list)");
  bool list_checks = false;
  verify->add_flag("--list", list_checks, "list available checks");
  verify->add_option("--size", size, "vertex cap for exhaustive enumerations");
  verify->add_option("--trials", trials, "sampled instances (0 = check default)");
  verify->add_option("--n", n, "path stage cap");
  verify->add_option("--bound", vbound, "loop truncation (0 = check default)");
  verify->add_option("--threads", threads, "worker threads (0 = hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  std::string err;

  if (hom->parsed()) {
    GraphHandle s, t;
    if (!load_graph(hom_source, s, err) || !load_graph(hom_target, t, err))
      return fail_usage(err);
    StringHandle json;
    if (homtop_hom_report(s.g, t.g, unpointed ? 0 : 1, &json.s) != HOMTOP_OK)
      return fail_usage(homtop_last_error());
    return deliver(json.s, format, out_path);
  }

  if (product->parsed()) {
    GraphHandle a, b;
    if (!load_graph(prod_a, a, err) || !load_graph(prod_b, b, err)) return fail_usage(err);
    StringHandle json;
    if (homtop_product(a.g, b.g, kind.c_str(), &json.s) != HOMTOP_OK)
      return fail_usage(homtop_last_error());
    return deliver(json.s, format, out_path);
  }

  if (fold->parsed()) {
    GraphHandle g;
    if (!load_graph(fold_g, g, err)) return fail_usage(err);
    StringHandle json;
    if (homtop_fold_report(g.g, &json.s) != HOMTOP_OK) return fail_usage(homtop_last_error());
    return deliver(json.s, format, out_path);
  }

  if (loop->parsed()) {
    GraphHandle g;
    if (!load_graph(loop_g, g, err)) return fail_usage(err);
    StringHandle json;
    if (homtop_loop_report(g.g, bound, depth, &json.s) != HOMTOP_OK)
      return fail_usage(homtop_last_error());
    return deliver(json.s, format, out_path);
  }

  if (verify->parsed()) {
    if (list_checks) {
      StringHandle json;
      if (homtop_verify_list(&json.s) != HOMTOP_OK) return fail_usage(homtop_last_error());
      return deliver(json.s, format, out_path);
    }
    if (check_name.empty()) return fail_usage("verify needs a check name (or --list)");
    std::ostringstream opts;
    opts << "{\"size\":" << size << ",\"trials\":" << trials << ",\"seed\":" << seed
         << ",\"n\":" << n << ",\"bound\":" << vbound << ",\"threads\":" << threads << "}";
    StringHandle json;
    int pass = 0;
    if (homtop_verify(check_name.c_str(), opts.str().c_str(), &json.s, &pass) != HOMTOP_OK)
      return fail_usage(homtop_last_error());
    int rc = deliver(json.s, format, out_path);
    if (rc != kExitPass) return rc;
    return pass ? kExitPass : kExitFail;
  }

  return fail_usage("no subcommand");
}
