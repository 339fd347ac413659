// Acceptance gate: each criterion runs one registered verification check with
// pinned options and pinned integer expectations, printing a single PASS/FAIL
// line.  Exit status 0 iff the criterion passed.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "homtop/verify.hpp"

namespace {

std::string one_line(std::string s, size_t cap = 400) {
  for (char& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  if (s.size() > cap) s = s.substr(0, cap) + "...";
  return s;
}

struct Criterion {
  const char* check;
  homtop::CheckOptions options;
  size_t expect_checked;   // 0 = only require a nonempty run
  double budget_seconds;   // 0 = no budget pinned
};

Criterion plan(int n) {
  homtop::CheckOptions opt;
  switch (n) {
    case 1:
      opt.size = 3;
      return {"adjunction", opt, 50653, 120.0};
    case 2:
      opt.size = 3;
      return {"adjoint-closure", opt, 50653, 300.0};
    case 3:
      opt.trials = 50;
      opt.seed = 42;
      return {"fold-invariance", opt, 50, 0.0};
    case 4:
      opt.trials = 25;
      opt.seed = 42;
      opt.n = 3;
      return {"interval-contractible", opt, 75, 0.0};
    case 5:
      opt.trials = 25;
      opt.seed = 42;
      opt.n = 3;
      return {"path-contractible", opt, 75, 0.0};
    case 6:
      opt.size = 3;
      opt.bound = 3;
      return {"commute", opt, 4107, 0.0};
    case 7:
      opt.bound = 10;
      return {"loop-example", opt, 0, 0.0};
    case 8:
      opt.bound = 12;
      return {"fundamental-group", opt, 0, 0.0};
    case 9:
      return {"circle-search", opt, 0, 0.0};
    case 10:
      opt.size = 3;
      opt.n = 2;
      return {"sequence", opt, 0, 0.0};
    default:
      std::fprintf(stderr, "criterion must be 1..10\n");
      std::exit(2);
  }
}

}  // namespace

int main(int argc, char** argv) {
  int criterion = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
      criterion = std::atoi(argv[++i]);
    else if (std::strncmp(argv[i], "--criterion=", 12) == 0)
      criterion = std::atoi(argv[i] + 12);
  }
  if (criterion < 1 || criterion > 10) {
    std::fprintf(stderr, "usage: %s --criterion <1..10>\n", argv[0]);
    return 2;
  }

  Criterion c = plan(criterion);
  try {
    auto start = std::chrono::steady_clock::now();
    homtop::CheckReport rep = homtop::run_verify_check(c.check, c.options);
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    bool ok = rep.pass;
    std::string why;
    if (!rep.pass && !rep.failures.empty())
      why = " first-failure=[" + one_line(rep.failures.front().detail) + "]";
    if (c.expect_checked > 0 && rep.checked != c.expect_checked) {
      ok = false;
      why += " expected checked=" + std::to_string(c.expect_checked);
    }
    if (c.expect_checked == 0 && rep.checked == 0) {
      ok = false;
      why += " empty run";
    }
    if (c.budget_seconds > 0 && elapsed > c.budget_seconds) {
      ok = false;
      why += " over budget of " + std::to_string(c.budget_seconds) + "s";
    }

    std::printf("criterion %d: %s %s checked=%zu failures=%zu elapsed=%.1fs%s%s%s\n", criterion,
                ok ? "PASS" : "FAIL", rep.name.c_str(), rep.checked, rep.failures.size(), elapsed,
                rep.summary.empty() ? "" : " | ", one_line(rep.summary).c_str(), why.c_str());
    return ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::printf("criterion %d: FAIL %s exception=[%s]\n", criterion, c.check,
                one_line(e.what()).c_str());
    return 1;
  }
}
