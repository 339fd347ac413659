#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace homtop {

struct CheckOptions {
  int size = 3;               // vertex cap for exhaustive enumerations
  int trials = 0;             // sampled instances (0 = per-check default)
  std::uint64_t seed = 42;    // stream seed for sampled instances
  int n = 3;                  // path stage cap
  int bound = 0;              // loop truncation (0 = per-check default)
  int threads = 0;            // 0 = hardware concurrency
};

struct InstanceResult {
  std::string instance;
  bool pass = false;
  std::string detail;  // counterexample evidence on failure
};

struct CheckReport {
  std::string name;
  std::size_t checked = 0;                // instances examined
  std::vector<InstanceResult> failures;   // ordered by instance index
  bool pass = false;
  std::string summary;                    // one-line account of what was established
};

// Registered checks, one per verified statement; names are stable CLI input.
const std::vector<std::string>& verify_check_names();

// Runs a named check; throws Error(invalid_argument) for unknown names with
// the available names in the message.
CheckReport run_verify_check(const std::string& name, const CheckOptions& opt);

}  // namespace homtop
