#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace homtop {

enum class Status {
  ok = 0,
  parse_error = 1,
  invalid_argument = 2,
  limit_exceeded = 3,
  internal = 4,
};

// All recoverable failures in the library surface as Error; the C API
// translates the status into an error code.
class Error : public std::runtime_error {
public:
  Error(Status s, const std::string& msg) : std::runtime_error(msg), status_(s) {}
  Status status() const { return status_; }

private:
  Status status_;
};

[[noreturn]] inline void fail(Status s, const std::string& msg) { throw Error(s, msg); }

inline void check(bool cond, Status s, const std::string& msg) {
  if (!cond) fail(s, msg);
}

// Deterministic splitmix64 stream.  std::uniform_int_distribution is
// implementation-defined, so seeded reproducibility goes through this.
struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, n).
  uint64_t below(uint64_t n) { return n <= 1 ? 0 : next() % n; }

  // Bernoulli with probability num/den.
  bool chance(uint64_t num, uint64_t den) { return below(den) < num; }
};

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }

  int find(int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // keep smallest index as root: deterministic
    parent[b] = a;
    return true;
  }
};

inline uint64_t hash_mix(uint64_t h, uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

inline uint64_t hash_span(const uint64_t* data, size_t n) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (size_t i = 0; i < n; ++i) h = hash_mix(h, data[i]);
  return h;
}

}  // namespace homtop
