#ifndef HOMTOP_SNF_HPP
#define HOMTOP_SNF_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace homtop {

using BigInt = boost::multiprecision::cpp_int;

// Sparse integer matrix given by its nonzero entries.
struct SparseIntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, long long>>> row_entries;  // (col, value)

  SparseIntMatrix() = default;
  SparseIntMatrix(int r, int c) : rows(r), cols(c), row_entries(r) {}
  void add(int r, int c, long long v) { row_entries[r].emplace_back(c, v); }
};

struct SnfResult {
  std::vector<BigInt> divisors;  // nonzero diagonal of the Smith form, d1 | d2 | ...
  int rank = 0;                  // == divisors.size()

  std::vector<BigInt> torsion() const {  // divisors > 1
    std::vector<BigInt> t;
    for (const auto& d : divisors) {
      if (d > 1) t.push_back(d);
    }
    return t;
  }
};

// Unit pivots are eliminated sparsely (with an overflow watchdog); whatever
// remains is finished densely in arbitrary precision.
SnfResult smith_normal_form(const SparseIntMatrix& m);

}  // namespace homtop

#endif
