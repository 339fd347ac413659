#include "homtop/snf.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "homtop/util.hpp"

namespace homtop {

namespace {

// working sparse form: per-row sorted column/value pairs plus a lazy column
// occupancy index
struct Working {
  std::vector<std::vector<std::pair<int, long long>>> rows;
  std::vector<std::vector<int>> col_rows;  // may hold stale/duplicate row ids
  std::vector<int> col_count;              // upper bound on occupancy
  bool overflow = false;
  std::vector<std::pair<int, long long>> scratch;

  long long at(int r, int c) const {
    const auto& row = rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    return (it != row.end() && it->first == c) ? it->second : 0;
  }

  // row[r] -= k * row[p]; either applies fully or flags overflow untouched
  void axpy_row(int r, int p, long long k) {
    const auto& rr = rows[r];
    const auto& rp = rows[p];
    scratch.clear();
    scratch.reserve(rr.size() + rp.size());
    size_t i = 0, j = 0;
    while (i < rr.size() || j < rp.size()) {
      if (j == rp.size() || (i < rr.size() && rr[i].first < rp[j].first)) {
        scratch.push_back(rr[i++]);
        continue;
      }
      int c = rp[j].first;
      long long prod, sum;
      if (__builtin_mul_overflow(k, rp[j].second, &prod)) {
        overflow = true;
        return;
      }
      long long cur = 0;
      if (i < rr.size() && rr[i].first == c) cur = rr[i++].second;
      if (__builtin_sub_overflow(cur, prod, &sum)) {
        overflow = true;
        return;
      }
      ++j;
      if (sum != 0) scratch.emplace_back(c, sum);
    }
    // commit: update the occupancy index for columns entering or leaving row r
    size_t a = 0, b = 0;
    while (a < rr.size() || b < scratch.size()) {
      int ca = (a < rr.size()) ? rr[a].first : -1;
      int cb = (b < scratch.size()) ? scratch[b].first : -1;
      if (ca == cb) {
        ++a;
        ++b;
      } else if (ca == -1 || (cb != -1 && cb < ca)) {
        col_rows[cb].push_back(r);
        ++col_count[cb];
        ++b;
      } else {
        if (col_count[ca] > 0) --col_count[ca];
        ++a;
      }
    }
    rows[r].swap(scratch);
  }
};

// dense Smith normal form over cpp_int; returns nonzero diagonal entries
std::vector<BigInt> dense_snf(std::vector<std::vector<BigInt>> a) {
  std::vector<BigInt> out;
  size_t nr = a.size();
  size_t nc = nr ? a[0].size() : 0;
  size_t t = 0;
  while (t < nr && t < nc) {
    // locate a nonzero entry of minimal absolute value in the submatrix
    size_t pr = nr, pc = nc;
    BigInt best = 0;
    for (size_t i = t; i < nr; ++i) {
      for (size_t j = t; j < nc; ++j) {
        if (a[i][j] == 0) continue;
        BigInt mag = abs(a[i][j]);
        if (pr == nr || mag < best) {
          best = mag;
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == nr) break;  // submatrix is zero
    std::swap(a[t], a[pr]);
    for (size_t i = 0; i < nr; ++i) std::swap(a[i][t], a[i][pc]);

    bool reduced = false;
    while (!reduced) {
      reduced = true;
      for (size_t i = t + 1; i < nr; ++i) {
        if (a[i][t] == 0) continue;
        BigInt q = a[i][t] / a[t][t];
        for (size_t j = t; j < nc; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {  // remainder is smaller; promote it to pivot
          std::swap(a[t], a[i]);
          reduced = false;
        }
      }
      if (!reduced) continue;
      for (size_t j = t + 1; j < nc; ++j) {
        if (a[t][j] == 0) continue;
        BigInt q = a[t][j] / a[t][t];
        for (size_t i = t; i < nr; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (size_t i = 0; i < nr; ++i) std::swap(a[i][t], a[i][j]);
          reduced = false;
        }
      }
      if (!reduced) continue;
      // pivot must divide every remaining entry; fold in a violating row
      for (size_t i = t + 1; i < nr && reduced; ++i) {
        for (size_t j = t + 1; j < nc && reduced; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (size_t l = t; l < nc; ++l) a[t][l] += a[i][l];
            reduced = false;
          }
        }
      }
    }
    out.push_back(abs(a[t][t]));
    ++t;
  }
  return out;
}

}  // namespace

SnfResult smith_normal_form(const SparseIntMatrix& m) {
  Working w;
  w.rows.resize(m.rows);
  w.col_rows.resize(m.cols);
  w.col_count.assign(m.cols, 0);
  for (int r = 0; r < m.rows; ++r) {
    auto entries = m.row_entries[r];
    std::sort(entries.begin(), entries.end());
    auto& row = w.rows[r];
    for (auto [c, v] : entries) {
      check(c >= 0 && c < m.cols, Status::invalid_argument, "matrix entry out of range");
      if (v == 0) continue;
      if (!row.empty() && row.back().first == c) {
        row.back().second += v;
      } else {
        row.emplace_back(c, v);
      }
    }
    row.erase(std::remove_if(row.begin(), row.end(), [](const auto& e) { return e.second == 0; }),
              row.end());
    for (auto [c, v] : row) {
      (void)v;
      w.col_rows[c].push_back(r);
      ++w.col_count[c];
    }
  }

  std::vector<char> row_done(m.rows, 0);
  size_t unit_pivots = 0;

  // sparse phase: sweep rows, eliminating +-1 pivots as they are found,
  // until a sweep makes no progress or the watchdog trips
  bool progress = true;
  while (progress && !w.overflow) {
    progress = false;
    for (int r = 0; r < m.rows && !w.overflow; ++r) {
      if (row_done[r] || w.rows[r].empty()) continue;
      int best_c = -1;
      long long piv = 0;
      for (auto [c, v] : w.rows[r]) {
        if (v != 1 && v != -1) continue;
        if (best_c < 0 || w.col_count[c] < w.col_count[best_c]) {
          best_c = c;
          piv = v;
        }
      }
      if (best_c < 0) continue;

      std::vector<int> users;
      users.swap(w.col_rows[best_c]);
      for (int ur : users) {
        if (ur == r || row_done[ur]) continue;
        long long uv = w.at(ur, best_c);
        if (uv == 0) continue;
        w.axpy_row(ur, r, uv * piv);
        if (w.overflow) {
          users.swap(w.col_rows[best_c]);  // keep index usable for nothing further
          break;
        }
      }
      if (w.overflow) break;
      w.rows[r].clear();
      row_done[r] = 1;
      ++unit_pivots;
      progress = true;
    }
  }

  // collect the residual submatrix densely
  std::vector<int> live_rows, live_cols;
  std::set<int> live_col_set;
  for (int r = 0; r < m.rows; ++r) {
    if (!row_done[r] && !w.rows[r].empty()) live_rows.push_back(r);
  }
  for (int r : live_rows) {
    for (auto [c, v] : w.rows[r]) {
      (void)v;
      live_col_set.insert(c);
    }
  }
  live_cols.assign(live_col_set.begin(), live_col_set.end());

  std::vector<BigInt> tail;
  if (!live_rows.empty()) {
    std::vector<std::vector<BigInt>> dense(live_rows.size(),
                                           std::vector<BigInt>(live_cols.size(), 0));
    for (size_t i = 0; i < live_rows.size(); ++i) {
      for (auto [c, v] : w.rows[live_rows[i]]) {
        size_t j = std::lower_bound(live_cols.begin(), live_cols.end(), c) - live_cols.begin();
        dense[i][j] = v;
      }
    }
    tail = dense_snf(std::move(dense));
  }

  SnfResult res;
  res.divisors.assign(unit_pivots, BigInt(1));
  res.divisors.insert(res.divisors.end(), tail.begin(), tail.end());
  res.rank = static_cast<int>(res.divisors.size());

  // enforce the divisibility chain (dense_snf already returns a chain and
  // units divide everything, but normalise defensively)
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < res.divisors.size(); ++i) {
      if (res.divisors[i + 1] % res.divisors[i] != 0) {
        BigInt g = gcd(res.divisors[i], res.divisors[i + 1]);
        BigInt l = res.divisors[i] / g * res.divisors[i + 1];
        res.divisors[i] = g;
        res.divisors[i + 1] = l;
        changed = true;
      }
    }
  }
  std::sort(res.divisors.begin(), res.divisors.end());
  return res;
}

}  // namespace homtop
