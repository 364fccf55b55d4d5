#pragma once

/* Littlewood-Richardson oracle for small Grassmannians: coefficients are
   counted directly as skew tableaux with a ballot reverse reading word,
   with no polynomial arithmetic involved, so this is an independent
   cross-check of the divided-difference route. */

#include <functional>
#include <vector>

#include "flagrank/root_system.hpp"
#include "flagrank/weyl.hpp"

namespace lr {

using Partition = std::vector<int>;  // weakly decreasing, trailing zeros trimmed

inline Partition trimmed(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline int weight(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

inline bool contains(const Partition& big, const Partition& small) {
  if (small.size() > big.size()) return false;
  for (size_t i = 0; i < small.size(); ++i)
    if (small[i] > big[i]) return false;
  return true;
}

// one-line notation of w on 1..n+1 in type A_n; the word acts right to left,
// so folding letters left to right composes on the right
inline std::vector<int> one_line(const flagrank::RootSystem& rs, const flagrank::WeylElement& w) {
  std::vector<int> p(rs.rank + 1);
  for (size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i) + 1;
  for (int letter : w.word) std::swap(p[letter - 1], p[letter]);
  return p;
}

/* partition of a Grassmannian permutation with its sole descent at k:
   lambda_i = p(k+1-i) - (k+1-i).  Shape and size are sanity-checked, a
   violation means the permutation was not a minimal representative. */
inline Partition grassmann_partition(const std::vector<int>& p, int k, int length) {
  Partition la(k);
  for (int i = 1; i <= k; ++i) la[i - 1] = p[k - i] - (k + 1 - i);
  int total = 0;
  for (size_t i = 0; i < la.size(); ++i) {
    if (la[i] < 0 || (i + 1 < la.size() && la[i] < la[i + 1]))
      throw std::logic_error("grassmann partition is not weakly decreasing");
    total += la[i];
  }
  if (total != length) throw std::logic_error("grassmann partition size differs from the length");
  return trimmed(la);
}

// number of skew tableaux of shape nu/la with content mu, rows weakly and
// columns strictly increasing, reverse reading word a ballot sequence
inline long long lr_coeff(const Partition& nu, const Partition& la, const Partition& mu) {
  if (!contains(nu, la)) return 0;
  if (weight(nu) != weight(la) + weight(mu)) return 0;
  struct Cell {
    int r, c;
  };
  std::vector<Cell> cells;  // rows top down, within a row right to left
  std::vector<std::vector<int>> fill(nu.size());
  for (size_t r = 0; r < nu.size(); ++r) {
    fill[r].assign(nu[r], 0);
    int lo = r < la.size() ? la[r] : 0;
    for (int c = nu[r] - 1; c >= lo; --c) cells.push_back({static_cast<int>(r), c});
  }
  const int m = static_cast<int>(mu.size());
  std::vector<int> cnt(m + 1, 0);
  long long count = 0;
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == cells.size()) {
      ++count;
      return;
    }
    auto [r, c] = cells[idx];
    for (int t = 1; t <= m; ++t) {
      if (cnt[t] >= mu[t - 1]) continue;
      if (t > 1 && cnt[t] >= cnt[t - 1]) continue;        // ballot prefix
      if (c + 1 < nu[r] && t > fill[r][c + 1]) continue;  // row weakly increasing
      if (r > 0 && fill[r - 1][c] != 0 && t <= fill[r - 1][c]) continue;  // column strict
      fill[r][c] = t;
      ++cnt[t];
      rec(idx + 1);
      fill[r][c] = 0;
      --cnt[t];
    }
  };
  rec(0);
  return count;
}

}  // namespace lr
