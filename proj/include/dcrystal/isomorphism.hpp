#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "dcrystal/kostant.hpp"
#include "dcrystal/tableaux.hpp"

namespace dcrystal {

/* Image of row j (1-based) under the crystal isomorphism. Working on letter
   counts, with pairs matched greedily:
     each j-bar                    ->  beta(j,j) + gamma(j,j+1)
     each pair {k, k-bar}, k > j   ->  beta(j,k) + gamma(j,k+1)
     each leftover plain k > j     ->  beta(j,k-1)
     each leftover barred k > j    ->  gamma(j,k)
   Shaded letters contribute nothing. n and -n never pair (no shared row). */
inline KostantPartition row_to_partition(int j, const std::vector<int>& row, Rank rank) {
  if (j < 1 || j > rank.n - 1) throw std::invalid_argument("row index out of range");
  const int n = rank.n;
  std::map<int, int> cnt;
  for (int v : row) {
    if (!valid_letter(v, n)) throw std::invalid_argument("letter out of range");
    const int rk = letter_rank(v, n);
    if (rk < j || rk > 2 * n - j) throw std::invalid_argument("letter outside row bounds");
    ++cnt[v];
  }
  KostantPartition out = empty_partition(rank);
  if (cnt[-j] > 0) {
    add_part(out, beta(j, j), cnt[-j]);
    add_part(out, gamma(j, j + 1), cnt[-j]);
    cnt[-j] = 0;
  }
  for (int k = j + 1; k <= n - 1; ++k) {
    const int pairs = std::min(cnt[k], cnt[-k]);
    if (pairs > 0) {
      add_part(out, beta(j, k), pairs);
      add_part(out, gamma(j, k + 1), pairs);
      cnt[k] -= pairs;
      cnt[-k] -= pairs;
    }
  }
  for (int k = j + 1; k <= n; ++k) {
    if (cnt[k] > 0) add_part(out, beta(j, k - 1), cnt[k]);
    if (cnt[-k] > 0) add_part(out, gamma(j, k), cnt[-k]);
  }
  return out;
}

inline KostantPartition tableau_to_partition(const Tableau& t) {
  Rank rank(t.n);
  KostantPartition out = empty_partition(rank);
  for (int j = 0; j < static_cast<int>(t.rows.size()); ++j) {
    const KostantPartition part = row_to_partition(j + 1, t.rows[j], rank);
    for (const auto& [r, m] : part.parts) add_part(out, r, m);
  }
  return out;
}

/* Inverse map. Parts with first index j rebuild row j: walking k from n-1
   down to j, min(c_beta(j,k), c_gamma(j,k+1)) many pairs turn back into the
   letter pair {k, k-bar} (into j-bar when k == j); leftover beta(j,k) copies
   become the letter k+1 and leftover gamma(j,k) copies the letter k-bar.
   Shaded runs are then re-padded bottom up. */
inline Tableau partition_to_tableau(const KostantPartition& a) {
  Rank rank(a.n);
  const int n = a.n;
  for (const auto& msg : validate(a)) throw std::invalid_argument(msg);

  std::vector<std::vector<int>> unshaded(n - 1);
  for (int j = 1; j <= n - 1; ++j) {
    std::map<int, int> cb, cg;  // beta(j,k) by k, gamma(j,k) by k
    for (const auto& [r, m] : a.parts) {
      if (r.i != j) continue;
      (r.kind == RootKind::Beta ? cb : cg)[r.k] += m;
    }
    std::vector<int>& row = unshaded[j - 1];
    for (int k = n - 1; k >= j; --k) {
      const int pairs = std::min(cb[k], cg[k + 1]);
      cb[k] -= pairs;
      cg[k + 1] -= pairs;
      for (int p = 0; p < pairs; ++p) {
        if (k == j) {
          row.push_back(-j);
        } else {
          row.push_back(k);
          row.push_back(-k);
        }
      }
      for (int p = 0; p < cb[k]; ++p) row.push_back(k + 1);
    }
    for (int k = j + 1; k <= n; ++k)
      for (int p = 0; p < cg[k]; ++p) row.push_back(-k);
    std::sort(row.begin(), row.end(),
              [n](int x, int y) { return letter_rank(x, n) < letter_rank(y, n); });
  }

  Tableau t;
  t.n = n;
  t.rows.assign(n - 1, {});
  std::size_t next_len = 0;
  for (int j = n - 2; j >= 0; --j) {
    t.rows[j].assign(1 + next_len, j + 1);
    t.rows[j].insert(t.rows[j].end(), unshaded[j].begin(), unshaded[j].end());
    next_len = t.rows[j].size();
  }
  return t;
}

}  // namespace dcrystal
