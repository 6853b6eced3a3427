#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace dcrystal {

/* Rank of the root system. Type D_n data is only well formed for n >= 4. */
struct Rank {
  int n;
  explicit Rank(int rank) : n(rank) {
    if (n < 4) throw std::invalid_argument("rank must be >= 4");
  }
};

/* Integer coordinates in the orthonormal epsilon basis, length n. */
using WeightVector = std::vector<int>;

enum class RootKind { Beta, Gamma };

/* Positive root of D_n.
   Beta(i,k)  = e_i - e_{k+1}   for 1 <= i <= k <= n-1
   Gamma(i,k) = e_i + e_k       for 1 <= i <  k <= n       */
struct Root {
  RootKind kind;
  int i;
  int k;

  friend bool operator==(const Root& a, const Root& b) {
    return a.kind == b.kind && a.i == b.i && a.k == b.k;
  }
  /* canonical order: first index, then Beta before Gamma, then second index */
  friend bool operator<(const Root& a, const Root& b) {
    return std::tie(a.i, a.kind, a.k) < std::tie(b.i, b.kind, b.k);
  }
};

inline Root beta(int i, int k) {
  if (i < 1 || k < i) throw std::invalid_argument("beta(i,k) needs 1 <= i <= k");
  return Root{RootKind::Beta, i, k};
}

inline Root gamma(int i, int k) {
  if (i < 1 || k <= i) throw std::invalid_argument("gamma(i,k) needs 1 <= i < k");
  return Root{RootKind::Gamma, i, k};
}

inline bool valid_root(const Root& r, Rank rank) {
  if (r.i < 1) return false;
  if (r.kind == RootKind::Beta) return r.i <= r.k && r.k <= rank.n - 1;
  return r.i < r.k && r.k <= rank.n;
}

/* All n(n-1) positive roots, in canonical order. */
inline std::vector<Root> positive_roots(Rank rank) {
  std::vector<Root> out;
  for (int i = 1; i <= rank.n - 1; ++i) {
    for (int k = i; k <= rank.n - 1; ++k) out.push_back(beta(i, k));
    for (int k = i + 1; k <= rank.n; ++k) out.push_back(gamma(i, k));
  }
  return out;
}

inline WeightVector epsilon_coords(const Root& r, Rank rank) {
  if (!valid_root(r, rank)) throw std::invalid_argument("root out of range for rank");
  WeightVector w(rank.n, 0);
  w[r.i - 1] += 1;
  if (r.kind == RootKind::Beta)
    w[r.k] -= 1;
  else
    w[r.k - 1] += 1;
  return w;
}

/* Multiplicity of each simple root alpha_1..alpha_n in r.
   Beta(i,k) is the chain alpha_i+...+alpha_k; Gamma(i,k) is the chain
   alpha_i+...+alpha_{n-2}+alpha_n+alpha_{n-1}+...+alpha_k (second leg empty
   when k = n, so Gamma(i,n) = alpha_i+...+alpha_{n-2}+alpha_n). */
inline std::vector<int> simple_coords(const Root& r, Rank rank) {
  if (!valid_root(r, rank)) throw std::invalid_argument("root out of range for rank");
  const int n = rank.n;
  std::vector<int> c(n, 0);
  if (r.kind == RootKind::Beta) {
    for (int j = r.i; j <= r.k; ++j) c[j - 1] += 1;
  } else {
    for (int j = r.i; j <= n - 2; ++j) c[j - 1] += 1;
    c[n - 1] += 1;
    for (int j = r.k; j <= n - 1; ++j) c[j - 1] += 1;
  }
  return c;
}

inline Root simple_root(int i, Rank rank) {
  if (i < 1 || i > rank.n) throw std::invalid_argument("simple root index out of range");
  return i <= rank.n - 1 ? beta(i, i) : gamma(rank.n - 1, rank.n);
}

inline WeightVector simple_epsilon(int i, Rank rank) {
  return epsilon_coords(simple_root(i, rank), rank);
}

inline std::optional<Root> root_with_epsilon(const WeightVector& w, Rank rank) {
  for (const Root& r : positive_roots(rank))
    if (epsilon_coords(r, rank) == w) return r;
  return std::nullopt;
}

/* r + alpha_i, when that is again a positive root. */
inline std::optional<Root> add_simple(const Root& r, int i, Rank rank) {
  WeightVector w = epsilon_coords(r, rank);
  const WeightVector a = simple_epsilon(i, rank);
  for (int t = 0; t < rank.n; ++t) w[t] += a[t];
  return root_with_epsilon(w, rank);
}

/* r - alpha_i: a positive root, zero (when r == alpha_i), or nothing. */
struct RootMinusSimple {
  std::optional<Root> root;
  bool zero = false;
};

inline RootMinusSimple subtract_simple(const Root& r, int i, Rank rank) {
  if (r == simple_root(i, rank)) return {std::nullopt, true};
  WeightVector w = epsilon_coords(r, rank);
  const WeightVector a = simple_epsilon(i, rank);
  for (int t = 0; t < rank.n; ++t) w[t] -= a[t];
  return {root_with_epsilon(w, rank), false};
}

/* <alpha_i^vee, w> for w in the epsilon basis. */
inline int coroot_pairing(int i, const WeightVector& w, Rank rank) {
  if (static_cast<int>(w.size()) != rank.n) throw std::invalid_argument("weight length != rank");
  if (i < 1 || i > rank.n) throw std::invalid_argument("simple root index out of range");
  if (i <= rank.n - 1) return w[i - 1] - w[i];
  return w[rank.n - 2] + w[rank.n - 1];
}

/* Writes w = sum_j m_j alpha_j; nullopt when w is not in the root lattice. */
inline std::optional<std::vector<int>> simple_decomposition(const WeightVector& w, Rank rank) {
  const int n = rank.n;
  if (static_cast<int>(w.size()) != n) throw std::invalid_argument("weight length != rank");
  std::vector<int> m(n, 0);
  int acc = 0;
  for (int j = 1; j <= n - 2; ++j) {
    acc += w[j - 1];
    m[j - 1] = acc;
  }
  const int s = acc + w[n - 2];
  if (((s - w[n - 1]) % 2 + 2) % 2 != 0) return std::nullopt;
  m[n - 2] = (s - w[n - 1]) / 2;
  m[n - 1] = (s + w[n - 1]) / 2;
  WeightVector back(n, 0);
  for (int j = 1; j <= n; ++j) {
    const WeightVector a = simple_epsilon(j, rank);
    for (int t = 0; t < n; ++t) back[t] += m[j - 1] * a[t];
  }
  if (back != w) return std::nullopt;
  return m;
}

/* Number of multisets of positive roots whose simple-coordinate sum is mu.
   Brute force over the fixed root order; a desk-scale test oracle. */
inline std::uint64_t kostant_partition_count(const std::vector<int>& mu, Rank rank) {
  if (static_cast<int>(mu.size()) != rank.n) throw std::invalid_argument("mu length != rank");
  for (int v : mu)
    if (v < 0) return 0;
  std::vector<std::vector<int>> table;
  for (const Root& r : positive_roots(rank)) table.push_back(simple_coords(r, rank));
  std::uint64_t count = 0;
  std::vector<int> rem = mu;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (std::all_of(rem.begin(), rem.end(), [](int v) { return v == 0; })) {
      ++count;
      return;
    }
    if (idx == table.size()) return;
    const std::vector<int>& rt = table[idx];
    int taken = 0;
    while (true) {
      self(self, idx + 1);
      bool fits = true;
      for (int t = 0; t < rank.n; ++t)
        if (rem[t] < rt[t]) {
          fits = false;
          break;
        }
      if (!fits) break;
      for (int t = 0; t < rank.n; ++t) rem[t] -= rt[t];
      ++taken;
    }
    for (; taken > 0; --taken)
      for (int t = 0; t < rank.n; ++t) rem[t] += rt[t];
  };
  rec(rec, 0);
  return count;
}

}  // namespace dcrystal
