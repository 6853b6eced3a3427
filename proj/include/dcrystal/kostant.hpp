#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dcrystal/bracket.hpp"
#include "dcrystal/cartan.hpp"

namespace dcrystal {

/* Kostant partition: a multiset of positive roots, stored sparsely with
   strictly positive multiplicities in canonical root order. */
struct KostantPartition {
  int n = 0;
  std::map<Root, int> parts;

  friend bool operator==(const KostantPartition& a, const KostantPartition& b) {
    return a.n == b.n && a.parts == b.parts;
  }
};

inline KostantPartition empty_partition(Rank rank) { return {rank.n, {}}; }

inline int multiplicity(const KostantPartition& a, const Root& r) {
  auto it = a.parts.find(r);
  return it == a.parts.end() ? 0 : it->second;
}

inline void add_part(KostantPartition& a, const Root& r, int count = 1) {
  if (count <= 0) throw std::invalid_argument("part count must be positive");
  if (!valid_root(r, Rank(a.n))) throw std::invalid_argument("root out of range for rank");
  a.parts[r] += count;
}

inline void remove_part(KostantPartition& a, const Root& r) {
  auto it = a.parts.find(r);
  if (it == a.parts.end()) throw std::invalid_argument("removing absent part");
  if (--it->second == 0) a.parts.erase(it);
}

/* Empty iff no violations: positive multiplicities on rank-valid roots. */
inline std::vector<std::string> validate(const KostantPartition& a) {
  std::vector<std::string> out;
  if (a.n < 4) {
    out.push_back("rank must be >= 4");
    return out;
  }
  for (const auto& [r, m] : a.parts) {
    if (!valid_root(r, Rank(a.n))) out.push_back("root out of range for rank");
    if (m <= 0) out.push_back("multiplicity must be positive");
  }
  return out;
}

struct ScanEntry {
  Root root;
  BracketDir dir;
};

/* The ordered root list scanned when bracketing color i, with the bracket
   each root contributes. For i <= n-1 the list is blocks
     beta(k,i) beta(k,i-1) gamma(k,i) gamma(k,i+1)      for k = 1..i-1
   followed by beta(i,i); for i == n it is blocks
     gamma(k,n) beta(k,n-2) gamma(k,n-1) beta(k,n-1)    for k = 1..n-2
   followed by gamma(n-1,n). A root closes when subtracting alpha_i lands in
   the positive roots or at zero, opens when adding alpha_i stays positive;
   exactly one of the two holds. */
inline std::vector<ScanEntry> bracket_order(int i, Rank rank) {
  if (i < 1 || i > rank.n) throw std::invalid_argument("operator index out of range");
  const int n = rank.n;
  std::vector<Root> roots;
  if (i <= n - 1) {
    for (int k = 1; k <= i - 1; ++k) {
      roots.push_back(beta(k, i));
      roots.push_back(beta(k, i - 1));
      roots.push_back(gamma(k, i));
      roots.push_back(gamma(k, i + 1));
    }
    roots.push_back(beta(i, i));
  } else {
    for (int k = 1; k <= n - 2; ++k) {
      roots.push_back(gamma(k, n));
      roots.push_back(beta(k, n - 2));
      roots.push_back(gamma(k, n - 1));
      roots.push_back(beta(k, n - 1));
    }
    roots.push_back(gamma(n - 1, n));
  }
  std::vector<ScanEntry> out;
  out.reserve(roots.size());
  for (const Root& r : roots) {
    const auto down = subtract_simple(r, i, rank);
    const bool closes = down.zero || down.root.has_value();
    const bool opens = add_simple(r, i, rank).has_value();
    if (closes == opens) throw std::logic_error("bracket direction must be unique");
    out.push_back({r, closes ? BracketDir::Close : BracketDir::Open});
  }
  return out;
}

struct PartitionBracket {
  BracketDir dir;
  Root root;
};

/* One bracket per copy of each scanned root. */
inline std::vector<PartitionBracket> bracket_sequence(const KostantPartition& a, int i) {
  std::vector<PartitionBracket> out;
  for (const ScanEntry& entry : bracket_order(i, Rank(a.n)))
    for (int m = multiplicity(a, entry.root); m > 0; --m) out.push_back({entry.dir, entry.root});
  return out;
}

inline std::vector<BracketDir> bracket_dirs(const std::vector<PartitionBracket>& seq) {
  std::vector<BracketDir> dirs;
  dirs.reserve(seq.size());
  for (const PartitionBracket& b : seq) dirs.push_back(b.dir);
  return dirs;
}

/* Lowering operator f_i: push the root at the leftmost uncanceled Open up by
   alpha_i; without one, add a fresh copy of alpha_i. Always defined. */
inline KostantPartition f(const KostantPartition& a, int i) {
  Rank rank(a.n);
  const auto seq = bracket_sequence(a, i);
  const auto scan = scan_brackets(bracket_dirs(seq));
  KostantPartition out = a;
  if (scan.has_open()) {
    const Root r = seq[scan.leftmost_open()].root;
    remove_part(out, r);
    add_part(out, *add_simple(r, i, rank));
  } else {
    add_part(out, simple_root(i, rank));
  }
  return out;
}

/* Raising operator e_i: pull the root at the rightmost uncanceled Close down
   by alpha_i (a copy of alpha_i itself just disappears); undefined without
   such a bracket. */
inline std::optional<KostantPartition> e(const KostantPartition& a, int i) {
  Rank rank(a.n);
  const auto seq = bracket_sequence(a, i);
  const auto scan = scan_brackets(bracket_dirs(seq));
  if (!scan.has_close()) return std::nullopt;
  const Root r = seq[scan.rightmost_close()].root;
  KostantPartition out = a;
  remove_part(out, r);
  const auto down = subtract_simple(r, i, rank);
  if (down.root) add_part(out, *down.root);
  return out;
}

inline WeightVector weight(const KostantPartition& a) {
  Rank rank(a.n);
  WeightVector w(a.n, 0);
  for (const auto& [r, m] : a.parts) {
    const WeightVector c = epsilon_coords(r, rank);
    for (int t = 0; t < a.n; ++t) w[t] -= m * c[t];
  }
  return w;
}

inline int epsilon(const KostantPartition& a, int i) {
  const auto scan = scan_brackets(bracket_dirs(bracket_sequence(a, i)));
  return static_cast<int>(scan.close_uncanceled.size());
}

inline int phi(const KostantPartition& a, int i) {
  return epsilon(a, i) + coroot_pairing(i, weight(a), Rank(a.n));
}

}  // namespace dcrystal
