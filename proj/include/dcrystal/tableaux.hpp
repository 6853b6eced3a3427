#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcrystal/bracket.hpp"
#include "dcrystal/cartan.hpp"

namespace dcrystal {

/* Letters are nonzero ints: k stands for the letter k, -k for k-bar.
   Order: 1 < 2 < ... < n-1 < {n, -n} < -(n-1) < ... < -1, where n and -n
   share a rank but are incomparable. */
inline bool valid_letter(int v, int n) { return v != 0 && v >= -n && v <= n; }

inline int letter_rank(int v, int n) { return v > 0 ? v : 2 * n + v; }

enum class Reading { Middle, Far };

/* Marginally large semistandard tableau of type D_n: n-1 left-justified rows,
   row j starting with its shaded run of letter j. */
struct Tableau {
  int n = 0;
  std::vector<std::vector<int>> rows;

  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.n == b.n && a.rows == b.rows;
  }
};

/* The highest weight element: row j holds n-j shaded copies of j. */
inline Tableau highest_weight_tableau(Rank rank) {
  Tableau t;
  t.n = rank.n;
  t.rows.resize(rank.n - 1);
  for (int j = 0; j < rank.n - 1; ++j) t.rows[j].assign(rank.n - 1 - j, j + 1);
  return t;
}

struct Violation {
  std::string condition;  // "shape", "letter", or "C1".."C5"
  int row = 0;            // 1-based, 0 when not tied to a row
  int col = 0;            // 1-based, 0 when not tied to a box
  std::string detail;
};

/* Checks the defining conditions:
   C1  row j starts with letter j
   C2  rows weakly increase ({n, -n} is one rank level)
   C3  row j holds exactly 1 + |row j+1| copies of j (marginal largeness)
   C4  every entry of row j lies between j and j-bar
   C5  n and n-bar never share a row                                        */
inline std::vector<Violation> validate(const Tableau& t) {
  std::vector<Violation> out;
  if (t.n < 4) {
    out.push_back({"shape", 0, 0, "rank must be >= 4"});
    return out;
  }
  const int n = t.n;
  if (static_cast<int>(t.rows.size()) != n - 1) {
    out.push_back({"shape", 0, 0, "expected " + std::to_string(n - 1) + " rows"});
    return out;
  }
  for (int j = 0; j < n - 1; ++j)
    for (int c = 0; c < static_cast<int>(t.rows[j].size()); ++c)
      if (!valid_letter(t.rows[j][c], n)) {
        out.push_back({"letter", j + 1, c + 1, "letter out of range"});
        return out;
      }
  for (int j = 0; j < n - 1; ++j) {
    const auto& row = t.rows[j];
    if (row.empty() || row.front() != j + 1)
      out.push_back({"C1", j + 1, 1, "row must start with letter " + std::to_string(j + 1)});
    for (int c = 0; c + 1 < static_cast<int>(row.size()); ++c)
      if (letter_rank(row[c], n) > letter_rank(row[c + 1], n))
        out.push_back({"C2", j + 1, c + 2, "row not weakly increasing"});
    const long have = std::count(row.begin(), row.end(), j + 1);
    const long want = 1 + (j + 1 < n - 1 ? static_cast<long>(t.rows[j + 1].size()) : 0);
    if (have != want)
      out.push_back({"C3", j + 1, 0,
                     "row " + std::to_string(j + 1) + " has " + std::to_string(have) +
                         " copies of its letter, needs " + std::to_string(want)});
    for (int c = 0; c < static_cast<int>(row.size()); ++c) {
      const int rk = letter_rank(row[c], n);
      if (rk < j + 1 || rk > 2 * n - (j + 1))
        out.push_back({"C4", j + 1, c + 1, "entry outside [j, j-bar]"});
    }
    const bool plain = std::count(row.begin(), row.end(), n) > 0;
    const bool barred = std::count(row.begin(), row.end(), -n) > 0;
    if (plain && barred) out.push_back({"C5", j + 1, 0, "row holds both n and n-bar"});
  }
  return out;
}

struct BoxRef {
  int row;
  int col;
  friend bool operator==(const BoxRef&, const BoxRef&) = default;
};

struct ReadBox {
  int letter;
  BoxRef box;
};

/* Middle reading: rows top to bottom, each row right to left.
   Far reading: columns right to left, each column top to bottom. */
inline std::vector<ReadBox> reading_word(const Tableau& t, Reading reading = Reading::Middle) {
  std::vector<ReadBox> out;
  if (reading == Reading::Middle) {
    for (int r = 0; r < static_cast<int>(t.rows.size()); ++r)
      for (int c = static_cast<int>(t.rows[r].size()) - 1; c >= 0; --c)
        out.push_back({t.rows[r][c], {r, c}});
  } else {
    int width = 0;
    for (const auto& row : t.rows) width = std::max(width, static_cast<int>(row.size()));
    for (int c = width - 1; c >= 0; --c)
      for (int r = 0; r < static_cast<int>(t.rows.size()); ++r)
        if (c < static_cast<int>(t.rows[r].size())) out.push_back({t.rows[r][c], {r, c}});
  }
  return out;
}

/* Head of the i-arrow leaving letter v in the fundamental crystal, if any:
   i <= n-2:  i -> i+1,      -(i+1) -> -i
   i == n-1:  n-1 -> n,      -n  -> -(n-1)
   i == n:    n-1 -> -n,      n  -> -(n-1)   */
inline std::optional<int> arrow_target(int v, int i, int n) {
  if (i <= n - 2) {
    if (v == i) return i + 1;
    if (v == -(i + 1)) return -i;
  } else if (i == n - 1) {
    if (v == n - 1) return n;
    if (v == -n) return -(n - 1);
  } else {
    if (v == n - 1) return -n;
    if (v == n) return -(n - 1);
  }
  return std::nullopt;
}

inline std::optional<int> arrow_source(int v, int i, int n) {
  if (i <= n - 2) {
    if (v == i + 1) return i;
    if (v == -i) return -(i + 1);
  } else if (i == n - 1) {
    if (v == n) return n - 1;
    if (v == -(n - 1)) return -n;
  } else {
    if (v == -n) return n - 1;
    if (v == -(n - 1)) return n;
  }
  return std::nullopt;
}

struct TableauBracket {
  BracketDir dir;
  BoxRef box;
};

/* Bracket word of color i along the chosen reading: Open where an i-arrow
   leaves the letter, Close where one enters it. */
inline std::vector<TableauBracket> bracket_sequence(const Tableau& t, int i,
                                                    Reading reading = Reading::Middle) {
  if (i < 1 || i > t.n) throw std::invalid_argument("operator index out of range");
  std::vector<TableauBracket> out;
  for (const ReadBox& rb : reading_word(t, reading)) {
    if (arrow_target(rb.letter, i, t.n))
      out.push_back({BracketDir::Open, rb.box});
    else if (arrow_source(rb.letter, i, t.n))
      out.push_back({BracketDir::Close, rb.box});
  }
  return out;
}

inline std::vector<BracketDir> bracket_dirs(const std::vector<TableauBracket>& seq) {
  std::vector<BracketDir> dirs;
  dirs.reserve(seq.size());
  for (const TableauBracket& b : seq) dirs.push_back(b.dir);
  return dirs;
}

inline bool marginally_large(const Tableau& t) {
  for (int j = 0; j < t.n - 1; ++j) {
    const long have = std::count(t.rows[j].begin(), t.rows[j].end(), j + 1);
    const long want = 1 + (j + 1 < t.n - 1 ? static_cast<long>(t.rows[j + 1].size()) : 0);
    if (have != want) return false;
  }
  return true;
}

/* Lowering operator f_i: advance the letter at the leftmost uncanceled Open
   along its i-arrow, then restore marginal largeness by inserting one column
   of 1..min(i, n-1) if needed. Total on marginally large tableaux. */
inline Tableau f(const Tableau& t, int i, Reading reading = Reading::Middle) {
  const auto seq = bracket_sequence(t, i, reading);
  const auto scan = scan_brackets(bracket_dirs(seq));
  if (!scan.has_open()) throw std::logic_error("f: no uncanceled open bracket");
  const BoxRef b = seq[scan.leftmost_open()].box;
  Tableau out = t;
  out.rows[b.row][b.col] = *arrow_target(t.rows[b.row][b.col], i, t.n);
  if (!marginally_large(out)) {
    const int h = std::min(i, t.n - 1);
    for (int r = 0; r < h; ++r) out.rows[r].insert(out.rows[r].begin(), r + 1);
  }
  return out;
}

/* Raising operator e_i: retreat the letter at the rightmost uncanceled Close
   along its i-arrow, deleting one column of 1..min(i, n-1) if the result is
   no longer marginally large. Undefined (nullopt) without such a bracket. */
inline std::optional<Tableau> e(const Tableau& t, int i, Reading reading = Reading::Middle) {
  const auto seq = bracket_sequence(t, i, reading);
  const auto scan = scan_brackets(bracket_dirs(seq));
  if (!scan.has_close()) return std::nullopt;
  const BoxRef b = seq[scan.rightmost_close()].box;
  Tableau out = t;
  out.rows[b.row][b.col] = *arrow_source(t.rows[b.row][b.col], i, t.n);
  if (!marginally_large(out)) {
    const int h = std::min(i, t.n - 1);
    for (int r = 0; r < h; ++r) {
      if (out.rows[r].empty() || out.rows[r].front() != r + 1)
        throw std::logic_error("e: column deletion hit a non-shaded box");
      out.rows[r].erase(out.rows[r].begin());
    }
  }
  return out;
}

inline int epsilon(const Tableau& t, int i, Reading reading = Reading::Middle) {
  const auto scan = scan_brackets(bracket_dirs(bracket_sequence(t, i, reading)));
  return static_cast<int>(scan.close_uncanceled.size());
}

/* Box contents count as +-e_k; subtracting |row j| * e_j recenters the
   highest weight element at weight zero. */
inline WeightVector weight(const Tableau& t) {
  WeightVector w(t.n, 0);
  for (int j = 0; j < static_cast<int>(t.rows.size()); ++j) {
    for (int v : t.rows[j]) {
      if (v > 0)
        w[v - 1] += 1;
      else
        w[-v - 1] -= 1;
    }
    w[j] -= static_cast<int>(t.rows[j].size());
  }
  return w;
}

inline int phi(const Tableau& t, int i, Reading reading = Reading::Middle) {
  return epsilon(t, i, reading) + coroot_pairing(i, weight(t), Rank(t.n));
}

/* Rows with the shaded run stripped. */
inline std::vector<std::vector<int>> reduced_form(const Tableau& t) {
  std::vector<std::vector<int>> out(t.rows.size());
  for (int j = 0; j < static_cast<int>(t.rows.size()); ++j)
    for (int v : t.rows[j])
      if (v != j + 1) out[j].push_back(v);
  return out;
}

/* Rebuilds the tableau whose reduced form is the given rows (missing
   trailing rows are taken empty). */
inline Tableau from_reduced(const std::vector<std::vector<int>>& reduced, Rank rank) {
  if (static_cast<int>(reduced.size()) > rank.n - 1)
    throw std::invalid_argument("too many rows for rank");
  static const std::vector<int> kEmpty;
  Tableau t;
  t.n = rank.n;
  t.rows.assign(rank.n - 1, {});
  std::size_t next_len = 0;
  for (int j = rank.n - 2; j >= 0; --j) {
    const std::vector<int>& extra = j < static_cast<int>(reduced.size()) ? reduced[j] : kEmpty;
    t.rows[j].assign(1 + next_len, j + 1);
    t.rows[j].insert(t.rows[j].end(), extra.begin(), extra.end());
    next_len = t.rows[j].size();
  }
  return t;
}

}  // namespace dcrystal
