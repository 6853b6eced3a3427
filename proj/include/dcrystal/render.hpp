#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "dcrystal/isomorphism.hpp"

namespace dcrystal {

enum class Glyphs { Ascii, Unicode };

/* "-3" in ascii mode, "3" + combining overline in unicode mode */
inline std::string letter_text(int v, Glyphs glyphs) {
  if (v > 0) return std::to_string(v);
  if (glyphs == Glyphs::Ascii) return std::to_string(v);
  return std::to_string(-v) + "\xcc\x85";
}

inline std::string render_rows(const std::vector<std::vector<int>>& rows, Glyphs glyphs) {
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ' ';
      out << letter_text(row[c], glyphs);
    }
    out << '\n';
  }
  return out.str();
}

inline std::string render_tableau(const Tableau& t, Glyphs glyphs = Glyphs::Ascii) {
  return render_rows(t.rows, glyphs);
}

inline std::string render_reduced(const Tableau& t, Glyphs glyphs = Glyphs::Ascii) {
  return render_rows(reduced_form(t), glyphs);
}

/* one-line element labels for graph exports */
inline std::string tableau_label(const Tableau& t) {
  std::string out;
  const auto rows = reduced_form(t);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out += '/';
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) out += ' ';
      out += std::to_string(rows[r][c]);
    }
  }
  return out;
}

inline std::string part_label(const Root& r) {
  return std::string(r.kind == RootKind::Beta ? "b(" : "g(") + std::to_string(r.i) + "," +
         std::to_string(r.k) + ")";
}

inline std::string partition_label(const KostantPartition& a) {
  if (a.parts.empty()) return "0";
  std::string out;
  for (const auto& [r, m] : a.parts) {
    if (!out.empty()) out += " + ";
    if (m > 1) out += std::to_string(m);
    out += part_label(r);
  }
  return out;
}

/* stack picture of one root, lines top to bottom: a beta is the bare column
   k..i, a gamma climbs k..n-2, crosses the fork ("n-1 n", or "n" alone when
   the second leg is empty), then descends n-2..i above it */
inline std::vector<std::string> stack_lines(const Root& r, Rank rank) {
  std::vector<std::string> lines;
  if (r.kind == RootKind::Beta) {
    for (int m = r.k; m >= r.i; --m) lines.push_back(std::to_string(m));
    return lines;
  }
  for (int m = r.k; m <= rank.n - 2; ++m) lines.push_back(std::to_string(m));
  if (r.k <= rank.n - 1)
    lines.push_back(std::to_string(rank.n - 1) + " " + std::to_string(rank.n));
  else
    lines.push_back(std::to_string(rank.n));
  for (int m = rank.n - 2; m >= r.i; --m) lines.push_back(std::to_string(m));
  return lines;
}

/* parts in canonical order, each multiplicity printed as repeated stacks,
   one blank line between consecutive stacks */
inline std::string render_stack(const KostantPartition& a) {
  Rank rank(a.n);
  std::ostringstream out;
  bool first = true;
  for (const auto& [r, m] : a.parts)
    for (int copy = 0; copy < m; ++copy) {
      if (!first) out << '\n';
      first = false;
      for (const std::string& line : stack_lines(r, rank)) out << line << '\n';
    }
  return out.str();
}

}  // namespace dcrystal
