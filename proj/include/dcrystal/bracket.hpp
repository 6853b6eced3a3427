#pragma once

#include <cstddef>
#include <vector>

namespace dcrystal {

enum class BracketDir { Open, Close };

/* Result of canceling adjacent Open/Close pairs in a bracket word.
   After the scan every uncanceled Close precedes every uncanceled Open;
   both index lists are ascending. */
struct BracketScan {
  std::vector<std::size_t> open_uncanceled;
  std::vector<std::size_t> close_uncanceled;

  bool has_open() const { return !open_uncanceled.empty(); }
  bool has_close() const { return !close_uncanceled.empty(); }
  std::size_t leftmost_open() const { return open_uncanceled.front(); }
  std::size_t rightmost_close() const { return close_uncanceled.back(); }
};

inline BracketScan scan_brackets(const std::vector<BracketDir>& word) {
  BracketScan out;
  for (std::size_t t = 0; t < word.size(); ++t) {
    if (word[t] == BracketDir::Open) {
      out.open_uncanceled.push_back(t);
    } else if (out.open_uncanceled.empty()) {
      out.close_uncanceled.push_back(t);
    } else {
      out.open_uncanceled.pop_back();
    }
  }
  return out;
}

}  // namespace dcrystal
