#pragma once

#include <string>
#include <vector>

#include "hilb/rat.hpp"
#include "hilb/rng.hpp"

namespace hilb::testing {

// Rank of a rational matrix by fraction-free Gaussian elimination. Rows may
// have differing lengths; shorter rows are padded with zeros.
inline int rat_rank(std::vector<std::vector<Rat>> rows) {
  size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.size());
  for (auto& r : rows) r.resize(width, Rat(0));
  int rank = 0;
  size_t col = 0;
  while (col < width && rank < static_cast<int>(rows.size())) {
    size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) {
      ++col;
      continue;
    }
    std::swap(rows[rank], rows[pivot]);
    for (size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      Rat factor = rows[r][col] / rows[rank][col];
      for (size_t c = col; c < width; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
    ++col;
  }
  return rank;
}

// Uniform rational with numerator in [lo, hi] and denominator in [1, den_max].
inline Rat random_rat(SplitMix64& rng, long lo, long hi, long den_max) {
  long num = lo + static_cast<long>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
  long den = 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(den_max)));
  return Rat(num, den);
}

}  // namespace hilb::testing
