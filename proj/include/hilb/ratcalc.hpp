#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hilb/poly.hpp"

namespace hilb {

// Integer partition: weakly decreasing parts, all >= 0. Trailing zero parts
// are significant, (2, 0) has two parts and (2) has one, because the number of
// parts controls the degree of the associated polynomial family.
struct Partition {
  std::vector<long> parts;

  Partition() = default;
  explicit Partition(std::vector<long> p);

  int count() const { return static_cast<int>(parts.size()); }
  long largest() const { return parts.empty() ? 0 : parts.front(); }
  std::string str() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts == b.parts;
  }
};

// All partitions with at most max_count parts, each part <= max_part, in
// (part-count, lexicographic) order. Includes the empty partition.
std::vector<Partition> partitions_bounded(int max_count, long max_part);

// binom(s + shift, k) as a degree-k polynomial in s.
Poly binom_poly(int k, long shift);

// order-fold backward difference: p(s) - p(s-1), iterated.
Poly backward_difference(const Poly& p, int order);

// The monic degree-2r polynomial with roots lam_r, lam_r + 1, lam_{r-1} + 2,
// lam_{r-1} + 3, ..., lam_1 + 2r - 2, lam_1 + 2r - 1: non-negative integer
// roots appearing in consecutive pairs, so all integer values are >= 0.
Poly paired_root_poly(const Partition& lam);

// Writes f as sum_k c_k * binom(s+k, k) with every c_k >= 0. Requires f to
// have positive leading coefficient and deg(f) distinct strictly negative
// integer roots; peeling the smallest root keeps the coefficients
// non-negative at each step.
std::vector<Rat> nonneg_binomial_decomposition(const Poly& f);

// Smallest integer j >= start with p(j) < 0, or empty if p is >= 0 on the
// whole ray. Scans up to the root bound, beyond which the sign is the
// leading coefficient's.
std::optional<long> first_negative_value(const Poly& p, long start);

}  // namespace hilb
