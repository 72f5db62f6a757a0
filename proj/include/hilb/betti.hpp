#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hilb/series.hpp"

namespace hilb {

// Sparse table of graded Betti numbers in row convention: the value stored
// at (i, j) is beta_{i, i+j}; column i is homological degree, row j is the
// internal-degree slant. Zero entries are never stored.
class BettiTable {
public:
  BettiTable() = default;

  Rat entry(int i, long j) const;
  void set(int i, long j, Rat v);
  void add(int i, long j, const Rat& v);

  bool empty() const { return e_.empty(); }
  int max_col() const;
  long max_row() const;
  const std::map<std::pair<int, long>, Rat>& entries() const { return e_; }

  BettiTable& operator+=(const BettiTable& o);
  friend BettiTable operator+(BettiTable a, const BettiTable& b) { return a += b; }
  BettiTable operator*(const Rat& c) const;
  friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.e_ == b.e_; }
  friend bool operator!=(const BettiTable& a, const BettiTable& b) { return !(a == b); }

private:
  std::map<std::pair<int, long>, Rat> e_;
};

// The pure table of a strictly increasing degree sequence d_0 < ... < d_e:
// one entry per column, beta_{i, d_i} = prod_{k != i} 1 / |d_k - d_i|.
BettiTable pure_table(const std::vector<long>& degrees);

// The weighted shift (i, j) -> (i-1, j+1) with multiplier i+j (the total
// degree); column 0 is dropped. Sends the pure table of (0, d_1, ..., d_e)
// to the pure table of (d_1, ..., d_e).
BettiTable degree_weighted_shift(const BettiTable& b);

// Betti table of S / <x_0, ..., x_{ell-1}>^d: linear resolution with
// beta_{0,0} = 1 and beta_{i, i+d-1} = (i/(i+d-1)) binom(ell+d-1, ell)
// binom(ell, i) for 1 <= i <= ell.
BettiTable betti_power_quotient(int ell, int d);

// Hilbert series determined by a Betti table over the ring in n+1 variables:
// sum_{i,t} (-1)^i beta_{i,t} t^t / (1-t)^(n+1).
Series series_from_betti(const BettiTable& b, int n);

// Sharp entrywise upper bounds for the Betti table of any module with
// Hilbert series g, regularity at most m, and dimension data carried by n.
// Row j < m:  (1/(i+j)) binom(n, i-1) [(n+j+1) h(j) - (j+1) h(j+1)];
// row m:      ((n+m+1)/(i+m)) binom(n, i-1) h(m)
//               + sum_{k=1}^{i} (-1)^k binom(n+1, i-k) h(m+k);
// and beta_{0,0} = h(0). Equals the ray decomposition of g paired with the
// tables of the ray modules, which is why the bounds are attained.
BettiTable betti_bounds(const Series& g, int n, int m);

}  // namespace hilb
