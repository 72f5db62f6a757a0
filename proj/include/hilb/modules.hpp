#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hilb/certificate.hpp"
#include "hilb/series.hpp"

namespace hilb {

// The cyclic quotient S / <x_0, ..., x_{ell-1}>^power of the polynomial ring
// S in n+1 variables; ell is how many variables are raised to the power.
struct PowerQuotient {
  int ell;    // 1 <= ell <= n+1
  int power;  // >= 1

  friend bool operator==(const PowerQuotient& a, const PowerQuotient& b) {
    return a.ell == b.ell && a.power == b.power;
  }
};

// Closed-form Hilbert series of the quotient above:
//   (sum_{k < power} binom(ell-1+k, k) t^k) / (1-t)^(n+1-ell).
// For ell = n+1 this is a polynomial (the quotient is artinian).
Series power_quotient_series(int ell, int power, int n);
inline Series power_quotient_series(const PowerQuotient& m, int n) {
  return power_quotient_series(m.ell, m.power, n);
}

// Formal non-negative rational combination of power quotients. Rational
// multiplicities stand for a direct sum with denominators not yet cleared.
struct ModuleSum {
  std::vector<std::pair<PowerQuotient, Rat>> summands;

  Rat value(int n, long j) const;
  Series series(int n) const;
};

// A monomial ideal given by exponent vectors of its generators. Construction
// minimalizes: duplicate generators and generators divisible by another are
// dropped, and the rest are sorted for a canonical form.
struct MonomialIdeal {
  int nvars = 0;
  std::vector<std::vector<int>> gens;

  MonomialIdeal() = default;
  MonomialIdeal(int nvars, std::vector<std::vector<int>> gens);

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.nvars == b.nvars && a.gens == b.gens;
  }
};

// Number of degree-j monomials divisible by no generator: the brute-force
// Hilbert function of the quotient by the ideal. Enumerates all compositions
// of j, so keep j and nvars at desk scale.
long standard_monomial_count(const MonomialIdeal& I, int j);

// Checks (n+j+1) h(j) >= (j+1) h(j+1) for consecutive entries of h; the
// certificate reports the first violated j as a facet index.
Certificate macaulay_check(const std::vector<Rat>& h, int n);

// Deterministic per seed: ngens generators drawn uniformly from all exponent
// vectors of total degree in [1, maxdeg], then minimalized (so the result may
// have fewer than ngens generators).
MonomialIdeal random_monomial_ideal(int nvars, int maxdeg, int ngens, std::uint64_t seed);

}  // namespace hilb
