#include "hilb/modules.hpp"

#include <algorithm>
#include <stdexcept>

#include "hilb/rng.hpp"

namespace hilb {

Series power_quotient_series(int ell, int power, int n) {
  if (ell < 1 || ell > n + 1) throw std::invalid_argument("power_quotient_series: ell out of range");
  if (power < 1) throw std::invalid_argument("power_quotient_series: power must be positive");
  std::vector<Rat> numer(power);
  for (int k = 0; k < power; ++k) numer[k] = binom(ell - 1 + k, k);
  return Series(Poly(std::move(numer)), n + 1 - ell);
}

Rat ModuleSum::value(int n, long j) const {
  Rat acc(0);
  for (const auto& [m, mult] : summands)
    acc += mult * power_quotient_series(m, n).coeff(j);
  return acc;
}

Series ModuleSum::series(int n) const {
  Series acc;
  for (const auto& [m, mult] : summands)
    acc = acc + power_quotient_series(m, n) * mult;
  return acc;
}

namespace {

bool divides(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int nv, std::vector<std::vector<int>> gs)
    : nvars(nv), gens(std::move(gs)) {
  if (nvars < 1) throw std::invalid_argument("MonomialIdeal: need at least one variable");
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != nvars)
      throw std::invalid_argument("MonomialIdeal: exponent vector length mismatch");
    for (int e : g)
      if (e < 0) throw std::invalid_argument("MonomialIdeal: negative exponent");
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<std::vector<int>> minimal;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t k = 0; k < gens.size() && !redundant; ++k)
      if (k != i && divides(gens[k], gens[i]) && gens[k] != gens[i]) redundant = true;
    if (!redundant) minimal.push_back(gens[i]);
  }
  gens = std::move(minimal);
}

long standard_monomial_count(const MonomialIdeal& I, int j) {
  if (j < 0) return 0;
  std::vector<int> expo(I.nvars, 0);
  long count = 0;
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == I.nvars - 1) {
      expo[var] = left;
      for (const auto& g : I.gens)
        if (divides(g, expo)) {
          expo[var] = 0;
          return;
        }
      ++count;
      expo[var] = 0;
      return;
    }
    for (int e = 0; e <= left; ++e) {
      expo[var] = e;
      self(self, var + 1, left - e);
    }
    expo[var] = 0;
  };
  rec(rec, 0, j);
  return count;
}

Certificate macaulay_check(const std::vector<Rat>& h, int n) {
  for (size_t j = 0; j + 1 < h.size(); ++j) {
    long jj = static_cast<long>(j);
    if (Rat(n + jj + 1) * h[j] < Rat(jj + 1) * h[j + 1]) return Certificate::facet(jj);
  }
  return Certificate::ok();
}

namespace {

// Number of exponent vectors in `nvars` variables of total degree d.
mpz_class vectors_of_degree(int nvars, int d) {
  return binom_z(mpz_class(d + nvars - 1), static_cast<unsigned long>(nvars - 1));
}

// The rank-th exponent vector of total degree d, ranks ordered by the first
// exponent ascending, then recursively.
std::vector<int> unrank_vector(int nvars, int d, mpz_class rank) {
  std::vector<int> out;
  out.reserve(nvars);
  int left = d;
  for (int var = 0; var + 1 < nvars; ++var) {
    for (int e = 0;; ++e) {
      mpz_class block = vectors_of_degree(nvars - var - 1, left - e);
      if (rank < block) {
        out.push_back(e);
        left -= e;
        break;
      }
      rank -= block;
    }
  }
  out.push_back(left);
  return out;
}

}  // namespace

MonomialIdeal random_monomial_ideal(int nvars, int maxdeg, int ngens, std::uint64_t seed) {
  if (nvars < 1 || maxdeg < 1 || ngens < 0)
    throw std::invalid_argument("random_monomial_ideal: bad parameters");
  mpz_class total = 0;
  for (int d = 1; d <= maxdeg; ++d) total += vectors_of_degree(nvars, d);
  if (!total.fits_ulong_p())
    throw std::overflow_error("random_monomial_ideal: candidate pool too large");
  SplitMix64 rng(seed);
  std::vector<std::vector<int>> gens;
  gens.reserve(ngens);
  for (int g = 0; g < ngens; ++g) {
    mpz_class rank(static_cast<unsigned long>(rng.below(total.get_ui())));
    int d = 1;
    while (rank >= vectors_of_degree(nvars, d)) {
      rank -= vectors_of_degree(nvars, d);
      ++d;
    }
    gens.push_back(unrank_vector(nvars, d, rank));
  }
  return MonomialIdeal(nvars, std::move(gens));
}

}  // namespace hilb
