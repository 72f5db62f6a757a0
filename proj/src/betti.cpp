#include "hilb/betti.hpp"

#include <stdexcept>

#include "hilb/cones.hpp"

namespace hilb {

Rat BettiTable::entry(int i, long j) const {
  auto it = e_.find({i, j});
  return it == e_.end() ? Rat(0) : it->second;
}

void BettiTable::set(int i, long j, Rat v) {
  if (v.is_zero())
    e_.erase({i, j});
  else
    e_[{i, j}] = std::move(v);
}

void BettiTable::add(int i, long j, const Rat& v) { set(i, j, entry(i, j) + v); }

int BettiTable::max_col() const {
  int m = 0;
  for (const auto& [k, v] : e_) m = std::max(m, k.first);
  return m;
}

long BettiTable::max_row() const {
  long m = 0;
  for (const auto& [k, v] : e_) m = std::max(m, k.second);
  return m;
}

BettiTable& BettiTable::operator+=(const BettiTable& o) {
  for (const auto& [k, v] : o.e_) add(k.first, k.second, v);
  return *this;
}

BettiTable BettiTable::operator*(const Rat& c) const {
  BettiTable out;
  if (c.is_zero()) return out;
  for (const auto& [k, v] : e_) out.e_[k] = v * c;
  return out;
}

BettiTable pure_table(const std::vector<long>& degrees) {
  if (degrees.empty()) throw std::invalid_argument("pure_table: empty degree sequence");
  for (size_t i = 1; i < degrees.size(); ++i)
    if (degrees[i] <= degrees[i - 1])
      throw std::invalid_argument("pure_table: degrees must strictly increase");
  BettiTable out;
  for (size_t i = 0; i < degrees.size(); ++i) {
    Rat v(1);
    for (size_t k = 0; k < degrees.size(); ++k) {
      if (k == i) continue;
      long d = degrees[k] - degrees[i];
      v /= Rat(d < 0 ? -d : d);
    }
    out.set(static_cast<int>(i), degrees[i] - static_cast<long>(i), v);
  }
  return out;
}

BettiTable degree_weighted_shift(const BettiTable& b) {
  BettiTable out;
  for (const auto& [k, v] : b.entries()) {
    auto [i, j] = k;
    if (i == 0) continue;
    out.add(i - 1, j + 1, v * Rat(i + j));
  }
  return out;
}

BettiTable betti_power_quotient(int ell, int d) {
  if (ell < 1) throw std::invalid_argument("betti_power_quotient: ell must be positive");
  if (d < 1) throw std::invalid_argument("betti_power_quotient: power must be positive");
  BettiTable out;
  out.set(0, 0, Rat(1));
  for (int i = 1; i <= ell; ++i) {
    Rat v = Rat(i, i + d - 1) * binom(ell + d - 1, ell) * binom(ell, i);
    out.set(i, d - 1, v);
  }
  return out;
}

Series series_from_betti(const BettiTable& b, int n) {
  if (n < 0) throw std::invalid_argument("series_from_betti: n must be non-negative");
  Poly numer;
  for (const auto& [k, v] : b.entries()) {
    auto [i, j] = k;
    long t = i + j;
    if (t < 0) throw std::invalid_argument("series_from_betti: negative total degree");
    Rat signed_v = (i % 2 == 0) ? v : -v;
    numer = numer + Poly::monomial(signed_v, static_cast<int>(t));
  }
  return Series(std::move(numer), n + 1);
}

BettiTable betti_bounds(const Series& g, int n, int m) {
  Certificate cert = membership(ConeId(ConeKind::Regularity, n, m), g);
  if (!cert.member) throw std::invalid_argument("series is not in the regularity cone");
  BettiTable out;
  out.set(0, 0, g.coeff(0));
  for (int j = 0; j < m; ++j) {
    Rat slack = Rat(n + j + 1) * g.coeff(j) - Rat(j + 1) * g.coeff(j + 1);
    for (int i = 1; i <= n + 1; ++i)
      out.set(i, j, Rat(1, i + j) * binom(n, i - 1) * slack);
  }
  for (int i = 1; i <= n + 1; ++i) {
    Rat v = Rat(n + m + 1, i + m) * binom(n, i - 1) * g.coeff(m);
    for (int k = 1; k <= i; ++k) {
      Rat term = binom(n + 1, i - k) * g.coeff(m + k);
      v += (k % 2 == 0) ? term : -term;
    }
    out.set(i, m, v);
  }
  return out;
}

}  // namespace hilb
