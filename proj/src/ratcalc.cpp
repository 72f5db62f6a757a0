#include "hilb/ratcalc.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hilb {

Partition::Partition(std::vector<long> p) : parts(std::move(p)) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0 || (i > 0 && parts[i] > parts[i - 1]))
      throw std::invalid_argument("Partition: parts must be weakly decreasing and non-negative");
  }
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ",";
    os << parts[i];
  }
  os << ")";
  return os.str();
}

std::vector<Partition> partitions_bounded(int max_count, long max_part) {
  std::vector<Partition> out;
  if (max_count < 0) return out;
  out.emplace_back();
  if (max_part < 0) return out;
  std::vector<long> cur;
  auto rec = [&](auto&& self, int remaining, long cap) -> void {
    if (remaining == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (long v = 0; v <= cap; ++v) {
      cur.push_back(v);
      self(self, remaining - 1, v);
      cur.pop_back();
    }
  };
  for (int r = 1; r <= max_count; ++r) rec(rec, r, max_part);
  return out;
}

Poly binom_poly(int k, long shift) {
  if (k < 0) throw std::invalid_argument("binom_poly: negative k");
  Poly p = Poly::constant(Rat(1));
  mpz_class fact = 1;
  for (int t = 0; t < k; ++t) {
    p = p * Poly({Rat(shift - t), Rat(1)});
    fact *= t + 1;
  }
  return p * Rat(mpz_class(1), fact);
}

Poly backward_difference(const Poly& p, int order) {
  if (order < 0) throw std::invalid_argument("backward_difference: negative order");
  Poly q = p;
  for (int i = 0; i < order; ++i) q = q - q.shifted_arg(Rat(-1));
  return q;
}

Poly paired_root_poly(const Partition& lam) {
  Poly p = Poly::constant(Rat(1));
  int r = lam.count();
  for (int i = 1; i <= r; ++i) {
    long base = lam.parts[r - i] + 2 * (i - 1);
    p = p * Poly({Rat(-base), Rat(1)}) * Poly({Rat(-(base + 1)), Rat(1)});
  }
  return p;
}

std::vector<Rat> nonneg_binomial_decomposition(const Poly& f) {
  auto deg = f.degree();
  if (!deg || f.leading().sign() <= 0)
    throw std::invalid_argument("decomposition requires a positive leading coefficient");
  int r = *deg;
  std::vector<long> roots = f.integer_roots();
  if (static_cast<int>(roots.size()) != r ||
      (r > 0 && roots.back() >= 0))
    throw std::invalid_argument("decomposition requires distinct strictly negative integer roots");
  // Verify f really splits over these roots and capture the constant core.
  Poly g = f;
  for (long rt : roots) {
    auto [q, rem] = g.divide_linear(Rat(rt));
    if (!rem.is_zero())
      throw std::invalid_argument("decomposition requires distinct strictly negative integer roots");
    g = q;
  }
  std::vector<Rat> c{g.coeff(0)};
  // Rebuild multiplying the roots back from the largest down, so the factor
  // being attached always carries the smallest root of the current product.
  // (s - rho) * binom(s+k, k) = (k+1) binom(s+k+1, k+1) + (-rho - 1 - k) binom(s+k, k),
  // and -rho - 1 - k >= 0 throughout because rho <= -(current degree).
  std::sort(roots.begin(), roots.end());
  for (int i = r - 1; i >= 0; --i) {
    long rho = roots[i];
    std::vector<Rat> next(c.size() + 1);
    for (size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k] * Rat(static_cast<long>(k) + 1);
      next[k] += c[k] * Rat(-rho - 1 - static_cast<long>(k));
    }
    c = std::move(next);
  }
  return c;
}

std::optional<long> first_negative_value(const Poly& p, long start) {
  if (p.is_zero()) return std::nullopt;
  long stop = std::max(start, p.root_bound() + 1);
  for (long j = start; j <= stop; ++j)
    if (p.eval_int(j).sign() < 0) return j;
  // Beyond the root bound the sign is constant; a negative leading
  // coefficient would have shown up at stop already.
  return std::nullopt;
}

}  // namespace hilb
