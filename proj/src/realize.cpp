#include "hilb/realize.hpp"

#include <algorithm>
#include <stdexcept>

namespace hilb {

RaySplit split_ray(const RayLabel& label, int n, long a) {
  Poly P = family_tail_poly(label, n, a);  // rejects non-family labels
  long s = family_start(a);
  long cutoff = s;
  if (!P.is_zero())
    for (long r : P.integer_roots()) cutoff = std::max(cutoff, r + 1);
  Poly head;
  for (long j = s; j < cutoff; ++j)
    head = head + Poly::monomial(P.eval_int(j), static_cast<int>(j));
  return {static_cast<int>(cutoff), Series(std::move(head), 0),
          P.shifted_arg(Rat(cutoff))};
}

Realization realize_positive_ray(const RayLabel& label, int n, long a,
                                 bool clear_denominators) {
  if (a < -n) throw std::invalid_argument("realize_positive_ray: a must be at least -n");
  Realization out;
  out.scalar = Rat(1);
  out.working_a = a;
  if (label.kind == RayLabel::Kind::PurePower) {
    if (label.power < 0 || label.power > a)
      throw std::invalid_argument("ray label out of range for this cone");
    int k = static_cast<int>(label.power);
    // T[series of S/<all>^(k+1)] = (k+1) binom(n+k+1, k+1) t^k.
    out.modules.summands.push_back(
        {{n + 1, k + 1}, Rat(1) / (Rat(k + 1) * binom(n + k + 1, k + 1))});
  } else {
    RaySplit split = split_ray(label, n, a);
    const int c = split.cutoff;
    if (!split.head.is_zero()) {
      const Poly& head = split.head.numer();
      for (int j = 0; j <= *head.degree(); ++j) {
        Rat hj = head.coeff(j);
        if (hj.is_zero()) continue;
        out.modules.summands.push_back(
            {{n + 1, j + 1}, hj / (Rat(j + 1) * binom(n + j + 1, j + 1))});
      }
    }
    if (!split.tail_poly.is_zero()) {
      // T[series of S/<n-k vars>^(c+1)] = (c+1) binom(n-k+c, c+1) t^c / (1-t)^(k+1).
      std::vector<Rat> coeffs = nonneg_binomial_decomposition(split.tail_poly);
      for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        int ell = n - static_cast<int>(k);
        if (ell < 1) throw std::logic_error("realize_positive_ray: tail degree exceeds n-1");
        out.modules.summands.push_back(
            {{ell, c + 1}, coeffs[k] / (Rat(c + 1) * binom(ell - 1 + c + 1, c + 1))});
      }
    }
  }
  for (const auto& [m, mult] : out.modules.summands)
    out.working_a = std::max(out.working_a, static_cast<long>(m.power + m.ell - n - 2));
  if (clear_denominators) {
    mpz_class l(1);
    for (const auto& [m, mult] : out.modules.summands) l = lcm_z(l, mult.den());
    Rat scale{mpz_class(l)};
    for (auto& [m, mult] : out.modules.summands) mult *= scale;
    out.scalar = scale;
  }
  Series lhs;
  for (const auto& [m, mult] : out.modules.summands)
    lhs = lhs + macaulay_apply(power_quotient_series(m, n), n) * mult;
  if (lhs != positive_ray(label, n, a) * out.scalar)
    throw std::logic_error("realize_positive_ray: verification identity failed");
  return out;
}

}  // namespace hilb
