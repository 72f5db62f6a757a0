#include "hilb/series.hpp"

#include <stdexcept>

namespace hilb {

namespace {

// Substitute t = 1 - u: returns p(1-u) as a polynomial in u.
Poly at_one_minus(const Poly& p) {
  Poly shifted = p.shifted_arg(Rat(1));  // p(u + 1)
  std::vector<Rat> v = shifted.coeffs();
  for (size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
  return Poly(std::move(v));
}

}  // namespace

Series::Series(Poly numer, int den_exp) : den_exp_(den_exp), numer_(std::move(numer)) {
  if (den_exp < 0) throw std::invalid_argument("Series: negative denominator exponent");
  if (numer_.is_zero()) {
    den_exp_ = 0;
    return;
  }
  while (den_exp_ > 0) {
    auto [q, rem] = numer_.divide_linear(Rat(1));
    if (!rem.is_zero()) break;
    numer_ = q * Rat(-1);  // numer = (t - 1) q = -(1-t) q
    --den_exp_;
  }
}

Series Series::geometric(int n) { return Series(Poly::constant(Rat(1)), n); }

bool Series::in_ambient(int n, long a) const {
  if (is_zero()) return true;
  return den_exp_ <= n && *numer_.degree() - den_exp_ <= a;
}

Poly Series::numer_over(int n) const {
  if (is_zero()) return Poly();
  if (den_exp_ > n) throw std::invalid_argument("Series: denominator exponent exceeds requested space");
  return numer_ * one_minus_t_power(n - den_exp_);
}

Rat Series::coeff(long j) const {
  if (j < 0 || is_zero()) return Rat(0);
  if (den_exp_ == 0) {
    if (j > *numer_.degree()) return Rat(0);
    return numer_.coeff(static_cast<int>(j));
  }
  Rat acc(0);
  int top = numer_.degree() ? *numer_.degree() : -1;
  for (int k = 0; k <= top && k <= j; ++k)
    acc += numer_.coeff(k) * binom(den_exp_ - 1 + j - k, den_exp_ - 1);
  return acc;
}

Series Series::operator-() const {
  Series r;
  r.den_exp_ = den_exp_;
  r.numer_ = -numer_;
  return r;
}

Series operator+(const Series& a, const Series& b) {
  int d = std::max(a.den_exp_, b.den_exp_);
  return Series(a.numer_ * one_minus_t_power(d - a.den_exp_) +
                    b.numer_ * one_minus_t_power(d - b.den_exp_),
                d);
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b) {
  return Series(a.numer_ * b.numer_, a.den_exp_ + b.den_exp_);
}

Series Series::operator*(const Rat& c) const {
  if (c.is_zero()) return Series();
  Series r;
  r.den_exp_ = den_exp_;
  r.numer_ = numer_ * c;
  return r;
}

Poly one_minus_t_power(int k) {
  if (k < 0) throw std::invalid_argument("one_minus_t_power: negative exponent");
  Poly p = Poly::constant(Rat(1));
  for (int i = 0; i < k; ++i) p = p * Poly({Rat(1), Rat(-1)});
  return p;
}

Poly hilbert_polynomial(const Series& g, long a) {
  if (g.is_zero()) return Poly();
  int d = g.den_exp();
  long top = *g.numer().degree();
  if (top - d > a) throw std::invalid_argument("series is not in the ambient space");
  if (d == 0) return Poly();
  Poly q;
  for (int k = 0; k <= top; ++k) {
    Rat c = g.numer().coeff(k);
    if (c.is_zero()) continue;
    q = q + binom_poly(d - 1, d - 1 - k) * c;
  }
  return q;
}

Series poly_tail_to_series(const Poly& P, int start) {
  if (start < 0) throw std::invalid_argument("poly_tail_to_series: negative start");
  if (P.is_zero()) return Series();
  // R(i) = P(i + start) so the sequence is R(0), R(1), ... from t^start on.
  Poly R = P.shifted_arg(Rat(start));
  int K = *R.degree();
  // Peel leading terms: binom(s+k, k) has degree k and leading coefficient 1/k!.
  std::vector<Rat> c(K + 1);
  mpz_class fact = 1;
  for (int k = 2; k <= K; ++k) fact *= k;
  for (int k = K; k >= 0; --k) {
    c[k] = R.coeff(k) * Rat(fact);
    if (!c[k].is_zero()) R = R - binom_poly(k, k) * c[k];
    if (k > 1) fact /= k;
  }
  if (!R.is_zero()) throw std::logic_error("poly_tail_to_series: basis expansion failed");
  Poly numer;
  for (int k = 0; k <= K; ++k)
    numer = numer + one_minus_t_power(K - k) * c[k];
  return Series(Poly::monomial(Rat(1), start) * numer, K + 1);
}

Series macaulay_apply(const Series& g, int n) {
  if (g.is_zero()) return Series();
  int d = g.den_exp();
  const Poly& N = g.numer();
  Poly out = N * Rat(n + 1 - d) - Poly({Rat(1), Rat(-1)}) * N.derivative();
  return Series(std::move(out), d);
}

Series macaulay_invert(const Series& g, int n, long a) {
  if (a < -n) throw std::invalid_argument("macaulay_invert: a must be at least -n");
  if (!g.in_ambient(n, a)) throw std::invalid_argument("series is not in the ambient space");
  if (g.is_zero()) return Series();
  // Over (1-t)^n the operator is diagonal in powers of (1-t): the component
  // at (1-t)^k has eigenvalue k+1.
  Poly N = g.numer_over(n);
  Poly M = at_one_minus(N);
  std::vector<Rat> v = M.coeffs();
  for (size_t k = 0; k < v.size(); ++k) v[k] /= Rat(static_cast<long>(k) + 1);
  return Series(at_one_minus(Poly(std::move(v))), n);
}

TruncationCoords truncation_coords(const Series& g, int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("truncation_coords: bad dimensions");
  if (!g.in_ambient(n + 1, m)) throw std::invalid_argument("series is not in the ambient space");
  TruncationCoords tc;
  tc.head.reserve(m + 1);
  for (int j = 0; j <= m; ++j) tc.head.push_back(g.coeff(j));
  Poly q = hilbert_polynomial(g, m);
  tc.tail.reserve(n + 1);
  Poly diff = q;
  for (int i = 0; i <= n; ++i) {
    tc.tail.push_back(diff.eval_int(m));
    diff = diff - diff.shifted_arg(Rat(-1));
  }
  return tc;
}

Series from_truncation_coords(const TruncationCoords& tc) {
  if (tc.head.empty() || tc.tail.empty())
    throw std::invalid_argument("from_truncation_coords: empty coordinates");
  int m = static_cast<int>(tc.head.size()) - 1;
  int n = static_cast<int>(tc.tail.size()) - 1;
  Poly numer;
  for (int j = 0; j <= m; ++j)
    numer = numer + Poly::monomial(tc.head[j], j) * one_minus_t_power(n + 1);
  for (int i = 0; i <= n; ++i)
    numer = numer + Poly::monomial(tc.tail[i], m + 1) * one_minus_t_power(n - i);
  return Series(std::move(numer), n + 1);
}

}  // namespace hilb
