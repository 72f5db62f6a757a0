#pragma once

#include <vector>

#include "hilb/poly.hpp"
#include "hilb/ratcalc.hpp"

namespace hilb {

// A power series with non-negative integer support written as
// numer(t) / (1-t)^den_exp. Canonical form: the numerator is not divisible
// by (1-t) unless den_exp is already 0, and the zero series has den_exp 0,
// so equality of series is equality of the stored pair.
//
// The ambient space V(n, a) consists of the series expressible over
// (1-t)^n with numerator degree at most a + n; equivalently the coefficient
// sequence agrees with a polynomial of degree < n from index a+1 on.
class Series {
public:
  Series() : den_exp_(0) {}
  Series(Poly numer, int den_exp);

  // 1 / (1-t)^n.
  static Series geometric(int n);
  // c * t^k.
  static Series term(Rat c, int k) { return Series(Poly::monomial(std::move(c), k), 0); }

  const Poly& numer() const { return numer_; }
  int den_exp() const { return den_exp_; }
  bool is_zero() const { return numer_.is_zero(); }

  bool in_ambient(int n, long a) const;
  // Numerator re-expressed over (1-t)^n; requires den_exp() <= n.
  Poly numer_over(int n) const;

  // Coefficient of t^j in the power-series expansion.
  Rat coeff(long j) const;

  Series operator-() const;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  Series operator*(const Rat& c) const;
  friend bool operator==(const Series& a, const Series& b) {
    return a.den_exp_ == b.den_exp_ && a.numer_ == b.numer_;
  }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

private:
  int den_exp_;
  Poly numer_;
};

// (1-t)^k as a polynomial in t.
Poly one_minus_t_power(int k);

// The polynomial q with q(j) = coeff(g, j) for every integer j > a; its
// degree is bounded by den_exp(g) - 1. Throws when g is not in V(*, a),
// i.e. when no such polynomial exists from a+1 on.
Poly hilbert_polynomial(const Series& g, long a);

// Generating function of the sequence that is 0 below `start` and P(j) at
// j >= start: expand P in the basis binom(j - start + k, k) and map basis
// element k to t^start / (1-t)^(k+1).
Series poly_tail_to_series(const Poly& P, int start);

// The linear map h(j) -> (n+j+1) h(j) - (j+1) h(j+1) in closed form:
// numer N / (1-t)^d maps to ((n+1-d) N - (1-t) N') / (1-t)^d. Diagonal in
// the basis (1-t)^i with eigenvalue n+1+i.
Series macaulay_apply(const Series& g, int n);

// Inverse of macaulay_apply on V(n, a), a >= -n: expand over (1-t)^n in
// powers of (1-t) and divide the k-th component by k+1.
Series macaulay_invert(const Series& g, int n, long a);

// Coordinates of g in V(n+1, m) with respect to the triangular basis
// 1, t, ..., t^m, t^(m+1)/(1-t), ..., t^(m+1)/(1-t)^(n+1):
// head[j] = h(j) for 0 <= j <= m, and tail[i] is the coefficient of
// t^(m+1)/(1-t)^(i+1), which equals the i-th backward difference of the
// Hilbert polynomial evaluated at m.
struct TruncationCoords {
  std::vector<Rat> head;  // m+1 entries
  std::vector<Rat> tail;  // n+1 entries

  friend bool operator==(const TruncationCoords& a, const TruncationCoords& b) {
    return a.head == b.head && a.tail == b.tail;
  }
};

TruncationCoords truncation_coords(const Series& g, int n, int m);
Series from_truncation_coords(const TruncationCoords& tc);

}  // namespace hilb
