#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hilb/rat.hpp"

namespace hilb {

// Dense univariate polynomial over Rat. Canonical form: no trailing zero
// coefficients, so the zero polynomial is the empty vector and degree() is
// empty exactly then. Degrees in this project stay small (a few dozen), so
// quadratic-time convolution and shifts are fine.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs);
  static Poly constant(Rat c);
  // c times the k-th power of the variable.
  static Poly monomial(Rat c, int k);

  bool is_zero() const { return c_.empty(); }
  std::optional<int> degree() const;
  const std::vector<Rat>& coeffs() const { return c_; }
  // Coefficient of the k-th power; 0 outside the stored range.
  Rat coeff(int k) const;
  Rat leading() const;

  Rat eval(const Rat& x) const;
  Rat eval_int(long x) const { return eval(Rat(x)); }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator*(const Rat& c) const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return a.c_ != b.c_; }

  // p(x + delta) as a polynomial in x.
  Poly shifted_arg(const Rat& delta) const;
  Poly derivative() const;

  // Quotient and remainder of division by (x - root).
  std::pair<Poly, Rat> divide_linear(const Rat& root) const;

  // All distinct integer roots, ascending. Found by scanning the integers
  // within the Cauchy root bound, which is plenty at the degrees we handle.
  std::vector<long> integer_roots() const;

  // 1 + max_k |c_k / lead| over k < deg, rounded up: every real root of a
  // nonzero polynomial has absolute value below this.
  long root_bound() const;

  // Human-readable form like "2*s^2 - 1/3*s + 4" using the given variable.
  std::string str(const std::string& var = "s") const;

private:
  void trim();
  std::vector<Rat> c_;
};

}  // namespace hilb
