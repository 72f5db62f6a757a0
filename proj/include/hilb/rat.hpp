#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>

namespace hilb {

// Exact rational number backed by GMP. Every value is kept canonical:
// denominator > 0 and gcd(|numerator|, denominator) = 1, so equality is
// plain representation equality and str() output is unique.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(static_cast<signed long>(n)) {}
  Rat(long num, long den);
  Rat(mpz_class num) : v_(std::move(num)) {}
  Rat(const mpz_class& num, const mpz_class& den);

  // Accepts "p" or "p/q"; p may carry a sign, q must be a positive integer.
  static Rat parse(const std::string& s);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  Rat operator-() const;

  Rat& operator+=(const Rat& o) {
    v_ += o.v_;
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    v_ -= o.v_;
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    v_ *= o.v_;
    return *this;
  }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

// binom(top, k) with integer top of either sign and k >= 0, the falling
// factorial convention: top(top-1)...(top-k+1)/k!.
mpz_class binom_z(const mpz_class& top, unsigned long k);
Rat binom(long top, long k);

mpz_class lcm_z(const mpz_class& a, const mpz_class& b);

}  // namespace hilb
