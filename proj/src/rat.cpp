#include "hilb/rat.hpp"

#include <ostream>
#include <stdexcept>

namespace hilb {

Rat::Rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rat: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("Rat: zero denominator");
  v_ = mpq_class(num) / mpq_class(den);
}

Rat Rat::parse(const std::string& s) {
  std::string body = s.substr(s.size() > 1 && s[0] == '+' ? 1 : 0);
  auto slash = body.find('/');
  try {
    if (slash == std::string::npos) return Rat(mpz_class(body));
    mpz_class num(body.substr(0, slash));
    mpz_class den(body.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("");
    return Rat(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rat: cannot parse \"" + s + "\"");
  }
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat Rat::operator-() const {
  Rat r;
  r.v_ = -v_;
  return r;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

mpz_class binom_z(const mpz_class& top, unsigned long k) {
  mpz_class r;
  mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), k);
  return r;
}

Rat binom(long top, long k) {
  if (k < 0) return Rat(0);
  return Rat(binom_z(mpz_class(top), static_cast<unsigned long>(k)));
}

mpz_class lcm_z(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace hilb
