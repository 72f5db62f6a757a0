#include "hilb/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace hilb {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

Poly Poly::constant(Rat c) { return Poly({std::move(c)}); }

Poly Poly::monomial(Rat c, int k) {
  if (k < 0) throw std::invalid_argument("Poly: negative power");
  std::vector<Rat> v(k + 1);
  v[k] = std::move(c);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::optional<int> Poly::degree() const {
  if (c_.empty()) return std::nullopt;
  return static_cast<int>(c_.size()) - 1;
}

Rat Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
  return c_[k];
}

Rat Poly::leading() const {
  if (c_.empty()) throw std::logic_error("Poly: leading coefficient of zero");
  return c_.back();
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::operator-() const {
  std::vector<Rat> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(-c);
  return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()));
  for (size_t k = 0; k < v.size(); ++k) {
    if (k < a.c_.size()) v[k] += a.c_[k];
    if (k < b.c_.size()) v[k] += b.c_[k];
  }
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> v(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(v));
}

Poly Poly::operator*(const Rat& c) const {
  std::vector<Rat> v;
  v.reserve(c_.size());
  for (const auto& x : c_) v.push_back(x * c);
  return Poly(std::move(v));
}

Poly Poly::shifted_arg(const Rat& delta) const {
  // Horner in (x + delta): acc <- acc * (x + delta) + c_k from the top down.
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    Poly next = Poly::monomial(Rat(1), 1) * acc + acc * delta;
    acc = next + Poly::constant(*it);
  }
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> v(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * Rat(static_cast<long>(k));
  return Poly(std::move(v));
}

std::pair<Poly, Rat> Poly::divide_linear(const Rat& root) const {
  if (c_.empty()) return {Poly(), Rat(0)};
  std::vector<Rat> q(c_.size() - 1);
  Rat carry = c_.back();
  for (size_t k = c_.size() - 1; k > 0; --k) {
    q[k - 1] = carry;
    carry = c_[k - 1] + carry * root;
  }
  return {Poly(std::move(q)), carry};
}

long Poly::root_bound() const {
  if (c_.empty()) return 1;
  Rat lead = c_.back();
  Rat mx(0);
  for (size_t k = 0; k + 1 < c_.size(); ++k) {
    Rat r = c_[k] / lead;
    if (r.sign() < 0) r = -r;
    if (r > mx) mx = r;
  }
  // ceil(mx) + 1
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), mx.num().get_mpz_t(), mx.den().get_mpz_t());
  q += 1;
  if (!q.fits_slong_p()) throw std::overflow_error("Poly: root bound too large");
  return q.get_si();
}

std::vector<long> Poly::integer_roots() const {
  std::vector<long> roots;
  if (c_.empty() || c_.size() == 1) return roots;
  long b = root_bound();
  for (long r = -b; r <= b; ++r)
    if (eval_int(r).is_zero()) roots.push_back(r);
  return roots;
}

std::string Poly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = c_.size(); k-- > 0;) {
    const Rat& c = c_[k];
    if (c.is_zero()) continue;
    Rat mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (k == 0 || mag != Rat(1)) {
      os << mag.str();
      if (k > 0) os << "*";
    }
    if (k > 0) {
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace hilb
