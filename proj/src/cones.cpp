#include "hilb/cones.hpp"

#include <sstream>
#include <stdexcept>

namespace hilb {

ConeId::ConeId(ConeKind k, int nn, long b) : kind(k), n(nn), bound(b) {
  if (n < 0) throw std::invalid_argument("ConeId: n must be non-negative");
  if (kind == ConeKind::Regularity) {
    if (bound < 0) throw std::invalid_argument("ConeId: regularity bound must be non-negative");
  } else {
    if (bound < -n) throw std::invalid_argument("ConeId: bound must be at least -n");
  }
}

RayLabel RayLabel::pure_power(long k) {
  RayLabel r;
  r.kind = Kind::PurePower;
  r.power = k;
  return r;
}

RayLabel RayLabel::lambda(Partition p) {
  RayLabel r;
  r.kind = Kind::LambdaFamily;
  r.parts = std::move(p);
  return r;
}

RayLabel RayLabel::mu(Partition p) {
  RayLabel r;
  r.kind = Kind::MuFamily;
  r.parts = std::move(p);
  return r;
}

RayLabel RayLabel::cyclic(int ell, int i) {
  RayLabel r;
  r.kind = Kind::Cyclic;
  r.ell = ell;
  r.index = i;
  return r;
}

bool operator==(const RayLabel& a, const RayLabel& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case RayLabel::Kind::PurePower: return a.power == b.power;
    case RayLabel::Kind::LambdaFamily:
    case RayLabel::Kind::MuFamily: return a.parts == b.parts;
    case RayLabel::Kind::Cyclic: return a.ell == b.ell && a.index == b.index;
  }
  return false;
}

std::string RayLabel::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::PurePower:
      os << "pure:" << power;
      break;
    case Kind::LambdaFamily:
    case Kind::MuFamily: {
      os << (kind == Kind::LambdaFamily ? "lambda:" : "mu:");
      for (size_t i = 0; i < parts.parts.size(); ++i) {
        if (i) os << ",";
        os << parts.parts[i];
      }
      break;
    }
    case Kind::Cyclic:
      os << "cyclic:" << ell << "," << index;
      break;
  }
  return os.str();
}

RayLabel RayLabel::parse(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("RayLabel: expected \"kind:args\" in \"" + s + "\"");
  std::string kind = s.substr(0, colon);
  std::string rest = s.substr(colon + 1);
  auto parse_longs = [&](const std::string& t) {
    std::vector<long> out;
    std::istringstream is(t);
    std::string item;
    while (std::getline(is, item, ',')) {
      size_t pos = 0;
      long v = std::stol(item, &pos);
      if (pos != item.size()) throw std::invalid_argument("RayLabel: bad integer \"" + item + "\"");
      out.push_back(v);
    }
    return out;
  };
  if (kind == "pure") {
    auto v = parse_longs(rest);
    if (v.size() != 1) throw std::invalid_argument("RayLabel: pure takes one integer");
    return pure_power(v[0]);
  }
  if (kind == "lambda" || kind == "mu") {
    Partition p(parse_longs(rest));
    return kind == "lambda" ? lambda(std::move(p)) : mu(std::move(p));
  }
  if (kind == "cyclic") {
    auto v = parse_longs(rest);
    if (v.size() != 2) throw std::invalid_argument("RayLabel: cyclic takes two integers");
    return cyclic(static_cast<int>(v[0]), static_cast<int>(v[1]));
  }
  throw std::invalid_argument("RayLabel: unknown kind \"" + kind + "\"");
}

long family_start(long a) { return a >= 0 ? a + 1 : 0; }

namespace {

long floor_div(long x, long y) {
  long q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

}  // namespace

long max_lambda_parts(int n, long a) { return floor_div(n - family_start(a) + a, 2); }

long max_mu_parts(int n, long a) { return floor_div(n - family_start(a) + a - 1, 2); }

Poly family_tail_poly(const RayLabel& label, int n, long a) {
  if (a < -n) throw std::invalid_argument("family_tail_poly: a must be at least -n");
  if (label.kind != RayLabel::Kind::LambdaFamily && label.kind != RayLabel::Kind::MuFamily)
    throw std::invalid_argument("family_tail_poly: label is not a series family");
  long s = family_start(a);
  long bound = label.kind == RayLabel::Kind::LambdaFamily ? max_lambda_parts(n, a)
                                                          : max_mu_parts(n, a);
  if (label.parts.count() > bound)
    throw std::invalid_argument("ray label out of range for this cone");
  Poly p;
  if (label.kind == RayLabel::Kind::LambdaFamily) {
    p = paired_root_poly(label.parts).shifted_arg(Rat(-s));
  } else {
    p = paired_root_poly(label.parts).shifted_arg(Rat(-s - 1)) * Poly({Rat(-s), Rat(1)});
  }
  for (long l = 1; l <= s - a - 1; ++l) p = p * Poly({Rat(l), Rat(1)});
  return p;
}

Series positive_ray(const RayLabel& label, int n, long a) {
  if (a < -n) throw std::invalid_argument("positive_ray: a must be at least -n");
  switch (label.kind) {
    case RayLabel::Kind::PurePower:
      if (label.power < 0 || label.power > a)
        throw std::invalid_argument("ray label out of range for this cone");
      return Series::term(Rat(1), static_cast<int>(label.power));
    case RayLabel::Kind::LambdaFamily:
    case RayLabel::Kind::MuFamily:
      return poly_tail_to_series(family_tail_poly(label, n, a),
                                 static_cast<int>(family_start(a)));
    case RayLabel::Kind::Cyclic:
      throw std::invalid_argument("positive_ray: cyclic labels name a-invariant rays");
  }
  throw std::logic_error("positive_ray: unreachable");
}

std::vector<std::pair<RayLabel, Series>> enumerate_positive_rays(int n, long a, long max_part) {
  if (a < -n) throw std::invalid_argument("enumerate_positive_rays: a must be at least -n");
  std::vector<std::pair<RayLabel, Series>> out;
  for (long k = 0; k <= a; ++k) {
    RayLabel lab = RayLabel::pure_power(k);
    out.emplace_back(lab, positive_ray(lab, n, a));
  }
  long lb = max_lambda_parts(n, a);
  if (lb >= 0)
    for (auto& p : partitions_bounded(static_cast<int>(lb), max_part)) {
      RayLabel lab = RayLabel::lambda(std::move(p));
      out.emplace_back(lab, positive_ray(lab, n, a));
    }
  long mb = max_mu_parts(n, a);
  if (mb >= 0)
    for (auto& p : partitions_bounded(static_cast<int>(mb), max_part)) {
      RayLabel lab = RayLabel::mu(std::move(p));
      out.emplace_back(lab, positive_ray(lab, n, a));
    }
  return out;
}

namespace {

Certificate positive_membership(const Series& g, int n, long a) {
  if (!g.in_ambient(n, a)) throw std::invalid_argument("series is not in the ambient space");
  long prefix = std::max(a, 0L);
  for (long j = 0; j <= prefix; ++j)
    if (g.coeff(j).sign() < 0) return Certificate::coefficient(j);
  Poly q = hilbert_polynomial(g, a);
  if (auto j = first_negative_value(q, prefix + 1)) return Certificate::coefficient(*j);
  return Certificate::ok();
}

Certificate a_invariant_membership(const Series& g, int n, long a) {
  if (!g.in_ambient(n, a)) throw std::invalid_argument("series is not in the ambient space");
  Series tg = macaulay_apply(g, n);
  Poly q = hilbert_polynomial(tg, a);
  // The inequalities trail off into a polynomial condition; a negative
  // leading coefficient violates them from some point on, which is the
  // facet "at infinity" of the closed cone.
  if (!q.is_zero() && q.leading().sign() < 0) return Certificate::infinity();
  long prefix = std::max(a, 0L);
  for (long j = 0; j <= prefix; ++j)
    if (tg.coeff(j).sign() < 0) return Certificate::facet(j);
  if (auto j = first_negative_value(q, prefix + 1)) return Certificate::facet(*j);
  return Certificate::ok();
}

Certificate regularity_membership(const Series& g, int n, int m) {
  if (!g.in_ambient(n + 1, m)) throw std::invalid_argument("series is not in the ambient space");
  for (long j = 0; j < m; ++j)
    if (Rat(n + j + 1) * g.coeff(j) < Rat(j + 1) * g.coeff(j + 1))
      return Certificate::facet(j);
  Poly q = hilbert_polynomial(g, m);
  std::vector<Rat> diffs;  // i-th backward difference of q at m, i = 0..n
  Poly d = q;
  for (int i = 0; i <= n; ++i) {
    diffs.push_back(d.eval_int(m));
    d = d - d.shifted_arg(Rat(-1));
  }
  if (g.coeff(m) < diffs[0]) return Certificate::facet(m);
  for (int i = 0; i < n; ++i)
    if (Rat(n - i) * diffs[i] < Rat(n + m - i) * diffs[i + 1])
      return Certificate::facet(m + 1 + i);
  if (!diffs[n].is_zero()) return Certificate::facet(m + n + 1 + n);
  return Certificate::ok();
}

}  // namespace

Certificate membership(const ConeId& cone, const Series& g) {
  switch (cone.kind) {
    case ConeKind::Positive: return positive_membership(g, cone.n, cone.bound);
    case ConeKind::AInvariant: return a_invariant_membership(g, cone.n, cone.bound);
    case ConeKind::Regularity:
      return regularity_membership(g, cone.n, static_cast<int>(cone.bound));
  }
  throw std::logic_error("membership: unreachable");
}

std::vector<std::pair<RayLabel, Series>> regularity_rays(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("regularity_rays: bad dimensions");
  std::vector<std::pair<RayLabel, Series>> out;
  out.reserve(n + m + 1);
  for (int i = 1; i <= m + 1; ++i)
    out.emplace_back(RayLabel::cyclic(n + 1, i), power_quotient_series(n + 1, i, n));
  for (int ell = n; ell >= 1; --ell)
    out.emplace_back(RayLabel::cyclic(ell, m + 1), power_quotient_series(ell, m + 1, n));
  return out;
}

std::vector<Rat> regularity_decompose(const Series& g, int n, int m) {
  if (!g.in_ambient(n + 1, m)) throw std::invalid_argument("series is not in the ambient space");
  Poly q = hilbert_polynomial(g, m);
  std::vector<Rat> diffs;
  Poly d = q;
  for (int i = 0; i <= n; ++i) {
    diffs.push_back(d.eval_int(m));
    d = d - d.shifted_arg(Rat(-1));
  }
  if (!diffs[n].is_zero())
    throw std::invalid_argument("series lies outside the regularity subspace");
  std::vector<Rat> alpha;
  alpha.reserve(n + m + 1);
  for (long j = 0; j < m; ++j)
    alpha.push_back(g.coeff(j) / binom(n + j, n) - g.coeff(j + 1) / binom(n + j + 1, n));
  alpha.push_back((g.coeff(m) - diffs[0]) / binom(n + m, n));
  for (int i = 1; i <= n; ++i)
    alpha.push_back(diffs[i - 1] / binom(n + m + 1 - i, m) - diffs[i] / binom(n + m - i, m));
  return alpha;
}

Certificate membership_dim_restricted(const Series& g, int n, int m, int d) {
  if (d < 0 || d > n) throw std::invalid_argument("membership_dim_restricted: d out of range");
  Certificate base = membership(ConeId(ConeKind::Regularity, n, m), g);
  if (!base.member) return base;
  Poly q = hilbert_polynomial(g, m);
  Poly diff = q;
  std::vector<Rat> diffs;
  for (int i = 0; i <= n; ++i) {
    diffs.push_back(diff.eval_int(m));
    diff = diff - diff.shifted_arg(Rat(-1));
  }
  for (int i = d; i <= n; ++i)
    if (!diffs[i].is_zero()) return Certificate::facet(m + n + 1 + i);
  return Certificate::ok();
}

std::vector<Rat> artinian_expansion(const std::vector<Rat>& h, int n) {
  std::vector<Rat> d;
  if (h.empty()) return d;
  d.reserve(h.size() - 1);
  for (size_t i = 1; i < h.size(); ++i) {
    long li = static_cast<long>(i);
    d.push_back(h[i - 1] / binom(n + li - 1, n) - h[i] / binom(n + li, n));
  }
  return d;
}

Series a_invariant_ray(const RayLabel& label, int n, long a) {
  if (a < -n) throw std::invalid_argument("a_invariant_ray: a must be at least -n");
  switch (label.kind) {
    case RayLabel::Kind::Cyclic:
      if (label.ell != n + 1 || label.index < 1 || label.index > a + 1)
        throw std::invalid_argument("ray label out of range for this cone");
      return power_quotient_series(label.ell, label.index, n);
    case RayLabel::Kind::LambdaFamily:
    case RayLabel::Kind::MuFamily:
      return macaulay_invert(positive_ray(label, n, a), n, a);
    case RayLabel::Kind::PurePower:
      throw std::invalid_argument("a_invariant_ray: pure powers correspond to cyclic labels here");
  }
  throw std::logic_error("a_invariant_ray: unreachable");
}

std::vector<std::pair<RayLabel, Series>> enumerate_a_invariant_rays(int n, long a, long max_part) {
  std::vector<std::pair<RayLabel, Series>> out;
  for (auto& [label, ray] : enumerate_positive_rays(n, a, max_part)) {
    if (label.kind == RayLabel::Kind::PurePower) {
      RayLabel lab = RayLabel::cyclic(n + 1, static_cast<int>(label.power) + 1);
      out.emplace_back(lab, power_quotient_series(n + 1, lab.index, n));
    } else {
      out.emplace_back(label, macaulay_invert(ray, n, a));
    }
  }
  return out;
}

namespace {

// H_j in the (c2, c1) plane of the cross-section; the point is inside the
// half-plane when the value is <= 0.
Rat cross_section_line(long j, const Rat& c2, const Rat& c1) {
  return Rat((j - 1) * (j + 4)) * c1 + Rat((j - 2) * (j + 1)) * c2 - Rat((j + 1) * (j + 2));
}

}  // namespace

std::vector<CrossSectionPoint> q31_cross_section(int i_max, int verify_up_to) {
  if (i_max < 0) throw std::invalid_argument("q31_cross_section: i_max must be non-negative");
  std::vector<CrossSectionPoint> out;
  out.reserve(i_max + 3);
  for (long i = 0; i <= i_max; ++i) {
    Rat den(i * i + 2);
    out.push_back({std::to_string(i), Rat(-3 * (i + 2)) / den, Rat((i + 1) * (i + 2)) / den});
  }
  out.push_back({"corner", Rat(3), Rat(-2)});
  out.push_back({"limit", Rat(0), Rat(1)});
  for (const auto& p : out) {
    for (long j = 0; j <= verify_up_to; ++j)
      if (cross_section_line(j, p.c2, p.c1).sign() > 0)
        throw std::logic_error("q31_cross_section: point escapes a supporting line");
    if ((p.c1 + p.c2 - Rat(1)).sign() > 0)
      throw std::logic_error("q31_cross_section: point escapes the limiting line");
  }
  return out;
}

}  // namespace hilb
