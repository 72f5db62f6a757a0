#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hilb/certificate.hpp"
#include "hilb/modules.hpp"
#include "hilb/series.hpp"

namespace hilb {

// The three cones this library computes with, inside the space V(n, a) of
// series over (1-t)^n whose coefficients become polynomial after index a:
//   Positive    (P): sequences with all coefficients >= 0.
//   AInvariant  (Q): Hilbert functions of modules generated in degree 0 whose
//                    a-invariant is at most a; cut out by the inequalities
//                    (n+j+1) h(j) >= (j+1) h(j+1).
//   Regularity  (R): truncated Hilbert functions with regularity at most m,
//                    living in V(n+1, m).
enum class ConeKind { Positive, AInvariant, Regularity };

struct ConeId {
  ConeKind kind;
  int n;
  long bound;  // a for Positive/AInvariant (>= -n), m for Regularity (>= 0)

  ConeId(ConeKind kind, int n, long bound);
};

// Identifies an extreme ray. PurePower k is the series t^k. The lambda and
// mu families are indexed by partitions and share the shape
//   sum_{j >= s} P(j) t^j with s = family_start(a);
// see family_tail_poly for the polynomial P. Cyclic(ell, i) names the
// quotient S / <x_0, ..., x_{ell-1}>^i.
struct RayLabel {
  enum class Kind { PurePower, LambdaFamily, MuFamily, Cyclic };

  Kind kind = Kind::PurePower;
  long power = 0;   // PurePower exponent
  Partition parts;  // LambdaFamily / MuFamily
  int ell = 0;      // Cyclic
  int index = 0;    // Cyclic

  static RayLabel pure_power(long k);
  static RayLabel lambda(Partition p);
  static RayLabel mu(Partition p);
  static RayLabel cyclic(int ell, int i);

  // "pure:2", "lambda:2,1", "mu:" (empty partition), "cyclic:4,2".
  std::string str() const;
  static RayLabel parse(const std::string& s);

  friend bool operator==(const RayLabel& a, const RayLabel& b);
};

// First index of the partition-family rays' support: max(a+1, 0). Beyond it
// the coefficient sequence of any element of V(n, a) is already polynomial.
long family_start(long a);

// Largest admissible part count for the two families in V(n, a); negative
// means the family is empty (not even the empty partition).
long max_lambda_parts(int n, long a);
long max_mu_parts(int n, long a);

// The polynomial P with ray = sum_{j >= family_start(a)} P(j) t^j.
// LambdaFamily: P(j) = p(j - s) * prod_{l=1}^{s-a-1} (j + l), where p is
// paired_root_poly and s = family_start(a). MuFamily: an extra factor
// (j - s) and p evaluated at j - s - 1.
Poly family_tail_poly(const RayLabel& label, int n, long a);

// Extreme ray of the positivity cone in V(n, a). Rejects Cyclic labels and
// labels whose part counts exceed the family bounds.
Series positive_ray(const RayLabel& label, int n, long a);

// All pure powers (when a >= 0) and all family rays with parts <= max_part:
// pure powers ascending, then the lambda family, then the mu family, each
// ordered by part count and lexicographically.
std::vector<std::pair<RayLabel, Series>> enumerate_positive_rays(int n, long a, long max_part);

// Membership with a certificate. Violations are reported as:
//   Positive:   "coefficient j" (smallest j with h(j) < 0);
//   AInvariant: "infinity" when the inequalities fail in the limit
//                (negative leading coefficient after the transform),
//                otherwise "facet j" for the first violated inequality;
//   Regularity: "facet i" with facets indexed 0..m-1 (consecutive-degree
//                inequalities), m (h(m) >= q(m)), m+1+i for i = 0..n-1
//                (backward-difference brackets at m), and m+n+1+i for the
//                subspace equalities (i-th difference nonzero at m).
// Throws when the input is not in the cone's ambient space.
Certificate membership(const ConeId& cone, const Series& g);

// The n + m + 1 extreme rays of the regularity cone, in the fixed order
// Cyclic(n+1, 1), ..., Cyclic(n+1, m+1), then Cyclic(n, m+1) down to
// Cyclic(1, m+1), paired with their closed-form series.
std::vector<std::pair<RayLabel, Series>> regularity_rays(int n, int m);

// Coordinates of g in the (simplicial) regularity-ray basis, ordered as
// regularity_rays. Exact: sum_k alpha_k * ray_k = g always, and all
// alpha_k >= 0 exactly when g is in the cone; the position of the first
// negative alpha is the index of the first violated facet.
std::vector<Rat> regularity_decompose(const Series& g, int n, int m);

// Regularity membership plus the equalities that cut the cone down to
// modules of dimension at most d: the i-th backward differences of the
// Hilbert polynomial must vanish at m for d <= i <= n.
Certificate membership_dim_restricted(const Series& g, int n, int m, int d);

// Coefficients d_1, ..., d_D of the expansion of h (given on 0..D) in the
// Hilbert functions of S/<all variables>^i:
//   d_i = h(i-1)/binom(n+i-1, n) - h(i)/binom(n+i, n).
// All d_i >= 0 exactly when the truncated consecutive-degree inequalities
// hold; this is the countable simplicial coordinate system.
std::vector<Rat> artinian_expansion(const std::vector<Rat>& h, int n);

// Extreme ray of the a-invariant cone: Cyclic(n+1, i) with 1 <= i <= a+1
// maps to its Hilbert series; family labels map to the exact preimage of
// the positivity ray under the Macaulay transform.
Series a_invariant_ray(const RayLabel& label, int n, long a);

// Same enumeration as enumerate_positive_rays with each ray pulled back:
// pure power k becomes Cyclic(n+1, k+1).
std::vector<std::pair<RayLabel, Series>> enumerate_a_invariant_rays(int n, long a, long max_part);

// One extreme point of the plane cross-section { h(0) = 1 } of the
// a-invariant cone with n = 3, a = -1, in the coordinates (c2, c1) of the
// expansion c1/(1-t) + c2/(1-t)^2 + c3/(1-t)^3.
struct CrossSectionPoint {
  std::string name;  // "0", "1", ... or "corner" or "limit"
  Rat c2;
  Rat c1;
};

// The vertices where consecutive supporting lines H_i and H_{i+1} meet, for
// 0 <= i <= i_max, then the corner H_0 with the limiting line, then the
// limit point. Every emitted point is checked against H_j for
// j <= verify_up_to and against the limiting inequality.
std::vector<CrossSectionPoint> q31_cross_section(int i_max, int verify_up_to = 200);

}  // namespace hilb
