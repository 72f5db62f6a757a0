#pragma once

#include "hilb/cones.hpp"
#include "hilb/modules.hpp"

namespace hilb {

// Splits a family ray sum_{j >= s} P(j) t^j at the smallest index past every
// root of P: head carries the finitely many terms below the cutoff, and the
// remainder is t^cutoff * sum_{u >= 0} f(u) t^u where f = tail_poly has only
// distinct strictly negative integer roots and a positive leading
// coefficient, exactly the shape nonneg_binomial_decomposition accepts.
struct RaySplit {
  int cutoff;
  Series head;
  Poly tail_poly;
};

RaySplit split_ray(const RayLabel& label, int n, long a);

// A non-negative combination of power quotients whose Hilbert series maps
// under the Macaulay transform to scalar times a positivity-cone ray.
// working_a is the smallest bound making every summand's series live in the
// same ambient space; the verification identity is checked there.
struct Realization {
  Rat scalar;
  ModuleSum modules;
  long working_a;
};

// Constructs the realization for any admissible positivity-cone ray label:
// head terms become summands S/<all n+1 variables>^(j+1), and each
// binomial-basis component of the tail becomes S/<n-k variables>^(cutoff+1).
// With clear_denominators the multiplicities are scaled to integers and the
// scalar records the factor. The identity
//   sum mult * T[series(summand)] = scalar * ray
// is verified exactly before returning.
Realization realize_positive_ray(const RayLabel& label, int n, long a,
                                 bool clear_denominators = false);

}  // namespace hilb
