#pragma once

#include <set>

#include "floerhp/errors.hpp"

namespace floerhp::roots {

// Counting problem: conjugacy classes of unit-circle solutions of
// M^exponent = rhs_sign, identified under M <-> M^-1, minus the classes whose
// representative has multiplicative order in excluded_orders.
//
// The built-in uses exclude orders from {1, 2, 3, 4, 6, 12}:
//   order 1 <-> M = 1, order 2 <-> M = -1 (central eigenvalues),
//   order 12 <-> meridional trace +-sqrt(3) (non-abelian reducible locus),
//   order 4 <-> trace 0.
struct RootCountSpec {
  long long exponent = 0;  // nonnegative
  int rhs_sign = 1;        // +1 or -1
  std::set<long long> excluded_orders;
};

// Exact count, on exponent arithmetic alone.  Solutions of M^N = 1 are the
// N-th roots of unity; of M^N = -1 the primitive d-th roots for the even
// divisors d of 2N with 2N/d odd.  A class of primitive d-th roots under
// inversion has phi(d)/2 elements for d >= 3 and is a single fixed point for
// d <= 2.  Throws PositiveDimensional when N = 0 with rhs +1 (the solution
// set is all of the circle, not finite).
long long count_conjugacy_classes(const RootCountSpec& spec);

enum class Chirality { Right, Left };

// Conjugacy classes of meridional eigenvalues of isolated irreducible
// characters of p/q surgery on a trefoil: the irreducible locus forces
// M^(p - 6q) = (-1)^q for the right-handed trefoil (longitude rule -M^-6)
// and M^(p + 6q) = (-1)^q for the left-handed one.  Orders 1 and 2 are
// always excluded; exclude_nar additionally removes the two order-12
// classes, whose characters are non-abelian reducible rather than
// irreducible.  Requires gcd(|p|, q) = 1, q >= 1.
long long trefoil_surgery_count(long long p, long long q, Chirality chirality, bool exclude_nar);

long long euler_phi(long long n);

}  // namespace floerhp::roots
