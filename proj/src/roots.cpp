#include "floerhp/roots.hpp"

#include <cstdlib>
#include <numeric>
#include <vector>

namespace floerhp::roots {

long long euler_phi(long long n) {
  long long result = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::vector<long long> divisors(long long n) {
  std::vector<long long> small, large;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Inversion pairs up the phi(d) primitive d-th roots for d >= 3; M = +-1 are
// its fixed points.
long long classes_of_order(long long d) { return d <= 2 ? 1 : euler_phi(d) / 2; }

}  // namespace

long long count_conjugacy_classes(const RootCountSpec& spec) {
  const long long n = spec.exponent;
  if (n < 0) throw PreconditionError("count_conjugacy_classes: negative exponent");
  if (n == 0) {
    if (spec.rhs_sign == 1) throw PositiveDimensional();
    return 0;  // 1 != -1
  }
  long long total = 0;
  if (spec.rhs_sign == 1) {
    for (long long d : divisors(n))
      if (!spec.excluded_orders.contains(d)) total += classes_of_order(d);
  } else {
    // M^n = -1 holds for a primitive d-th root iff d | 2n and d does not
    // divide n, i.e. d is even with 2n/d odd.
    for (long long d : divisors(2 * n)) {
      if (n % d == 0) continue;
      if (!spec.excluded_orders.contains(d)) total += classes_of_order(d);
    }
  }
  return total;
}

long long trefoil_surgery_count(long long p, long long q, Chirality chirality, bool exclude_nar) {
  if (q < 1 || std::gcd(p < 0 ? -p : p, q) != 1) throw NotCoprime(p, q);
  const long long shifted = chirality == Chirality::Right ? p - 6 * q : p + 6 * q;
  RootCountSpec spec;
  spec.exponent = std::abs(shifted);
  spec.rhs_sign = (q % 2 == 1) ? -1 : 1;
  spec.excluded_orders = {1, 2};
  if (exclude_nar) spec.excluded_orders.insert(12);
  // exponent 0 with rhs +1 would need p = -+6q with q even, impossible for a
  // reduced slope, so PositiveDimensional cannot escape here.
  return count_conjugacy_classes(spec);
}

}  // namespace floerhp::roots
