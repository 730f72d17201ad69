#pragma once

#include <numeric>

#include "floerhp/errors.hpp"
#include "floerhp/rational.hpp"

namespace floerhp::casson {

// A reduced surgery coefficient p/q with q >= 1 and gcd(|p|, q) = 1.
class Slope {
 public:
  Slope(long long p, long long q) : p_(p), q_(q) {
    if (q < 1 || std::gcd(p < 0 ? -p : p, q) != 1) throw NotCoprime(p, q);
  }

  long long p() const { return p_; }
  long long q() const { return q_; }

  // Parity of p, the sigma(p) of the surgery formulas.
  int sigma() const { return static_cast<int>(((p_ % 2) + 2) % 2); }

  // p' = |p| for p odd, |p|/2 for p even; the order bound in the
  // root-of-unity admissibility test.
  long long p_prime() const {
    long long a = p_ < 0 ? -p_ : p_;
    return sigma() == 1 ? a : a / 2;
  }

  Rational as_rational() const { return Rational(p_, q_); }

  friend bool operator==(const Slope&, const Slope&) = default;

 private:
  long long p_;
  long long q_;
};

}  // namespace floerhp::casson
