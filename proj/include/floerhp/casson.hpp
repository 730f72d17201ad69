#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "floerhp/graded.hpp"
#include "floerhp/polys.hpp"
#include "floerhp/rational.hpp"
#include "floerhp/slope.hpp"

namespace floerhp::casson {

// One Culler-Shalen seminorm: weight * |p*b - q*a| vanishes exactly on the
// kernel slope a/b.
struct SeminormEntry {
  Rational coeff;   // positive weight m_i
  long long a = 0;  // kernel slope a/b in lowest terms, b >= 1
  long long b = 1;
};

struct SeminormSpec {
  std::vector<SeminormEntry> entries;
};

struct TwoBridgeParams {
  long long alpha = 0;  // odd, >= 3
  long long beta = 0;   // gcd(alpha, beta) = 1
};

// Ingested knot data.  Seminorm weights, correction terms and boundary
// slopes are external inputs; only the trefoil records are validated against
// the root-counting oracle, everything else is checked for shape
// (half-integrality, coprimality) and integer-valuedness of the results.
struct KnotRecord {
  std::string name;
  polys::IntPoly alexander;
  std::optional<TwoBridgeParams> two_bridge;
  std::set<Rational> boundary_slopes;
  std::set<Rational> irregular_slopes;
  SeminormSpec seminorm;
  Rational e0 = Rational(0);  // correction for p even
  Rational e1 = Rational(0);  // correction for p odd
  bool small = false;
};

// Built-in records.  The right-handed trefoil is calibrated as seminorm
// [(1, 6/1)], E0 = 0, E1 = 1/2, which the oracle sweep validates; the
// left-handed record is its mirror.
const KnotRecord& trefoil_right();
const KnotRecord& trefoil_left();

// Total Culler-Shalen seminorm: sum of coeff * |p*b - q*a| over the entries.
Rational total_seminorm(const SeminormSpec& spec, const Slope& s);

// The SL(2,C) Casson invariant of p/q surgery via the surgery formula
// (1/2) ||p/q||_T - E_sigma(p), for admissible slopes: not a boundary slope,
// not an ingested irregular slope, and no p'-th root of unity a root of the
// Alexander polynomial.  A non-integral or negative result means the
// ingested data is inconsistent and raises NonIntegerResult.
long long casson_invariant(const KnotRecord& k, const Slope& s);

// HP of surgery on a small knot: Z^lambda concentrated in degree 0.
graded::GradedGroup hp_small_knot(const KnotRecord& k, const Slope& s);

// HP of surgery on a two-bridge knot K(alpha, beta):
//   Z^((1/2)||p/q||_T)                     in degree 0, p even,
//   Z^((1/2)||p/q||_T - (alpha-1)/4)       in degree 0, p odd,
// requiring only that p/q is not a boundary slope and the Alexander
// condition holds (no irregular-slope hypothesis).
graded::GradedGroup hp_two_bridge(const KnotRecord& k, const Slope& s);

}  // namespace floerhp::casson
