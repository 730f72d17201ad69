#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "floerhp/errors.hpp"
#include "floerhp/rational.hpp"
#include "floerhp/slope.hpp"

#include <nlohmann/json_fwd.hpp>

namespace floerhp::polys {

// Univariate polynomial over Z, coefficients indexed by exponent of t.
// Normalized: the leading coefficient is nonzero unless the polynomial is
// zero (empty coefficient list).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<long long> coeffs);

  static IntPoly constant(long long c) { return IntPoly({c}); }

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  long long coeff(int exponent) const;
  const std::vector<long long>& coeffs() const { return coeffs_; }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);

 private:
  std::vector<long long> coeffs_;
};

// Quotient when den divides num exactly over Z, nullopt otherwise.
std::optional<IntPoly> divide_exact(const IntPoly& num, const IntPoly& den);

bool divides(const IntPoly& den, const IntPoly& num);

// The d-th cyclotomic polynomial, by iterated exact division of t^d - 1 by
// the cyclotomic polynomials of the proper divisors of d.
IntPoly cyclotomic(long long d);

// True iff no p'-th root of unity is a root of delta, where p' = |p| for p
// odd and |p|/2 for p even.  Decided by exact divisibility: a primitive d-th
// root of unity is a root of delta iff cyclotomic(d) | delta, so the test
// runs over the divisors d of p'.
bool alexander_condition(const IntPoly& delta, long long p);

// Exponent pair of a two-variable Laurent monomial M^m L^l.
struct MLExp {
  long long m = 0;
  long long l = 0;
  friend auto operator<=>(const MLExp&, const MLExp&) = default;
};

// Laurent polynomial in the meridian/longitude eigenvalues M, L with integer
// coefficients.  No zero coefficients are stored; the empty map is zero.
class LaurentPoly2 {
 public:
  LaurentPoly2() = default;
  explicit LaurentPoly2(std::map<MLExp, long long> terms);

  static LaurentPoly2 monomial(long long coeff, long long m_exp, long long l_exp);
  // The variables themselves.
  static LaurentPoly2 var_l() { return monomial(1, 0, 1); }
  static LaurentPoly2 var_m() { return monomial(1, 1, 0); }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  const std::map<MLExp, long long>& terms() const { return terms_; }
  long long coeff(MLExp e) const;

  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;
  friend LaurentPoly2 operator+(const LaurentPoly2& a, const LaurentPoly2& b);
  friend LaurentPoly2 operator-(const LaurentPoly2& a, const LaurentPoly2& b);
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);

 private:
  std::map<MLExp, long long> terms_;
};

// Exact product; distributive convolution of exponent pairs.
LaurentPoly2 laurent_mul(const LaurentPoly2& a, const LaurentPoly2& b);

// Monomial normalization used for duplicate-factor detection: shift the
// lowest exponents to zero and make the leading (lexicographically largest)
// coefficient positive.
LaurentPoly2 monomial_normalize(const LaurentPoly2& f);

// A longitude eigenvalue rule of the form sign * M^exponent.
struct LongitudeRule {
  int sign = -1;       // +1 or -1
  long long exponent = 0;
};

// One connected-sum factor: its irreducible A-polynomial factors plus the
// longitude eigenvalue rule on those factors.  Summands without a monomial
// longitude rule cannot enter compose_connected_sum.
struct SummandSpec {
  std::string name;
  std::vector<LaurentPoly2> irr_factors;
  std::optional<LongitudeRule> longitude;
};

// Right-handed trefoil: irreducible factor L + M^-6, longitude rule -M^-6.
SummandSpec trefoil_right_summand();
// Left-handed trefoil: irreducible factor L + M^6, longitude rule -M^6.
SummandSpec trefoil_left_summand();

// A-polynomial as a product of Laurent factors, with the sublist cut out by
// the irreducible locus alone.  include_reducible marks the (L - 1) factor.
struct FactoredAPoly {
  std::vector<LaurentPoly2> factors;
  bool include_reducible = true;
  std::vector<LaurentPoly2> irr_factors;
};

// Product over the factor list.
LaurentPoly2 expand(const FactoredAPoly& a);

// A-polynomial of a connected sum of summands with monomial longitude rules:
//   (L - 1) * (each summand's irreducible factors) * (L - e1 e2 M^(k1+k2)),
// repeated factors omitted (equality tested after monomial normalization).
// The irreducible sublist drops the reducible (L - 1) factor but keeps the
// composite factor even when it coincides with L - 1.
FactoredAPoly compose_connected_sum(const std::vector<SummandSpec>& summands);

// Boundary-slope candidates read off the Newton polygons of the factors: the
// values (delta M-exponent)/(delta L-exponent) over polygon edges that are
// not horizontal.  Calibrated so the factor L + M^-6 yields slope 6.
std::set<Rational> newton_slopes(const FactoredAPoly& a);

// For a binomial factor L - e M^k: the surgery curve M^p L^q = 1 contains the
// factor's zero set identically exactly when e = +1, with p = -k, q = 1.
// For e = -1 no reduced slope works (q would have to be even), and any
// non-binomial factor yields nullopt.
std::optional<casson::Slope> coincident_surgery_slope(const LaurentPoly2& factor);

// JSON: IntPoly as an integer array (ascending exponents); LaurentPoly2 as
// [mExp, lExp, coeff] triples sorted lexicographically.
nlohmann::ordered_json to_json(const IntPoly& p);
nlohmann::ordered_json to_json(const LaurentPoly2& p);

// Human-readable rendering such as "L-M^-12".
std::string to_string(const LaurentPoly2& p);

}  // namespace floerhp::polys
