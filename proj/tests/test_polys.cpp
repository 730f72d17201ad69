#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "floerhp/polys.hpp"
#include "oracles.hpp"

using namespace floerhp;
using polys::FactoredAPoly;
using polys::IntPoly;
using polys::LaurentPoly2;

namespace {

const IntPoly kTrefoilAlexander({1, -1, 1});

std::vector<long long> power_minus_one(long long n) {
  std::vector<long long> c(n + 1, 0);
  c[0] = -1;
  c[n] = 1;
  return c;
}

}  // namespace

TEST_SUITE("polys") {

TEST_CASE("cyclotomic polynomials") {
  CHECK(polys::cyclotomic(1) == IntPoly({-1, 1}));
  CHECK(polys::cyclotomic(2) == IntPoly({1, 1}));
  CHECK(polys::cyclotomic(4) == IntPoly({1, 0, 1}));
  CHECK(polys::cyclotomic(6) == kTrefoilAlexander);
  CHECK(polys::cyclotomic(12) == IntPoly({1, 0, -1, 0, 1}));
  CHECK_THROWS_AS(polys::cyclotomic(0), PreconditionError);
}

TEST_CASE("cyclotomic(d) divides t^d - 1 exactly up to 60") {
  for (long long d = 1; d <= 60; ++d) {
    const IntPoly target(power_minus_one(d));
    const auto quotient = divide_exact(target, polys::cyclotomic(d));
    REQUIRE_MESSAGE(quotient.has_value(), "d = ", d);
    CHECK(*quotient * polys::cyclotomic(d) == target);
  }
  // And the product over all divisors reassembles t^d - 1.
  for (long long d : {12LL, 30LL, 48LL, 60LL}) {
    IntPoly product = IntPoly::constant(1);
    for (long long e = 1; e <= d; ++e)
      if (d % e == 0) product = product * polys::cyclotomic(e);
    CHECK(product == IntPoly(power_minus_one(d)));
  }
}

TEST_CASE("alexander condition by exact divisibility") {
  CHECK(polys::alexander_condition(kTrefoilAlexander, 7));
  CHECK_FALSE(polys::alexander_condition(kTrefoilAlexander, 12));
  CHECK(polys::alexander_condition(IntPoly::constant(1), 5));
  CHECK(polys::alexander_condition(IntPoly::constant(1), -60));
  CHECK_THROWS_AS(polys::alexander_condition(kTrefoilAlexander, 0), ZeroSurgeryCoefficient);
}

TEST_CASE("alexander condition for the trefoil fails exactly at p = 12k") {
  for (long long p = -200; p <= 200; ++p) {
    if (p == 0) continue;
    CHECK_MESSAGE(polys::alexander_condition(kTrefoilAlexander, p) == (p % 12 != 0), "p = ", p);
  }
}

TEST_CASE("alexander condition agrees with a resultant oracle") {
  // The condition holds iff gcd(delta, t^p' - 1) = 1 over Q, i.e. iff
  // Res(delta, t^p' - 1) != 0.
  for (long long p = 1; p <= 60; ++p) {
    const long long p_prime = (p % 2 == 0) ? p / 2 : p;
    const bool resultant_nonzero =
        oracles::resultant(kTrefoilAlexander.coeffs(), power_minus_one(p_prime)) != 0;
    CHECK_MESSAGE(polys::alexander_condition(kTrefoilAlexander, p) == resultant_nonzero, "p = ", p);
  }
  CHECK(oracles::resultant(kTrefoilAlexander.coeffs(), power_minus_one(7)) != 0);
  CHECK(oracles::resultant(kTrefoilAlexander.coeffs(), power_minus_one(6)) == 0);
}

TEST_CASE("laurent multiplication") {
  const LaurentPoly2 l = LaurentPoly2::var_l();
  const LaurentPoly2 one = LaurentPoly2::monomial(1, 0, 0);
  CHECK(laurent_mul(l - one, one) == l - one);
  // (L + M^-6)(L - M^-12) by hand convolution.
  const LaurentPoly2 a = l + LaurentPoly2::monomial(1, -6, 0);
  const LaurentPoly2 b = l - LaurentPoly2::monomial(1, -12, 0);
  const LaurentPoly2 expected = laurent_mul(l, l) + LaurentPoly2::monomial(1, -6, 1) -
                                LaurentPoly2::monomial(1, -12, 1) -
                                LaurentPoly2::monomial(1, -18, 0);
  CHECK(laurent_mul(a, b) == expected);
  CHECK(laurent_mul(a, LaurentPoly2()) == LaurentPoly2());
  // Cancellation drops the stored term.
  CHECK(((l - one) + (one - l)) == LaurentPoly2());
}

TEST_CASE("connected sums of trefoils reproduce the known A-polynomials") {
  const LaurentPoly2 l = LaurentPoly2::var_l();
  const LaurentPoly2 reducible = l - LaurentPoly2::monomial(1, 0, 0);
  const LaurentPoly2 right = l + LaurentPoly2::monomial(1, -6, 0);
  const LaurentPoly2 left = l + LaurentPoly2::monomial(1, 6, 0);
  const LaurentPoly2 granny_composite = l - LaurentPoly2::monomial(1, -12, 0);

  const FactoredAPoly granny = polys::compose_connected_sum(
      {polys::trefoil_right_summand(), polys::trefoil_right_summand()});
  CHECK(granny.factors == std::vector<LaurentPoly2>{reducible, right, granny_composite});
  CHECK(granny.irr_factors == std::vector<LaurentPoly2>{right, granny_composite});
  CHECK(granny.include_reducible);

  const FactoredAPoly square = polys::compose_connected_sum(
      {polys::trefoil_right_summand(), polys::trefoil_left_summand()});
  // The composite factor collapses to L - 1, a duplicate of the reducible
  // factor, so it appears once in the full list but stays in the
  // irreducible sublist.
  CHECK(square.factors == std::vector<LaurentPoly2>{reducible, right, left});
  CHECK(square.irr_factors == std::vector<LaurentPoly2>{right, left, reducible});

  polys::SummandSpec no_rule = polys::trefoil_right_summand();
  no_rule.longitude.reset();
  CHECK_THROWS_AS(polys::compose_connected_sum({no_rule}), UnsupportedSummand);
}

TEST_CASE("expanded granny product suffers no accidental cancellation") {
  const FactoredAPoly granny = polys::compose_connected_sum(
      {polys::trefoil_right_summand(), polys::trefoil_right_summand()});
  const LaurentPoly2 expanded = expand(granny);
  // (L-1)(L+M^-6)(L-M^-12) by hand: the 2*2*2 products land on eight
  // distinct exponent pairs, so nothing cancels.
  const LaurentPoly2 by_hand(std::map<polys::MLExp, long long>{
      {{0, 3}, 1},    // L^3
      {{-6, 2}, 1},   // L^2 M^-6
      {{0, 2}, -1},   // -L^2
      {{-12, 2}, -1}, // -L^2 M^-12
      {{-12, 1}, 1},  // L M^-12
      {{-6, 1}, -1},  // -L M^-6
      {{-18, 1}, -1}, // -L M^-18
      {{-18, 0}, 1},  // M^-18
  });
  CHECK(expanded == by_hand);
  CHECK(expanded.terms().size() == 8);
}

TEST_CASE("newton slopes") {
  const auto granny = polys::compose_connected_sum(
      {polys::trefoil_right_summand(), polys::trefoil_right_summand()});
  CHECK(newton_slopes(granny) == std::set<Rational>{Rational(0), Rational(6), Rational(12)});
  const auto square = polys::compose_connected_sum(
      {polys::trefoil_right_summand(), polys::trefoil_left_summand()});
  CHECK(newton_slopes(square) == std::set<Rational>{Rational(-6), Rational(0), Rational(6)});

  FactoredAPoly single;
  single.factors = {LaurentPoly2::var_l() - LaurentPoly2::monomial(1, 0, 0)};
  CHECK(newton_slopes(single) == std::set<Rational>{Rational(0)});
}

TEST_CASE("newton slopes of an expanded product match the factorwise set") {
  // The Newton polygon of a product is the Minkowski sum of the factor
  // polygons, so the edge-slope sets coincide.
  const auto granny = polys::compose_connected_sum(
      {polys::trefoil_right_summand(), polys::trefoil_right_summand()});
  FactoredAPoly as_single_factor;
  as_single_factor.factors = {expand(granny)};
  CHECK(newton_slopes(as_single_factor) == newton_slopes(granny));
  const auto square = polys::compose_connected_sum(
      {polys::trefoil_right_summand(), polys::trefoil_left_summand()});
  FactoredAPoly square_expanded;
  square_expanded.factors = {expand(square)};
  CHECK(newton_slopes(square_expanded) == newton_slopes(square));
}

TEST_CASE("newton slopes are invariant under monomial multiples of factors") {
  std::mt19937 rng(42);
  const auto granny = polys::compose_connected_sum(
      {polys::trefoil_right_summand(), polys::trefoil_right_summand()});
  const auto baseline = newton_slopes(granny);
  for (int trial = 0; trial < 30; ++trial) {
    FactoredAPoly scaled = granny;
    for (auto& factor : scaled.factors) {
      const long long sign = (rng() % 2 == 0) ? 1 : -1;
      const long long a = static_cast<long long>(rng() % 9) - 4;
      const long long b = static_cast<long long>(rng() % 9) - 4;
      factor = laurent_mul(factor, LaurentPoly2::monomial(sign, a, b));
    }
    CHECK(newton_slopes(scaled) == baseline);
  }
}

TEST_CASE("coincident surgery slopes of binomial factors") {
  const LaurentPoly2 l = LaurentPoly2::var_l();
  const auto granny_slope = polys::coincident_surgery_slope(l - LaurentPoly2::monomial(1, -12, 0));
  REQUIRE(granny_slope.has_value());
  CHECK(granny_slope->p() == 12);
  CHECK(granny_slope->q() == 1);

  const auto square_slope = polys::coincident_surgery_slope(l - LaurentPoly2::monomial(1, 0, 0));
  REQUIRE(square_slope.has_value());
  CHECK(square_slope->p() == 0);
  CHECK(square_slope->q() == 1);

  CHECK_FALSE(polys::coincident_surgery_slope(l + LaurentPoly2::monomial(1, -6, 0)).has_value());
  CHECK_FALSE(polys::coincident_surgery_slope(l + LaurentPoly2::monomial(1, 6, 0)).has_value());
  // Non-binomial and non-unit shapes are rejected.
  CHECK_FALSE(polys::coincident_surgery_slope(expand(polys::compose_connected_sum(
                  {polys::trefoil_right_summand(), polys::trefoil_right_summand()})))
                  .has_value());
  CHECK_FALSE(polys::coincident_surgery_slope(LaurentPoly2::monomial(2, 0, 1) -
                                              LaurentPoly2::monomial(2, -12, 0))
                  .has_value());
}

TEST_CASE("json forms") {
  CHECK(to_json(kTrefoilAlexander).dump() == "[1,-1,1]");
  const LaurentPoly2 f = LaurentPoly2::var_l() - LaurentPoly2::monomial(1, -12, 0);
  CHECK(to_json(f).dump() == "[[-12,0,-1],[0,1,1]]");
  CHECK(polys::to_string(f) == "L-M^-12");
  CHECK(polys::to_string(LaurentPoly2::var_l() + LaurentPoly2::monomial(1, 6, 0)) == "L+M^6");
}

}  // TEST_SUITE
