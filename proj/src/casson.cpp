#include "floerhp/casson.hpp"

namespace floerhp::casson {

const KnotRecord& trefoil_right() {
  static const KnotRecord record = [] {
    KnotRecord k;
    k.name = "trefoil-r";
    k.alexander = polys::IntPoly({1, -1, 1});
    k.two_bridge = TwoBridgeParams{3, 1};
    k.boundary_slopes = {Rational(0), Rational(6)};
    k.seminorm.entries = {{Rational(1), 6, 1}};
    k.e0 = Rational(0);
    k.e1 = Rational(1, 2);
    k.small = true;
    return k;
  }();
  return record;
}

const KnotRecord& trefoil_left() {
  static const KnotRecord record = [] {
    KnotRecord k;
    k.name = "trefoil-l";
    k.alexander = polys::IntPoly({1, -1, 1});
    k.two_bridge = TwoBridgeParams{3, -1};
    k.boundary_slopes = {Rational(0), Rational(-6)};
    k.seminorm.entries = {{Rational(1), -6, 1}};
    k.e0 = Rational(0);
    k.e1 = Rational(1, 2);
    k.small = true;
    return k;
  }();
  return record;
}

Rational total_seminorm(const SeminormSpec& spec, const Slope& s) {
  Rational total(0);
  for (const auto& entry : spec.entries)
    total += entry.coeff * boost::abs(Rational(s.p() * entry.b - s.q() * entry.a));
  return total;
}

namespace {

void check_admissible(const KnotRecord& k, const Slope& s, bool check_irregular) {
  if (k.boundary_slopes.contains(s.as_rational()))
    throw NonAdmissible(AdmissibilityFailure::BoundarySlope);
  if (check_irregular && k.irregular_slopes.contains(s.as_rational()))
    throw NonAdmissible(AdmissibilityFailure::IrregularSlope);
  if (!polys::alexander_condition(k.alexander, s.p()))
    throw NonAdmissible(AdmissibilityFailure::AlexanderRoot);
}

long long integral_count(const Rational& value, const std::string& what) {
  if (!is_integer(value) || value < Rational(0))
    throw NonIntegerResult(what + " = " + format_rational(value));
  return as_integer(value);
}

graded::GradedGroup free_in_degree_zero(long long rank) {
  return graded::GradedGroup(graded::Coeff::Z, {{0, {rank, {}}}});
}

}  // namespace

long long casson_invariant(const KnotRecord& k, const Slope& s) {
  check_admissible(k, s, /*check_irregular=*/true);
  const Rational lambda =
      total_seminorm(k.seminorm, s) / 2 - (s.sigma() == 0 ? k.e0 : k.e1);
  return integral_count(lambda, "lambda(" + k.name + ")");
}

graded::GradedGroup hp_small_knot(const KnotRecord& k, const Slope& s) {
  if (!k.small) throw NotSmallKnot(k.name);
  return free_in_degree_zero(casson_invariant(k, s));
}

graded::GradedGroup hp_two_bridge(const KnotRecord& k, const Slope& s) {
  if (!k.two_bridge) throw NotTwoBridge(k.name);
  check_admissible(k, s, /*check_irregular=*/false);
  Rational rank = total_seminorm(k.seminorm, s) / 2;
  if (s.sigma() == 1) rank -= Rational(k.two_bridge->alpha - 1, 4);
  return free_in_degree_zero(integral_count(rank, "rank HP(" + k.name + ")"));
}

}  // namespace floerhp::casson
