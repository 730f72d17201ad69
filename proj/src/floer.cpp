#include "floerhp/floer.hpp"

#include <cstdlib>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace floerhp::floer {

using graded::Coeff;
using graded::GradedGroup;

const char* to_string(Family family) {
  return family == Family::Granny ? "granny" : "square";
}

const graded::GradedGroup& ContributionTable::row(census::ComponentType type) const {
  switch (type) {
    case census::ComponentType::Point: return point;
    case census::ComponentType::Cstar: return cstar;
    case census::ComponentType::CstarMinusPoint: return cstar_minus_point;
    case census::ComponentType::SurfaceS: return surface_s;
  }
  throw InternalError("floer: unknown component type");
}

const ContributionTable& ContributionTable::standard() {
  static const ContributionTable table = {
      GradedGroup(Coeff::F2, {{0, {1, {}}}}),
      GradedGroup(Coeff::F2, {{0, {1, {}}}, {-1, {1, {}}}}),
      GradedGroup(Coeff::F2, {{0, {1, {}}}, {-1, {2, {}}}}),
      GradedGroup(Coeff::F2, {{1, {4, {}}}, {0, {2, {}}}, {-2, {1, {}}}}),
  };
  return table;
}

GradedGroup hp_from_census(const census::ComponentCensus& c, const ContributionTable& table) {
  GradedGroup total(Coeff::F2);
  for (census::ComponentType type : census::kAllComponentTypes)
    total = direct_sum(total, scale(table.row(type), c.count(type)));
  return total;
}

GradedGroup hp_from_census(const census::ComponentCensus& c) {
  return hp_from_census(c, ContributionTable::standard());
}

namespace {

// coeff * |q_weight * q + p_weight * p|
struct AbsTerm {
  Rational coeff;
  long long q_weight;
  long long p_weight;
};

struct RankFormula {
  std::vector<AbsTerm> terms;
  Rational constant;
};

Rational evaluate(const RankFormula& formula, long long p, long long q) {
  Rational value = formula.constant;
  for (const auto& term : formula.terms)
    value += term.coeff * boost::abs(Rational(term.q_weight * q + term.p_weight * p));
  return value;
}

// Once q exceeds |p|, every |q_weight*q + p_weight*p| with q_weight > 0
// resolves to q_weight*q + p_weight*p and the formula is affine in q.
LinearForm asymptotic(const RankFormula& formula, long long p) {
  LinearForm form{Rational(0), formula.constant};
  for (const auto& term : formula.terms) {
    if (term.q_weight > 0) {
      form.slope += term.coeff * term.q_weight;
      form.intercept += term.coeff * (term.p_weight * p);
    } else {
      form.intercept += term.coeff * boost::abs(Rational(term.p_weight * p));
    }
  }
  return form;
}

struct ClosedForm {
  RankFormula degree0;
  RankFormula degree_minus1;
};

const Rational kHalf(1, 2);

// The non-surface cases, selected by p alone.
ClosedForm generic_closed_form(Family family, long long p) {
  ClosedForm form;
  if (family == Family::Granny) {
    form.degree0.terms = {{Rational(1), 6, -1}, {kHalf, 12, -1}};
    form.degree_minus1.terms = {{kHalf, 12, -1}};
    if (p % 2 != 0) {
      form.degree0.constant = Rational(-3, 2);
      form.degree_minus1.constant = -kHalf;
    } else if (p % 12 != 0) {
      form.degree0.constant = Rational(-1);
      form.degree_minus1.constant = Rational(-1);
    } else {
      form.degree0.constant = Rational(-5);
      form.degree_minus1.constant = Rational(1);
    }
  } else {
    form.degree0.terms = {{kHalf, 6, -1}, {kHalf, 6, 1}, {kHalf, 0, 1}};
    form.degree_minus1.terms = {{kHalf, 0, 1}};
    if (p % 2 != 0) {
      form.degree0.constant = Rational(-3, 2);
      form.degree_minus1.constant = -kHalf;
    } else if (p % 12 != 0) {
      form.degree0.constant = Rational(-1);
      form.degree_minus1.constant = Rational(-1);
    } else {
      form.degree0.constant = Rational(-5);
      form.degree_minus1.constant = Rational(3);
    }
  }
  return form;
}

bool is_surface_case(Family family, const casson::Slope& s) {
  return family == Family::Granny ? s.p() == 12 * s.q() : s.p() == 0;
}

GradedGroup surface_case_group() {
  return GradedGroup(Coeff::F2, {{1, {4, {}}}, {0, {4, {}}}, {-2, {1, {}}}});
}

long long closed_form_rank(const RankFormula& formula, const casson::Slope& s, int degree) {
  const Rational value = evaluate(formula, s.p(), s.q());
  if (!is_integer(value) || value < Rational(0))
    throw NonIntegerResult("closed-form rank at degree " + std::to_string(degree) + " = " +
                           format_rational(value));
  return as_integer(value);
}

}  // namespace

GradedGroup hp_closed_form(Family family, const casson::Slope& s) {
  if (is_surface_case(family, s)) return surface_case_group();
  const ClosedForm form = generic_closed_form(family, s.p());
  return GradedGroup(Coeff::F2, {{0, {closed_form_rank(form.degree0, s, 0), {}}},
                                 {-1, {closed_form_rank(form.degree_minus1, s, -1), {}}}});
}

GradedGroup hp_granny(const casson::Slope& s) { return hp_closed_form(Family::Granny, s); }

GradedGroup hp_square(const casson::Slope& s) { return hp_closed_form(Family::Square, s); }

census::ComponentCensus family_census(Family family, const casson::Slope& s) {
  return family == Family::Granny ? census::granny_census(s) : census::square_census(s);
}

ConsistencyReport hp_consistency(Family family, const casson::Slope& s) {
  ConsistencyReport report{hp_closed_form(family, s), hp_from_census(family_census(family, s)), {}};
  std::set<int> degrees;
  for (const auto& [degree, entry] : report.closed.entries()) degrees.insert(degree);
  for (const auto& [degree, entry] : report.assembled.entries()) degrees.insert(degree);
  for (int degree : degrees) {
    const long long diff = rank_at(report.assembled, degree) - rank_at(report.closed, degree);
    if (diff != 0) report.delta[degree] = diff;
  }
  return report;
}

GradedGroup hp_sharp(const casson::KnotRecord& k, const casson::Slope& s) {
  const long long lambda = casson_invariant(k, s);
  const int sigma = s.sigma();
  const Rational abelian_orbits = Rational(std::abs(s.p()) - 2 + sigma, 2);
  if (!is_integer(abelian_orbits) || abelian_orbits < Rational(0))
    throw NonIntegerResult("abelian orbit count = " + format_rational(abelian_orbits));
  using graded::SpaceType;
  GradedGroup result = scale(graded::cohomology(SpaceType::Point, Coeff::Z), 2 - sigma);
  result = direct_sum(result, scale(shift(graded::cohomology(SpaceType::CP1, Coeff::Z), 2),
                                    as_integer(abelian_orbits)));
  result = direct_sum(result, scale(shift(graded::cohomology(SpaceType::PSL2C, Coeff::Z), 3), lambda));
  return result;
}

TriangleVerdict triangle_check(const GradedGroup& g_low, const GradedGroup& g_high,
                               const std::set<int>& protected_degrees) {
  if (g_low.coeff() != g_high.coeff()) throw CoefficientMismatch();
  TriangleVerdict verdict;
  std::set<int> degrees;
  for (const auto& [degree, entry] : g_low.entries()) degrees.insert(degree);
  for (const auto& [degree, entry] : g_high.entries()) degrees.insert(degree);
  for (int degree : degrees) {
    if (protected_degrees.contains(degree)) continue;
    if (rank_at(g_low, degree) != rank_at(g_high, degree)) verdict.obstruction_degrees.insert(degree);
  }
  verdict.compatible = verdict.obstruction_degrees.empty();
  return verdict;
}

LinearForm asymptotic_rank_form(Family family, int degree, long long p) {
  if (degree != 0 && degree != -1) throw UnsupportedDegree(degree);
  if (p == 0) throw PreconditionError("limit invariants need a fixed nonzero p");
  const ClosedForm form = generic_closed_form(family, p);
  return asymptotic(degree == 0 ? form.degree0 : form.degree_minus1, p);
}

Rational limit_rank(Family family, int degree, long long p) {
  return asymptotic_rank_form(family, degree, p).slope;
}

nlohmann::ordered_json to_json(const ConsistencyReport& report) {
  nlohmann::ordered_json out;
  out["closed"] = graded::to_json(report.closed);
  out["assembled"] = graded::to_json(report.assembled);
  auto& delta = out["delta"] = nlohmann::ordered_json::object();
  for (auto it = report.delta.rbegin(); it != report.delta.rend(); ++it)
    delta[std::to_string(it->first)] = it->second;
  return out;
}

nlohmann::ordered_json to_json(const TriangleVerdict& verdict) {
  nlohmann::ordered_json out;
  out["compatible"] = verdict.compatible;
  out["obstruction_degrees"] =
      std::vector<int>(verdict.obstruction_degrees.begin(), verdict.obstruction_degrees.end());
  return out;
}

}  // namespace floerhp::floer
