#include "floerhp/selftest.hpp"

#include <functional>
#include <numeric>
#include <sstream>

#include "floerhp/casson.hpp"
#include "floerhp/census.hpp"
#include "floerhp/floer.hpp"
#include "floerhp/graded.hpp"
#include "floerhp/polys.hpp"
#include "floerhp/roots.hpp"

namespace floerhp::selftest {

namespace {

using casson::Slope;
using roots::Chirality;

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  template <typename T>
  void check_equal(const T& actual, const T& expected, const std::string& context) {
    ++result_.checks;
    if (actual == expected || !result_.passed) return;
    result_.passed = false;
    std::ostringstream message;
    message << context << ": got " << actual << ", want " << expected;
    result_.detail = message.str();
  }

  void check(bool condition, const std::string& context) {
    ++result_.checks;
    if (condition || !result_.passed) return;
    result_.passed = false;
    result_.detail = context;
  }

  void note(std::string text) {
    if (result_.passed) result_.detail = std::move(text);
  }

  SuiteResult finish() && { return std::move(result_); }

 private:
  SuiteResult result_;
};

void for_each_reduced_slope(long long p_max, long long q_max,
                            const std::function<void(long long, long long)>& body) {
  for (long long q = 1; q <= q_max; ++q)
    for (long long p = -p_max; p <= p_max; ++p)
      if (std::gcd(p < 0 ? -p : p, q) == 1) body(p, q);
}

bool admissible_trefoil_slope(const casson::KnotRecord& record, long long p, long long q) {
  if (p % 12 == 0) return false;
  return !record.boundary_slopes.contains(Rational(p, q));
}

SuiteResult trefoil_oracle_suite(long long p_max, long long q_max) {
  Suite suite("trefoil lambda vs root-counting oracle");
  for_each_reduced_slope(p_max, q_max, [&](long long p, long long q) {
    const Slope s(p, q);
    if (admissible_trefoil_slope(casson::trefoil_right(), p, q)) {
      suite.check_equal(casson::casson_invariant(casson::trefoil_right(), s),
                        roots::trefoil_surgery_count(p, q, Chirality::Right, true),
                        "trefoil-r " + std::to_string(p) + "/" + std::to_string(q));
      suite.check_equal(rank_at(casson::hp_two_bridge(casson::trefoil_right(), s), 0),
                        roots::trefoil_surgery_count(p, q, Chirality::Right, true),
                        "two-bridge rank " + std::to_string(p) + "/" + std::to_string(q));
    }
    if (admissible_trefoil_slope(casson::trefoil_left(), p, q)) {
      suite.check_equal(casson::casson_invariant(casson::trefoil_left(), s),
                        roots::trefoil_surgery_count(p, q, Chirality::Left, true),
                        "trefoil-l " + std::to_string(p) + "/" + std::to_string(q));
    }
  });
  return std::move(suite).finish();
}

SuiteResult root_count_closed_forms_suite(long long p_max, long long q_max) {
  Suite suite("root-count closed forms");
  for_each_reduced_slope(p_max, q_max, [&](long long p, long long q) {
    const long long count = roots::trefoil_surgery_count(p, q, Chirality::Right, true);
    const long long n = std::abs(p - 6 * q);
    const std::string context = std::to_string(p) + "/" + std::to_string(q);
    if (p % 2 != 0) {
      suite.check_equal(count, (n - 1) / 2, "odd p " + context);
    } else if (p % 12 != 0) {
      suite.check_equal(count, n / 2, "even p " + context);
    } else if (p != 12 * q) {
      suite.check_equal(count, n / 2 - 2, "12 | p " + context);
    }
    // Mirror: the left-handed count is the right-handed count at -p.
    suite.check_equal(roots::trefoil_surgery_count(p, q, Chirality::Left, true),
                      roots::trefoil_surgery_count(-p, q, Chirality::Right, true),
                      "mirror " + context);
  });
  return std::move(suite).finish();
}

SuiteResult consistency_suite(long long p_max, long long q_max, long long* expected_discrepancies) {
  Suite suite("census vs closed-form consistency");
  long long discrepancies = 0;
  for_each_reduced_slope(p_max, q_max, [&](long long p, long long q) {
    const Slope s(p, q);
    const std::string context = std::to_string(p) + "/" + std::to_string(q);
    const auto granny = floer::hp_consistency(floer::Family::Granny, s);
    suite.check(granny.zero_delta(), "granny delta nonzero at " + context);
    const auto square = floer::hp_consistency(floer::Family::Square, s);
    if (p % 12 == 0 && p != 0) {
      ++discrepancies;
      const std::map<int, long long> expected{{-1, -2}};
      suite.check(square.delta == expected, "square delta != {-1: -2} at " + context);
    } else {
      suite.check(square.zero_delta(), "square delta nonzero at " + context);
    }
  });
  // Count the slopes that must show the documented delta by arithmetic
  // alone and confirm the sweep found exactly those.
  long long expected_count = 0;
  for (long long q = 1; q <= q_max; ++q)
    for (long long p = 12; p <= p_max; p += 12)
      if (std::gcd(p, q) == 1) expected_count += 2;  // +-p
  suite.check_equal(discrepancies, expected_count, "discrepancy census");
  *expected_discrepancies = discrepancies;
  suite.note("expected square discrepancies (p = 12k != 0): " + std::to_string(discrepancies));
  return std::move(suite).finish();
}

SuiteResult apoly_suite() {
  Suite suite("A-polynomial factorizations");
  using polys::LaurentPoly2;
  const LaurentPoly2 l = LaurentPoly2::var_l();
  const auto granny =
      polys::compose_connected_sum({polys::trefoil_right_summand(), polys::trefoil_right_summand()});
  const std::vector<LaurentPoly2> granny_expected = {
      l - LaurentPoly2::monomial(1, 0, 0), l + LaurentPoly2::monomial(1, -6, 0),
      l - LaurentPoly2::monomial(1, -12, 0)};
  suite.check(granny.factors == granny_expected, "granny factors");
  const auto square =
      polys::compose_connected_sum({polys::trefoil_right_summand(), polys::trefoil_left_summand()});
  const std::vector<LaurentPoly2> square_expected = {
      l - LaurentPoly2::monomial(1, 0, 0), l + LaurentPoly2::monomial(1, -6, 0),
      l + LaurentPoly2::monomial(1, 6, 0)};
  suite.check(square.factors == square_expected, "square factors");
  suite.check(newton_slopes(granny) == std::set<Rational>{Rational(0), Rational(6), Rational(12)},
              "granny newton slopes");
  suite.check(newton_slopes(square) == std::set<Rational>{Rational(-6), Rational(0), Rational(6)},
              "square newton slopes");
  return std::move(suite).finish();
}

SuiteResult cubic_surface_suite() {
  Suite suite("cubic surface and longitude trace");
  using census::QuadExt;
  const QuadExt sqrt3 = QuadExt::sqrt3();
  std::vector<QuadExt> grid_values;
  for (long long a = -2; a <= 2; ++a)
    for (long long b = -1; b <= 1; ++b) grid_values.emplace_back(Rational(a), Rational(b));
  long long singular = 0;
  for (const auto& x : grid_values)
    for (const auto& y : grid_values)
      for (const auto& z : grid_values)
        if (census::verify_cubic_point(x, y, z) == census::SurfacePointClass::Singular) {
          ++singular;
          suite.check((x == sqrt3 && y == -sqrt3 && z == QuadExt(2)) ||
                          (x == -sqrt3 && y == sqrt3 && z == QuadExt(2)),
                      "unexpected singular point");
        }
  suite.check(singular == 2, "cubic surface must have exactly two singular grid points");
  for (long long x = -5; x <= 5; ++x) {
    const Rational value = census::longitude_trace(Rational(x), Rational(x * x - 1));
    const Rational expected =
        Rational(-x * x * x * x * x * x + 6 * x * x * x * x - 9 * x * x + 2);
    suite.check(value == expected, "longitude trace on y = x^2 - 1 at x = " + std::to_string(x));
    suite.check(census::longitude_trace(Rational(x), Rational(2)) == Rational(2),
                "longitude trace on y = 2 at x = " + std::to_string(x));
  }
  return std::move(suite).finish();
}

SuiteResult uct_suite() {
  Suite suite("universal coefficients across the space table");
  using graded::Coeff;
  for (graded::SpaceType space : graded::kAllSpaceTypes) {
    const auto integral = graded::cohomology(space, Coeff::Z);
    const auto mod_two = graded::cohomology(space, Coeff::F2);
    std::set<int> degrees;
    for (const auto& [degree, entry] : integral.entries()) {
      degrees.insert(degree);
      degrees.insert(degree - 1);
    }
    for (const auto& [degree, entry] : mod_two.entries()) degrees.insert(degree);
    for (int degree : degrees) {
      const long long expected = rank_at(integral, degree) + torsion_count_at(integral, degree) +
                                 torsion_count_at(integral, degree + 1);
      suite.check_equal(rank_at(mod_two, degree), expected,
                        std::string(to_string(space)) + " degree " + std::to_string(degree));
    }
  }
  return std::move(suite).finish();
}

SuiteResult hp_sharp_suite(long long p_max, long long q_max) {
  Suite suite("framed cohomology degree-0 rank");
  for_each_reduced_slope(p_max, q_max, [&](long long p, long long q) {
    if (p == 0 || !admissible_trefoil_slope(casson::trefoil_right(), p, q)) return;
    const Slope s(p, q);
    const auto sharp = floer::hp_sharp(casson::trefoil_right(), s);
    const long long sigma = s.sigma();
    const long long expected = (2 - sigma) + (std::abs(p) - 2 + sigma) / 2 +
                               roots::trefoil_surgery_count(p, q, Chirality::Right, true);
    suite.check_equal(rank_at(sharp, 0), expected,
                      "degree-0 rank at " + std::to_string(p) + "/" + std::to_string(q));
  });
  return std::move(suite).finish();
}

SuiteResult limit_suite() {
  Suite suite("limit invariants");
  using floer::Family;
  suite.check(floer::limit_rank(Family::Granny, 0, 1) == Rational(12), "granny degree 0");
  suite.check(floer::limit_rank(Family::Granny, -1, 1) == Rational(6), "granny degree -1");
  suite.check(floer::limit_rank(Family::Square, 0, 1) == Rational(6), "square degree 0");
  suite.check(floer::limit_rank(Family::Square, -1, 1) == Rational(0), "square degree -1");
  for (long long q : {101LL, 103LL}) {
    const Slope s(1, q);
    for (Family family : {Family::Granny, Family::Square}) {
      const auto group = floer::hp_closed_form(family, s);
      for (int degree : {0, -1}) {
        const auto form = floer::asymptotic_rank_form(family, degree, 1);
        suite.check(Rational(rank_at(group, degree)) == form.slope * q + form.intercept,
                    "finite-q linearity at q = " + std::to_string(q));
      }
    }
  }
  return std::move(suite).finish();
}

SuiteResult triangle_suite() {
  Suite suite("surgery triangle obstruction");
  const auto low = floer::hp_sharp(casson::trefoil_right(), Slope(2, 1));
  const auto high = floer::hp_sharp(casson::trefoil_right(), Slope(3, 1));
  // Robust under every protected window contained in {-1, 0, 1}.
  const std::vector<int> window_pool = {-1, 0, 1};
  for (int mask = 0; mask < 8; ++mask) {
    std::set<int> window;
    for (int bit = 0; bit < 3; ++bit)
      if (mask & (1 << bit)) window.insert(window_pool[bit]);
    const auto verdict = floer::triangle_check(low, high, window);
    suite.check(!verdict.compatible, "verdict must be obstructed");
    suite.check(verdict.obstruction_degrees.contains(-2), "degree -2 must obstruct");
  }
  suite.check_equal(rank_at(low, -2), 0LL, "rank at degree -2, even slope");
  suite.check_equal(rank_at(high, -2), 1LL, "rank at degree -2, odd slope");
  return std::move(suite).finish();
}

}  // namespace

bool Report::all_passed() const {
  for (const auto& suite : suites)
    if (!suite.passed) return false;
  return true;
}

Report run(bool quick) {
  const long long oracle_p = quick ? 50 : 99;
  const long long oracle_q = quick ? 10 : 20;
  const long long sweep_p = quick ? 50 : 200;
  const long long sweep_q = quick ? 10 : 50;

  Report report;
  report.suites.push_back(trefoil_oracle_suite(oracle_p, oracle_q));
  report.suites.push_back(root_count_closed_forms_suite(oracle_p, oracle_q));
  report.suites.push_back(consistency_suite(sweep_p, sweep_q, &report.expected_discrepancies));
  report.suites.push_back(apoly_suite());
  report.suites.push_back(cubic_surface_suite());
  report.suites.push_back(uct_suite());
  report.suites.push_back(hp_sharp_suite(oracle_p, oracle_q));
  report.suites.push_back(limit_suite());
  report.suites.push_back(triangle_suite());
  return report;
}

}  // namespace floerhp::selftest
