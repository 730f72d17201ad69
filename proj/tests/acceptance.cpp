// Acceptance suite: every numbered criterion prints one PASS/FAIL line and
// the process exits with the number of failures.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "floerhp/casson.hpp"
#include "floerhp/census.hpp"
#include "floerhp/floer.hpp"
#include "floerhp/graded.hpp"
#include "floerhp/polys.hpp"
#include "floerhp/roots.hpp"

using namespace floerhp;
using casson::Slope;
using floer::Family;
using graded::Coeff;
using graded::GradedGroup;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& what) {
  if (!condition) throw Failure(what);
}

template <typename T>
void require_equal(const T& actual, const T& expected, const std::string& what) {
  if (actual == expected) return;
  std::ostringstream msg;
  msg << what << " (got " << actual << ", want " << expected << ")";
  throw Failure(msg.str());
}

void for_each_reduced_slope(long long p_max, long long q_max,
                            const std::function<void(long long, long long)>& body) {
  for (long long q = 1; q <= q_max; ++q)
    for (long long p = -p_max; p <= p_max; ++p)
      if (std::gcd(p < 0 ? -p : p, q) == 1) body(p, q);
}

double run_timed(const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. Trefoil lambda agrees with the root-counting oracle over the full sweep.
void criterion_trefoil_oracle() {
  const auto& trefoil = casson::trefoil_right();
  long long slopes = 0;
  const double elapsed = run_timed([&] {
    for_each_reduced_slope(99, 20, [&](long long p, long long q) {
      if (p % 12 == 0) return;
      if (trefoil.boundary_slopes.contains(Rational(p, q))) return;
      ++slopes;
      require_equal(casson::casson_invariant(trefoil, Slope(p, q)),
                    roots::trefoil_surgery_count(p, q, roots::Chirality::Right, true),
                    "lambda mismatch at " + std::to_string(p) + "/" + std::to_string(q));
    });
  });
  require(slopes > 2000, "sweep unexpectedly small");
  require(elapsed < 1.0, "sweep exceeded 1 second");
}

// 2. The granny closed form reproduces its published values.
void criterion_granny_values() {
  require(floer::hp_granny(Slope(12, 1)) ==
              GradedGroup(Coeff::F2, {{1, {4, {}}}, {0, {4, {}}}, {-2, {1, {}}}}),
          "granny 12/1 != F2^4 (1) + F2^4 (0) + F2 (-2)");
  require(floer::hp_granny(Slope(1, 1)) ==
              GradedGroup(Coeff::F2, {{0, {9, {}}}, {-1, {5, {}}}}),
          "granny 1/1 != F2^9 (0) + F2^5 (-1)");
}

// 3. The square closed form reproduces its published values.
void criterion_square_values() {
  require(floer::hp_square(Slope(0, 1)) ==
              GradedGroup(Coeff::F2, {{1, {4, {}}}, {0, {4, {}}}, {-2, {1, {}}}}),
          "square 0/1 != F2^4 (1) + F2^4 (0) + F2 (-2)");
  require(floer::hp_square(Slope(1, 1)) == GradedGroup(Coeff::F2, {{0, {5, {}}}}),
          "square 1/1 != F2^5 (0)");
}

// 4. Census assembly equals the closed forms across the wide sweep, with the
//    lone documented square-family delta.
void criterion_consistency_sweep() {
  const double elapsed = run_timed([&] {
    for_each_reduced_slope(200, 50, [&](long long p, long long q) {
      const Slope s(p, q);
      const std::string at = std::to_string(p) + "/" + std::to_string(q);
      require(floer::hp_consistency(Family::Granny, s).zero_delta(), "granny delta at " + at);
      const auto square = floer::hp_consistency(Family::Square, s);
      if (p % 12 == 0 && p != 0)
        require(square.delta == std::map<int, long long>{{-1, -2}},
                "square delta != {-1:-2} at " + at);
      else
        require(square.zero_delta(), "square delta at " + at);
    });
  });
  require(elapsed < 10.0, "sweep exceeded 10 seconds");
}

// 5. Connected-sum A-polynomials and their Newton slopes.
void criterion_apoly() {
  using polys::LaurentPoly2;
  const LaurentPoly2 l = LaurentPoly2::var_l();
  const auto granny = polys::compose_connected_sum(
      {polys::trefoil_right_summand(), polys::trefoil_right_summand()});
  const std::vector<LaurentPoly2> granny_expected = {
      l - LaurentPoly2::monomial(1, 0, 0), l + LaurentPoly2::monomial(1, -6, 0),
      l - LaurentPoly2::monomial(1, -12, 0)};
  require(granny.factors == granny_expected, "granny factorization");
  const auto square = polys::compose_connected_sum(
      {polys::trefoil_right_summand(), polys::trefoil_left_summand()});
  const std::vector<LaurentPoly2> square_expected = {
      l - LaurentPoly2::monomial(1, 0, 0), l + LaurentPoly2::monomial(1, -6, 0),
      l + LaurentPoly2::monomial(1, 6, 0)};
  require(square.factors == square_expected, "square factorization");
  require(newton_slopes(granny) == std::set<Rational>{Rational(0), Rational(6), Rational(12)},
          "granny slopes != {0, 6, 12}");
  require(newton_slopes(square) == std::set<Rational>{Rational(-6), Rational(0), Rational(6)},
          "square slopes != {-6, 0, 6}");
}

// 6. The exact-triangle obstruction at slopes 2 and 3, robust to every
//    protected window inside {-1, 0, 1}.
void criterion_triangle() {
  const auto low = floer::hp_sharp(casson::trefoil_right(), Slope(2, 1));
  const auto high = floer::hp_sharp(casson::trefoil_right(), Slope(3, 1));
  require_equal(rank_at(low, -2), 0LL, "rank at degree -2 for slope 2");
  require_equal(rank_at(high, -2), 1LL, "rank at degree -2 for slope 3");
  for (int mask = 0; mask < 8; ++mask) {
    std::set<int> window;
    for (int bit = 0; bit < 3; ++bit)
      if (mask & (1 << bit)) window.insert(bit - 1);
    const auto verdict = floer::triangle_check(low, high, window);
    require(!verdict.compatible, "triangle not obstructed under a window");
    require(verdict.obstruction_degrees.contains(-2), "degree -2 not obstructed");
  }
}

// 7. Limit invariants, and exact agreement of finite q with the asymptotic
//    line.
void criterion_limits() {
  require_equal(floer::limit_rank(Family::Granny, 0, 1), Rational(12), "granny degree 0");
  require_equal(floer::limit_rank(Family::Granny, -1, 1), Rational(6), "granny degree -1");
  require_equal(floer::limit_rank(Family::Square, 0, 1), Rational(6), "square degree 0");
  require_equal(floer::limit_rank(Family::Square, -1, 1), Rational(0), "square degree -1");
  for (long long q : {101LL, 103LL})
    for (Family family : {Family::Granny, Family::Square}) {
      const auto group = floer::hp_closed_form(family, Slope(1, q));
      for (int degree : {0, -1}) {
        const auto form = floer::asymptotic_rank_form(family, degree, 1);
        const Rational deviation =
            boost::abs(Rational(rank_at(group, degree)) / q - form.slope);
        require_equal(deviation, boost::abs(form.intercept) / q, "finite-q deviation");
        require(deviation <= Rational(12, q), "deviation above (max constant)/q");
      }
    }
}

// 8. The cubic surface has exactly the two stated singular points, and the
//    longitude-trace restrictions hold symbolically.
void criterion_cubic_surface() {
  using census::QuadExt;
  const QuadExt sqrt3 = QuadExt::sqrt3();
  std::vector<QuadExt> values;
  for (long long a = -2; a <= 2; ++a)
    for (long long b = -1; b <= 1; ++b) values.emplace_back(Rational(a), Rational(b));
  long long singular = 0;
  for (const auto& x : values)
    for (const auto& y : values)
      for (const auto& z : values) {
        if (census::verify_cubic_point(x, y, z) != census::SurfacePointClass::Singular) continue;
        ++singular;
        require((x == sqrt3 && y == -sqrt3 && z == QuadExt(2)) ||
                    (x == -sqrt3 && y == sqrt3 && z == QuadExt(2)),
                "singular point off the expected pair");
      }
  require_equal(singular, 2LL, "number of singular grid points");
  for (long long x = -5; x <= 5; ++x) {
    require(census::longitude_trace(Rational(x), Rational(2)) == Rational(2),
            "restriction to y = 2");
    require(census::longitude_trace(Rational(x), Rational(x * x - 1)) ==
                Rational(-x * x * x * x * x * x + 6 * x * x * x * x - 9 * x * x + 2),
            "restriction to y = x^2 - 1");
  }
}

// 9. Universal-coefficient consistency of the whole space table.
void criterion_uct_table() {
  for (graded::SpaceType space : graded::kAllSpaceTypes) {
    const auto integral = cohomology(space, Coeff::Z);
    const auto mod_two = cohomology(space, Coeff::F2);
    for (int degree = -2; degree <= 6; ++degree) {
      const long long expected = rank_at(integral, degree) + torsion_count_at(integral, degree) +
                                 torsion_count_at(integral, degree + 1);
      require_equal(rank_at(mod_two, degree), expected,
                    std::string("UCT at ") + to_string(space) + " degree " +
                        std::to_string(degree));
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
      {"trefoil lambda oracle agreement (|p| <= 99, q <= 20, exact)", criterion_trefoil_oracle},
      {"granny closed form at 12/1 and 1/1", criterion_granny_values},
      {"square closed form at 0/1 and 1/1", criterion_square_values},
      {"census vs closed form (|p| <= 200, q <= 50; square delta -2 at p = 12k != 0)",
       criterion_consistency_sweep},
      {"connected-sum A-polynomials and Newton slopes", criterion_apoly},
      {"exact-triangle obstruction at degree -2 (ranks 0 vs 1)", criterion_triangle},
      {"limit invariants 12, 6 / 6, 0 with finite-q bound", criterion_limits},
      {"cubic surface singular points and longitude trace identities", criterion_cubic_surface},
      {"universal-coefficient consistency of the space table", criterion_uct_table},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::string verdict = "PASS";
    std::string detail;
    try {
      criteria[i].second();
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = e.what();
      ++failures;
    }
    std::cout << verdict << "  [" << (i + 1) << "] " << criteria[i].first;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
  }
  if (failures == 0)
    std::cout << "acceptance: all " << criteria.size() << " criteria passed\n";
  else
    std::cout << "acceptance: " << failures << " criteria FAILED\n";
  return failures;
}
