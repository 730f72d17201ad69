#pragma once

#include "floerhp/rational.hpp"
#include "floerhp/roots.hpp"
#include "floerhp/slope.hpp"

#include <nlohmann/json_fwd.hpp>

namespace floerhp::census {

// The topological types of character-scheme components occurring in granny
// and square knot surgeries.
enum class ComponentType { Point, Cstar, CstarMinusPoint, SurfaceS };

inline constexpr ComponentType kAllComponentTypes[] = {
    ComponentType::Point, ComponentType::Cstar, ComponentType::CstarMinusPoint,
    ComponentType::SurfaceS};

// Complex dimension of a component of the given type.
int complex_dimension(ComponentType type);

// Multiset of component types.  The cubic surface appears at most once and
// only alongside isolated points.
struct ComponentCensus {
  long long point = 0;
  long long cstar = 0;
  long long cstar_minus_point = 0;
  long long surface_s = 0;

  long long count(ComponentType type) const;
  friend bool operator==(const ComponentCensus&, const ComponentCensus&) = default;
};

// Census of the irreducible character scheme of p/q surgery on the granny
// knot (two right-handed trefoils):
//   - isolated points: one per isolated irreducible character living on each
//     of the two single-trefoil strata, i.e. 2 * trefoil_surgery_count(p,q,R);
//   - C* components: classes of M^(p-12q) = 1 from the stratum irreducible
//     on both summands, minus the central classes, minus the order-12
//     (non-abelian-reducible) classes when 12 | p;
//   - 2 copies of C* - {1} exactly when 12 | p (composites of two
//     non-abelian reducibles);
//   - p = 12q collapses the last two strata into the cubic surface S
//     (coprimality forces (p, q) = (12, 1)).
ComponentCensus granny_census(const casson::Slope& s);

// Census for the square knot (trefoil plus mirror): isolated points from the
// right- and left-handed strata, C* components from M^p = 1, the surface at
// p = 0.
ComponentCensus square_census(const casson::Slope& s);

// How a character of the surgered composite restricts to the two summands.
enum class SummandStratum {
  AbelianOnOneSide,           // one restriction abelian, the other irreducible
  IrreducibleOnBoth,          // both restrictions irreducible
  NonAbelianReducibleOnBoth,  // both restrictions non-abelian reducible
};

// Recorded smoothness data, not computed: the dimension of the tangent
// space H^1(ad rho) at an irreducible character in each stratum, which
// equals the local dimension of its component.  coincident marks the two
// slopes where the surgery curve contains the composite A-polynomial
// factor's zero set (granny 12/1, square 0/1) and the curve strata merge
// into the surface.
int recorded_tangent_dimension(SummandStratum stratum, bool coincident);

// Element of Q(sqrt 3): a + b*sqrt(3) with exact rational components.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}
  QuadExt(long long n) : a_(n), b_(0) {}  // NOLINT: implicit integer embedding

  static QuadExt sqrt3() { return QuadExt(Rational(0), Rational(1)); }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt3_part() const { return b_; }
  bool is_zero() const { return a_ == Rational(0) && b_ == Rational(0); }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x);
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
  friend bool operator==(const QuadExt&, const QuadExt&) = default;

 private:
  Rational a_ = Rational(0);
  Rational b_ = Rational(0);
};

enum class SurfacePointClass { Smooth, Singular, NotOnSurface };

// Exact evaluation of f = x^2 + y^2 + z^2 + xyz - z - 2 and its three
// partials in Q(sqrt 3).  Singular iff all four vanish; Smooth iff f
// vanishes but some partial does not.
SurfacePointClass verify_cubic_point(const QuadExt& x, const QuadExt& y, const QuadExt& z);

// Trace of the trefoil longitude as a polynomial in the meridional trace x
// and the auxiliary trace y:
//   L(x,y) = x^6 y - 2x^6 - x^4 y^2 - 2x^4 y + 8x^4 + 2x^2 y^2 + x^2 y
//            - 10x^2 + 2.
// Restricting to the reducible locus y = 2 gives the constant 2; on the
// irreducible locus y = x^2 - 1 it collapses to -x^6 + 6x^4 - 9x^2 + 2.
template <typename Scalar>
Scalar longitude_trace(const Scalar& x, const Scalar& y) {
  const Scalar x2 = x * x;
  const Scalar x4 = x2 * x2;
  const Scalar x6 = x4 * x2;
  const Scalar y2 = y * y;
  return x6 * y - x6 * Scalar(2) - x4 * y2 - x4 * y * Scalar(2) + x4 * Scalar(8) +
         x2 * y2 * Scalar(2) + x2 * y - x2 * Scalar(10) + Scalar(2);
}

// {"point":n,"cstar":n,"cstar_minus_point":n,"surface_s":n}
nlohmann::ordered_json to_json(const ComponentCensus& c);

}  // namespace floerhp::census
