#include "floerhp/census.hpp"

#include <cstdlib>

#include <nlohmann/json.hpp>

namespace floerhp::census {

int complex_dimension(ComponentType type) {
  switch (type) {
    case ComponentType::Point: return 0;
    case ComponentType::Cstar: return 1;
    case ComponentType::CstarMinusPoint: return 1;
    case ComponentType::SurfaceS: return 2;
  }
  throw InternalError("census: unknown component type");
}

long long ComponentCensus::count(ComponentType type) const {
  switch (type) {
    case ComponentType::Point: return point;
    case ComponentType::Cstar: return cstar;
    case ComponentType::CstarMinusPoint: return cstar_minus_point;
    case ComponentType::SurfaceS: return surface_s;
  }
  throw InternalError("census: unknown component type");
}

namespace {

// Central classes never survive in these censuses; if an equation ever put
// an order-1/2 class in play it would be silently miscounted, so their
// exclusion is enforced here rather than assumed.
long long surviving_classes(long long exponent, const std::set<long long>& extra_excluded) {
  roots::RootCountSpec spec;
  spec.exponent = exponent;
  spec.rhs_sign = 1;
  spec.excluded_orders = {1, 2};
  spec.excluded_orders.insert(extra_excluded.begin(), extra_excluded.end());
  return roots::count_conjugacy_classes(spec);
}

}  // namespace

ComponentCensus granny_census(const casson::Slope& s) {
  const long long p = s.p();
  const long long q = s.q();
  ComponentCensus c;
  c.point = 2 * roots::trefoil_surgery_count(p, q, roots::Chirality::Right, true);
  if (p == 12 * q) {
    // gcd(12q, q) = q forces q = 1; the strata of composite irreducibles
    // form the cubic surface instead of a one-dimensional family.
    if (q != 1) throw InternalError("granny_census: p = 12q with q > 1");
    c.surface_s = 1;
    return c;
  }
  // Stratum irreducible on both summands: longitudes multiply to M^-12, so
  // the surgery equation is M^(p-12q) = 1.  When 12 | p the two order-12
  // classes are non-abelian reducible and do not count.
  std::set<long long> excluded;
  if (p % 12 == 0) excluded.insert(12);
  c.cstar = surviving_classes(std::abs(p - 12 * q), excluded);
  c.cstar_minus_point = (p % 12 == 0) ? 2 : 0;
  return c;
}

ComponentCensus square_census(const casson::Slope& s) {
  const long long p = s.p();
  const long long q = s.q();
  ComponentCensus c;
  c.point = roots::trefoil_surgery_count(p, q, roots::Chirality::Right, true) +
            roots::trefoil_surgery_count(p, q, roots::Chirality::Left, true);
  if (p == 0) {
    if (q != 1) throw InternalError("square_census: p = 0 with q > 1");
    c.surface_s = 1;
    return c;
  }
  // Opposite chiralities cancel the longitudes, leaving M^p = 1.
  std::set<long long> excluded;
  if (p % 12 == 0) excluded.insert(12);
  c.cstar = surviving_classes(std::abs(p), excluded);
  c.cstar_minus_point = (p % 12 == 0) ? 2 : 0;
  return c;
}

int recorded_tangent_dimension(SummandStratum stratum, bool coincident) {
  switch (stratum) {
    case SummandStratum::AbelianOnOneSide:
      return 0;
    case SummandStratum::IrreducibleOnBoth:
    case SummandStratum::NonAbelianReducibleOnBoth:
      return coincident ? 2 : 1;
  }
  throw InternalError("census: unknown stratum");
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  return QuadExt(x.a_ + y.a_, x.b_ + y.b_);
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
  return QuadExt(x.a_ - y.a_, x.b_ - y.b_);
}

QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a_, -x.b_); }

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  // (a + b sqrt3)(c + d sqrt3) = (ac + 3bd) + (ad + bc) sqrt3
  return QuadExt(x.a_ * y.a_ + Rational(3) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
}

SurfacePointClass verify_cubic_point(const QuadExt& x, const QuadExt& y, const QuadExt& z) {
  const QuadExt f = x * x + y * y + z * z + x * y * z - z - QuadExt(2);
  if (!f.is_zero()) return SurfacePointClass::NotOnSurface;
  const QuadExt fx = QuadExt(2) * x + y * z;
  const QuadExt fy = QuadExt(2) * y + x * z;
  const QuadExt fz = QuadExt(2) * z + x * y - QuadExt(1);
  const bool singular = fx.is_zero() && fy.is_zero() && fz.is_zero();
  return singular ? SurfacePointClass::Singular : SurfacePointClass::Smooth;
}

nlohmann::ordered_json to_json(const ComponentCensus& c) {
  nlohmann::ordered_json out;
  out["point"] = c.point;
  out["cstar"] = c.cstar;
  out["cstar_minus_point"] = c.cstar_minus_point;
  out["surface_s"] = c.surface_s;
  return out;
}

}  // namespace floerhp::census
