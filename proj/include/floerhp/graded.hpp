#pragma once

#include <initializer_list>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "floerhp/errors.hpp"

#include <nlohmann/json_fwd.hpp>

namespace floerhp::graded {

enum class Coeff { Z, F2 };

// One degree of a graded abelian group: a free part of the given rank plus a
// multiset of finite cyclic summands, each a prime-power order >= 2.  With F2
// coefficients only the rank (= dimension) is meaningful and torsion stays
// empty.
struct Entry {
  long long rank = 0;
  std::multiset<int> torsion;

  friend bool operator==(const Entry&, const Entry&) = default;
};

// Finitely supported map degree -> Entry.  Zero entries are never stored, so
// equality of stored maps is equality of groups.  Values are immutable after
// construction; all operations below are pure.
class GradedGroup {
 public:
  explicit GradedGroup(Coeff coeff) : coeff_(coeff) {}
  GradedGroup(Coeff coeff, std::map<int, Entry> entries);

  Coeff coeff() const { return coeff_; }
  const std::map<int, Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  friend bool operator==(const GradedGroup&, const GradedGroup&) = default;

 private:
  Coeff coeff_;
  std::map<int, Entry> entries_;
};

enum class SpaceType { Point, CP1, TCP1, Cstar, CstarMinusPoint, PSL2C, SurfaceS };

inline constexpr SpaceType kAllSpaceTypes[] = {
    SpaceType::Point,  SpaceType::CP1,   SpaceType::TCP1,    SpaceType::Cstar,
    SpaceType::CstarMinusPoint, SpaceType::PSL2C, SpaceType::SurfaceS};

const char* to_string(SpaceType space);

// Degreewise sum of free ranks and multiset union of torsion.
// Throws CoefficientMismatch when the tags differ.
GradedGroup direct_sum(const GradedGroup& a, const GradedGroup& b);

// H^{*+k} semantics: the entry of the result at degree n is the entry of g at
// degree n + k.
GradedGroup shift(const GradedGroup& g, int k);

// n-fold direct sum; n = 0 yields the zero group.
GradedGroup scale(const GradedGroup& g, long long n);

// Free rank stored at the degree (0 if absent); torsion is ignored.  For F2
// groups the rank is the dimension.
long long rank_at(const GradedGroup& g, int degree);

// Number of torsion summands stored at the degree.
long long torsion_count_at(const GradedGroup& g, int degree);

// Sum over n of (-1)^n rank_at(g, n).
long long euler_characteristic(const GradedGroup& g);

// The fixed cohomology table of the standard spaces.  Integral rows:
//   Point            Z in degree 0
//   CP1, TCP1        Z in degrees 0, 2
//   Cstar            Z in degrees 0, 1
//   CstarMinusPoint  Z in degree 0, Z^2 in degree 1
//   PSL2C            Z in degree 0, Z/2 in degree 2, Z in degree 3
//   SurfaceS         Z in degree 0, Z^2 in degree 2, Z^4 in degree 3
// F2 rows are derived from the integral rows by universal coefficients.
GradedGroup cohomology(SpaceType space, Coeff coeff);

// Universal-coefficient reduction: dim_F2 at degree n is the free rank at n
// plus the number of even-order torsion summands at n and at n+1.
GradedGroup mod_two_reduction(const GradedGroup& g);

// {"coeff":"Z"|"F2","entries":{"<degree>":{"rank":n,"torsion":[...]}}} with
// degrees as decimal strings sorted descending; "torsion" omitted when empty.
nlohmann::ordered_json to_json(const GradedGroup& g);

}  // namespace floerhp::graded
