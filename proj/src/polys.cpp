#include "floerhp/polys.hpp"

#include <algorithm>
#include <cstdlib>

#include <nlohmann/json.hpp>

namespace floerhp::polys {

IntPoly::IntPoly(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

long long IntPoly::coeff(int exponent) const {
  if (exponent < 0 || exponent >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[exponent];
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<long long> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<long long> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = (i < a.coeffs_.size() ? a.coeffs_[i] : 0) - (i < b.coeffs_.size() ? b.coeffs_[i] : 0);
  return IntPoly(std::move(out));
}

std::optional<IntPoly> divide_exact(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) return std::nullopt;
  if (num.is_zero()) return IntPoly();
  if (num.degree() < den.degree()) return std::nullopt;
  // Long division.  If f = q*g over Z then every leading coefficient met
  // along the way is divisible by lead(g), so a divisibility failure proves
  // inexactness.
  std::vector<long long> rem = num.coeffs();
  const long long lead = den.coeff(den.degree());
  std::vector<long long> quot(num.degree() - den.degree() + 1, 0);
  for (int d = num.degree(); d >= den.degree(); --d) {
    long long top = rem[d];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    long long factor = top / lead;
    quot[d - den.degree()] = factor;
    for (int i = 0; i <= den.degree(); ++i) rem[d - den.degree() + i] -= factor * den.coeff(i);
  }
  for (long long c : rem)
    if (c != 0) return std::nullopt;
  return IntPoly(std::move(quot));
}

bool divides(const IntPoly& den, const IntPoly& num) { return divide_exact(num, den).has_value(); }

IntPoly cyclotomic(long long d) {
  if (d < 1) throw PreconditionError("cyclotomic: index must be positive");
  // Phi_e = (t^e - 1) / prod of Phi_f over proper divisors f of e.  Built
  // bottom-up over the divisors of d; every division is exact and monic.
  std::map<long long, IntPoly> table;
  for (long long e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    std::vector<long long> c(e + 1, 0);
    c[0] = -1;
    c[e] = 1;
    IntPoly phi(std::move(c));
    for (const auto& [f, phi_f] : table) {
      if (e % f != 0) continue;
      auto quotient = divide_exact(phi, phi_f);
      if (!quotient) throw InternalError("cyclotomic: inexact division");
      phi = *quotient;
    }
    table.emplace(e, std::move(phi));
  }
  return table.at(d);
}

bool alexander_condition(const IntPoly& delta, long long p) {
  if (p == 0) throw ZeroSurgeryCoefficient();
  const long long abs_p = p < 0 ? -p : p;
  const long long p_prime = (abs_p % 2 == 0) ? abs_p / 2 : abs_p;
  for (long long d = 1; d <= p_prime; ++d) {
    if (p_prime % d != 0) continue;
    if (divides(cyclotomic(d), delta)) return false;
  }
  return true;
}

LaurentPoly2::LaurentPoly2(std::map<MLExp, long long> terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

LaurentPoly2 LaurentPoly2::monomial(long long coeff, long long m_exp, long long l_exp) {
  return LaurentPoly2({{{m_exp, l_exp}, coeff}});
}

long long LaurentPoly2::coeff(MLExp e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

LaurentPoly2 operator+(const LaurentPoly2& a, const LaurentPoly2& b) {
  std::map<MLExp, long long> out = a.terms_;
  for (const auto& [exp, c] : b.terms_) out[exp] += c;
  return LaurentPoly2(std::move(out));
}

LaurentPoly2 operator-(const LaurentPoly2& a, const LaurentPoly2& b) {
  std::map<MLExp, long long> out = a.terms_;
  for (const auto& [exp, c] : b.terms_) out[exp] -= c;
  return LaurentPoly2(std::move(out));
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) { return laurent_mul(a, b); }

LaurentPoly2 laurent_mul(const LaurentPoly2& a, const LaurentPoly2& b) {
  std::map<MLExp, long long> out;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) out[{ea.m + eb.m, ea.l + eb.l}] += ca * cb;
  return LaurentPoly2(std::move(out));
}

LaurentPoly2 monomial_normalize(const LaurentPoly2& f) {
  if (f.is_zero()) return f;
  long long min_m = f.terms().begin()->first.m;
  long long min_l = f.terms().begin()->first.l;
  for (const auto& [exp, c] : f.terms()) {
    min_m = std::min(min_m, exp.m);
    min_l = std::min(min_l, exp.l);
  }
  std::map<MLExp, long long> shifted;
  for (const auto& [exp, c] : f.terms()) shifted[{exp.m - min_m, exp.l - min_l}] = c;
  if (shifted.rbegin()->second < 0)
    for (auto& [exp, c] : shifted) c = -c;
  return LaurentPoly2(std::move(shifted));
}

SummandSpec trefoil_right_summand() {
  SummandSpec s;
  s.name = "trefoil-r";
  s.irr_factors = {LaurentPoly2::var_l() + LaurentPoly2::monomial(1, -6, 0)};
  s.longitude = LongitudeRule{-1, -6};
  return s;
}

SummandSpec trefoil_left_summand() {
  SummandSpec s;
  s.name = "trefoil-l";
  s.irr_factors = {LaurentPoly2::var_l() + LaurentPoly2::monomial(1, 6, 0)};
  s.longitude = LongitudeRule{-1, 6};
  return s;
}

LaurentPoly2 expand(const FactoredAPoly& a) {
  LaurentPoly2 product = LaurentPoly2::monomial(1, 0, 0);
  for (const auto& f : a.factors) product = product * f;
  return product;
}

namespace {

void push_unique(std::vector<LaurentPoly2>& list, const LaurentPoly2& factor) {
  const LaurentPoly2 normalized = monomial_normalize(factor);
  for (const auto& existing : list)
    if (monomial_normalize(existing) == normalized) return;
  list.push_back(factor);
}

}  // namespace

FactoredAPoly compose_connected_sum(const std::vector<SummandSpec>& summands) {
  FactoredAPoly out;
  out.include_reducible = true;
  const LaurentPoly2 reducible = LaurentPoly2::var_l() - LaurentPoly2::monomial(1, 0, 0);
  push_unique(out.factors, reducible);

  int composite_sign = 1;
  long long composite_exp = 0;
  for (const auto& summand : summands) {
    if (!summand.longitude) throw UnsupportedSummand();
    if (summand.longitude->sign != 1 && summand.longitude->sign != -1)
      throw UnsupportedSummand();
    composite_sign *= summand.longitude->sign;
    composite_exp += summand.longitude->exponent;
    for (const auto& factor : summand.irr_factors) {
      if (factor.is_zero() || factor.is_monomial())
        throw PreconditionError("compose_connected_sum: summand factor is zero or a monomial");
      push_unique(out.factors, factor);
      push_unique(out.irr_factors, factor);
    }
  }

  // The composite stratum, where every summand restricts to an irreducible
  // representation: L = (e1 M^k1)(e2 M^k2)... forces the factor below.
  const LaurentPoly2 composite =
      LaurentPoly2::var_l() - LaurentPoly2::monomial(composite_sign, composite_exp, 0);
  push_unique(out.factors, composite);
  push_unique(out.irr_factors, composite);
  return out;
}

namespace {

struct Point {
  long long m;
  long long l;
  friend auto operator<=>(const Point&, const Point&) = default;
};

long long cross(const Point& o, const Point& a, const Point& b) {
  return (a.m - o.m) * (b.l - o.l) - (a.l - o.l) * (b.m - o.m);
}

// Andrew's monotone chain; collinear interior points are dropped.
std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const size_t n = pts.size();
  if (n < 3) return pts;
  std::vector<Point> hull(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (size_t i = n - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace

std::set<Rational> newton_slopes(const FactoredAPoly& a) {
  std::set<Rational> slopes;
  for (const auto& factor : a.factors) {
    if (factor.is_zero()) throw PreconditionError("newton_slopes: zero factor");
    std::vector<Point> pts;
    for (const auto& [exp, c] : factor.terms()) pts.push_back({exp.m, exp.l});
    // Edge slopes are invariant under translating the exponent polygon, so
    // clearing negative M-exponents needs no explicit monomial multiple.
    const std::vector<Point> hull = convex_hull(std::move(pts));
    if (hull.size() < 2) continue;
    for (size_t i = 0; i < hull.size(); ++i) {
      const Point& from = hull[i];
      const Point& to = hull[(i + 1) % hull.size()];
      if (from.l == to.l) continue;
      slopes.insert(Rational(to.m - from.m, to.l - from.l));
    }
  }
  return slopes;
}

std::optional<casson::Slope> coincident_surgery_slope(const LaurentPoly2& factor) {
  if (factor.terms().size() != 2) return std::nullopt;
  long long l_coeff = 0;
  long long m_coeff = 0;
  long long m_exp = 0;
  bool has_l = false, has_m = false;
  for (const auto& [exp, c] : factor.terms()) {
    if (exp.m == 0 && exp.l == 1) {
      l_coeff = c;
      has_l = true;
    } else if (exp.l == 0) {
      m_coeff = c;
      m_exp = exp.m;
      has_m = true;
    }
  }
  if (!has_l || !has_m) return std::nullopt;
  if (std::abs(l_coeff) != 1 || std::abs(m_coeff) != 1) return std::nullopt;
  // Written as L - e M^k (after scaling by the L-coefficient), the zero set
  // is {L = e M^k}.  It lies inside {M^p L^q = 1} identically only for
  // e = +1, q = 1, p = -k; for e = -1 the sign forces q even, which breaks
  // coprimality with p = kq.
  const long long epsilon = -m_coeff * l_coeff;
  if (epsilon != 1) return std::nullopt;
  return casson::Slope(-m_exp, 1);
}

nlohmann::ordered_json to_json(const IntPoly& p) {
  return nlohmann::ordered_json(p.coeffs());
}

nlohmann::ordered_json to_json(const LaurentPoly2& p) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& [exp, c] : p.terms()) out.push_back({exp.m, exp.l, c});
  return out;
}

std::string to_string(const LaurentPoly2& p) {
  if (p.is_zero()) return "0";
  // Print in descending L-degree, then descending M-degree.
  std::vector<std::pair<MLExp, long long>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.l != b.first.l) return a.first.l > b.first.l;
    return a.first.m > b.first.m;
  });
  std::string out;
  for (size_t i = 0; i < terms.size(); ++i) {
    const auto& [exp, c] = terms[i];
    const long long magnitude = c < 0 ? -c : c;
    if (i == 0) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? "-" : "+";
    }
    std::string monomial;
    auto append_var = [&](const char* var, long long e) {
      if (e == 0) return;
      monomial += var;
      if (e != 1) monomial += "^" + std::to_string(e);
    };
    append_var("M", exp.m);
    append_var("L", exp.l);
    if (magnitude != 1 || monomial.empty()) out += std::to_string(magnitude);
    out += monomial;
  }
  return out;
}

}  // namespace floerhp::polys
