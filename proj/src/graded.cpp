#include "floerhp/graded.hpp"

#include <cstdlib>
#include <string>

#include <nlohmann/json.hpp>

namespace floerhp::graded {

namespace {

void validate_entry(Coeff coeff, int degree, const Entry& e) {
  if (e.rank < 0)
    throw InternalError("graded: negative rank at degree " + std::to_string(degree));
  for (int order : e.torsion) {
    if (order < 2)
      throw InternalError("graded: torsion order < 2 at degree " + std::to_string(degree));
    if (coeff == Coeff::F2)
      throw InternalError("graded: F2 entries carry dimension only, no torsion");
  }
}

}  // namespace

GradedGroup::GradedGroup(Coeff coeff, std::map<int, Entry> entries) : coeff_(coeff) {
  for (auto& [degree, entry] : entries) {
    validate_entry(coeff, degree, entry);
    if (entry.rank == 0 && entry.torsion.empty()) continue;
    entries_.emplace(degree, std::move(entry));
  }
}

const char* to_string(SpaceType space) {
  switch (space) {
    case SpaceType::Point: return "point";
    case SpaceType::CP1: return "CP1";
    case SpaceType::TCP1: return "TCP1";
    case SpaceType::Cstar: return "C*";
    case SpaceType::CstarMinusPoint: return "C*-{1}";
    case SpaceType::PSL2C: return "PSL(2,C)";
    case SpaceType::SurfaceS: return "surface S";
  }
  return "?";
}

GradedGroup direct_sum(const GradedGroup& a, const GradedGroup& b) {
  if (a.coeff() != b.coeff()) throw CoefficientMismatch();
  std::map<int, Entry> merged = a.entries();
  for (const auto& [degree, entry] : b.entries()) {
    Entry& target = merged[degree];
    target.rank += entry.rank;
    target.torsion.insert(entry.torsion.begin(), entry.torsion.end());
  }
  return GradedGroup(a.coeff(), std::move(merged));
}

GradedGroup shift(const GradedGroup& g, int k) {
  std::map<int, Entry> shifted;
  for (const auto& [degree, entry] : g.entries()) shifted.emplace(degree - k, entry);
  return GradedGroup(g.coeff(), std::move(shifted));
}

GradedGroup scale(const GradedGroup& g, long long n) {
  if (n < 0) throw InternalError("graded: scale by a negative multiplicity");
  if (n == 0) return GradedGroup(g.coeff());
  std::map<int, Entry> scaled;
  for (const auto& [degree, entry] : g.entries()) {
    Entry e;
    e.rank = entry.rank * n;
    for (int order : entry.torsion)
      for (long long i = 0; i < n; ++i) e.torsion.insert(order);
    scaled.emplace(degree, std::move(e));
  }
  return GradedGroup(g.coeff(), std::move(scaled));
}

long long rank_at(const GradedGroup& g, int degree) {
  auto it = g.entries().find(degree);
  return it == g.entries().end() ? 0 : it->second.rank;
}

long long torsion_count_at(const GradedGroup& g, int degree) {
  auto it = g.entries().find(degree);
  return it == g.entries().end() ? 0 : static_cast<long long>(it->second.torsion.size());
}

long long euler_characteristic(const GradedGroup& g) {
  long long chi = 0;
  for (const auto& [degree, entry] : g.entries())
    chi += (degree % 2 == 0) ? entry.rank : -entry.rank;
  return chi;
}

GradedGroup mod_two_reduction(const GradedGroup& g) {
  if (g.coeff() == Coeff::F2) return g;
  // Hom(Z/d, F2) and Ext(Z/d, F2) are nonzero exactly for d even.
  auto even_torsion = [&](int degree) {
    auto it = g.entries().find(degree);
    if (it == g.entries().end()) return 0LL;
    long long count = 0;
    for (int order : it->second.torsion)
      if (order % 2 == 0) ++count;
    return count;
  };
  std::map<int, Entry> dims;
  std::set<int> degrees;
  for (const auto& [degree, entry] : g.entries()) {
    degrees.insert(degree);
    degrees.insert(degree - 1);
  }
  for (int degree : degrees) {
    Entry e;
    e.rank = rank_at(g, degree) + even_torsion(degree) + even_torsion(degree + 1);
    dims.emplace(degree, e);
  }
  return GradedGroup(Coeff::F2, std::move(dims));
}

GradedGroup cohomology(SpaceType space, Coeff coeff) {
  const auto integral = [&]() -> GradedGroup {
    switch (space) {
      case SpaceType::Point:
        return GradedGroup(Coeff::Z, {{0, {1, {}}}});
      case SpaceType::CP1:
      case SpaceType::TCP1:
        // TCP1 deformation retracts onto its zero section.
        return GradedGroup(Coeff::Z, {{0, {1, {}}}, {2, {1, {}}}});
      case SpaceType::Cstar:
        return GradedGroup(Coeff::Z, {{0, {1, {}}}, {1, {1, {}}}});
      case SpaceType::CstarMinusPoint:
        // C minus two points ~ wedge of two circles.
        return GradedGroup(Coeff::Z, {{0, {1, {}}}, {1, {2, {}}}});
      case SpaceType::PSL2C:
        // PSL(2,C) retracts onto SO(3) = RP^3.
        return GradedGroup(Coeff::Z, {{0, {1, {}}}, {2, {0, {2}}}, {3, {1, {}}}});
      case SpaceType::SurfaceS:
        // The affine cubic x^2+y^2+z^2+xyz-z-2 = 0 minus its two singular
        // points.
        return GradedGroup(Coeff::Z, {{0, {1, {}}}, {2, {2, {}}}, {3, {4, {}}}});
    }
    throw InternalError("graded: unknown space type");
  }();
  return coeff == Coeff::Z ? integral : mod_two_reduction(integral);
}

nlohmann::ordered_json to_json(const GradedGroup& g) {
  nlohmann::ordered_json out;
  out["coeff"] = g.coeff() == Coeff::Z ? "Z" : "F2";
  auto& entries = out["entries"] = nlohmann::ordered_json::object();
  for (auto it = g.entries().rbegin(); it != g.entries().rend(); ++it) {
    nlohmann::ordered_json entry;
    entry["rank"] = it->second.rank;
    if (!it->second.torsion.empty())
      entry["torsion"] = std::vector<int>(it->second.torsion.begin(), it->second.torsion.end());
    entries[std::to_string(it->first)] = std::move(entry);
  }
  return out;
}

}  // namespace floerhp::graded
