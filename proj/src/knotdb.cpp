#include "floerhp/knotdb.hpp"

#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace floerhp::knotdb {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& record, const std::string& field, const std::string& why) {
  throw DataError("knot record '" + record + "': field '" + field + "' " + why);
}

Rational field_rational(const std::string& record, const json& j, const std::string& field) {
  if (!j.is_string()) fail(record, field, "must be a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const DataError&) {
    fail(record, field, "is not a valid rational");
  }
}

std::set<Rational> slope_set(const std::string& record, const json& j, const std::string& field) {
  if (!j.is_array()) fail(record, field, "must be an array of rational strings");
  std::set<Rational> out;
  for (const auto& item : j) out.insert(field_rational(record, item, field));
  return out;
}

casson::KnotRecord parse_record(const json& j) {
  if (!j.is_object()) throw DataError("knot record must be a JSON object");
  std::string name = "?";
  if (j.contains("name") && j["name"].is_string()) name = j["name"].get<std::string>();

  static const std::set<std::string> known = {"name",          "alexander",       "two_bridge",
                                              "boundary_slopes", "irregular_slopes", "seminorm",
                                              "E0",            "E1",              "small"};
  for (const auto& [key, value] : j.items())
    if (!known.contains(key)) fail(name, key, "is not a recognized field");
  for (const auto& required : {"name", "alexander", "boundary_slopes", "seminorm", "E0", "E1", "small"})
    if (!j.contains(required)) fail(name, required, "is missing");

  casson::KnotRecord k;
  if (!j["name"].is_string() || j["name"].get<std::string>().empty())
    fail(name, "name", "must be a nonempty string");
  k.name = j["name"].get<std::string>();

  if (!j["alexander"].is_array() || j["alexander"].empty())
    fail(k.name, "alexander", "must be a nonempty integer array");
  std::vector<long long> coeffs;
  for (const auto& c : j["alexander"]) {
    if (!c.is_number_integer()) fail(k.name, "alexander", "must contain integers only");
    coeffs.push_back(c.get<long long>());
  }
  k.alexander = polys::IntPoly(std::move(coeffs));
  if (k.alexander.is_zero()) fail(k.name, "alexander", "must be a nonzero polynomial");

  if (j.contains("two_bridge") && !j["two_bridge"].is_null()) {
    const auto& tb = j["two_bridge"];
    if (!tb.is_array() || tb.size() != 2 || !tb[0].is_number_integer() || !tb[1].is_number_integer())
      fail(k.name, "two_bridge", "must be an integer pair [alpha, beta]");
    casson::TwoBridgeParams params{tb[0].get<long long>(), tb[1].get<long long>()};
    if (params.alpha < 3 || params.alpha % 2 == 0) fail(k.name, "two_bridge", "needs odd alpha >= 3");
    if (std::gcd(params.alpha, params.beta < 0 ? -params.beta : params.beta) != 1)
      fail(k.name, "two_bridge", "needs gcd(alpha, beta) = 1");
    k.two_bridge = params;
  }

  k.boundary_slopes = slope_set(k.name, j["boundary_slopes"], "boundary_slopes");
  if (j.contains("irregular_slopes"))
    k.irregular_slopes = slope_set(k.name, j["irregular_slopes"], "irregular_slopes");

  if (!j["seminorm"].is_array()) fail(k.name, "seminorm", "must be an array");
  for (const auto& entry : j["seminorm"]) {
    if (!entry.is_object() || !entry.contains("coeff") || !entry.contains("slope") || entry.size() != 2)
      fail(k.name, "seminorm", "entries must be {coeff, slope} objects");
    casson::SeminormEntry e;
    e.coeff = field_rational(k.name, entry["coeff"], "seminorm.coeff");
    if (e.coeff <= Rational(0)) fail(k.name, "seminorm.coeff", "must be positive");
    const Rational slope = field_rational(k.name, entry["slope"], "seminorm.slope");
    e.a = slope.numerator();
    e.b = slope.denominator();
    k.seminorm.entries.push_back(e);
  }

  const auto half_integer = [&](const char* field) {
    const Rational value = field_rational(k.name, j[field], field);
    if (!is_half_integer(value) || value < Rational(0))
      fail(k.name, field, "must be a non-negative half-integer");
    return value;
  };
  k.e0 = half_integer("E0");
  k.e1 = half_integer("E1");
  if (k.two_bridge && k.e1 != Rational(k.two_bridge->alpha - 1, 4))
    fail(k.name, "E1", "must equal (alpha-1)/4 for a two-bridge record");

  if (!j["small"].is_boolean()) fail(k.name, "small", "must be a boolean");
  k.small = j["small"].get<bool>();
  return k;
}

}  // namespace

std::vector<casson::KnotRecord> parse_records(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("knot database is not valid JSON: ") + e.what());
  }
  if (!root.is_array()) throw DataError("knot database must be a JSON array of records");
  std::vector<casson::KnotRecord> records;
  std::set<std::string> seen;
  for (const auto& item : root) {
    casson::KnotRecord k = parse_record(item);
    if (!seen.insert(k.name).second)
      throw DataError("knot record '" + k.name + "': duplicate name");
    records.push_back(std::move(k));
  }
  return records;
}

std::vector<casson::KnotRecord> load_records(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open knot database '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_records(buffer.str());
}

const casson::KnotRecord& resolve(const std::string& name,
                                  const std::vector<casson::KnotRecord>& file_records) {
  for (const auto& record : file_records)
    if (record.name == name) return record;
  if (name == "trefoil-r") return casson::trefoil_right();
  if (name == "trefoil-l") return casson::trefoil_left();
  throw DataError("unknown knot '" + name + "' (built-ins: trefoil-r, trefoil-l)");
}

}  // namespace floerhp::knotdb
