#include "floerhp/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "floerhp/casson.hpp"
#include "floerhp/census.hpp"
#include "floerhp/floer.hpp"
#include "floerhp/graded.hpp"
#include "floerhp/knotdb.hpp"
#include "floerhp/polys.hpp"
#include "floerhp/selftest.hpp"

namespace floerhp::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

casson::Slope parse_slope(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 == text.size())
    throw UsageError("slope must be written p/q, got '" + text + "'");
  const auto parse_int = [&](const std::string& part, bool allow_sign) {
    size_t i = (allow_sign && (part[0] == '+' || part[0] == '-')) ? 1 : 0;
    if (i == part.size()) throw UsageError("malformed slope '" + text + "'");
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw UsageError("malformed slope '" + text + "'");
    return std::stoll(part);
  };
  const long long p = parse_int(text.substr(0, slash), true);
  const long long q = parse_int(text.substr(slash + 1), false);
  try {
    return casson::Slope(p, q);
  } catch (const NotCoprime&) {
    throw UsageError("slope '" + text + "' is not reduced (q >= 1, gcd(|p|, q) = 1)");
  }
}

std::string slope_text(const casson::Slope& s) {
  return std::to_string(s.p()) + "/" + std::to_string(s.q());
}

std::string entry_text(graded::Coeff coeff, const graded::Entry& entry) {
  const char* base = coeff == graded::Coeff::Z ? "Z" : "F2";
  std::vector<std::string> pieces;
  if (entry.rank > 0) {
    std::string piece = base;
    if (entry.rank > 1) piece += "^" + std::to_string(entry.rank);
    pieces.push_back(piece);
  }
  for (int order : entry.torsion) pieces.push_back("Z/" + std::to_string(order));
  std::string out;
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (i > 0) out += " + ";
    out += pieces[i];
  }
  return out;
}

void print_group_table(std::ostream& out, const graded::GradedGroup& g) {
  if (g.is_zero()) {
    out << "0\n";
    return;
  }
  for (auto it = g.entries().rbegin(); it != g.entries().rend(); ++it)
    out << std::setw(4) << it->first << "  " << entry_text(g.coeff(), it->second) << "\n";
}

enum class Format { Table, Json };

void emit_group(std::ostream& out, Format format, const graded::GradedGroup& g) {
  if (format == Format::Json)
    out << graded::to_json(g).dump() << "\n";
  else
    print_group_table(out, g);
}

Format parse_format(const std::string& text) {
  if (text == "table") return Format::Table;
  if (text == "json") return Format::Json;
  throw UsageError("unknown format '" + text + "' (expected table or json)");
}

floer::Family parse_family(const std::string& text) {
  if (text == "granny") return floer::Family::Granny;
  if (text == "square") return floer::Family::Square;
  throw UsageError("unknown family '" + text + "' (expected granny or square)");
}

std::set<int> parse_window(const std::string& text) {
  const auto dots = text.find("..");
  const std::string why = "window must be written a..b, got '" + text + "'";
  if (dots == std::string::npos) throw UsageError(why);
  int lo = 0, hi = 0;
  try {
    lo = std::stoi(text.substr(0, dots));
    hi = std::stoi(text.substr(dots + 2));
  } catch (const std::exception&) {
    throw UsageError(why);
  }
  if (lo > hi) throw UsageError("window bounds out of order: '" + text + "'");
  std::set<int> window;
  for (int d = lo; d <= hi; ++d) window.insert(d);
  return window;
}

std::vector<casson::KnotRecord> load_db(const std::string& db_flag) {
  std::string path = db_flag;
  if (path.empty())
    if (const char* env = std::getenv("FLOERHP_DB")) path = env;
  if (path.empty()) return {};
  return knotdb::load_records(path);
}

polys::FactoredAPoly family_apoly(floer::Family family) {
  if (family == floer::Family::Granny)
    return polys::compose_connected_sum(
        {polys::trefoil_right_summand(), polys::trefoil_right_summand()});
  return polys::compose_connected_sum(
      {polys::trefoil_right_summand(), polys::trefoil_left_summand()});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact invariants of Dehn surgeries: Casson invariants, sheaf-theoretic Floer "
               "cohomology, character-scheme censuses and A-polynomials"};
  app.name("floerhp");
  app.require_subcommand(1);

  std::string knot_name;
  std::string family_name;
  std::string slope_flag;
  std::string format_flag = "table";
  std::string db_flag;
  std::string window_flag = "-1..1";
  std::optional<int> limit_degree;
  long long limit_p = 1;
  bool quick = false;

  const auto add_common = [&](CLI::App* cmd, bool wants_slope) {
    cmd->add_option("--format", format_flag, "output format: table or json");
    cmd->add_option("--db", db_flag, "knot database path (default: $FLOERHP_DB)");
    if (wants_slope) cmd->add_option("--slope", slope_flag, "surgery slope p/q")->required();
  };

  auto* cmd_casson = app.add_subcommand("casson", "SL(2,C) Casson invariant of a surgery");
  cmd_casson->add_option("--knot", knot_name, "knot name")->required();
  add_common(cmd_casson, true);

  auto* cmd_hp = app.add_subcommand("hp", "sheaf-theoretic Floer cohomology of a surgery");
  cmd_hp->add_option("--knot", knot_name, "knot name");
  cmd_hp->add_option("--family", family_name, "composite family: granny or square");
  add_common(cmd_hp, true);

  auto* cmd_hpsharp = app.add_subcommand("hpsharp", "framed Floer cohomology of a surgery");
  cmd_hpsharp->add_option("--knot", knot_name, "knot name")->required();
  add_common(cmd_hpsharp, true);

  auto* cmd_census = app.add_subcommand("census", "character-scheme component census");
  cmd_census->add_option("--family", family_name, "granny or square")->required();
  add_common(cmd_census, true);

  auto* cmd_apoly = app.add_subcommand("apoly", "A-polynomial of a composite family");
  cmd_apoly->add_option("--family", family_name, "granny or square")->required();
  add_common(cmd_apoly, false);

  auto* cmd_triangle =
      app.add_subcommand("triangle", "exact-triangle obstruction between p/q and (p+1)/q surgeries");
  cmd_triangle->add_option("--knot", knot_name, "knot name")->required();
  cmd_triangle->add_option("--window", window_flag, "protected degree window a..b (default -1..1)");
  add_common(cmd_triangle, true);

  auto* cmd_limit = app.add_subcommand("limit", "limit invariants lim rank/q");
  cmd_limit->add_option("--family", family_name, "granny or square")->required();
  cmd_limit->add_option("--degree", limit_degree, "cohomological degree (0 or -1; default both)");
  cmd_limit->add_option("--p", limit_p, "fixed surgery numerator (default 1)");
  add_common(cmd_limit, false);

  auto* cmd_consistency =
      app.add_subcommand("consistency", "closed form vs census assembly cross-check");
  cmd_consistency->add_option("--family", family_name, "granny or square")->required();
  add_common(cmd_consistency, true);

  auto* cmd_selftest = app.add_subcommand("selftest", "run the quantified invariant sweeps");
  cmd_selftest->add_flag("--quick", quick, "reduced sweep ranges (|p| <= 50, q <= 10)");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 64;
  }

  try {
    const Format format = parse_format(format_flag);

    if (cmd_casson->parsed()) {
      const auto records = load_db(db_flag);
      const auto& knot = knotdb::resolve(knot_name, records);
      const long long lambda = casson::casson_invariant(knot, parse_slope(slope_flag));
      if (format == Format::Json) {
        nlohmann::ordered_json j;
        j["lambda"] = lambda;
        out << j.dump() << "\n";
      } else {
        out << lambda << "\n";
      }
      return 0;
    }

    if (cmd_hp->parsed()) {
      if (knot_name.empty() == family_name.empty())
        throw UsageError("hp needs exactly one of --knot or --family");
      const casson::Slope s = parse_slope(slope_flag);
      graded::GradedGroup group(graded::Coeff::Z);
      if (!family_name.empty()) {
        group = floer::hp_closed_form(parse_family(family_name), s);
      } else {
        const auto records = load_db(db_flag);
        const auto& knot = knotdb::resolve(knot_name, records);
        if (knot.small)
          group = casson::hp_small_knot(knot, s);
        else if (knot.two_bridge)
          group = casson::hp_two_bridge(knot, s);
        else
          throw NotSmallKnot(knot.name);
      }
      emit_group(out, format, group);
      return 0;
    }

    if (cmd_hpsharp->parsed()) {
      const auto records = load_db(db_flag);
      const auto& knot = knotdb::resolve(knot_name, records);
      emit_group(out, format, floer::hp_sharp(knot, parse_slope(slope_flag)));
      return 0;
    }

    if (cmd_census->parsed()) {
      const auto c = floer::family_census(parse_family(family_name), parse_slope(slope_flag));
      if (format == Format::Json) {
        out << census::to_json(c).dump() << "\n";
      } else {
        out << "point              " << c.point << "\n"
            << "cstar              " << c.cstar << "\n"
            << "cstar_minus_point  " << c.cstar_minus_point << "\n"
            << "surface_s          " << c.surface_s << "\n";
      }
      return 0;
    }

    if (cmd_apoly->parsed()) {
      const auto apoly = family_apoly(parse_family(family_name));
      const auto slopes = polys::newton_slopes(apoly);
      if (format == Format::Json) {
        nlohmann::ordered_json j;
        auto& factors = j["factors"] = nlohmann::ordered_json::array();
        for (const auto& factor : apoly.factors) factors.push_back(polys::to_json(factor));
        j["include_reducible"] = apoly.include_reducible;
        auto& irr = j["irr_factors"] = nlohmann::ordered_json::array();
        for (const auto& factor : apoly.irr_factors) irr.push_back(polys::to_json(factor));
        auto& slope_list = j["newton_slopes"] = nlohmann::ordered_json::array();
        for (const auto& slope : slopes) slope_list.push_back(format_rational(slope));
        out << j.dump() << "\n";
      } else {
        const auto product_text = [](const std::vector<polys::LaurentPoly2>& factors) {
          std::string text;
          for (const auto& factor : factors) text += "(" + polys::to_string(factor) + ")";
          return text;
        };
        out << "A      = " << product_text(apoly.factors) << "\n";
        out << "A_irr  = " << product_text(apoly.irr_factors) << "\n";
        out << "slopes =";
        for (const auto& slope : slopes) out << " " << format_rational(slope);
        out << "\n";
      }
      return 0;
    }

    if (cmd_triangle->parsed()) {
      const auto records = load_db(db_flag);
      const auto& knot = knotdb::resolve(knot_name, records);
      const casson::Slope low_slope = parse_slope(slope_flag);
      const casson::Slope high_slope(low_slope.p() + 1, low_slope.q());
      const std::set<int> window = parse_window(window_flag);
      const auto low = floer::hp_sharp(knot, low_slope);
      const auto high = floer::hp_sharp(knot, high_slope);
      const auto verdict = floer::triangle_check(low, high, window);
      if (format == Format::Json) {
        nlohmann::ordered_json j = floer::to_json(verdict);
        j["low"] = graded::to_json(low);
        j["high"] = graded::to_json(high);
        out << j.dump() << "\n";
      } else {
        out << "slope " << slope_text(low_slope) << ":\n";
        print_group_table(out, low);
        out << "slope " << slope_text(high_slope) << ":\n";
        print_group_table(out, high);
        if (verdict.compatible) {
          out << "compatible\n";
        } else {
          out << "obstructed at degrees:";
          for (int degree : verdict.obstruction_degrees) out << " " << degree;
          out << "\n";
        }
      }
      return 0;
    }

    if (cmd_limit->parsed()) {
      const floer::Family family = parse_family(family_name);
      const std::vector<int> degrees =
          limit_degree ? std::vector<int>{*limit_degree} : std::vector<int>{0, -1};
      if (format == Format::Json) {
        nlohmann::ordered_json j;
        for (int degree : degrees)
          j[std::to_string(degree)] = format_rational(floer::limit_rank(family, degree, limit_p));
        out << j.dump() << "\n";
      } else {
        for (int degree : degrees)
          out << degree << ": " << format_rational(floer::limit_rank(family, degree, limit_p))
              << "\n";
      }
      return 0;
    }

    if (cmd_consistency->parsed()) {
      const auto report =
          floer::hp_consistency(parse_family(family_name), parse_slope(slope_flag));
      if (format == Format::Json) {
        out << floer::to_json(report).dump() << "\n";
      } else {
        out << "closed form:\n";
        print_group_table(out, report.closed);
        out << "census assembly:\n";
        print_group_table(out, report.assembled);
        if (report.zero_delta()) {
          out << "delta: none\n";
        } else {
          out << "delta (assembled - closed):\n";
          for (auto it = report.delta.rbegin(); it != report.delta.rend(); ++it)
            out << std::setw(4) << it->first << "  " << it->second << "\n";
        }
      }
      return 0;
    }

    if (cmd_selftest->parsed()) {
      const auto report = selftest::run(quick);
      long long passed = 0;
      for (const auto& suite : report.suites) {
        out << (suite.passed ? "[PASS] " : "[FAIL] ") << suite.name << " (" << suite.checks
            << " checks)";
        if (!suite.detail.empty()) out << " - " << suite.detail;
        out << "\n";
        if (suite.passed) ++passed;
      }
      out << "EXPECTED: square family delta -2 in degree -1 at the " << report.expected_discrepancies
          << " swept slopes with p = 12k != 0\n";
      out << "selftest: " << passed << "/" << report.suites.size() << " suites passed\n";
      return report.all_passed() ? 0 : 4;
    }

    throw UsageError("no command given");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 64;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace floerhp::cli
