#include "floerhp/rational.hpp"

#include <cstdlib>

#include "floerhp/errors.hpp"

namespace floerhp {

Rational parse_rational(const std::string& text) {
  const auto bad = [&] { return DataError("malformed rational '" + text + "'"); };
  const auto slash = text.find('/');
  const std::string num_part = text.substr(0, slash);
  const std::string den_part = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (num_part.empty() || den_part.empty()) throw bad();

  const auto parse_int = [&](const std::string& s, bool allow_sign) -> long long {
    size_t i = 0;
    if (allow_sign && (s[i] == '+' || s[i] == '-')) ++i;
    if (i == s.size()) throw bad();
    for (size_t j = i; j < s.size(); ++j)
      if (s[j] < '0' || s[j] > '9') throw bad();
    errno = 0;
    char* end = nullptr;
    long long value = std::strtoll(s.c_str(), &end, 10);
    if (errno != 0 || end != s.c_str() + s.size()) throw bad();
    return value;
  };

  const long long num = parse_int(num_part, true);
  const long long den = parse_int(den_part, false);
  if (den == 0) throw bad();
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  std::string out = std::to_string(r.numerator());
  if (r.denominator() != 1) out += "/" + std::to_string(r.denominator());
  return out;
}

}  // namespace floerhp
