#include "tropmc/rational.hpp"

#include <charconv>
#include <cmath>

#include "tropmc/errors.hpp"

namespace tropmc {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty()) throw FormatError("empty rational");
  auto dot = s.find('.');
  Rational r;
  try {
    if (dot == std::string::npos) {
      r = Rational(s, 10);
      if (r.get_den() == 0) throw FormatError("zero denominator in '" + s + "'");
    } else {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      std::size_t scale = s.size() - dot - 1;
      if (digits.empty() || digits == "-" || digits == "+") throw FormatError("bad decimal '" + s + "'");
      mpz_class num(digits, 10);
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
      r = Rational(num, den);
    }
  } catch (const std::invalid_argument&) {
    throw FormatError("cannot parse rational '" + s + "'");
  }
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_str();
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw FormatError("cannot format double");
  return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const char* begin = text.data();
  if (!text.empty() && text.front() == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw FormatError("cannot parse number '" + std::string(text) + "'");
  return value;
}

}  // namespace tropmc
