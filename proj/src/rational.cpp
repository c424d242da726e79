#include "quasiradial/rational.hpp"

#include "quasiradial/errors.hpp"
#include "quasiradial/json_number.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace quasiradial {

namespace {

using boost::multiprecision::cpp_int;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

cpp_int pow10(long k) {
  cpp_int out = 1;
  for (long i = 0; i < k; ++i) out *= 10;
  return out;
}

Rational parse_decimal(std::string_view s, std::string_view original) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  const auto e_pos = s.find_first_of("eE");
  if (e_pos != std::string_view::npos) {
    std::string_view exp_text = s.substr(e_pos + 1);
    s = s.substr(0, e_pos);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6)
      throw ConfigError("malformed number '" + std::string(original) + "'");
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
  }
  std::string digits;
  const auto dot = s.find('.');
  std::string_view int_part = s.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part)))
    throw ConfigError("malformed number '" + std::string(original) + "'");
  digits.append(int_part);
  digits.append(frac_part);
  exponent -= static_cast<long>(frac_part.size());

  Rational value{cpp_int(digits)};
  if (exponent >= 0)
    value *= Rational(pow10(exponent));
  else
    value /= Rational(pow10(-exponent));
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw ConfigError("empty number");
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return parse_decimal(s, text);
  const Rational num = parse_decimal(trim(s.substr(0, slash)), text);
  const Rational den = parse_decimal(trim(s.substr(slash + 1)), text);
  if (den == 0) throw ConfigError("zero denominator in '" + std::string(text) + "'");
  return num / den;
}

std::string to_string(const Rational& x) {
  const auto num = boost::multiprecision::numerator(x);
  const auto den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational json_rational(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_unsigned()) return Rational(j.get<unsigned long long>());
  if (j.is_number_float()) {
    const double x = j.get<double>();
    if (!std::isfinite(x)) throw ConfigError("non-finite number in config");
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, x);
    return parse_rational(std::string_view(buffer, static_cast<std::size_t>(result.ptr - buffer)));
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ConfigError("expected a number, got " + j.dump());
}

}  // namespace quasiradial
