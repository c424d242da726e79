#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace quasiradial {

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

/// Parses "7", "-3/4", "0.125" or "2.5e-3" into an exact rational.
Rational parse_rational(std::string_view text);

/// Exact value of a binary double. Prefer parse_rational on the decimal
/// spelling when the number came from a human.
inline Rational rational_from_double(double x) { return Rational(x); }

inline double to_double(const Rational& x) { return x.convert_to<double>(); }
inline double to_double(double x) { return x; }
inline double to_double(long double x) { return static_cast<double>(x); }

/// "94/9", or "8" when the denominator is one.
std::string to_string(const Rational& x);

}  // namespace quasiradial
