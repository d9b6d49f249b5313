#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace linknav {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p", "p/q" or a finite decimal such as "2.5" or "-0.125" exactly.
/// Throws InputError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise (always reduced).
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

}  // namespace linknav
