#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace eccaudit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p" for integers, "p/q" in lowest terms otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Integer& i);

/// Same as to_string, with "undef" for a missing value.
std::string to_string(const std::optional<Rational>& r);

/// Accepts "p", "p/q" and plain decimals such as "0.25" or "-1.5".
Rational parse_rational(std::string_view text);

}  // namespace eccaudit
