#include "eccaudit/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace eccaudit {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
  Integer value = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

}  // namespace

std::string to_string(const Integer& i) { return i.str(); }

std::string to_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const std::optional<Rational>& r) {
  return r ? to_string(*r) : std::string("undef");
}

Rational parse_rational(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_integer(text.substr(0, slash), text);
    const Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string digits(text.substr(0, dot));
    const std::string_view frac = text.substr(dot + 1);
    if (frac.empty()) throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
    digits += frac;
    if (digits == "-" || digits == "+") digits += "0";
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    return Rational(parse_integer(digits, text), scale);
  }
  return Rational(parse_integer(text, text));
}

}  // namespace eccaudit
