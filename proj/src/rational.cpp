#include "ordspace/rational.hpp"

#include "ordspace/errors.hpp"

#include <cctype>
#include <sstream>

namespace ordspace {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw ValidationError("malformed number '" + std::string(whole) + "'");
  }
  Integer v{std::string(s)};
  return negative ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw ValidationError("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw ValidationError("malformed denominator in '" + std::string(text) + "'");
    }
    Integer den(std::string{den_text});
    if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      int_part.remove_prefix(1);
    }
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)) ||
        (int_part.empty() && frac_part.empty())) {
      throw ValidationError("malformed decimal '" + std::string(text) + "'");
    }
    std::string digits = std::string(int_part) + std::string(frac_part);
    Integer num(digits.empty() ? std::string("0") : digits);
    Integer den = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac_part.size()));
    Rational v(num, den);
    return negative ? Rational(-v) : v;
  }

  return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& value) {
  const auto num = numerator(value);
  const auto den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal(const Rational& value, int digits) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << to_double(value);
  return os.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Integer isqrt(const Integer& value) {
  if (value < 0) throw std::domain_error("isqrt of negative value");
  return boost::multiprecision::sqrt(value);
}

Integer ceil_sqrt(const Integer& value) {
  Integer r = isqrt(value);
  return r * r == value ? r : Integer(r + 1);
}

Rational sqrt_lower(const Rational& value, unsigned bits) {
  if (value < 0) throw std::domain_error("sqrt of negative value");
  // floor(sqrt(p/q) * 2^bits) = floor(sqrt(p*q*4^bits) / q)
  const Integer p = numerator(value);
  const Integer q = denominator(value);
  const Integer scale = Integer(1) << bits;
  const Integer root = isqrt(Integer(p * q * scale * scale));
  return Rational(root / q, scale);
}

}  // namespace ordspace
