#include "ambigine/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace ambigine {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string strip(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(begin, end - begin);
}

}  // namespace

std::optional<Rat> try_parse_rational(const std::string& text) {
  std::string body = strip(text);
  if (body.empty()) return std::nullopt;

  bool negative = false;
  if (body[0] == '+' || body[0] == '-') {
    negative = body[0] == '-';
    body = body.substr(1);
  }
  if (body.empty()) return std::nullopt;

  Rat value;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    const std::string num = body.substr(0, slash);
    const std::string den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    BigInt d(den);
    if (d == 0) return std::nullopt;
    value = Rat(BigInt(num), d);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    const std::string whole = body.substr(0, dot);
    const std::string frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (!whole.empty() && !all_digits(whole)) return std::nullopt;
    if (!frac.empty() && !all_digits(frac)) return std::nullopt;
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt digits = whole.empty() ? BigInt(0) : BigInt(whole);
    digits *= scale;
    if (!frac.empty()) digits += BigInt(frac);
    value = Rat(digits, scale);
  } else {
    if (!all_digits(body)) return std::nullopt;
    value = Rat(BigInt(body));
  }
  if (negative) value = -value;
  return value;
}

Rat parse_rational(const std::string& text) {
  auto parsed = try_parse_rational(text);
  if (!parsed) throw std::invalid_argument("not a rational literal: '" + text + "'");
  return *parsed;
}

std::string format_rational(const Rat& value) {
  const BigInt num = numerator(value);
  const BigInt den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rat& value) { return value.convert_to<double>(); }

Rat rational_from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite double");
  if (value == 0.0) return Rat(0);
  int exp = 0;
  const double mant = std::frexp(value, &exp);
  // 53 bits make the scaled mantissa integral for any finite double.
  const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;
  Rat result(scaled);
  BigInt shift = BigInt(1) << std::abs(exp);
  if (exp >= 0) {
    result *= Rat(shift);
  } else {
    result /= Rat(shift);
  }
  return result;
}

Rat rational_pow(const Rat& value, unsigned long exponent) {
  Rat result(1);
  Rat base = value;
  unsigned long e = exponent;
  while (e > 0) {
    if (e & 1UL) result *= base;
    base *= base;
    e >>= 1UL;
  }
  return result;
}

}  // namespace ambigine
