#include "gambler/rational.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace gambler {

Rational rational_pow(const Rational& base, unsigned exponent) {
  Rational acc{1};
  Rational sq = base;
  unsigned e = exponent;
  while (e != 0) {
    if (e & 1u) acc *= sq;
    e >>= 1u;
    if (e != 0) sq *= sq;
  }
  return acc;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_digits(std::string_view s) {
  BigInt v{0};
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed rational: expected num/den");
    BigInt d = parse_digits(den);
    if (d == 0) throw std::invalid_argument("zero denominator");
    value = Rational(parse_digits(num), d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty())
      throw std::invalid_argument("malformed decimal");
    if (!whole.empty() && !all_digits(whole))
      throw std::invalid_argument("malformed decimal");
    if (!frac.empty() && !all_digits(frac))
      throw std::invalid_argument("malformed decimal");
    BigInt num = whole.empty() ? BigInt{0} : parse_digits(whole);
    BigInt den{1};
    for (char c : frac) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
    value = Rational(num, den);
  } else {
    if (!all_digits(text)) throw std::invalid_argument("malformed rational");
    value = Rational(parse_digits(text));
  }
  return negative ? -value : value;
}

std::string format_double(double value) {
  char buffer[64];
  auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

std::string to_string(const Rational& r) {
  return r.str();
}

}  // namespace gambler
