#include "paradd/numeric.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace paradd {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt pow10(int exponent) {
  BigInt result = 1;
  for (int i = 0; i < exponent; ++i) result *= 10;
  return result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed rational: '" + original + "'");
    }
    const BigInt d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator: '" + original + "'");
    value = Rational(BigInt(std::string(num)), d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) {
      throw std::invalid_argument("malformed decimal: '" + original + "'");
    }
    BigInt scale = pow10(static_cast<int>(frac.size()));
    BigInt num = BigInt(std::string(whole)) * scale + BigInt(std::string(frac));
    value = Rational(num, scale);
  } else {
    if (!all_digits(text)) {
      throw std::invalid_argument("malformed number: '" + original + "'");
    }
    value = Rational(BigInt(std::string(text)));
  }
  return negative ? Rational(-value) : value;
}

BigInt parse_bigint(std::string_view text) {
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    auto hex = text.substr(2);
    for (char c : hex) {
      if (!std::isxdigit(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("malformed hex integer: '" + std::string(text) + "'");
      }
    }
    return BigInt(std::string(text));
  }
  if (!all_digits(text)) {
    throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
  }
  return BigInt(std::string(text));
}

std::string to_string(const Rational& value) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string to_fraction_string(const Rational& value) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string to_fixed(const Rational& value, int places) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (places < 0) throw std::invalid_argument("negative precision");
  const bool negative = value < 0;
  const Rational magnitude = negative ? Rational(-value) : value;
  const BigInt scale = pow10(places);
  // floor(|v| * 10^places + 1/2)
  const BigInt num = numerator(magnitude) * scale * 2 + denominator(magnitude);
  const BigInt scaled = num / (denominator(magnitude) * 2);

  std::string digits = scaled.str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), 1, '.');
  }
  if (negative && scaled != 0) digits.insert(0, 1, '-');
  return digits;
}

std::size_t bit_length(const BigInt& value) {
  if (value < 0) throw std::invalid_argument("bit_length of a negative integer");
  if (value == 0) return 0;
  return boost::multiprecision::msb(value) + 1;
}

std::int64_t to_int64(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer does not fit in 64 bits");
  }
  return value.convert_to<std::int64_t>();
}

}  // namespace paradd
