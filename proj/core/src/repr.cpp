#include "paradd/repr.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace paradd {

DigitSet::DigitSet(std::span<const int> members) {
  if (members.empty()) throw std::invalid_argument("digit set is empty");
  min_ = members.front();
  max_ = members.front();
  for (int d : members) {
    if (d < -128 || d > 127) {
      throw std::invalid_argument("digit " + std::to_string(d) + " does not fit in a signed byte");
    }
    members_.set(static_cast<std::size_t>(d + kOffset));
    min_ = std::min(min_, d);
    max_ = std::max(max_, d);
  }
  if (!contains(0) || !contains(1)) {
    throw std::invalid_argument("digit set must contain 0 and 1");
  }
}

DigitSet::DigitSet(std::initializer_list<int> members)
    : DigitSet(std::span<const int>(members.begin(), members.size())) {}

DigitSet DigitSet::binary() { return DigitSet{0, 1}; }

DigitSet DigitSet::canonical() { return DigitSet{-1, 0, 1}; }

DigitSet DigitSet::symmetric(int bound) {
  if (bound < 1) throw std::invalid_argument("symmetric digit set bound must be >= 1");
  std::vector<int> members;
  for (int d = -bound; d <= bound; ++d) members.push_back(d);
  return DigitSet(members);
}

bool DigitSet::contains(int digit) const {
  if (digit < -128 || digit > 127) return false;
  return members_.test(static_cast<std::size_t>(digit + kOffset));
}

int DigitSet::max_abs() const { return std::max(std::abs(min_), std::abs(max_)); }

bool DigitSet::is_canonical_subset() const { return min_ >= -1 && max_ <= 1; }

std::vector<int> DigitSet::members() const {
  std::vector<int> out;
  for (int d = min_; d <= max_; ++d) {
    if (contains(d)) out.push_back(d);
  }
  return out;
}

namespace {

int parse_int(std::string_view token, std::string_view context) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw std::invalid_argument("malformed integer '" + std::string(token) + "' in '" +
                                std::string(context) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  while (true) {
    auto pos = text.find(sep, begin);
    parts.push_back(text.substr(begin, pos - begin));
    if (pos == std::string_view::npos) break;
    begin = pos + 1;
  }
  return parts;
}

}  // namespace

DigitSet parse_digit_set(std::string_view text) {
  if (text == "B") return DigitSet::binary();
  if (text == "C") return DigitSet::canonical();
  if (auto pos = text.find(".."); pos != std::string_view::npos) {
    int lo = parse_int(text.substr(0, pos), text);
    int hi = parse_int(text.substr(pos + 2), text);
    if (lo > hi) throw std::invalid_argument("empty digit range '" + std::string(text) + "'");
    std::vector<int> members;
    for (int d = lo; d <= hi; ++d) members.push_back(d);
    return DigitSet(members);
  }
  std::vector<int> members;
  for (auto token : split(text, ',')) members.push_back(parse_int(token, text));
  return DigitSet(members);
}

std::string format_digit_set(const DigitSet& set) {
  if (set == DigitSet::binary()) return "B";
  if (set == DigitSet::canonical()) return "C";
  std::string out;
  for (int d : set.members()) {
    if (!out.empty()) out += ',';
    out += std::to_string(d);
  }
  return out;
}

Representation::Representation(std::vector<std::int8_t> digits, DigitSet set)
    : digits_(std::move(digits)), set_(set) {
  if (digits_.empty()) throw std::invalid_argument("representation has no digits");
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (!set_.contains(digits_[i])) {
      throw std::invalid_argument("digit " + std::to_string(digits_[i]) + " at index " +
                                  std::to_string(i) + " is not in digit set {" +
                                  format_digit_set(set_) + "}");
    }
  }
}

Representation Representation::from_msb_first(std::span<const int> digits, DigitSet set) {
  std::vector<std::int8_t> lsb(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    int d = digits[digits.size() - 1 - i];
    if (d < -128 || d > 127) throw std::invalid_argument("digit out of range");
    lsb[i] = static_cast<std::int8_t>(d);
  }
  return Representation(std::move(lsb), set);
}

std::optional<std::size_t> Representation::lowest_nonzero() const {
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] != 0) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Representation::highest_nonzero() const {
  for (std::size_t i = digits_.size(); i-- > 0;) {
    if (digits_[i] != 0) return i;
  }
  return std::nullopt;
}

std::size_t Representation::weight() const {
  return static_cast<std::size_t>(
      std::count_if(digits_.begin(), digits_.end(), [](std::int8_t d) { return d != 0; }));
}

bool Representation::has_canonical_digits() const {
  return std::all_of(digits_.begin(), digits_.end(),
                     [](std::int8_t d) { return d >= -1 && d <= 1; });
}

Representation parse_repr(std::string_view text, const DigitSet& set) {
  if (text.empty()) throw std::invalid_argument("empty representation string");
  std::vector<int> msb;
  if (set.is_canonical_subset()) {
    msb.reserve(text.size());
    for (char c : text) {
      switch (c) {
        case '0': msb.push_back(0); break;
        case '1': msb.push_back(1); break;
        case 'm': msb.push_back(-1); break;
        default:
          throw std::invalid_argument("unexpected character '" + std::string(1, c) +
                                      "' in representation '" + std::string(text) + "'");
      }
    }
  } else {
    for (auto token : split(text, ',')) msb.push_back(parse_int(token, text));
  }
  return Representation::from_msb_first(msb, set);
}

std::string format_repr(const Representation& r) {
  auto digits = r.digits();
  std::string out;
  if (r.digit_set().is_canonical_subset()) {
    out.reserve(digits.size());
    for (std::size_t i = digits.size(); i-- > 0;) {
      out += digits[i] == 0 ? '0' : (digits[i] > 0 ? '1' : 'm');
    }
    return out;
  }
  for (std::size_t i = digits.size(); i-- > 0;) {
    out += std::to_string(digits[i]);
    if (i != 0) out += ',';
  }
  return out;
}

BigInt value_of(const Representation& r) {
  BigInt value = 0;
  auto digits = r.digits();
  for (std::size_t i = digits.size(); i-- > 0;) {
    value *= 2;
    value += digits[i];
  }
  return value;
}

Representation binary_of(const BigInt& n, std::optional<std::size_t> min_len) {
  if (n < 0) throw std::invalid_argument("binary_of requires n >= 0");
  std::size_t len = std::max<std::size_t>(bit_length(n), 1);
  if (min_len) len = std::max(len, *min_len);
  std::vector<std::int8_t> digits(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    digits[i] = boost::multiprecision::bit_test(n, static_cast<unsigned>(i)) ? 1 : 0;
  }
  return Representation(std::move(digits), DigitSet::binary());
}

Representation to_naf(const Representation& r, std::size_t start) {
  auto in = r.digits();
  const std::size_t lambda = r.lambda();
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (i >= start && in[i] != 0 && in[i] != 1) {
      throw std::invalid_argument("to_naf: digit " + std::to_string(in[i]) + " at index " +
                                  std::to_string(i) + " is not binary");
    }
    if (in[i] < -1 || in[i] > 1) {
      throw std::invalid_argument("to_naf: digit outside {-1, 0, 1} at index " +
                                  std::to_string(i));
    }
  }

  std::vector<std::int8_t> out(in.begin(), in.end());
  out.push_back(0);
  std::size_t i = start;
  while (i < lambda) {
    if (out[i] == 1 && out[i + 1] == 1) {
      out[i] = -1;
      ++i;
      while (out[i] == 1) {
        out[i] = 0;
        ++i;
      }
      out[i] = 1;
    } else {
      ++i;
    }
  }
  return Representation(std::move(out), DigitSet::canonical());
}

bool is_nonadjacent(const Representation& r, std::size_t from) {
  auto d = r.digits();
  for (std::size_t i = from; i + 1 < d.size(); ++i) {
    if (d[i] != 0 && d[i + 1] != 0) return false;
  }
  return true;
}

}  // namespace paradd
