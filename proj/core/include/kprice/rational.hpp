// Copyright 2026 The kprice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KPRICE_RATIONAL_HPP_
#define KPRICE_RATIONAL_HPP_

#include <charconv>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kprice {

// Exact rational number with 64-bit numerator and denominator, kept
// normalized: denominator > 0 and gcd(|numerator|, denominator) == 1.
// All arithmetic and comparisons are exact. Intermediate products are
// computed in 128 bits; a reduced result that does not fit in 64 bits
// throws std::overflow_error instead of wrapping or rounding.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
  constexpr Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    Wide n = num;
    Wide d = den;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    assign_reduced(n, d);
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  constexpr int sign() const { return (num_ > 0) - (num_ < 0); }

  // "num" when integral, "num/den" otherwise.
  std::string to_string() const {
    std::string out = std::to_string(num_);
    if (den_ != 1) {
      out += '/';
      out += std::to_string(den_);
    }
    return out;
  }

  // Inverse of to_string: an optional sign, digits, and an optional
  // "/digits" suffix. Decimal points, whitespace, and zero denominators
  // are rejected.
  static std::optional<Rational> parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = parse_int(text.substr(0, slash));
    if (!num) return std::nullopt;
    if (slash == std::string_view::npos) return Rational(*num);
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
      return std::nullopt;
    }
    const auto den = parse_int(den_text);
    if (!den || *den == 0) return std::nullopt;
    return Rational(*num, *den);
  }

  friend constexpr Rational operator+(const Rational& a, const Rational& b) {
    return from_wide(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_,
                     Wide(a.den_) * b.den_);
  }
  friend constexpr Rational operator-(const Rational& a, const Rational& b) {
    return from_wide(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_,
                     Wide(a.den_) * b.den_);
  }
  friend constexpr Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
  }
  friend constexpr Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    Wide n = Wide(a.num_) * b.den_;
    Wide d = Wide(a.den_) * b.num_;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    return from_wide(n, d);
  }
  friend constexpr Rational operator-(const Rational& a) {
    Rational out;
    out.num_ = narrow(-Wide(a.num_));
    out.den_ = a.den_;
    return out;
  }

  constexpr Rational& operator+=(const Rational& o) { return *this = *this + o; }
  constexpr Rational& operator-=(const Rational& o) { return *this = *this - o; }
  constexpr Rational& operator*=(const Rational& o) { return *this = *this * o; }
  constexpr Rational& operator/=(const Rational& o) { return *this = *this / o; }

  // Normalization makes field-wise equality exact equality.
  friend constexpr bool operator==(const Rational& a, const Rational& b) = default;
  friend constexpr std::strong_ordering operator<=>(const Rational& a,
                                                    const Rational& b) {
    const Wide lhs = Wide(a.num_) * b.den_;
    const Wide rhs = Wide(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Presentation only; never used for decisions.
  constexpr double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  using Wide = __int128;

  static constexpr Wide gcd_wide(Wide a, Wide b) {
    while (b != 0) {
      const Wide t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static constexpr std::int64_t narrow(Wide v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
      throw std::overflow_error("Rational: reduced value exceeds 64-bit range");
    }
    return static_cast<std::int64_t>(v);
  }

  constexpr void assign_reduced(Wide n, Wide d) {
    const Wide g = gcd_wide(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    num_ = narrow(n);
    den_ = narrow(d);
  }

  // Requires d > 0.
  static constexpr Rational from_wide(Wide n, Wide d) {
    Rational out;
    out.assign_reduced(n, d);
    return out;
  }

  static std::optional<std::int64_t> parse_int(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t start = 0;
    if (text.front() == '+') start = 1;
    std::int64_t value = 0;
    const char* first = text.data() + start;
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) return std::nullopt;
    return value;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace kprice

#endif  // KPRICE_RATIONAL_HPP_
