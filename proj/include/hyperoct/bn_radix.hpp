#pragma once

// The B_n-type mixed-radix number system. Place i has weight
// B_i = 2^i i! and digit range [0, 2i+1], so n places cover exactly
// [0, 2^n n! - 1].

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hyperoct/inversion_stats.hpp"
#include "hyperoct/text.hpp"

namespace hyperoct {

/// Arbitrary-precision nonnegative integer.
using Natural = boost::multiprecision::cpp_int;

/// Parses a decimal string of unbounded length.
inline Natural parse_natural(std::string_view text) {
  const auto body = detail::trim(text);
  if (body.empty()) throw ParseError("empty integer");
  for (char c : body) {
    if (c < '0' || c > '9') throw ParseError("malformed integer '" + std::string(body) + "'");
  }
  return Natural(std::string(body));
}

inline std::string to_decimal(const Natural& x) { return x.str(); }

/// Digits d_0..d_{n-1}, d_0 least significant, with d_i in [0, 2i+1].
class BnDigits {
 public:
  explicit BnDigits(std::vector<int> digits) : d_(std::move(digits)) {
    detail::require_rank(d_.size(), "BnDigits");
    for (std::size_t i = 0; i < d_.size(); ++i) {
      if (d_[i] < 0 || d_[i] > static_cast<int>(2 * i + 1)) {
        throw std::out_of_range("BnDigits: d_" + std::to_string(i) + " = " + std::to_string(d_[i]) +
                                " outside [0, " + std::to_string(2 * i + 1) + "]");
      }
    }
  }

  std::size_t n() const noexcept { return d_.size(); }

  /// Least significant first.
  std::span<const int> digits() const noexcept { return d_; }
  int operator[](std::size_t i) const { return d_.at(i); }

  /// "d_{n-1}:...:d_1:d_0".
  std::string to_string() const {
    std::string out;
    for (std::size_t i = d_.size(); i-- > 0;) {
      out += std::to_string(d_[i]);
      if (i != 0) out += ':';
    }
    return out;
  }

  /// Inverse of to_string; the leftmost entry is the most significant.
  static BnDigits parse(std::string_view text) {
    auto written = parse_colon_list(text);
    std::vector<int> d(written.rbegin(), written.rend());
    try {
      return BnDigits(std::move(d));
    } catch (const std::out_of_range& e) {
      throw ParseError(e.what());
    }
  }

  bool operator==(const BnDigits&) const = default;

 private:
  std::vector<int> d_;
};

/// B_i = 2^i i!.
inline Natural base_weight(std::size_t i) {
  Natural b = 1;
  for (std::size_t k = 1; k <= i; ++k) b *= 2 * k;
  return b;
}

/// Repeated division by 2, 4, 6, ...; the remainders are d_0, d_1, ....
/// Without n the shortest representation is returned (at least one digit).
/// With n the result is zero-padded to n digits, or std::overflow_error if
/// x >= 2^n n!.
inline BnDigits encode(Natural x, std::optional<std::size_t> n = std::nullopt) {
  if (x < 0) throw std::domain_error("encode: negative integer");
  if (n && *n == 0) throw std::invalid_argument("encode: n must be at least 1");
  std::vector<int> d;
  unsigned modulus = 2;
  while (x != 0) {
    if (n && d.size() == *n) {
      throw std::overflow_error("encode: value does not fit in " + std::to_string(*n) + " B_n digits");
    }
    d.push_back(static_cast<int>(x % modulus));
    x /= modulus;
    modulus += 2;
  }
  const std::size_t len = n ? *n : std::max<std::size_t>(d.size(), 1);
  d.resize(len, 0);
  return BnDigits(std::move(d));
}

/// x = sum d_i B_i, accumulating B_i incrementally.
inline Natural decode(const BnDigits& d) {
  Natural x = 0;
  Natural weight = 1;
  for (std::size_t i = 0; i < d.n(); ++i) {
    if (i > 0) weight *= 2 * i;
    x += weight * d[i];
  }
  return x;
}

/// d_{n-i} = inv_i.
inline BnDigits digits_from_table(const InversionTable& t) {
  std::vector<int> d(t.entries().rbegin(), t.entries().rend());
  return BnDigits(std::move(d));
}

inline InversionTable table_from_digits(const BnDigits& d) {
  std::vector<int> t(d.digits().rbegin(), d.digits().rend());
  return InversionTable(std::move(t));
}

}  // namespace hyperoct
