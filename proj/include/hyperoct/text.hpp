#pragma once

// Text forms: windows as "2,-5,-3,-1,4" and colon-separated numerals such
// as "0:11:0:0:6:2:0:0".

#include <charconv>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hyperoct/signed_permutation.hpp"

namespace hyperoct {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? s.size() - start : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline int parse_int_token(std::string_view token) {
  token = trim(token);
  if (token.empty()) throw ParseError("empty token");
  std::string_view digits = token;
  if (digits.front() == '+') digits.remove_prefix(1);
  int value = 0;
  const auto* first = digits.data();
  const auto* last = digits.data() + digits.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("malformed token '" + std::string(token) + "'");
  }
  return value;
}

template <typename Int>
std::string join(std::span<const Int> values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace detail

/// Parses a comma-separated window; surrounding whitespace is allowed.
inline SignedPermutation parse_window(std::string_view text) {
  const auto body = detail::trim(text);
  if (body.empty()) throw ParseError("empty window");
  std::vector<int> w;
  for (auto tok : detail::split(body, ',')) w.push_back(detail::parse_int_token(tok));
  try {
    return SignedPermutation(std::move(w));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

/// Canonical text: comma-separated, no spaces.
inline std::string format_window(const SignedPermutation& w) {
  return detail::join(w.window(), ',');
}

/// Space-separated form used for typeset tables ("1 -2 3").
inline std::string format_window_spaced(const SignedPermutation& w) {
  return detail::join(w.window(), ' ');
}

/// Parses "a:b:...:z" into its entries in written order.
inline std::vector<int> parse_colon_list(std::string_view text) {
  const auto body = detail::trim(text);
  if (body.empty()) throw ParseError("empty numeral");
  std::vector<int> out;
  for (auto tok : detail::split(body, ':')) {
    const int v = detail::parse_int_token(tok);
    if (v < 0) throw ParseError("negative entry in numeral");
    out.push_back(v);
  }
  return out;
}

}  // namespace hyperoct
