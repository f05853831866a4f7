#pragma once

// Closed-form statistics on B_n and S_n: per-pivot inversion numbers and
// the inversion table, descents and major index under the flag order,
// neg, fmaj, and insertion of +-n into an element of B_{n-1}.

#include <cstddef>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hyperoct/signed_permutation.hpp"
#include "hyperoct/text.hpp"

namespace hyperoct {

/// I(w) = (inv_1 : ... : inv_n) with inv_i in [0, 2(n-i)+1].
class InversionTable {
 public:
  explicit InversionTable(std::vector<int> entries) : entries_(std::move(entries)) {
    detail::require_rank(entries_.size(), "InversionTable");
    const auto n = entries_.size();
    for (std::size_t i = 1; i <= n; ++i) {
      const int bound = static_cast<int>(2 * (n - i) + 1);
      if (entries_[i - 1] < 0 || entries_[i - 1] > bound) {
        throw std::out_of_range("InversionTable: inv_" + std::to_string(i) + " = " +
                                std::to_string(entries_[i - 1]) + " outside [0, " +
                                std::to_string(bound) + "]");
      }
    }
  }

  std::size_t n() const noexcept { return entries_.size(); }
  std::span<const int> entries() const noexcept { return entries_; }

  /// inv_i, 1-based.
  int operator[](std::size_t i) const { return entries_.at(i - 1); }

  int total() const noexcept {
    int s = 0;
    for (int v : entries_) s += v;
    return s;
  }

  std::string to_string() const { return detail::join(std::span<const int>(entries_), ':'); }

  static InversionTable parse(std::string_view text) {
    try {
      return InversionTable(parse_colon_list(text));
    } catch (const std::out_of_range& e) {
      throw ParseError(e.what());
    }
  }

  bool operator==(const InversionTable&) const = default;

 private:
  std::vector<int> entries_;
};

/// inv_i(w) for pivot position p = n+1-i. With b = |w_p|:
///   w_p > 0:  |{j < p : |w_j| > b}|
///   w_p < 0:  1 + 2|{j < p : |w_j| < b}| + |{j < p : |w_j| > b}|
inline int inv_i_closed(const SignedPermutation& w, std::size_t i) {
  const auto n = w.n();
  if (i < 1 || i > n) throw std::out_of_range("inv_i_closed: index outside [1, n]");
  const auto win = w.window();
  const std::size_t p = n + 1 - i;
  const int v = win[p - 1];
  const int b = std::abs(v);
  int larger = 0;
  int smaller = 0;
  for (std::size_t j = 0; j + 1 < p; ++j) {
    if (std::abs(win[j]) > b) {
      ++larger;
    } else {
      ++smaller;
    }
  }
  return v > 0 ? larger : 1 + 2 * smaller + larger;
}

inline InversionTable inversion_table(const SignedPermutation& w) {
  std::vector<int> t(w.n());
  for (std::size_t i = 1; i <= w.n(); ++i) t[i - 1] = inv_i_closed(w, i);
  return InversionTable(std::move(t));
}

/// inv(w) = sum of the inversion table = Coxeter length.
inline int inv_total(const SignedPermutation& w) { return inversion_table(w).total(); }

/// Splices signed_value (= +-(pi.n()+1)) into pi immediately after pi_space
/// (before pi_1 when space = 0).
inline SignedPermutation insert_value(const SignedPermutation& pi, int signed_value, std::size_t space) {
  const auto n = pi.n() + 1;
  if (static_cast<std::size_t>(std::abs(signed_value)) != n) {
    throw std::invalid_argument("insert_value: inserted value must be +-" + std::to_string(n));
  }
  if (space > n - 1) throw std::out_of_range("insert_value: space outside [0, n-1]");
  std::vector<int> w(pi.window().begin(), pi.window().end());
  w.insert(w.begin() + static_cast<std::ptrdiff_t>(space), signed_value);
  return SignedPermutation(std::move(w));
}

/// Strict "less than" for -1 < -2 < ... < -n < 1 < 2 < ... < n.
inline bool flag_order_less(int a, int b) noexcept {
  if ((a < 0) != (b < 0)) return a < 0;
  if (a < 0) return -a < -b;
  return a < b;
}

inline int neg(const SignedPermutation& w) {
  int c = 0;
  for (int v : w.window()) c += v < 0 ? 1 : 0;
  return c;
}

/// Positions i in [1, n-1] with w_i > w_{i+1} in the flag order.
inline std::vector<int> descent_set_b(const SignedPermutation& w) {
  std::vector<int> des;
  const auto win = w.window();
  for (std::size_t i = 0; i + 1 < win.size(); ++i) {
    if (flag_order_less(win[i + 1], win[i])) des.push_back(static_cast<int>(i + 1));
  }
  return des;
}

inline int maj_b(const SignedPermutation& w) {
  int s = 0;
  for (int d : descent_set_b(w)) s += d;
  return s;
}

/// fmaj(w) = 2 maj(w) + neg(w).
inline int fmaj(const SignedPermutation& w) { return 2 * maj_b(w) + neg(w); }

// Classical statistics on S_n.

inline int sn_inv(const SnPermutation& beta) {
  const auto v = beta.values();
  int c = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) c += v[i] > v[j] ? 1 : 0;
  }
  return c;
}

inline std::vector<int> sn_descents(const SnPermutation& beta) {
  const auto v = beta.values();
  std::vector<int> des;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i] > v[i + 1]) des.push_back(static_cast<int>(i + 1));
  }
  return des;
}

inline int sn_maj(const SnPermutation& beta) {
  int s = 0;
  for (int d : sn_descents(beta)) s += d;
  return s;
}

}  // namespace hyperoct
