#pragma once

// The type-B root system Psi = {+-e_l, +-e_j +- e_i}, its positive part,
// the partition of the positive roots by pivot coordinate, and counting
// oracles for the length function and the per-pivot inversion numbers.

#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperoct/signed_permutation.hpp"

namespace hyperoct {

/// A root s_hi*e_hi (+ s_lo*e_lo when lo != 0), stored with hi > lo.
class Root {
 public:
  /// Single-index root sign*e_l.
  static Root single(std::size_t n, int l, int sign) { return Root(n, l, sign, 0, 0); }

  /// Two-index root a*e_j + b*e_i for distinct j, i (any order).
  static Root pair(std::size_t n, int j, int a, int i, int b) {
    if (i == 0 || j == 0 || i == j) throw std::invalid_argument("Root: indices must be distinct");
    return j > i ? Root(n, j, a, i, b) : Root(n, i, b, j, a);
  }

  std::size_t n() const noexcept { return n_; }
  int hi() const noexcept { return hi_; }
  int hi_sign() const noexcept { return hi_sign_; }
  int lo() const noexcept { return lo_; }
  int lo_sign() const noexcept { return lo_sign_; }
  bool is_single() const noexcept { return lo_ == 0; }

  // The leading (larger-index) coefficient decides the sign class.
  bool is_positive() const noexcept { return hi_sign_ > 0; }
  bool is_negative() const noexcept { return hi_sign_ < 0; }

  Root operator-() const { return Root(n_, hi_, -hi_sign_, lo_, -lo_sign_); }

  bool operator==(const Root&) const = default;
  auto operator<=>(const Root&) const = default;

  std::string to_string() const {
    std::string s = (hi_sign_ < 0 ? "-e" : "e") + std::to_string(hi_);
    if (lo_ != 0) s += (lo_sign_ < 0 ? "-e" : "+e") + std::to_string(lo_);
    return s;
  }

 private:
  Root(std::size_t n, int hi, int hi_sign, int lo, int lo_sign)
      : n_(n), hi_(hi), hi_sign_(hi_sign), lo_(lo), lo_sign_(lo_sign) {
    detail::require_rank(n, "Root");
    const int limit = static_cast<int>(n);
    if (hi < 1 || hi > limit || lo < 0 || lo > limit) throw std::out_of_range("Root: index out of range");
    if ((hi_sign != 1 && hi_sign != -1) || (lo != 0 && lo_sign != 1 && lo_sign != -1)) {
      throw std::invalid_argument("Root: coefficients must be +-1");
    }
    if (lo == 0) lo_sign_ = 0;
  }

  // Member order doubles as the comparison order.
  std::size_t n_;
  int hi_;
  int hi_sign_;
  int lo_;
  int lo_sign_;
};

/// Psi^+ = {e_l} u {e_j - e_i, e_j + e_i : i < j}; n^2 roots.
inline std::vector<Root> positive_roots(std::size_t n) {
  detail::require_rank(n, "positive_roots");
  std::vector<Root> out;
  out.reserve(n * n);
  const int m = static_cast<int>(n);
  for (int l = 1; l <= m; ++l) out.push_back(Root::single(n, l, 1));
  for (int j = 2; j <= m; ++j) {
    for (int i = 1; i < j; ++i) {
      out.push_back(Root::pair(n, j, 1, i, -1));
      out.push_back(Root::pair(n, j, 1, i, 1));
    }
  }
  return out;
}

/// Psi = Psi^+ u -Psi^+; 2n^2 roots.
inline std::vector<Root> all_roots(std::size_t n) {
  auto out = positive_roots(n);
  const auto count = out.size();
  for (std::size_t k = 0; k < count; ++k) out.push_back(-out[k]);
  return out;
}

/// Psi_i: the positive roots pivoting on coordinate p = n+1-i, namely
/// {e_p} u {e_p - e_j, e_p + e_j : j < p}. Has 2(n-i)+1 elements.
inline std::vector<Root> psi_subset(std::size_t n, std::size_t i) {
  detail::require_rank(n, "psi_subset");
  if (i < 1 || i > n) throw std::out_of_range("psi_subset: index outside [1, n]");
  const int p = static_cast<int>(n + 1 - i);
  std::vector<Root> out;
  out.push_back(Root::single(n, p, 1));
  for (int j = 1; j < p; ++j) {
    out.push_back(Root::pair(n, p, 1, j, -1));
    out.push_back(Root::pair(n, p, 1, j, 1));
  }
  return out;
}

/// Linear action: w(e_i) = sign(w_i) e_{|w_i|}.
inline Root act(const SignedPermutation& w, const Root& root) {
  detail::require_same_rank(w.n(), root.n(), "act");
  const int a = w(root.hi());
  if (root.is_single()) return Root::single(w.n(), std::abs(a), a < 0 ? -root.hi_sign() : root.hi_sign());
  const int b = w(root.lo());
  return Root::pair(w.n(), std::abs(a), a < 0 ? -root.hi_sign() : root.hi_sign(), std::abs(b),
                    b < 0 ? -root.lo_sign() : root.lo_sign());
}

namespace detail {

inline std::size_t count_made_negative(const SignedPermutation& w, const std::vector<Root>& roots) {
  std::size_t c = 0;
  for (const auto& r : roots) {
    if (act(w, r).is_negative()) ++c;
  }
  return c;
}

}  // namespace detail

/// L(w) = |w(Psi^+) n Psi^-|.
inline std::size_t length_oracle(const SignedPermutation& w) {
  return detail::count_made_negative(w, positive_roots(w.n()));
}

/// inv_i(w) = |w(Psi_i) n Psi^-| by direct root counting.
inline std::size_t inv_i_oracle(const SignedPermutation& w, std::size_t i) {
  return detail::count_made_negative(w, psi_subset(w.n(), i));
}

}  // namespace hyperoct
