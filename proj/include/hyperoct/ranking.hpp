#pragma once

// Rank bijection B_n <-> [1, 2^n n!]. The rank of w is 1 + the value of
// its inversion table read as a B_n-type numeral; unranking rebuilds the
// window from position n down to 1 by picking from the ordered list of
// remaining candidates n > ... > 1 > -1 > ... > -n.

#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperoct/bn_radix.hpp"
#include "hyperoct/inversion_stats.hpp"
#include "hyperoct/signed_permutation.hpp"

namespace hyperoct {

/// |B_n| = 2^n n!.
inline Natural group_order(std::size_t n) {
  detail::require_rank(n, "group_order");
  return base_weight(n);
}

inline Natural rank(const SignedPermutation& w) {
  return decode(digits_from_table(inversion_table(w))) + 1;
}

namespace detail {

/// Candidates n, n-1, ..., 1, -1, -2, ..., -n.
inline std::vector<int> full_candidate_list(std::size_t n) {
  std::vector<int> c;
  c.reserve(2 * n);
  for (int v = static_cast<int>(n); v >= 1; --v) c.push_back(v);
  for (int v = 1; v <= static_cast<int>(n); ++v) c.push_back(-v);
  return c;
}

inline std::vector<int> without_pair(const std::vector<int>& list, int picked) {
  std::vector<int> out;
  out.reserve(list.size() - 2);
  const int a = std::abs(picked);
  for (int v : list) {
    if (std::abs(v) != a) out.push_back(v);
  }
  return out;
}

inline void check_rank_range(std::size_t n, const Natural& k) {
  detail::require_rank(n, "unrank");
  if (k < 1 || k > group_order(n)) {
    throw std::out_of_range("rank " + k.str() + " outside [1, " + group_order(n).str() + "]");
  }
}

}  // namespace detail

/// Digit d_{p-1} of k-1 selects w_p from the remaining candidates.
inline SignedPermutation unrank(std::size_t n, const Natural& k) {
  detail::check_rank_range(n, k);
  const BnDigits d = encode(k - 1, n);
  std::vector<int> w(n);
  std::vector<int> candidates = detail::full_candidate_list(n);
  for (std::size_t p = n; p >= 1; --p) {
    const int pick = candidates[static_cast<std::size_t>(d[p - 1])];
    w[p - 1] = pick;
    candidates = detail::without_pair(candidates, pick);
  }
  return SignedPermutation(std::move(w));
}

/// Walks B_n in rank order starting from any rank.
///
/// Advancing is an odometer increment on the digit vector; only the
/// positions driven by changed digits are rebuilt, using the candidate
/// list cached for each level.
class Enumerator {
 public:
  explicit Enumerator(std::size_t n, const Natural& start_rank = 1)
      : n_(n), rank_(start_rank), window_(n), levels_(n + 1) {
    detail::check_rank_range(n, start_rank);
    const BnDigits d = encode(start_rank - 1, n);
    digits_.assign(d.digits().begin(), d.digits().end());
    levels_[n] = detail::full_candidate_list(n);
    rebuild_from(n);
  }

  bool done() const noexcept { return done_; }
  std::size_t n() const noexcept { return n_; }

  /// Rank of the current element.
  const Natural& rank() const noexcept { return rank_; }

  /// Window of the current element, positions 1..n.
  const std::vector<int>& window() const noexcept { return window_; }

  SignedPermutation current() const { return SignedPermutation(window_); }

  /// Least significant digit first.
  const std::vector<int>& digits() const noexcept { return digits_; }

  void next() {
    if (done_) return;
    std::size_t i = 0;
    while (i < n_ && digits_[i] == static_cast<int>(2 * i + 1)) {
      digits_[i] = 0;
      ++i;
    }
    if (i == n_) {
      done_ = true;
      return;
    }
    ++digits_[i];
    ++rank_;
    rebuild_from(i + 1);
  }

 private:
  void rebuild_from(std::size_t top) {
    for (std::size_t p = top; p >= 1; --p) {
      const int pick = levels_[p][static_cast<std::size_t>(digits_[p - 1])];
      window_[p - 1] = pick;
      levels_[p - 1] = detail::without_pair(levels_[p], pick);
    }
  }

  std::size_t n_;
  Natural rank_;
  std::vector<int> digits_;
  std::vector<int> window_;
  // levels_[p] holds the candidates available when choosing w_p.
  std::vector<std::vector<int>> levels_;
  bool done_ = false;
};

/// All of B_n in rank order.
inline std::vector<SignedPermutation> enumerate(std::size_t n) {
  std::vector<SignedPermutation> out;
  for (Enumerator e(n); !e.done(); e.next()) out.push_back(e.current());
  return out;
}

}  // namespace hyperoct
