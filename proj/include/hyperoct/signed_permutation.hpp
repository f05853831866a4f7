#pragma once

// Signed permutations of {1..n}: elements of the hyperoctahedral group B_n
// in window notation, together with the two generator families
// {t_1, s_1, ..., s_{n-1}} and {sigma_0, ..., sigma_{n-1}} and the two
// canonical factorisations of an element.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperoct {

namespace detail {

inline void require_rank(std::size_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": n must be at least 1");
}

inline void require_same_rank(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": mismatched ranks " + std::to_string(a) +
                                " and " + std::to_string(b));
  }
}

}  // namespace detail

/// An element of B_n written as its window (w(1), ..., w(n)).
///
/// The absolute values form a permutation of {1..n}; each entry carries a
/// sign. The element acts on signed integers by w(-i) = -w(i).
class SignedPermutation {
 public:
  explicit SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
    detail::require_rank(window_.size(), "SignedPermutation");
    const auto n = window_.size();
    std::vector<bool> seen(n + 1, false);
    for (int v : window_) {
      if (v == 0) throw std::invalid_argument("SignedPermutation: zero entry");
      const auto a = static_cast<std::size_t>(std::abs(v));
      if (a > n) {
        throw std::invalid_argument("SignedPermutation: value " + std::to_string(v) +
                                    " outside [1, " + std::to_string(n) + "]");
      }
      if (seen[a]) {
        throw std::invalid_argument("SignedPermutation: duplicate absolute value " +
                                    std::to_string(a));
      }
      seen[a] = true;
    }
  }

  static SignedPermutation identity(std::size_t n) {
    detail::require_rank(n, "identity");
    std::vector<int> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<int>(i + 1);
    return SignedPermutation(std::move(w), Unchecked{});
  }

  std::size_t n() const noexcept { return window_.size(); }
  std::span<const int> window() const noexcept { return window_; }

  /// w(i) for a nonzero signed point i with |i| <= n.
  int operator()(int i) const {
    const auto a = static_cast<std::size_t>(std::abs(i));
    if (i == 0 || a > n()) throw std::out_of_range("SignedPermutation: point out of range");
    const int v = window_[a - 1];
    return i < 0 ? -v : v;
  }

  /// Entry at 1-based position p.
  int at(std::size_t p) const {
    if (p == 0 || p > n()) throw std::out_of_range("SignedPermutation: position out of range");
    return window_[p - 1];
  }

  bool operator==(const SignedPermutation&) const = default;
  auto operator<=>(const SignedPermutation&) const = default;

 private:
  struct Unchecked {};
  SignedPermutation(std::vector<int> window, Unchecked) : window_(std::move(window)) {}

  friend SignedPermutation compose(const SignedPermutation&, const SignedPermutation&);
  friend SignedPermutation inverse(const SignedPermutation&);

  std::vector<int> window_;
};

/// An ordinary permutation beta of {1..n}, beta_i = beta(i).
class SnPermutation {
 public:
  explicit SnPermutation(std::vector<int> values) : values_(std::move(values)) {
    detail::require_rank(values_.size(), "SnPermutation");
    std::vector<bool> seen(values_.size() + 1, false);
    for (int v : values_) {
      if (v < 1 || static_cast<std::size_t>(v) > values_.size() || seen[v]) {
        throw std::invalid_argument("SnPermutation: not a permutation of [1, n]");
      }
      seen[v] = true;
    }
  }

  std::size_t n() const noexcept { return values_.size(); }
  std::span<const int> values() const noexcept { return values_; }
  int at(std::size_t p) const { return values_.at(p - 1); }

  bool operator==(const SnPermutation&) const = default;

 private:
  std::vector<int> values_;
};

/// The exponents r_1..r_n of t_1^{r_1} ... t_n^{r_n}.
class SignVector {
 public:
  explicit SignVector(std::vector<int> bits) : bits_(std::move(bits)) {
    detail::require_rank(bits_.size(), "SignVector");
    for (int b : bits_) {
      if (b != 0 && b != 1) throw std::invalid_argument("SignVector: entries must be 0 or 1");
    }
  }

  std::size_t n() const noexcept { return bits_.size(); }
  std::span<const int> bits() const noexcept { return bits_; }
  int at(std::size_t p) const { return bits_.at(p - 1); }

  bool operator==(const SignVector&) const = default;

 private:
  std::vector<int> bits_;
};

/// Exponents k_0..k_{n-1} of sigma_{n-1}^{k_{n-1}} ... sigma_1^{k_1} sigma_0^{k_0},
/// with 0 <= k_i <= 2i+1.
class SigmaExponents {
 public:
  explicit SigmaExponents(std::vector<int> exponents) : k_(std::move(exponents)) {
    detail::require_rank(k_.size(), "SigmaExponents");
    for (std::size_t i = 0; i < k_.size(); ++i) {
      if (k_[i] < 0 || k_[i] > static_cast<int>(2 * i + 1)) {
        throw std::out_of_range("SigmaExponents: k_" + std::to_string(i) + " = " +
                                std::to_string(k_[i]) + " outside [0, " +
                                std::to_string(2 * i + 1) + "]");
      }
    }
  }

  std::size_t n() const noexcept { return k_.size(); }
  std::span<const int> exponents() const noexcept { return k_; }
  int operator[](std::size_t i) const { return k_.at(i); }

  int sum() const noexcept {
    int s = 0;
    for (int k : k_) s += k;
    return s;
  }

  bool operator==(const SigmaExponents&) const = default;

 private:
  std::vector<int> k_;
};

inline SignedPermutation identity(std::size_t n) { return SignedPermutation::identity(n); }

/// (f o g)(i) = f(g(i)), i.e. result_i = sign(g_i) * f_{|g_i|}.
inline SignedPermutation compose(const SignedPermutation& f, const SignedPermutation& g) {
  detail::require_same_rank(f.n(), g.n(), "compose");
  std::vector<int> out(g.n());
  for (std::size_t i = 0; i < g.n(); ++i) out[i] = f(g.window_[i]);
  return SignedPermutation(std::move(out), SignedPermutation::Unchecked{});
}

inline SignedPermutation operator*(const SignedPermutation& f, const SignedPermutation& g) {
  return compose(f, g);
}

inline SignedPermutation inverse(const SignedPermutation& w) {
  std::vector<int> out(w.n());
  for (std::size_t i = 0; i < w.n(); ++i) {
    const int v = w.window_[i];
    const int p = static_cast<int>(i + 1);
    out[std::abs(v) - 1] = v < 0 ? -p : p;
  }
  return SignedPermutation(std::move(out), SignedPermutation::Unchecked{});
}

/// w^e for any integer e (negative exponents use the inverse).
inline SignedPermutation power(const SignedPermutation& w, long long e) {
  SignedPermutation base = e < 0 ? inverse(w) : w;
  unsigned long long k = e < 0 ? 0ULL - static_cast<unsigned long long>(e) : e;
  SignedPermutation acc = identity(w.n());
  while (k != 0) {
    if (k & 1ULL) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

/// t_k negates position k.
inline SignedPermutation generator_t(std::size_t n, std::size_t k) {
  detail::require_rank(n, "generator_t");
  if (k < 1 || k > n) throw std::out_of_range("generator_t: index outside [1, n]");
  std::vector<int> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<int>(i + 1);
  w[k - 1] = -w[k - 1];
  return SignedPermutation(std::move(w));
}

/// s_i swaps positions i and i+1.
inline SignedPermutation generator_s(std::size_t n, std::size_t i) {
  detail::require_rank(n, "generator_s");
  if (i < 1 || i + 1 > n) throw std::out_of_range("generator_s: index outside [1, n-1]");
  std::vector<int> w(n);
  for (std::size_t j = 0; j < n; ++j) w[j] = static_cast<int>(j + 1);
  std::swap(w[i - 1], w[i]);
  return SignedPermutation(std::move(w));
}

/// sigma_0 = t_1 and sigma_i = s_i s_{i-1} ... s_1 t_1, whose window is
/// (-(i+1), 1, 2, ..., i, i+2, ..., n).
inline SignedPermutation sigma(std::size_t n, std::size_t i) {
  detail::require_rank(n, "sigma");
  if (i >= n) throw std::out_of_range("sigma: index outside [0, n-1]");
  std::vector<int> w(n);
  w[0] = -static_cast<int>(i + 1);
  for (std::size_t p = 1; p <= i; ++p) w[p] = static_cast<int>(p);
  for (std::size_t p = i + 1; p < n; ++p) w[p] = static_cast<int>(p + 1);
  return SignedPermutation(std::move(w));
}

/// w_0 = t_1 ... t_n = (-1, ..., -n).
inline SignedPermutation longest_element(std::size_t n) {
  detail::require_rank(n, "longest_element");
  std::vector<int> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = -static_cast<int>(i + 1);
  return SignedPermutation(std::move(w));
}

/// w = beta * t_1^{r_1} ... t_n^{r_n}: beta_i = |w_i|, r_i = [w_i < 0].
inline std::pair<SnPermutation, SignVector> decompose_beta_r(const SignedPermutation& w) {
  std::vector<int> beta(w.n());
  std::vector<int> r(w.n());
  for (std::size_t i = 0; i < w.n(); ++i) {
    const int v = w.window()[i];
    beta[i] = std::abs(v);
    r[i] = v < 0 ? 1 : 0;
  }
  return {SnPermutation(std::move(beta)), SignVector(std::move(r))};
}

inline SignedPermutation recompose(const SnPermutation& beta, const SignVector& r) {
  detail::require_same_rank(beta.n(), r.n(), "recompose");
  std::vector<int> w(beta.n());
  for (std::size_t i = 0; i < beta.n(); ++i) {
    w[i] = r.bits()[i] != 0 ? -beta.values()[i] : beta.values()[i];
  }
  return SignedPermutation(std::move(w));
}

namespace detail {

// sigma_{m-1} moves the points of +-[1, m] along the single cycle
//   m -> m-1 -> ... -> 1 -> -m -> ... -> -1 -> m
// and fixes everything above m. cycle_index is the position of v on it.
inline int cycle_index(int m, int v) noexcept { return v > 0 ? m - v : 2 * m + v; }

inline int cycle_point(int m, int c) noexcept { return c < m ? m - c : -(2 * m - c); }

/// sigma_{m-1}^k (v) for any integer k.
inline int sigma_power_apply(int m, long long k, int v) noexcept {
  if (v > m || -v > m) return v;
  const long long period = 2LL * m;
  long long c = (cycle_index(m, v) + k) % period;
  if (c < 0) c += period;
  return cycle_point(m, static_cast<int>(c));
}

}  // namespace detail

/// sigma_{n-1}^{k_{n-1}} ... sigma_1^{k_1} sigma_0^{k_0}.
inline SignedPermutation sigma_compose(const SigmaExponents& k) {
  const auto n = k.n();
  // Build the product right to left as a map on points: start from the
  // identity window and push every entry through sigma_{m-1}^{k_{m-1}}
  // for m = 1, ..., n.
  std::vector<int> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<int>(i + 1);
  for (std::size_t m = 1; m <= n; ++m) {
    const int e = k[m - 1];
    if (e == 0) continue;
    for (auto& v : w) v = detail::sigma_power_apply(static_cast<int>(m), e, v);
  }
  return SignedPermutation(std::move(w));
}

/// Inverse of sigma_compose. Peels the top factor: k_{m-1} is the unique
/// exponent with sigma_{m-1}^k(m) = w(m); sigma_{m-1}^{-k} w then fixes m.
inline SigmaExponents sigma_decompose(const SignedPermutation& w) {
  const auto n = w.n();
  std::vector<int> k(n, 0);
  std::vector<int> rest(w.window().begin(), w.window().end());
  for (std::size_t m = n; m >= 1; --m) {
    const int top = static_cast<int>(m);
    const int e = detail::cycle_index(top, rest[m - 1]);
    k[m - 1] = e;
    if (e == 0) continue;
    for (std::size_t j = 0; j < m; ++j) rest[j] = detail::sigma_power_apply(top, -e, rest[j]);
  }
  return SigmaExponents(std::move(k));
}

}  // namespace hyperoct
