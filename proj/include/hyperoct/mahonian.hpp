#pragma once

// q-polynomials with exact nonnegative coefficients, the Poincare
// polynomial prod_{i=1}^n [2i]_q of B_n, statistic distributions by
// exhaustive enumeration, and the bijection phi with inv(w) = fmaj(phi(w)).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "hyperoct/bn_radix.hpp"
#include "hyperoct/inversion_stats.hpp"
#include "hyperoct/ranking.hpp"
#include "hyperoct/root_system.hpp"
#include "hyperoct/signed_permutation.hpp"

namespace hyperoct {

/// Dense univariate polynomial; coefficient i multiplies q^i. Always kept
/// without trailing zeros, so the zero polynomial has no coefficients.
class QPolynomial {
 public:
  QPolynomial() = default;

  explicit QPolynomial(std::vector<Natural> coefficients) : c_(std::move(coefficients)) {
    for (const auto& x : c_) {
      if (x < 0) throw std::domain_error("QPolynomial: negative coefficient");
    }
    trim();
  }

  static QPolynomial monomial(std::size_t exponent, Natural coefficient = 1) {
    std::vector<Natural> c(exponent + 1, 0);
    c[exponent] = std::move(coefficient);
    return QPolynomial(std::move(c));
  }

  static QPolynomial from_counts(std::span<const std::uint64_t> counts) {
    std::vector<Natural> c(counts.begin(), counts.end());
    return QPolynomial(std::move(c));
  }

  const std::vector<Natural>& coefficients() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }

  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }

  Natural coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Natural(0); }

  Natural eval_at_one() const {
    Natural s = 0;
    for (const auto& x : c_) s += x;
    return s;
  }

  bool is_palindromic() const {
    return std::equal(c_.begin(), c_.end(), c_.rbegin());
  }

  QPolynomial& operator+=(const QPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }

  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Natural> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return QPolynomial(std::move(c));
  }

  bool operator==(const QPolynomial&) const = default;

  /// "1 + 2q + 2q^2 + q^3"; zero renders as "0".
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (!out.empty()) out += " + ";
      const bool unit = c_[i] == 1;
      if (i == 0) {
        out += c_[i].str();
        continue;
      }
      if (!unit) out += c_[i].str();
      out += 'q';
      if (i > 1) out += '^' + std::to_string(i);
    }
    return out;
  }

  /// "[c0,c1,...]".
  std::string coefficient_list() const {
    std::string out = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i != 0) out += ',';
      out += c_[i].str();
    }
    return out + "]";
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Natural> c_;
};

inline QPolynomial poly_mul(const QPolynomial& a, const QPolynomial& b) { return a * b; }
inline Natural poly_eval_at_one(const QPolynomial& a) { return a.eval_at_one(); }

/// [m]_q = 1 + q + ... + q^{m-1}.
inline QPolynomial q_bracket(std::size_t m) {
  if (m == 0) throw std::invalid_argument("q_bracket: m must be at least 1");
  return QPolynomial(std::vector<Natural>(m, 1));
}

/// prod_{i=1}^n [2i]_q.
inline QPolynomial poincare(std::size_t n) {
  detail::require_rank(n, "poincare");
  QPolynomial p = QPolynomial::monomial(0);
  for (std::size_t i = 1; i <= n; ++i) p = p * q_bracket(2 * i);
  return p;
}

enum class Statistic { inv, fmaj, maj_b, neg, length_oracle };

inline std::string_view to_string(Statistic s) {
  switch (s) {
    case Statistic::inv: return "inv";
    case Statistic::fmaj: return "fmaj";
    case Statistic::maj_b: return "maj_b";
    case Statistic::neg: return "neg";
    case Statistic::length_oracle: return "length_oracle";
  }
  return "?";
}

inline int evaluate(Statistic s, const SignedPermutation& w) {
  switch (s) {
    case Statistic::inv: return inv_total(w);
    case Statistic::fmaj: return fmaj(w);
    case Statistic::maj_b: return maj_b(w);
    case Statistic::neg: return neg(w);
    case Statistic::length_oracle: return static_cast<int>(length_oracle(w));
  }
  throw std::invalid_argument("unknown statistic");
}

/// Raised when an exhaustive computation is asked for n above the guard.
class GuardExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct EnumerationOptions {
  /// Largest n accepted for exhaustive enumeration (|B_8| is about 10.3M).
  std::size_t max_n = 8;
  /// Number of rank subranges; 0 picks one per hardware thread.
  unsigned shards = 0;
};

namespace detail {

inline void check_guard(std::size_t n, const EnumerationOptions& opt) {
  require_rank(n, "enumeration");
  if (n > opt.max_n) {
    throw GuardExceeded("n = " + std::to_string(n) + " exceeds the enumeration guard " +
                        std::to_string(opt.max_n) + " (|B_n| = " + group_order(n).str() + ")");
  }
  if (n > 20) throw GuardExceeded("exhaustive enumeration is limited to n <= 20");
}

/// Splits the ranks [1, |B_n|] into contiguous subranges, runs
/// visit(acc, enumerator) for every element of each subrange on its own
/// thread, and returns the per-shard accumulators in rank order.
template <typename Acc, typename Visit>
std::vector<Acc> shard_over_ranks(std::size_t n, unsigned shards, const Acc& init, Visit visit) {
  const std::uint64_t total = static_cast<std::uint64_t>(group_order(n));
  if (shards == 0) shards = std::max(1U, std::thread::hardware_concurrency());
  shards = static_cast<unsigned>(std::min<std::uint64_t>(shards, total));
  std::vector<Acc> acc(shards, init);
  auto run = [&](unsigned s) {
    const std::uint64_t first = total * s / shards;
    const std::uint64_t last = total * (s + 1) / shards;
    Enumerator e(n, Natural(first + 1));
    for (std::uint64_t r = first; r < last; ++r, e.next()) visit(acc[s], e);
  };
  if (shards == 1) {
    run(0);
    return acc;
  }
  std::vector<std::thread> workers;
  workers.reserve(shards);
  for (unsigned s = 0; s < shards; ++s) workers.emplace_back(run, s);
  for (auto& t : workers) t.join();
  return acc;
}

inline void merge_counts(std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& from) {
  if (from.size() > into.size()) into.resize(from.size(), 0);
  for (std::size_t i = 0; i < from.size(); ++i) into[i] += from[i];
}

}  // namespace detail

/// Coefficient of q^k counts the w in B_n with statistic(w) = k.
inline QPolynomial distribution(std::size_t n, Statistic stat, const EnumerationOptions& opt = {}) {
  detail::check_guard(n, opt);
  const std::vector<std::uint64_t> empty(n * n + 1, 0);
  auto shards = detail::shard_over_ranks(n, opt.shards, empty, [stat](auto& counts, const Enumerator& e) {
    ++counts[static_cast<std::size_t>(evaluate(stat, e.current()))];
  });
  std::vector<std::uint64_t> total;
  for (const auto& s : shards) detail::merge_counts(total, s);
  return QPolynomial::from_counts(total);
}

/// phi(w) = sigma_{n-1}^{a_{n-1}} ... sigma_0^{a_0} where I(w) = (a_{n-1}:...:a_0).
inline SignedPermutation phi(const SignedPermutation& w) {
  const auto t = inversion_table(w);
  std::vector<int> k(t.entries().rbegin(), t.entries().rend());
  return sigma_compose(SigmaExponents(std::move(k)));
}

/// The 2n insertions of +-n into pi in B_{n-1}, summed as q^{inv} by sign,
/// next to the closed forms [n]_q q^{inv pi}, q^n [n]_q q^{inv pi} and
/// [2n]_q q^{inv pi}.
struct InsertionSums {
  QPolynomial positive;
  QPolynomial negative;
  QPolynomial total;
  QPolynomial expected_positive;
  QPolynomial expected_negative;
  QPolynomial expected_total;

  bool holds() const {
    return positive == expected_positive && negative == expected_negative && total == expected_total;
  }
};

inline InsertionSums insertion_sum_check(const SignedPermutation& pi) {
  const auto n = pi.n() + 1;
  const auto base = static_cast<std::size_t>(inv_total(pi));
  InsertionSums r;
  for (std::size_t space = 0; space < n; ++space) {
    const int v = static_cast<int>(n);
    r.positive += QPolynomial::monomial(static_cast<std::size_t>(inv_total(insert_value(pi, v, space))));
    r.negative += QPolynomial::monomial(static_cast<std::size_t>(inv_total(insert_value(pi, -v, space))));
  }
  r.total = r.positive + r.negative;
  const auto shift = QPolynomial::monomial(base);
  r.expected_positive = q_bracket(n) * shift;
  r.expected_negative = QPolynomial::monomial(n) * q_bracket(n) * shift;
  r.expected_total = q_bracket(2 * n) * shift;
  return r;
}

struct EquidistributionReport {
  std::size_t n = 0;
  Natural elements = 0;
  QPolynomial inv_distribution;
  QPolynomial fmaj_distribution;
  QPolynomial poincare;
  bool distributions_equal = false;
  bool phi_pointwise = false;
  /// First element (in rank order) with fmaj(phi(w)) != inv(w), if any.
  std::optional<SignedPermutation> phi_counterexample;

  bool passed() const { return distributions_equal && phi_pointwise; }
};

/// One exhaustive pass over B_n collecting the inv and fmaj histograms and
/// checking fmaj(phi(w)) = inv(w) pointwise.
inline EquidistributionReport verify_equidistribution(std::size_t n, const EnumerationOptions& opt = {}) {
  detail::check_guard(n, opt);
  struct Acc {
    std::vector<std::uint64_t> inv;
    std::vector<std::uint64_t> fmaj;
    std::optional<std::vector<int>> bad;
  };
  const Acc init{std::vector<std::uint64_t>(n * n + 1, 0), std::vector<std::uint64_t>(n * n + 1, 0), {}};
  auto shards = detail::shard_over_ranks(n, opt.shards, init, [](Acc& a, const Enumerator& e) {
    const auto w = e.current();
    const int i = inv_total(w);
    ++a.inv[static_cast<std::size_t>(i)];
    ++a.fmaj[static_cast<std::size_t>(fmaj(w))];
    if (!a.bad && fmaj(phi(w)) != i) a.bad = e.window();
  });

  EquidistributionReport r;
  r.n = n;
  r.elements = group_order(n);
  std::vector<std::uint64_t> inv_counts;
  std::vector<std::uint64_t> fmaj_counts;
  for (const auto& s : shards) {
    detail::merge_counts(inv_counts, s.inv);
    detail::merge_counts(fmaj_counts, s.fmaj);
    if (!r.phi_counterexample && s.bad) r.phi_counterexample = SignedPermutation(*s.bad);
  }
  r.inv_distribution = QPolynomial::from_counts(inv_counts);
  r.fmaj_distribution = QPolynomial::from_counts(fmaj_counts);
  r.poincare = poincare(n);
  r.distributions_equal = r.inv_distribution == r.poincare && r.fmaj_distribution == r.poincare;
  r.phi_pointwise = !r.phi_counterexample.has_value();
  return r;
}

}  // namespace hyperoct
