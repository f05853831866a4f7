#pragma once

// Exhaustive self-check over B_n: root-counting oracles against the closed
// forms, the rank bijection, the insertion identities, and equidistribution
// of inv and fmaj together with the phi identity.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperoct/inversion_stats.hpp"
#include "hyperoct/mahonian.hpp"
#include "hyperoct/ranking.hpp"
#include "hyperoct/root_system.hpp"
#include "hyperoct/text.hpp"

namespace hyperoct {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  /// Description of the first failure, empty when passed.
  std::string counterexample;
};

struct VerificationReport {
  std::size_t n = 0;
  std::vector<CheckResult> checks;
  std::optional<EquidistributionReport> equidistribution;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

namespace detail {

struct Tally {
  std::uint64_t cases = 0;
  std::optional<std::string> bad;

  /// describe() is only called for the first failure.
  template <typename Describe>
  void record(bool ok, Describe describe) {
    ++cases;
    if (!ok && !bad) bad = describe();
  }
};

inline CheckResult merge_tallies(std::string name, const std::vector<Tally>& shards) {
  CheckResult r{std::move(name), true, 0, {}};
  for (const auto& t : shards) {
    r.cases += t.cases;
    if (r.passed && t.bad) {
      r.passed = false;
      r.counterexample = *t.bad;
    }
  }
  return r;
}

}  // namespace detail

/// Inverse-table entries from the closed form must equal root counting, and
/// their sum must equal the length oracle.
inline CheckResult check_inversion_oracle(std::size_t n, const EnumerationOptions& opt = {}) {
  detail::check_guard(n, opt);
  std::vector<std::vector<Root>> parts;
  for (std::size_t i = 1; i <= n; ++i) parts.push_back(psi_subset(n, i));
  const auto positive = positive_roots(n);
  auto shards = detail::shard_over_ranks(n, opt.shards, detail::Tally{}, [&](detail::Tally& t, const Enumerator& e) {
    const auto w = e.current();
    int sum = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      const int closed = inv_i_closed(w, i);
      sum += closed;
      t.record(closed == static_cast<int>(detail::count_made_negative(w, parts[i - 1])),
               [&] { return "w = " + format_window(w) + ", i = " + std::to_string(i); });
    }
    t.record(sum == static_cast<int>(detail::count_made_negative(w, positive)),
             [&] { return "w = " + format_window(w) + ": sum of table != length"; });
  });
  return detail::merge_tallies("inv_i closed form = root oracle", shards);
}

inline CheckResult check_rank_round_trip(std::size_t n, const EnumerationOptions& opt = {}) {
  detail::check_guard(n, opt);
  auto shards = detail::shard_over_ranks(n, opt.shards, detail::Tally{}, [n](detail::Tally& t, const Enumerator& e) {
    const auto w = e.current();
    const Natural k = rank(w);
    t.record(k == e.rank() && unrank(n, k) == w,
             [&] { return "w = " + format_window(w) + ", rank " + e.rank().str(); });
  });
  return detail::merge_tallies("rank/unrank round trip", shards);
}

/// Both insertion identities for every pi in B_{n-1}, every space and sign,
/// plus the summed q-identity per pi. Trivially passes for n = 1.
inline CheckResult check_insertion_lemma(std::size_t n, const EnumerationOptions& opt = {}) {
  detail::check_guard(n, opt);
  if (n < 2) return CheckResult{"insertion lemma", true, 0, {}};
  const auto m = n - 1;
  auto shards = detail::shard_over_ranks(m, opt.shards, detail::Tally{}, [n](detail::Tally& t, const Enumerator& e) {
    const auto pi = e.current();
    const int base = inv_total(pi);
    const int v = static_cast<int>(n);
    for (std::size_t space = 0; space < n; ++space) {
      const int s = static_cast<int>(space);
      t.record(inv_total(insert_value(pi, v, space)) == v - s - 1 + base,
               [&] { return "pi = " + format_window(pi) + ", +" + std::to_string(n) + " at space " + std::to_string(space); });
      t.record(inv_total(insert_value(pi, -v, space)) == v + s + base,
               [&] { return "pi = " + format_window(pi) + ", -" + std::to_string(n) + " at space " + std::to_string(space); });
    }
    t.record(insertion_sum_check(pi).holds(),
             [&] { return "pi = " + format_window(pi) + ": summed insertion identity"; });
  });
  return detail::merge_tallies("insertion lemma", shards);
}

inline VerificationReport verify_all(std::size_t n, const EnumerationOptions& opt = {}) {
  detail::check_guard(n, opt);
  VerificationReport report;
  report.n = n;
  report.checks.push_back(check_inversion_oracle(n, opt));
  report.checks.push_back(check_rank_round_trip(n, opt));
  report.checks.push_back(check_insertion_lemma(n, opt));

  auto eq = verify_equidistribution(n, opt);
  CheckResult dist{"inv and fmaj distributions = Poincare polynomial", eq.distributions_equal, 1, {}};
  if (!eq.distributions_equal) {
    dist.counterexample = "inv: " + eq.inv_distribution.to_string() + "; fmaj: " + eq.fmaj_distribution.to_string() +
                          "; expected: " + eq.poincare.to_string();
  }
  CheckResult pointwise{"fmaj(phi(w)) = inv(w)", eq.phi_pointwise, static_cast<std::uint64_t>(eq.elements), {}};
  if (eq.phi_counterexample) pointwise.counterexample = "w = " + format_window(*eq.phi_counterexample);
  report.checks.push_back(std::move(dist));
  report.checks.push_back(std::move(pointwise));
  report.equidistribution = std::move(eq);
  return report;
}

}  // namespace hyperoct
