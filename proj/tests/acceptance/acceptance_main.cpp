// Acceptance suite: one PASS/FAIL line per criterion. Each criterion checks
// exact values and must also finish inside its time budget. A correct
// criterion that overruns its budget is re-timed up to twice and judged on
// the fastest run.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "hyperoct/hyperoct.hpp"
#include "test_support.hpp"

namespace {

using namespace hyperoct;
using hyperoct::testing::all_elements;

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  std::string id;
  std::string title;
  double budget_ms;
  std::function<Outcome()> run;
};

SignedPermutation W(std::vector<int> v) { return SignedPermutation(std::move(v)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
    } else if (c == ',' && !quoted) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Outcome ac1_b8_statistics() {
  Outcome o;
  const auto w = parse_window("2,4,1,-3,6,7,-5,8");
  o.expect(inversion_table(w).to_string() == "0:11:0:0:6:2:0:0", "I(w) = " + inversion_table(w).to_string());
  o.expect(inv_total(w) == 19, "inv != 19");
  o.expect(length_oracle(w) == 19, "L != 19");
  o.expect(rank(w) == 507185, "rank = " + rank(w).str());
  return o;
}

Outcome ac2_unrank_example() {
  Outcome o;
  const auto w = unrank(8, 1464993);
  o.expect(w == W({2, 7, -3, 8, -1, -5, 4, 6}), "unrank = " + format_window(w));
  return o;
}

Outcome ac3_radix_examples() {
  Outcome o;
  const auto a = encode(163);
  const auto b = encode(Natural(1984199097));
  o.expect(a.to_string() == "3:2:1:1", "encode(163) = " + a.to_string());
  o.expect(b.to_string() == "10:12:3:9:10:5:1:1:0:1", "encode(1984199097) = " + b.to_string());
  o.expect(decode(a) == 163, "decode(3:2:1:1) != 163");
  o.expect(decode(b) == Natural(1984199097), "decode != 1984199097");
  return o;
}

Outcome ac4_fmaj_example() {
  Outcome o;
  const auto w = W({2, -5, -3, -1, 4});
  o.expect(maj_b(w) == 6, "maj = " + std::to_string(maj_b(w)));
  o.expect(neg(w) == 3, "neg = " + std::to_string(neg(w)));
  o.expect(fmaj(w) == 15, "fmaj = " + std::to_string(fmaj(w)));
  return o;
}

Outcome ac5_table_reproduction() {
  Outcome o;
  std::ostringstream out;
  std::ostringstream err;
  const int code = bnperm::run({"table", "3", "--format", "csv"}, out, err);
  o.expect(code == 0, "table command failed: " + err.str());
  const auto fixture = read_file(HYPEROCT_FIXTURE_DIR "/b3_table1.csv");
  std::istringstream got(out.str());
  std::istringstream want(fixture);
  std::string gl;
  std::string wl;
  int rows = -1;  // header
  while (std::getline(want, wl)) {
    if (!std::getline(got, gl)) {
      o.expect(false, "table output ended early");
      break;
    }
    o.expect(gl == wl, "row mismatch: got '" + gl + "' want '" + wl + "'");
    if (rows >= 0) {
      const auto cells = split_csv_line(wl);
      const auto w = parse_window(cells.at(1));
      const auto image = parse_window(cells.at(3));
      o.expect(fmaj(image) == inv_total(w), "fmaj(phi(w)) != inv(w) for " + cells.at(1));
    }
    ++rows;
  }
  o.expect(rows == 48, "fixture rows = " + std::to_string(rows));
  o.expect(!std::getline(got, gl), "extra output rows");
  return o;
}

Outcome ac6_oracle_equivalence() {
  Outcome o;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& w : all_elements(n)) {
      std::size_t sum = 0;
      for (std::size_t i = 1; i <= n; ++i) {
        const auto closed = inv_i_closed(w, i);
        o.expect(closed == static_cast<int>(inv_i_oracle(w, i)),
                 "inv_" + std::to_string(i) + " mismatch at " + format_window(w));
        sum += static_cast<std::size_t>(closed);
      }
      o.expect(sum == length_oracle(w), "sum != L at " + format_window(w));
    }
  }
  return o;
}

Outcome ac7_cayley_length() {
  Outcome o;
  const auto dist = hyperoct::testing::cayley_distances(3);
  o.expect(dist.size() == 48, "BFS reached " + std::to_string(dist.size()) + " elements");
  for (const auto& w : all_elements(3)) {
    const std::vector<int> key(w.window().begin(), w.window().end());
    o.expect(static_cast<int>(length_oracle(w)) == dist.at(key), "length != BFS distance at " + format_window(w));
  }
  return o;
}

Outcome ac8_equidistribution() {
  Outcome o;
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto p = poincare(n);
    const auto inv = distribution(n, Statistic::inv);
    const auto fm = distribution(n, Statistic::fmaj);
    o.expect(inv == p, "n=" + std::to_string(n) + " inv distribution " + inv.to_string());
    o.expect(fm == p, "n=" + std::to_string(n) + " fmaj distribution " + fm.to_string());
  }
  return o;
}

Outcome ac9_rank_bijection() {
  Outcome o;
  for (const auto& w : all_elements(5)) o.expect(unrank(5, rank(w)) == w, "unrank(rank) != w at " + format_window(w));
  std::mt19937_64 rng(20240501);
  for (std::size_t n : {10u, 16u, 20u}) {
    const Natural order = group_order(n);
    for (int t = 0; t < 200; ++t) {
      Natural x = rng();
      x <<= 64;
      x += rng();
      const Natural k = x % order + 1;
      o.expect(rank(unrank(n, k)) == k, "rank(unrank) != k for n=" + std::to_string(n) + " k=" + k.str());
    }
  }
  return o;
}

Outcome ac10_insertion_lemma() {
  Outcome o;
  for (const auto& pi : all_elements(4)) {
    const int base = inv_total(pi);
    for (int i = 0; i <= 4; ++i) {
      const auto s = static_cast<std::size_t>(i);
      o.expect(inv_total(insert_value(pi, 5, s)) == 5 - i - 1 + base, "+5 at " + format_window(pi));
      o.expect(inv_total(insert_value(pi, -5, s)) == 5 + i + base, "-5 at " + format_window(pi));
    }
  }
  const auto pi = W({-3, 1, 2, -4, -5});
  o.expect(inv_total(insert_value(pi, 6, 2)) == 22, "inv pi_{6,2} != 22");
  o.expect(inv_total(insert_value(pi, -6, 2)) == 27, "inv pi_{-6,2} != 27");
  for (const auto& p : all_elements(3)) {
    const auto r = insertion_sum_check(p);
    o.expect(r.total == q_bracket(8) * QPolynomial::monomial(static_cast<std::size_t>(inv_total(p))),
             "summed insertions at " + format_window(p));
    o.expect(r.holds(), "per-sign insertion sums at " + format_window(p));
  }
  return o;
}

Outcome ac11_longest_element() {
  Outcome o;
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto w0 = longest_element(n);
    const auto t = inversion_table(w0);
    for (std::size_t i = 1; i <= n; ++i) {
      o.expect(t[i] == static_cast<int>(2 * (n - i) + 1), "I(w0) entry " + std::to_string(i) + " at n=" + std::to_string(n));
    }
    Natural order = 1;
    for (std::size_t k = 1; k <= n; ++k) order *= 2 * k;
    o.expect(rank(w0) == order, "rank(w0) = " + rank(w0).str() + " at n=" + std::to_string(n));
  }
  return o;
}

Outcome ac12_sigma_decomposition() {
  Outcome o;
  for (const auto& w : all_elements(4)) {
    const auto k = sigma_decompose(w);
    o.expect(sigma_compose(k) == w, "sigma round trip at " + format_window(w));
    o.expect(k.sum() == 2 * maj_b(w) + neg(w), "sum k_i != 2maj+neg at " + format_window(w));
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC01", "B_8 statistic example: I(w), inv = L = 19, rank 507185", 1, ac1_b8_statistics},
      {"AC02", "unrank(8, 1464993) = [2,7,-3,8,-1,-5,4,6]", 1, ac2_unrank_example},
      {"AC03", "radix examples 163 and 1984199097 and their decodes", 1, ac3_radix_examples},
      {"AC04", "fmaj example: maj 6, neg 3, fmaj 15", 1, ac4_fmaj_example},
      {"AC05", "B_3 table matches fixture (48 rows x 4 columns), fmaj(phi(w)) = inv(w)", 10, ac5_table_reproduction},
      {"AC06", "inv_i closed form = root oracle, sum = length, n = 1..4", 1000, ac6_oracle_equivalence},
      {"AC07", "length = Cayley-graph BFS distance on B_3", 100, ac7_cayley_length},
      {"AC08", "inv and fmaj distributions = Poincare polynomial, n = 1..6", 10000, ac8_equidistribution},
      {"AC09", "rank bijection: all of B_5, 200 random ranks at n = 10, 16, 20", 5000, ac9_rank_bijection},
      {"AC10", "insertion lemma on B_4, example values 22/27, summed identity on B_3", 2000, ac10_insertion_lemma},
      {"AC11", "I(w0) = (2n-1:...:1), rank(w0) = 2^n n!, n = 1..12", 100, ac11_longest_element},
      {"AC12", "sigma decomposition round trip and sum k_i = 2maj + neg on B_4", 1000, ac12_sigma_decomposition},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome outcome;
    double best_ms = 0;
    for (int attempt = 0; attempt < 3; ++attempt) {
      const auto start = std::chrono::steady_clock::now();
      outcome = c.run();
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      best_ms = attempt == 0 ? ms : std::min(best_ms, ms);
      if (!outcome.ok || best_ms <= c.budget_ms) break;
    }
    const bool in_time = best_ms <= c.budget_ms;
    const bool pass = outcome.ok && in_time;
    if (!pass) ++failures;
    std::printf("[%s] %s %s (%.3f ms, budget %.0f ms)", pass ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(),
                best_ms, c.budget_ms);
    if (!outcome.ok) std::printf(" -- %s", outcome.detail.c_str());
    if (outcome.ok && !in_time) std::printf(" -- over time budget");
    std::printf("\n");
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failures);
  return failures == 0 ? 0 : 1;
}
