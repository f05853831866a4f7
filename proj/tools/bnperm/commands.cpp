#include "commands.hpp"

#include <cstddef>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperoct/hyperoct.hpp"

namespace bnperm {
namespace {

using hyperoct::Natural;
using hyperoct::SignedPermutation;
using Json = nlohmann::ordered_json;

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i != 0) out << ',';
    out << csv_field(fields[i]);
  }
  out << '\n';
}

/// Ordered key/value records rendered in any of the three formats.
using Record = std::vector<std::pair<std::string, Json>>;

std::string plain_value(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void emit_record(std::ostream& out, OutputFormat fmt, const Record& rec) {
  switch (fmt) {
    case OutputFormat::plain:
      for (const auto& [k, v] : rec) out << k << ": " << plain_value(v) << '\n';
      break;
    case OutputFormat::json: {
      Json j = Json::object();
      for (const auto& [k, v] : rec) j[k] = v;
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv: {
      std::vector<std::string> keys;
      std::vector<std::string> values;
      for (const auto& [k, v] : rec) {
        keys.push_back(k);
        values.push_back(plain_value(v));
      }
      write_csv_row(out, keys);
      write_csv_row(out, values);
      break;
    }
  }
}

std::string join_ints(std::span<const int> v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

Record stat_record(const SignedPermutation& w) {
  const auto table = hyperoct::inversion_table(w);
  const auto k = hyperoct::sigma_decompose(w);
  const auto des = hyperoct::descent_set_b(w);
  return {
      {"n", w.n()},
      {"window", hyperoct::format_window(w)},
      {"table", table.to_string()},
      {"inv", table.total()},
      {"length", hyperoct::length_oracle(w)},
      {"descents", join_ints(des, ',')},
      {"maj", hyperoct::maj_b(w)},
      {"neg", hyperoct::neg(w)},
      {"fmaj", hyperoct::fmaj(w)},
      {"sigma_exponents", join_ints(k.exponents(), ',')},
      {"rank", hyperoct::rank(w).str()},
  };
}

void emit_table(std::ostream& out, OutputFormat fmt, std::size_t n, const hyperoct::EnumerationOptions& opt) {
  if (n > opt.max_n) {
    throw hyperoct::GuardExceeded("n = " + std::to_string(n) + " exceeds the enumeration guard " +
                                  std::to_string(opt.max_n));
  }
  Json rows = Json::array();
  if (fmt == OutputFormat::csv) write_csv_row(out, {"rank", "window", "table", "phi"});
  const int wwidth = static_cast<int>(4 * n);
  for (hyperoct::Enumerator e(n); !e.done(); e.next()) {
    const auto w = e.current();
    const auto table = hyperoct::inversion_table(w).to_string();
    const auto image = hyperoct::phi(w);
    switch (fmt) {
      case OutputFormat::plain:
        out << std::setw(6) << e.rank().str() << "  " << std::left << std::setw(wwidth)
            << hyperoct::format_window_spaced(w) << "  " << std::setw(wwidth) << table << "  "
            << hyperoct::format_window_spaced(image) << std::right << '\n';
        break;
      case OutputFormat::csv:
        write_csv_row(out, {e.rank().str(), hyperoct::format_window(w), table, hyperoct::format_window(image)});
        break;
      case OutputFormat::json:
        rows.push_back(Json{{"rank", e.rank().str()},
                            {"window", hyperoct::format_window(w)},
                            {"table", table},
                            {"phi", hyperoct::format_window(image)}});
        break;
    }
  }
  if (fmt == OutputFormat::json) out << rows.dump(2) << '\n';
}

void emit_poincare(std::ostream& out, OutputFormat fmt, std::size_t n) {
  const auto p = hyperoct::poincare(n);
  switch (fmt) {
    case OutputFormat::plain:
      out << p.to_string() << '\n';
      break;
    case OutputFormat::json: {
      Json coeffs = Json::array();
      for (const auto& c : p.coefficients()) coeffs.push_back(c.str());
      out << Json{{"n", n}, {"polynomial", p.to_string()}, {"coefficients", coeffs}}.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      write_csv_row(out, {"exponent", "coefficient"});
      for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
        write_csv_row(out, {std::to_string(i), p.coefficients()[i].str()});
      }
      break;
  }
}

int emit_verify(std::ostream& out, std::ostream& err, OutputFormat fmt, std::size_t n,
                const hyperoct::EnumerationOptions& opt) {
  const auto report = hyperoct::verify_all(n, opt);
  switch (fmt) {
    case OutputFormat::plain:
      for (const auto& c : report.checks) {
        out << (c.passed ? "PASS  " : "FAIL  ") << c.name << " (" << c.cases << " cases)";
        if (!c.passed) out << ": " << c.counterexample;
        out << '\n';
      }
      if (report.equidistribution) out << "poincare: " << report.equidistribution->poincare.to_string() << '\n';
      out << "verify n=" << n << ": " << (report.passed() ? "PASS" : "FAIL") << '\n';
      break;
    case OutputFormat::json: {
      Json checks = Json::array();
      for (const auto& c : report.checks) {
        checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"cases", c.cases},
                              {"counterexample", c.counterexample}});
      }
      Json j{{"n", n}, {"passed", report.passed()}, {"checks", checks}};
      if (report.equidistribution) j["poincare"] = report.equidistribution->poincare.to_string();
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      write_csv_row(out, {"check", "passed", "cases", "counterexample"});
      for (const auto& c : report.checks) {
        write_csv_row(out, {c.name, c.passed ? "true" : "false", std::to_string(c.cases), c.counterexample});
      }
      break;
  }
  for (const auto& c : report.checks) {
    if (!c.passed) err << "verify: " << c.name << " failed: " << c.counterexample << '\n';
  }
  return report.passed() ? kOk : kCheckFailed;
}

std::size_t checked_n(long long n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  return static_cast<std::size_t>(n);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signed permutations of the hyperoctahedral group B_n: statistics, ranking, "
               "B_n-type numerals and Mahonian checks",
               "bnperm"};
  app.fallthrough();
  app.require_subcommand(1);

  OutputFormat fmt = OutputFormat::plain;
  const std::map<std::string, OutputFormat> formats{
      {"plain", OutputFormat::plain}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};
  app.add_option("--format", fmt, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  std::size_t guard = 8;
  app.add_option("--max-n-guard", guard, "Largest n allowed for exhaustive enumeration")->capture_default_str();

  std::string perm;
  std::string digits;
  std::string value;
  long long n_arg = 0;
  std::optional<long long> radix_n;

  auto* stat = app.add_subcommand("stat", "Statistics of one element");
  stat->add_option("perm", perm, "Window, e.g. 2,-5,-3,-1,4")->required();

  auto* rank = app.add_subcommand("rank", "Rank of an element");
  rank->add_option("perm", perm, "Window")->required();

  auto* unrank = app.add_subcommand("unrank", "Element of B_n with a given rank");
  unrank->add_option("n", n_arg, "Group rank n")->required();
  unrank->add_option("k", value, "Rank in [1, 2^n n!]")->required();

  auto* phi = app.add_subcommand("phi", "Image under the Mahonian bijection phi");
  phi->add_option("perm", perm, "Window")->required();

  auto* radix = app.add_subcommand("radix", "B_n-type numeral conversion");
  radix->require_subcommand(1);
  auto* encode = radix->add_subcommand("encode", "Integer to B_n digits");
  encode->add_option("x", value, "Nonnegative integer")->required();
  encode->add_option("--n", radix_n, "Pad to exactly n digits");
  auto* decode = radix->add_subcommand("decode", "B_n digits to integer");
  decode->add_option("digits", digits, "Digits d_{n-1}:...:d_0")->required();

  auto* table = app.add_subcommand("table", "All elements in rank order with I(w) and phi(w)");
  table->add_option("n", n_arg, "Group rank n")->required();

  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial of B_n");
  poincare->add_option("n", n_arg, "Group rank n")->required();

  auto* verify = app.add_subcommand("verify", "Exhaustive self-check over B_n");
  verify->add_option("n", n_arg, "Group rank n")->required();

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("bnperm");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  hyperoct::EnumerationOptions opt;
  opt.max_n = guard;

  try {
    if (*stat) {
      emit_record(out, fmt, stat_record(hyperoct::parse_window(perm)));
    } else if (*rank) {
      const auto w = hyperoct::parse_window(perm);
      emit_record(out, fmt, {{"window", hyperoct::format_window(w)}, {"rank", hyperoct::rank(w).str()}});
    } else if (*unrank) {
      const auto n = checked_n(n_arg);
      const auto w = hyperoct::unrank(n, hyperoct::parse_natural(value));
      if (fmt == OutputFormat::plain) {
        out << hyperoct::format_window(w) << '\n';
      } else {
        emit_record(out, fmt, {{"n", n}, {"rank", value}, {"window", hyperoct::format_window(w)}});
      }
    } else if (*phi) {
      const auto w = hyperoct::parse_window(perm);
      const auto image = hyperoct::phi(w);
      if (fmt == OutputFormat::plain) {
        out << hyperoct::format_window(image) << '\n';
      } else {
        emit_record(out, fmt,
                    {{"window", hyperoct::format_window(w)},
                     {"table", hyperoct::inversion_table(w).to_string()},
                     {"phi", hyperoct::format_window(image)},
                     {"inv", hyperoct::inv_total(w)},
                     {"fmaj_of_phi", hyperoct::fmaj(image)}});
      }
    } else if (*encode) {
      std::optional<std::size_t> n;
      if (radix_n) n = checked_n(*radix_n);
      const Natural x = hyperoct::parse_natural(value);
      const auto d = hyperoct::encode(x, n);
      if (fmt == OutputFormat::plain) {
        out << d.to_string() << '\n';
      } else {
        emit_record(out, fmt, {{"value", x.str()}, {"n", d.n()}, {"digits", d.to_string()}});
      }
    } else if (*decode) {
      const auto d = hyperoct::BnDigits::parse(digits);
      const Natural x = hyperoct::decode(d);
      if (fmt == OutputFormat::plain) {
        out << x.str() << '\n';
      } else {
        emit_record(out, fmt, {{"digits", d.to_string()}, {"n", d.n()}, {"value", x.str()}});
      }
    } else if (*table) {
      emit_table(out, fmt, checked_n(n_arg), opt);
    } else if (*poincare) {
      emit_poincare(out, fmt, checked_n(n_arg));
    } else if (*verify) {
      return emit_verify(out, err, fmt, checked_n(n_arg), opt);
    }
  } catch (const std::exception& e) {
    err << "bnperm: " << e.what() << '\n';
    return kUsageError;
  }
  return kOk;
}

}  // namespace bnperm
