#include <array>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>

#include "smarand/asymptotics.hpp"
#include "smarand/census.hpp"
#include "smarand/cli.hpp"
#include "smarand/errors.hpp"
#include "smarand/irrationality.hpp"

namespace smarand::cli {

namespace {

struct Check {
  std::string suite;
  std::string check;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string detail;
};

using Checks = std::vector<Check>;

std::string join(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (const auto n : v) {
    if (!out.empty()) out += ' ';
    out += std::to_string(n);
  }
  return out;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

const std::array<std::uint64_t, 12> kCaseI{1, 2, 3, 5, 6, 10, 15, 20, 30, 40, 60, 120};
const std::array<std::uint64_t, 4> kThm1Grid{1'000, 10'000, 100'000, 1'000'000};
const std::array<std::uint64_t, 3> kThm2Grid{10'000, 100'000, 1'000'000};
const std::array<ExponentK, 3> kExponents{ExponentK(3, 2), ExponentK(2), ExponentK(3)};

Checks suite_lemma2(unsigned) {
  constexpr std::uint64_t limit = 100'000;
  Check c{"lemma2", "log_factorial_bracket", limit, 0, "n<=100000"};
  for (std::uint64_t n = 1; n <= limit; ++n)
    if (!log_factorial_within_bracket(n)) ++c.failures;
  return {c};
}

Checks suite_case_i(unsigned threads) {
  const auto set = case_i_set();
  const std::vector<std::uint64_t> expected(kCaseI.begin(), kCaseI.end());
  Check listed{"case-i", "case_i_set", 1, set == expected ? 0u : 1u, join(set)};

  // Anything with S(n) = P(n) <= 5 divides 5!, so a scan well past 120 finds nothing new.
  constexpr std::uint64_t limit = 10'000;
  const SmarandacheTable table = build_table(limit, threads);
  std::vector<std::uint64_t> scanned;
  for (std::uint64_t n = 1; n <= limit; ++n)
    if (table.s(n) == table.p(n) && table.s(n) <= 5) scanned.push_back(n);
  Check scan{"case-i", "table_scan", limit, scanned == expected ? 0u : 1u, "n<=10000 count=" + std::to_string(scanned.size())};
  return {listed, scan};
}

Checks suite_eq5(unsigned) {
  constexpr std::uint64_t limit = 10'000;
  Check c{"eq5", "eq5_chain", limit - 6, 0, "7<=P<=10000"};
  for (std::uint64_t p = 7; p <= limit; ++p)
    if (!verify_eq5_chain(p)) ++c.failures;
  return {c};
}

Checks suite_thm1(unsigned threads) {
  const SmarandacheTable table = build_table(kThm1Grid.back(), threads);
  CensusOptions opts;
  opts.threads = threads;
  CensusOptions with_witnesses = opts;
  with_witnesses.collect_witnesses = true;
  with_witnesses.witness_cap = kThm1Grid.back();

  Check decomposition{"thm1", "decomposition", 0, 0, ""};
  Check nk1_le_n{"thm1", "nk1_le_n", 0, 0, ""};
  Check cross{"thm1", "divisor_cross_check", 0, 0, ""};
  Check case_two{"thm1", "case_two", 0, 0, ""};
  std::vector<double> shapes;
  std::string counts;

  for (const std::uint64_t x : kThm1Grid) {
    const std::uint64_t n_x = count_S_neq_P(x, table, opts).count;
    for (const ExponentK& k : kExponents) {
      const NkCensus nk = count_Nk(x, k, table, with_witnesses);
      ++decomposition.cases;
      if (nk.total.count != nk.s_neq_p.count + nk.s_eq_p.count) ++decomposition.failures;
      ++nk1_le_n.cases;
      if (nk.s_neq_p.count > n_x) ++nk1_le_n.failures;

      const NkCensus by_div = count_Nk_by_divisors(x, k, with_witnesses);
      ++cross.cases;
      if (by_div.total.count != nk.total.count || by_div.s_neq_p.count != nk.s_neq_p.count ||
          by_div.s_eq_p.count != nk.s_eq_p.count || by_div.total.witnesses != nk.total.witnesses)
        ++cross.failures;

      const CaseTwoCheck ct = check_case_two(nk, k);
      case_two.cases += ct.witnesses_checked + 1;
      case_two.failures += ct.witness_failures + (ct.count_bound_holds ? 0 : 1);

      if (!counts.empty()) counts += ' ';
      counts += "N_" + k.to_string() + "(" + std::to_string(x) + ")=" + std::to_string(nk.total.count);
      if (k == ExponentK(2) && x >= 10'000) shapes.push_back(shape_ratio(nk.total.count, x));
    }
  }
  decomposition.detail = counts;
  nk1_le_n.detail = "N_k1<=N(x)";
  cross.detail = "table vs divisors";
  case_two.detail = "P(n)<=k log x and N_k2<=12+Psi";

  Check shape{"thm1", "shape_ratio_increasing", shapes.size(), 0, ""};
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    if (i > 0 && !(shapes[i] > shapes[i - 1])) ++shape.failures;
    shape.detail += (i ? " " : "") + sci(shapes[i]);
  }
  return {decomposition, nk1_le_n, cross, case_two, shape};
}

Checks suite_thm2(unsigned threads) {
  const SmarandacheTable table = build_table(kThm2Grid.back(), threads);
  CensusOptions opts;
  opts.threads = threads;
  CensusOptions with_witnesses = opts;
  with_witnesses.collect_witnesses = true;
  with_witnesses.witness_cap = kThm2Grid.back();

  Check bound{"thm2", "m_bound", 0, 0, ""};
  Check m1{"thm2", "m1_le_n", 0, 0, "M_1<=N(x)"};
  Check ratio{"thm2", "bound_ratio", 0, 0, ""};
  for (const std::uint64_t x : kThm2Grid) {
    const CensusReport m = count_M(x, table, with_witnesses);
    const MBoundCheck mb = check_m_bound(m, table);
    bound.cases += mb.witnesses_checked + 1;
    bound.failures += mb.witness_failures + (mb.count_bound_holds ? 0 : 1);

    std::uint64_t m1_count = 0;
    for (const std::uint64_t n : m.witnesses)
      if (table.s(n) != table.p(n)) ++m1_count;
    ++m1.cases;
    if (m1_count > count_S_neq_P(x, table, opts).count) ++m1.failures;

    const BoundDiagnostic d = theorem2_diagnostic(x, table, opts);
    ++ratio.cases;
    if (d.exact_count != m.count) ++ratio.failures;
    if (!bound.detail.empty()) bound.detail += ' ';
    bound.detail += "M(" + std::to_string(x) + ")=" + std::to_string(m.count);
    ratio.detail += (ratio.detail.empty() ? "" : " ") + sci(d.bound_ratio);
  }
  return {bound, m1, ratio};
}

Checks suite_sondow_e(unsigned threads) {
  constexpr std::uint64_t limit = 10'000;
  constexpr std::uint64_t max_den = 1'000'000;
  const SmarandacheTable table = build_table(limit, threads);

  Check rounded{"sondow-e", "round_e_n", 0, 0, "2<=n<=10000"};
  std::uint64_t sondow_stronger = 0;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    ++rounded.cases;
    const mpz_class big_n(static_cast<unsigned long>(n));
    try {
      check_sondow_inequality(nearest_numerator(big_n), big_n);
    } catch (const std::logic_error&) {
      ++rounded.failures;
    } catch (const IndeterminateError&) {
      ++rounded.failures;
    }
    if (compare_bounds(n, Epsilon{}, &table) == std::strong_ordering::greater) ++sondow_stronger;
  }

  Check conv{"sondow-e", "convergents", 0, 0, ""};
  const auto convergents = e_convergents(max_den);
  for (const auto& c : convergents) {
    ++conv.cases;
    try {
      check_sondow_inequality(mpz_class(static_cast<unsigned long>(c.m)), mpz_class(static_cast<unsigned long>(c.n)));
    } catch (const std::logic_error&) {
      ++conv.failures;
    } catch (const IndeterminateError&) {
      ++conv.failures;
    }
    if (!conv.detail.empty()) conv.detail += ' ';
    conv.detail += std::to_string(c.m) + "/" + std::to_string(c.n);
  }

  // How often the Sondow bound beats 1/n^2; informational.
  Check side{"sondow-e", "sondow_stronger_eps0", limit - 1, 0, std::to_string(sondow_stronger)};
  return {rounded, conv, side};
}

using SuiteFn = Checks (*)(unsigned);
struct Suite {
  std::string_view name;
  SuiteFn run;
};
constexpr std::array<Suite, 6> kSuites{{
    {"lemma2", suite_lemma2},
    {"case-i", suite_case_i},
    {"eq5", suite_eq5},
    {"thm1", suite_thm1},
    {"thm2", suite_thm2},
    {"sondow-e", suite_sondow_e},
}};

}  // namespace

std::vector<std::string_view> suite_names() {
  std::vector<std::string_view> names;
  for (const auto& s : kSuites) names.push_back(s.name);
  names.push_back("all");
  return names;
}

CommandOutput run_verify(const VerifyArgs& a) {
  Checks checks;
  bool found = false;
  for (const auto& s : kSuites) {
    if (a.suite != "all" && a.suite != s.name) continue;
    found = true;
    auto part = s.run(a.threads);
    checks.insert(checks.end(), part.begin(), part.end());
  }
  if (!found) throw UsageError("unknown suite '" + a.suite + "'");

  CommandOutput out;
  out.params = {{"suite", a.suite}, {"threads", std::to_string(a.threads)}};
  out.csv = "suite,check,cases,failures,status,detail\n";
  for (const auto& c : checks) {
    const char* status = c.failures == 0 ? "PASS" : "FAIL";
    if (c.failures) out.exit_code = kExitFailure;
    out.csv += c.suite + "," + c.check + "," + std::to_string(c.cases) + "," + std::to_string(c.failures) + "," +
               status + "," + c.detail + "\n";
    out.report += std::string(status) + "  " + c.suite + "/" + c.check + "  cases=" + std::to_string(c.cases) +
                  " failures=" + std::to_string(c.failures) + (c.detail.empty() ? "" : "  " + c.detail) + "\n";
  }
  return out;
}

}  // namespace smarand::cli
