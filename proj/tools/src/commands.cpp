#include <algorithm>
#include <cstdio>
#include <string>

#include "smarand/asymptotics.hpp"
#include "smarand/census.hpp"
#include "smarand/cli.hpp"
#include "smarand/factorize.hpp"
#include "smarand/smarandache.hpp"

namespace smarand::cli {

namespace {

std::string factorization_text(const Factorization& f) {
  if (f.factors.empty()) return "1";
  std::string out;
  for (const auto& pp : f.factors) {
    if (!out.empty()) out += " * ";
    out += std::to_string(pp.prime);
    if (pp.exponent > 1) out += "^" + std::to_string(pp.exponent);
  }
  return out;
}

std::uint64_t table_size(std::uint64_t needed, const std::optional<std::string>& explicit_limit) {
  if (!explicit_limit) return needed;
  const std::uint64_t limit = parse_integer(*explicit_limit, "table-limit");
  if (limit < needed)
    throw UsageError("table-limit " + std::to_string(limit) + " is below the largest x " + std::to_string(needed));
  return limit;
}

SmarandacheTable make_table(std::uint64_t limit, unsigned threads) {
  if (limit > kMaxSieveLimit) throw UsageError("x exceeds the table limit " + std::to_string(kMaxSieveLimit));
  return build_table(std::max<std::uint64_t>(limit, 2), threads);
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

CommandOutput run_eval(std::string_view n_text) {
  const std::uint64_t n = parse_integer(n_text, "n");
  if (n == 0) throw UsageError("n must be positive");

  const Factorization f = factorize(n);
  const std::uint64_t s = smarandache(f);
  const std::uint64_t p = f.largest_prime();

  CommandOutput out;
  out.params = {{"n", std::to_string(n)}};
  out.report = "n = " + std::to_string(n) + "\n" + "S(n) = " + std::to_string(s) + "\n" +
               "P(n) = " + std::to_string(p) + "\n" + "factorization = " + factorization_text(f) + "\n" +
               "S(n) != P(n): " + (s != p ? "yes" : "no") + "\n";
  return out;
}

CommandOutput run_census(const CensusArgs& a) {
  const std::string& kind = a.kind;
  if (kind != "nk" && kind != "n-neq-p" && kind != "psi" && kind != "m")
    throw UsageError("unknown census kind '" + kind + "' (expected nk, n-neq-p, psi, m)");
  if (a.k && kind != "nk") throw UsageError("--k only applies to --kind nk");
  if (a.y && kind != "psi") throw UsageError("--y only applies to --kind psi");
  if (kind == "nk" && !a.k) throw UsageError("--kind nk needs --k");
  if (kind == "psi" && !a.y) throw UsageError("--kind psi needs --y");
  if (a.method != "table" && a.method != "divisors") throw UsageError("unknown method '" + a.method + "'");
  if (a.method == "divisors" && kind != "nk") throw UsageError("--method divisors only applies to --kind nk");

  const std::uint64_t x = parse_integer(a.x, "x");
  if (x == 0) throw UsageError("x must be positive");
  if (kind == "m" && x < 3) throw UsageError("--kind m needs x >= 3");

  CommandOutput out;
  out.params = {{"kind", kind}, {"x", std::to_string(x)}, {"threads", std::to_string(a.threads)}};
  CensusOptions opts;
  opts.threads = a.threads;

  std::vector<CensusReport> rows;
  if (kind == "nk") {
    const ExponentK k = parse_exponent(*a.k);
    out.params.emplace_back("k", k.to_string());
    out.params.emplace_back("method", a.method);
    NkCensus nk;
    if (a.method == "divisors") {
      nk = count_Nk_by_divisors(x, k, opts);
    } else {
      const SmarandacheTable table = make_table(table_size(x, a.table_limit), a.threads);
      nk = count_Nk(x, k, table, opts);
    }
    rows = {nk.total, nk.s_neq_p, nk.s_eq_p};
  } else {
    const SmarandacheTable table = make_table(table_size(x, a.table_limit), a.threads);
    if (kind == "n-neq-p") {
      rows = {count_S_neq_P(x, table, opts)};
    } else if (kind == "m") {
      rows = {count_M(x, table, opts)};
    } else {
      const std::uint64_t y = parse_integer(*a.y, "y");
      if (y == 0) throw UsageError("y must be positive");
      out.params.emplace_back("y", std::to_string(y));
      rows = {psi_smooth_count(x, y, table, opts)};
    }
  }

  out.csv = census_csv_header() + "\n";
  for (const auto& r : rows) {
    out.csv += to_csv_row(r) + "\n";
    out.report += std::string(kind_name(r.kind)) + "(" + std::to_string(r.x) + ") = " + std::to_string(r.count) +
                  "  density " + fmt_double(r.density) + "\n";
  }
  return out;
}

CommandOutput run_sweep(const SweepArgs& a) {
  if (a.kind != "thm1" && a.kind != "thm2") throw UsageError("unknown sweep kind '" + a.kind + "' (expected thm1, thm2)");
  if (a.k && a.kind != "thm1") throw UsageError("--k only applies to --kind thm1");
  if (a.method != "table" && a.method != "divisors") throw UsageError("unknown method '" + a.method + "'");

  const std::vector<std::uint64_t> grid = parse_grid(a.x, "x");
  if (grid.front() < 17) throw UsageError("sweep needs every x >= 17");

  CommandOutput out;
  out.params = {{"kind", a.kind}, {"x", a.x}, {"threads", std::to_string(a.threads)}};

  std::vector<BoundDiagnostic> diags;
  if (a.kind == "thm1") {
    const ExponentK k = a.k ? parse_exponent(*a.k) : ExponentK(2);
    out.params.emplace_back("k", k.to_string());
    out.params.emplace_back("method", a.method);
    std::optional<SmarandacheTable> table;
    if (a.method == "table") table = make_table(table_size(grid.back(), a.table_limit), a.threads);
    for (const std::uint64_t x : grid) diags.push_back(theorem1_diagnostic(x, k, table ? &*table : nullptr));
  } else {
    CensusOptions opts;
    opts.threads = a.threads;
    const SmarandacheTable table = make_table(table_size(grid.back(), a.table_limit), a.threads);
    for (const std::uint64_t x : grid) diags.push_back(theorem2_diagnostic(x, table, opts));
  }

  out.csv = diagnostic_csv_header() + "\n";
  bool increasing = true;
  for (std::size_t i = 0; i < diags.size(); ++i) {
    const auto& d = diags[i];
    out.csv += to_csv_row(d) + "\n";
    out.report += "x=" + std::to_string(d.x) + "  count=" + std::to_string(d.exact_count) +
                  "  shape_ratio=" + fmt_double(d.shape_ratio) + "  bound_ratio=" + fmt_double(d.bound_ratio) + "\n";
    if (i > 0 && !(d.shape_ratio > diags[i - 1].shape_ratio)) increasing = false;
  }
  if (diags.size() > 1) out.report += std::string("shape_ratio increasing: ") + (increasing ? "yes" : "no") + "\n";
  return out;
}

}  // namespace smarand::cli
