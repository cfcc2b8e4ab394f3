// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "smarand/asymptotics.hpp"
#include "smarand/census.hpp"
#include "smarand/cli.hpp"
#include "smarand/irrationality.hpp"
#include "smarand/smarandache.hpp"

using namespace smarand;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

const std::vector<ExponentK>& exponents() {
  static const std::vector<ExponentK> ks{ExponentK(3, 2), ExponentK(2), ExponentK(3)};
  return ks;
}

bool same_census(const NkCensus& a, const NkCensus& b) {
  return a.total.count == b.total.count && a.s_neq_p.count == b.s_neq_p.count && a.s_eq_p.count == b.s_eq_p.count &&
         a.total.witnesses == b.total.witnesses && a.s_neq_p.witnesses == b.s_neq_p.witnesses &&
         a.s_eq_p.witnesses == b.s_eq_p.witnesses;
}

CensusOptions witnesses_up_to(std::uint64_t x) {
  CensusOptions o;
  o.collect_witnesses = true;
  o.witness_cap = x;
  return o;
}

Outcome smarandache_oracle() {
  constexpr std::uint64_t limit = 10'000;
  const SmarandacheTable table = build_table(limit);
  std::uint64_t bad = 0;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    const std::uint64_t expected = oracle::smarandache(n);
    if (smarandache(n) != expected || table.s(n) != expected) ++bad;
  }
  return {bad == 0, "n<=10000 mismatches=" + std::to_string(bad)};
}

Outcome case_i() {
  const std::vector<std::uint64_t> listed{1, 2, 3, 5, 6, 10, 15, 20, 30, 40, 60, 120};
  const auto got = case_i_set();
  std::string s;
  for (const auto n : got) s += (s.empty() ? "" : " ") + std::to_string(n);
  return {got == listed, "[" + s + "]"};
}

Outcome nk_decomposition() {
  const SmarandacheTable table = build_table(1'000'000);
  std::uint64_t bad = 0, oracle_bad = 0;
  for (const std::uint64_t x : {1'000ULL, 10'000ULL, 100'000ULL, 1'000'000ULL}) {
    for (const ExponentK& k : exponents()) {
      const NkCensus c = count_Nk(x, k, table, witnesses_up_to(x));
      if (c.total.count != c.s_neq_p.count + c.s_eq_p.count) ++bad;
      if (x > 10'000) continue;
      // Independent split at the smaller sizes.
      std::vector<std::uint64_t> neq, eq;
      for (const auto n : oracle::nk_witnesses(x, k.num(), k.den()))
        (oracle::smarandache(n) != oracle::largest_prime(n) ? neq : eq).push_back(n);
      if (c.s_neq_p.witnesses != neq || c.s_eq_p.witnesses != eq) ++oracle_bad;
    }
  }
  return {bad == 0 && oracle_bad == 0,
          "12 (x,k) pairs, sum mismatches=" + std::to_string(bad) + ", oracle split mismatches=" + std::to_string(oracle_bad)};
}

Outcome factorial_chain() {
  std::uint64_t bad = 0;
  for (std::uint64_t p = 7; p <= 10'000; ++p)
    if (!verify_eq5_chain(p)) ++bad;
  return {bad == 0, "7<=P<=10000 failures=" + std::to_string(bad)};
}

Outcome log_factorial_bracket() {
  std::uint64_t bad = 0;
  for (std::uint64_t n = 1; n <= 100'000; ++n)
    if (!log_factorial_within_bracket(n)) ++bad;
  return {bad == 0, "1<=n<=100000 failures=" + std::to_string(bad)};
}

Outcome psi_oracle() {
  constexpr std::uint64_t limit = 10'000;
  const SmarandacheTable table = build_table(limit);
  // Histogram of trial-division P(n) for n <= x, grown one n at a time.
  std::vector<std::uint64_t> hist(limit + 1, 0);
  hist[1] = 1;
  std::uint64_t pairs = 0, bad = 0;
  for (std::uint64_t x = 2; x <= limit; ++x) {
    ++hist[oracle::largest_prime(x)];
    std::uint64_t brute = hist[1];
    for (std::uint64_t y = 2; y <= x; ++y) {
      brute += hist[y];
      ++pairs;
      if (psi_smooth_count(x, y, table).count != brute) ++bad;
    }
  }
  return {bad == 0, std::to_string(pairs) + " (x,y) pairs, mismatches=" + std::to_string(bad)};
}

Outcome cross_method() {
  const SmarandacheTable table = build_table(100'000);
  std::uint64_t bad = 0;
  for (const std::uint64_t x : {1'000ULL, 10'000ULL, 100'000ULL})
    for (const ExponentK& k : exponents())
      if (!same_census(count_Nk(x, k, table, witnesses_up_to(x)), count_Nk_by_divisors(x, k, witnesses_up_to(x))))
        ++bad;
  return {bad == 0, "9 (x,k) pairs, mismatches=" + std::to_string(bad)};
}

const std::vector<std::uint64_t> kDensityGrid{10'000, 100'000, 1'000'000, 10'000'000};

Outcome density_trend() {
  std::vector<NkCensus> cs;
  for (const auto x : kDensityGrid) cs.push_back(count_Nk_by_divisors(x, ExponentK(2)));
  bool decreasing = true;
  std::string detail;
  char buf[64];
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i > 0 && !(cs[i].total.count * kDensityGrid[i - 1] < cs[i - 1].total.count * kDensityGrid[i])) decreasing = false;
    std::snprintf(buf, sizeof buf, "%sN_2(%llu)/x=%.6e", i ? " " : "", static_cast<unsigned long long>(kDensityGrid[i]),
                  cs[i].total.density);
    detail += buf;
  }
  // N_2(10^7) / 10^7 < 10^-2, compared as integers.
  const bool small = cs.back().total.count * 100 < kDensityGrid.back();
  return {decreasing && small, detail};
}

Outcome shape_trend() {
  std::vector<double> shapes;
  for (const auto x : kDensityGrid) shapes.push_back(theorem1_diagnostic(x, ExponentK(2)).shape_ratio);
  bool ok = true;
  std::string detail;
  char buf[32];
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    if (!(shapes[i] > 0.0) || (i > 0 && !(shapes[i] > shapes[i - 1]))) ok = false;
    std::snprintf(buf, sizeof buf, "%s%.6f", i ? " " : "", shapes[i]);
    detail += buf;
  }
  return {ok, "shape_ratio " + detail};
}

Outcome sondow_regression() {
  const mpq_class e_ref = oracle::e_binary_splitting(400);
  std::uint64_t checked = 0, violations = 0, rounding_bad = 0;
  for (std::uint64_t n = 2; n <= 10'000; ++n) {
    const mpz_class big_n(static_cast<unsigned long>(n));
    const mpz_class m = nearest_numerator(big_n);
    const mpq_class scaled = e_ref * big_n + mpq_class(1, 2);
    mpz_class floor_scaled;
    mpz_fdiv_q(floor_scaled.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    if (m != floor_scaled) ++rounding_bad;
    try {
      check_sondow_inequality(m, big_n);
    } catch (const std::exception&) {
      ++violations;
    }
    ++checked;
  }

  const auto convergents = e_convergents(1'000'000);
  const auto expected = oracle::convergents(e_ref, 1'000'000);
  bool list_ok = convergents.size() == expected.size();
  for (std::size_t i = 0; list_ok && i < convergents.size(); ++i)
    list_ok = convergents[i].m == expected[i].first && convergents[i].n == expected[i].second;
  for (const auto& c : convergents) {
    try {
      check_sondow_inequality(mpz_class(static_cast<unsigned long>(c.m)), mpz_class(static_cast<unsigned long>(c.n)));
    } catch (const std::exception&) {
      ++violations;
    }
    ++checked;
  }
  return {violations == 0 && rounding_bad == 0 && list_ok,
          std::to_string(checked) + " approximations, violations=" + std::to_string(violations) +
              ", rounding mismatches=" + std::to_string(rounding_bad) +
              ", convergents=" + std::to_string(convergents.size()) + (list_ok ? "" : " (list differs from oracle)")};
}

std::string read_all(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::string manifest_digest(const std::string& manifest) {
  const auto pos = manifest.find("sha256: ");
  if (pos == std::string::npos) return {};
  return manifest.substr(pos + 8, 64);
}

Outcome determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "smarand_acceptance";
  std::filesystem::create_directories(dir);
  std::vector<std::string> digests;
  bool codes_ok = true;
  for (const auto& [tag, threads] : std::vector<std::pair<std::string, std::string>>{{"a", "1"}, {"b", "1"}, {"c", "8"}}) {
    const std::string out = (dir / ("verify_" + tag + ".csv")).string();
    const char* argv[] = {"smarand", "verify", "--suite", "all", "--threads", threads.c_str(), "--out", out.c_str()};
    std::ostringstream sink, err;
    if (cli::run(8, argv, sink, err) != cli::kExitOk) codes_ok = false;
    const std::string manifest_digest_hex = manifest_digest(read_all(out + ".manifest"));
    const std::string recomputed = cli::sha256_hex(read_all(out));
    digests.push_back(manifest_digest_hex == recomputed ? recomputed : "mismatch");
  }
  const bool same = digests[0] != "mismatch" && digests[0] == digests[1] && digests[1] == digests[2];
  return {codes_ok && same, "runs 1,1,8 threads sha256=" + digests[0].substr(0, 16) + "..." + (same ? "" : " (differ)")};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "smarandache_oracle", smarandache_oracle},
      {2, "case_i_set", case_i},
      {3, "nk_decomposition", nk_decomposition},
      {4, "factorial_chain", factorial_chain},
      {5, "log_factorial_bracket", log_factorial_bracket},
      {6, "psi_oracle", psi_oracle},
      {7, "cross_method_counts", cross_method},
      {8, "n2_density_trend", density_trend},
      {9, "shape_ratio_trend", shape_trend},
      {10, "sondow_regression", sondow_regression},
      {11, "determinism", determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("%s  %2d  %-22s %s  (%.2fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
