#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "smarand/arith.hpp"

namespace smarand::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "1e6", "2.5e3", "0.75", "3/2" as exact rationals. Throws UsageError on anything else.
mpq_class parse_exact_rational(std::string_view text);

// A nonnegative integer that fits in 64 bits, scientific notation allowed. `name` is for messages.
std::uint64_t parse_integer(std::string_view text, std::string_view name);
ExponentK parse_exponent(std::string_view text);
// Comma-separated, strictly increasing.
std::vector<std::uint64_t> parse_grid(std::string_view text, std::string_view name);

using ParamList = std::vector<std::pair<std::string, std::string>>;

struct CommandOutput {
  int exit_code = kExitOk;
  std::string csv;     // empty for eval
  std::string report;  // human-readable lines
  ParamList params;
};

CommandOutput run_eval(std::string_view n);

struct CensusArgs {
  std::string kind;  // nk, n-neq-p, psi, m
  std::string x;
  std::optional<std::string> k;
  std::optional<std::string> y;
  std::optional<std::string> table_limit;
  std::string method = "table";  // table or divisors (nk only)
  unsigned threads = 1;
};
CommandOutput run_census(const CensusArgs& args);

struct VerifyArgs {
  std::string suite;  // lemma2, case-i, eq5, thm1, thm2, sondow-e, all
  unsigned threads = 1;
};
CommandOutput run_verify(const VerifyArgs& args);
std::vector<std::string_view> suite_names();

struct SweepArgs {
  std::string kind;  // thm1 or thm2
  std::string x;
  std::optional<std::string> k;
  std::optional<std::string> table_limit;
  std::string method = "divisors";  // thm1 only
  unsigned threads = 1;
};
CommandOutput run_sweep(const SweepArgs& args);

struct RunManifest {
  std::string command_line;
  ParamList params;
  std::string version;
  double elapsed_seconds = 0.0;
  std::string digest;
};

std::string sha256_hex(std::string_view bytes);
std::string to_text(const RunManifest& m);
std::string_view tool_version();

// Full front end: parses argv, runs, writes the CSV to --out (plus <out>.manifest) or to `out`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace smarand::cli
