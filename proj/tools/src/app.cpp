#include <openssl/evp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "smarand/cli.hpp"
#include "smarand/errors.hpp"

#ifndef SMARAND_VERSION
#define SMARAND_VERSION "0.0.0"
#endif

namespace smarand::cli {

std::string_view tool_version() { return SMARAND_VERSION; }

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xf];
  }
  return out;
}

std::string to_text(const RunManifest& m) {
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.3f", m.elapsed_seconds);
  std::string out = "command: " + m.command_line + "\n" + "version: " + m.version + "\n";
  for (const auto& [k, v] : m.params) out += "param." + k + ": " + v + "\n";
  out += std::string("elapsed_seconds: ") + elapsed + "\n";
  out += "sha256: " + m.digest + "\n";
  return out;
}

namespace {

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Smarandache function census and verification tool", "smarand"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version()));

  std::string out_path;
  unsigned threads = 1;
  std::optional<std::string> table_limit;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Write CSV here and a manifest to <out>.manifest");
    sub->add_option("--threads", threads, "Parallelism of sweeps")->check(CLI::Range(1u, 1024u));
  };

  std::string n_text;
  auto* eval = app.add_subcommand("eval", "S(n), P(n) and the factorization of n");
  eval->add_option("--n", n_text, "Positive integer")->required();

  CensusArgs census_args;
  auto* census = app.add_subcommand("census", "Exact counts N(x), N_k(x), M(x), Psi(x,y)");
  census->add_option("--kind", census_args.kind, "nk, n-neq-p, psi or m")->required();
  census->add_option("--x", census_args.x, "Upper limit")->required();
  census->add_option("--k", census_args.k, "Exponent as p/q or exact decimal");
  census->add_option("--y", census_args.y, "Smoothness bound");
  census->add_option("--table-limit", table_limit, "Preallocate the table to this size");
  census->add_option("--method", census_args.method, "table or divisors (nk only)");
  add_common(census);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run an invariant suite at desk scale");
  verify->add_option("--suite", verify_args.suite, "lemma2, case-i, eq5, thm1, thm2, sondow-e or all")->required();
  add_common(verify);

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Bound diagnostics over an increasing grid of x");
  sweep->add_option("--kind", sweep_args.kind, "thm1 or thm2")->required();
  sweep->add_option("--x", sweep_args.x, "Comma-separated x values")->required();
  sweep->add_option("--k", sweep_args.k, "Exponent for thm1 (default 2)");
  sweep->add_option("--table-limit", table_limit, "Preallocate the table to this size");
  sweep->add_option("--method", sweep_args.method, "divisors or table (thm1 only)");
  add_common(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  std::string command_line;
  for (int i = 0; i < argc; ++i) {
    if (i) command_line += ' ';
    command_line += argv[i];
  }

  const auto start = std::chrono::steady_clock::now();
  CommandOutput result;
  try {
    if (*eval) {
      result = run_eval(n_text);
    } else if (*census) {
      census_args.threads = threads;
      census_args.table_limit = table_limit;
      result = run_census(census_args);
    } else if (*verify) {
      verify_args.threads = threads;
      result = run_verify(verify_args);
    } else {
      sweep_args.threads = threads;
      sweep_args.table_limit = table_limit;
      result = run_sweep(sweep_args);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IndeterminateError& e) {
    err << "indeterminate: " << e.what() << "\n";
    return kExitFailure;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (out_path.empty()) {
    out << (result.csv.empty() || *verify ? result.report : result.csv);
    return result.exit_code;
  }

  out << result.report;
  if (result.csv.empty()) return result.exit_code;
  try {
    write_file(out_path, result.csv);
    RunManifest manifest{command_line, result.params, std::string(tool_version()), elapsed, sha256_hex(result.csv)};
    write_file(out_path + ".manifest", to_text(manifest));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return result.exit_code;
}

}  // namespace smarand::cli
