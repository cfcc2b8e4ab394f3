#include <limits>
#include <regex>
#include <string>

#include "smarand/cli.hpp"

namespace smarand::cli {

namespace {

// Large enough for any 64-bit flag value, small enough that 10^e stays cheap.
constexpr long kMaxDecimalExponent = 64;

mpq_class parse_decimal(std::string_view text, std::string_view whole) {
  static const std::regex pattern(R"(([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, pattern) || (m[2].length() == 0 && m[3].length() == 0))
    throw UsageError("not a number: '" + std::string(whole) + "'");

  const std::string int_digits = m[2].str();
  const std::string frac_digits = m[3].str();
  long exponent = 0;
  if (m[4].matched) {
    const std::string e = m[4].str();
    if (e.size() > 6) throw UsageError("exponent out of range: '" + std::string(whole) + "'");
    exponent = std::stol(e);
    if (exponent > kMaxDecimalExponent || exponent < -kMaxDecimalExponent)
      throw UsageError("exponent out of range: '" + std::string(whole) + "'");
  }
  exponent -= static_cast<long>(frac_digits.size());

  const std::string digits = int_digits + frac_digits;
  mpq_class value(mpz_class(digits.find_first_not_of('0') == std::string::npos ? "0" : digits, 10));
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) {
    value *= scale;
  } else {
    value /= scale;
  }
  value.canonicalize();
  if (m[1].str() == "-") value = -value;
  return value;
}

std::uint64_t to_u64(const mpz_class& z, std::string_view name, std::string_view text) {
  if (sgn(z) < 0) throw UsageError(std::string(name) + " must be nonnegative: '" + std::string(text) + "'");
  if (mpz_sizeinbase(z.get_mpz_t(), 2) > 64)
    throw UsageError(std::string(name) + " does not fit in 64 bits: '" + std::string(text) + "'");
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, -1, sizeof v, 0, 0, z.get_mpz_t());
  return v;
}

}  // namespace

mpq_class parse_exact_rational(std::string_view text) {
  if (text.empty()) throw UsageError("empty number");
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text, text);
  const mpq_class num = parse_decimal(text.substr(0, slash), text);
  const mpq_class den = parse_decimal(text.substr(slash + 1), text);
  if (sgn(den) == 0) throw UsageError("zero denominator: '" + std::string(text) + "'");
  mpq_class q = num / den;
  q.canonicalize();
  return q;
}

std::uint64_t parse_integer(std::string_view text, std::string_view name) {
  const mpq_class q = parse_exact_rational(text);
  if (q.get_den() != 1) throw UsageError(std::string(name) + " must be an integer: '" + std::string(text) + "'");
  return to_u64(q.get_num(), name, text);
}

ExponentK parse_exponent(std::string_view text) {
  const mpq_class q = parse_exact_rational(text);
  if (q <= 1) throw UsageError("k must exceed 1: '" + std::string(text) + "'");
  return ExponentK(to_u64(q.get_num(), "k numerator", text), to_u64(q.get_den(), "k denominator", text));
}

std::vector<std::uint64_t> parse_grid(std::string_view text, std::string_view name) {
  std::vector<std::uint64_t> grid;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (!item.empty()) grid.push_back(parse_integer(item, name));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (grid.empty()) throw UsageError("empty " + std::string(name) + " grid");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (grid[i] <= grid[i - 1]) throw UsageError(std::string(name) + " grid must be strictly increasing");
  return grid;
}

}  // namespace smarand::cli
