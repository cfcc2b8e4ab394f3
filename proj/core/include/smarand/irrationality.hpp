#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "smarand/interval.hpp"
#include "smarand/smarandache.hpp"

namespace smarand {

// Exact rational bracket lower <= e <= upper from sum_{j<=J} 1/j! and the tail bound 2/(J+1)!.
struct RationalBracket {
  mpq_class lower;
  mpq_class upper;
  unsigned terms = 0;  // J
};

// Smallest J whose tail bound is at most 2^-precision_bits.
RationalBracket e_rational_bracket(unsigned precision_bits);

// Encloses e with width <= 2^(1 - precision_bits). Requires precision_bits >= 16.
RealEnclosure e_enclosure(unsigned precision_bits);

struct Convergent {
  std::uint64_t m = 0;
  std::uint64_t n = 0;

  friend bool operator==(const Convergent&, const Convergent&) = default;
};

// Continued-fraction convergents m/n of e with 1 < n <= max_denominator, read off a
// certified bracket of e. Each satisfies |e - m/n| < 1/n^2, checked before return.
std::vector<Convergent> e_convergents(std::uint64_t max_denominator);

// Nonnegative rational epsilon = num/den.
struct Epsilon {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
};

enum class StrongerSide { Sondow, Dirichlet, Equal };
std::string_view side_name(StrongerSide side);

struct ApproxRecord {
  mpz_class m;
  mpz_class n;
  std::uint64_t s_of_n = 0;
  RealEnclosure gap{64};              // |e - m/n|
  RealEnclosure sondow_bound{64};     // 1/(S(n)+1)!
  RealEnclosure dirichlet_bound{64};  // 1/n^(2+eps)
  Epsilon epsilon;
  StrongerSide stronger = StrongerSide::Dirichlet;
};

// Decides |e - m/n| > 1/(S(n)+1)! with exact rational arithmetic against a certified
// bracket of e. A certified violation throws std::logic_error, since the inequality is a theorem.
// Throws IndeterminateError if undecided at the precision cap, std::invalid_argument if n <= 1.
ApproxRecord check_sondow_inequality(const mpz_class& m, const mpz_class& n, Epsilon epsilon = {});

// round(e n), certified.
mpz_class nearest_numerator(const mpz_class& n);

// Orders the Sondow bound 1/(S(n)+1)! against 1/n^(2+eps) exactly, by comparing
// ((S(n)+1)!)^den with n^(2 den + num). `less` means the Dirichlet-side bound is stronger.
std::strong_ordering compare_bounds(std::uint64_t n, Epsilon epsilon, const SmarandacheTable* table = nullptr);
std::strong_ordering compare_bounds(const mpz_class& n, Epsilon epsilon);

StrongerSide stronger_side(std::strong_ordering sondow_vs_dirichlet);

// m,n,gap_lo,gap_hi,sondow_bound,dirichlet_bound,epsilon_num,epsilon_den,stronger_side
std::string approx_csv_header();
std::string to_csv_row(const ApproxRecord& r);

}  // namespace smarand
