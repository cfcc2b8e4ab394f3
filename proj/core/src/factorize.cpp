#include "smarand/factorize.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace smarand {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialDivisionBound = 1u << 12;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned r) {
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

// Brent's variant of Pollard rho. Returns a nontrivial divisor of the odd composite n.
u64 pollard_brent(u64 n, std::mt19937_64& rng) {
  for (;;) {
    const u64 c = rng() % (n - 1) + 1;
    u64 y = rng() % n;
    const u64 m = 128;
    u64 g = 1, q = 1, x = 0, ys = 0;
    u64 r = 1;
    auto f = [&](u64 v) { return static_cast<u64>((static_cast<u128>(mul_mod(v, v, n)) + c) % n); };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      }
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(u64 n, std::vector<u64>& primes, std::mt19937_64& rng) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  const u64 d = pollard_brent(n, rng);
  split(d, primes, rng);
  split(n / d, primes, rng);
}

Factorization collect(u64 n, std::vector<u64> primes) {
  std::sort(primes.begin(), primes.end());
  Factorization out;
  out.n = n;
  for (const u64 p : primes) {
    if (!out.factors.empty() && out.factors.back().prime == p) {
      ++out.factors.back().exponent;
    } else {
      out.factors.push_back({p, 1});
    }
  }
  return out;
}

void verify(const Factorization& f) {
  u128 product = 1;
  for (const auto& [p, a] : f.factors) {
    if (!is_prime(p)) throw std::logic_error("factorize produced composite factor " + std::to_string(p));
    for (unsigned i = 0; i < a; ++i) {
      product *= p;
      if (product > f.n) break;
    }
  }
  if (product != f.n) throw std::logic_error("factorize failed to reconstruct " + std::to_string(f.n));
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (const u64 p : kBases) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (const u64 a : kBases) {
    if (miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

Factorization factorize(u64 n, const SpfSieve* sieve) {
  if (n == 0) throw std::invalid_argument("factorize requires n >= 1");

  std::vector<u64> primes;
  if (sieve != nullptr && n <= sieve->limit()) {
    for (u64 m = n; m > 1; m /= sieve->spf(m)) primes.push_back(sieve->spf(m));
    return collect(n, std::move(primes));
  }

  u64 m = n;
  for (u64 p = 2; p <= kTrialDivisionBound && p * p <= m; p += (p == 2 ? 1 : 2)) {
    while (m % p == 0) {
      primes.push_back(p);
      m /= p;
    }
  }
  if (m > 1) {
    // Seeded by n so repeated calls take the same path.
    std::mt19937_64 rng(n);
    split(m, primes, rng);
  }
  Factorization out = collect(n, std::move(primes));
  verify(out);
  return out;
}

}  // namespace smarand
