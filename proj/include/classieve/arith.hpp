#pragma once
// Elementary arithmetic primitives: primes, Moebius, squarefree sieves,
// Kronecker symbol, fundamental discriminants. Everything downstream
// (censuses, class groups, sieve engine) builds on these.

#include <cstdint>
#include <utility>
#include <vector>

#include "classieve/rational.hpp"

namespace classieve {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128_t;

struct PrimeTable {
  i64 limit = 0;            // primes cover [2, limit]
  std::vector<i64> primes;  // ascending
};

// Sieve of Eratosthenes. limit < 2 yields an empty table. Throws on
// limits that would blow the memory budget (~2^31 flags).
PrimeTable primes_up_to(i64 limit);

// Moebius function, n >= 1 (trial division; intended for n up to ~10^12).
int moebius(i64 n);

// Scalar squarefree test, n >= 1.
bool is_squarefree(i64 n);

// Range sieve: flags[i] says lo+i is squarefree, for [lo, hi], lo >= 1.
std::vector<std::uint8_t> squarefree_sieve(i64 lo, i64 hi);

// Full Kronecker symbol (a/n), defined for all integers, including n <= 0.
int kronecker(i64 a, i64 n);

// Fundamental discriminant: D = 1 is excluded by convention; D ≡ 1 (mod 4)
// squarefree, or D = 4m with m ≡ 2,3 (mod 4) squarefree.
bool is_fundamental_discriminant(i64 D);

// Smallest-prime-factor table for n <= limit (int32 indices; limit <= 2^31).
std::vector<std::int32_t> spf_table(i64 limit);

// Factor |n| >= 1 via an SPF table covering |n|. Returns (prime, exponent)
// pairs in ascending prime order.
std::vector<std::pair<i64, int>> factorize(i64 n, const std::vector<std::int32_t>& spf);

// Trial-division fallback for arbitrary 64-bit |n| >= 1.
std::vector<std::pair<i64, int>> factorize_trial(i64 n);

// Number of distinct prime factors of |n| >= 1.
int omega(i64 n, const std::vector<std::int32_t>& spf);

}  // namespace classieve
