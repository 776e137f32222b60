#pragma once
// Exact Chebyshev-type sieve over a finite prime-indexed family: a set of N
// items, for each sieving prime p a subset A_p with declared density
// delta_p, remainders R_p = #A_p - delta_p N and R_{p,q} = #A_{p,q} -
// delta_p delta_q N (diagonal convention R_{p,p} = R_p), the per-item count
// N(a) = #{p : a in A_p}, its mean M = U + (1/N) sum R_p with U = sum
// delta_p, the exceptional set E = #{a : N(a) <= threshold}, and the
// Turan/Chebyshev certificate
//   E(A; z, M/2) <= (4N/M^2) (U + (1/N) sum_{p,q} |R_{p,q}|
//                   + (2U/N) sum_p |R_p| + ((1/N) sum_p |R_p|)^2),
// with every quantity an exact Rational, so the inequality and the mean /
// variance identities from its proof can be asserted with no tolerance.

#include <cstdint>
#include <string>
#include <vector>

#include "classieve/arith.hpp"
#include "classieve/cubic.hpp"
#include "classieve/quadratic.hpp"
#include "classieve/rational.hpp"

namespace classieve {

struct SieveInstance {
  i64 N = 0;                        // items are indices 0..N-1
  double z = 0;                     // informational; `primes` is authoritative
  std::vector<i64> primes;          // ascending sieving primes
  std::vector<Rational> densities;  // delta_p in [0,1), parallel to primes
  // member[i][a] != 0 iff item a lies in A_{primes[i]}.
  std::vector<std::vector<std::uint8_t>> member;
};

// Throws std::invalid_argument on inconsistent sizes, N <= 0, or
// delta_p outside [0,1).
void validate_instance(const SieveInstance& inst);

struct SieveStats {
  i64 N = 0;
  std::vector<i64> primes;
  std::vector<Rational> densities;
  std::vector<i64> count_p;                // #A_p
  std::vector<std::vector<i64>> count_pq;  // symmetric, diagonal = #A_p
  std::vector<Rational> R_p;
  std::vector<std::vector<Rational>> R_pq;  // diagonal = R_p
  std::vector<i64> histogram;               // histogram[k] = #{a : N(a) = k}
  Rational U;         // sum delta_p
  Rational M;         // mean of N(a)
  Rational variance;  // (1/N) sum_a (N(a) - M)^2
};

SieveStats sieve_stats(const SieveInstance& inst);         // OpenMP kernel
SieveStats sieve_stats_serial(const SieveInstance& inst);  // reference

struct ExceptionalSet {
  Rational threshold;
  std::vector<i64> members;  // items a with N(a) <= threshold, ascending
  i64 E = 0;                 // = members.size()
};
ExceptionalSet exceptional_set(const SieveInstance& inst,
                               const Rational& threshold);

// U + (1/N) sum_p R_p; equals stats.M identically.
Rational mean_identity_rhs(const SieveStats& stats);

// sum_p delta_p (1 - delta_p) + (1/N) sum_{p,q} R_{p,q}
//   - 2U (1/N) sum_p R_p - ((1/N) sum_p R_p)^2; equals stats.variance
// identically (signed remainders, ordered double sum with diagonal R_p).
Rational variance_identity_rhs(const SieveStats& stats);

// The Chebyshev bound; throws std::domain_error when M = 0.
Rational lemma_rhs(const SieveStats& stats);

struct SieveCertificate {
  i64 N = 0;
  double z = 0;
  i64 n_primes = 0;
  Rational U, M, variance;
  i64 E = 0;     // #{a : N(a) <= M/2}
  Rational rhs;  // Chebyshev bound
  bool holds = false;              // E <= rhs (a theorem; failure = bug)
  bool mean_identity = false;      // M == mean_identity_rhs
  bool variance_identity = false;  // variance == variance_identity_rhs
};

SieveCertificate certify_lemma(const SieveInstance& inst);
std::string certificate_json(const SieveCertificate& cert);

// U(z) = sum_{p <= z} split_density(degree, p) against the asymptotic
// window [lo, hi] * z/log z, with an O(1/log z) slack (fitted constant 1).
struct UBoundsReport {
  int degree = 0;
  double z = 0;
  Rational U;
  double ratio = 0;  // U / (z / log z)
  double lo = 0, hi = 0, slack = 0;
  bool ok = false;
};
UBoundsReport u_bounds_check(int degree, double z);

// Items {1..N}, property "p divides the item", densities 1/p, primes <= z.
SieveInstance divisibility_instance(i64 N, i64 z);

// Real quadratic fields 0 < D <= X (fundamental discriminants), property
// "p splits", densities p/(2(p+1)), primes <= z = (X/2)^delta.
SieveInstance quadratic_sieve_instance(i64 X, const Rational& delta);
// Same instance from an already-enumerated census; any single sign works
// (the split density p/(2(p+1)) holds on both sides).
SieveInstance quadratic_sieve_instance(const QuadraticCensus& census,
                                       const Rational& delta);

// Totally real cubic fields 0 < disc <= X, property "p totally split",
// densities (1/6)/(1 + 1/p + 1/p^2), primes <= z = (X/2)^delta.
SieveInstance cubic_sieve_instance(i64 X, const Rational& delta);
// Same instance built from an already-enumerated census (must be disc > 0).
SieveInstance cubic_sieve_instance(const CubicCensus& census,
                                   const Rational& delta);

// Deterministic pseudo-random instance: sizes, rational densities and
// memberships (with a planted bias, so R_p != 0) derived from the seed.
SieveInstance synthetic_instance(std::uint64_t seed);

// Same construction with chosen dimensions: N = items and sieving primes =
// all primes <= zmax.
SieveInstance synthetic_instance(std::uint64_t seed, i64 items, i64 zmax);

}  // namespace classieve
