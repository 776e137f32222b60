#pragma once
// Exact local densities for splitting types of degree-d number fields
// (d = 2..5), the non-maximality densities nu(p) of the quartic/quintic
// lattice parametrizations, and the sieve exponent bookkeeping: delta_0(d),
// ell(d), the counting-theorem exponents (tau, sigma, caps), and the
// asymptotic window constants for U(z). Every quantity is an exact Rational.

#include <string>
#include <utility>
#include <vector>

#include "classieve/arith.hpp"
#include "classieve/rational.hpp"

namespace classieve {

struct DensityRow {
  std::string type;  // residue-degree pattern: "111", "12", ..., or "ram"
  Rational density;  // exact density among degree-d fields
};

// Local mass normalizer (the shared denominator of every row):
//   d=2: 1 + 1/p
//   d=3: 1 + 1/p + 1/p^2
//   d=4: 1 + 1/p + 2/p^2 + 1/p^3
//   d=5: 1 + 1/p + 2/p^2 + 2/p^3 + 1/p^4
Rational local_mass(int d, i64 p);

// Full density table at p: unramified splitting types (each weighted by the
// proportion of its cycle type in S_d, divided by the local mass), followed
// by one aggregate "ram" row. The densities sum to exactly 1.
std::vector<DensityRow> local_densities(int d, i64 p);

// Completely split density (the "11...1" row).
Rational split_density(int d, i64 p);

// Aggregate ramified density (the "ram" row).
Rational ramified_density(int d, i64 p);

// Cubic ramified fine structure: (partially ramified 1^2 1, totally
// ramified 1^3) = (p^{-1}, p^{-2}) / local_mass(3, p).
std::pair<Rational, Rational> cubic_ramified_split(i64 p);

// Density of lattice points whose quartic (resp. quintic) ring is
// non-maximal at p, in the pairs-of-ternary-quadratic-forms (resp.
// quadruples-of-quinary-alternating-forms) parametrization.
Rational nu_quartic(i64 p);
Rational nu_quintic(i64 p);

// Smallest ell for which the generic average bound applies:
// ell(2) = ell(3) = 1, ell(4) = 8, ell(5) = 25.
i64 ell_threshold(int d);

// Sieve exponent delta_0(d): 1/6, 2/25, 1/48, 1/200 for d = 2, 3, 4, 5.
Rational delta0(int d);

// Exponents of the field-counting error terms O(e^sigma X^tau), plus any
// additional upper caps that the degree imposes on delta_0 (1/4 for d=3
// from the secondary term, 1 - gamma = 1/200 for d=5).
struct CountingExponents {
  Rational tau;
  Rational sigma;
  std::vector<Rational> caps;
};
CountingExponents counting_exponents(int d);

// delta_0 = min{ (1 - tau) / (1 + 2 sigma), caps... }.
Rational delta0_from_exponents(const CountingExponents& ce);

// Window [lo, hi] with lo * z/log z <= U(z) <= hi * z/log z asymptotically:
// d=2: [1/3, 1/2], d=3: [2/21, 1/6], d=4: [1/51, 1/24], d=5: [2/555, 1/120].
std::pair<Rational, Rational> u_window(int d);

// CSV table "degree,p,type,density,density_decimal" over the given degrees
// and primes (primes are not checked for primality).
std::string densities_csv(const std::vector<int>& degrees,
                          const std::vector<i64>& primes);

}  // namespace classieve
