#pragma once
// Independent cubic-field oracle, sharing no code with the census under
// test. Enumerates monic integer cubics x^3 - t x^2 + e2 x - e3 inside
// Hunter's bounds for |d_K| <= bound:
//   t = Tr(theta) in {0, 1},   S2 = sum |theta_i|^2 <= t^2/3 + (2/3) sqrt(B),
//   |e2| <= (t^2 + S2)/2,      |e3| <= (S2/3)^{3/2},  e3 != 0,
// (every cubic field has such a generator), computes the field discriminant
// of each irreducible polynomial with the Pohst–Zassenhaus Round-2 method
// (p-radical via Frobenius kernel, multiplier ring, iterate to the maximal
// order), and deduplicates generators of the same field by field
// discriminant plus the factorization shapes of the polynomial at primes
// p < 100 not dividing its polynomial discriminant.
//
// Everything runs in GMP rationals; no overflow analysis needed.

#include <string>
#include <vector>

namespace hunter_oracle {

struct MonicCubic {
  long long t = 0, e2 = 0, e3 = 0;  // x^3 - t x^2 + e2 x - e3
};

struct OracleField {
  long long disc = 0;        // field discriminant d_K
  MonicCubic poly;           // one defining polynomial
  long long poly_disc = 0;   // disc(poly) = d_K * index^2
  std::string fingerprint;   // shapes at good primes < 100 (see .cpp)
};

// disc(x^3 + a x^2 + b x + c).
long long poly_disc(long long a, long long b, long long c);

// True iff the monic cubic has no rational (hence integer) root.
bool irreducible(const MonicCubic& f);

// Field discriminant of the maximal order of Q[x]/(f) via Round 2.
long long field_discriminant(const MonicCubic& f);

// Factorization shape of f mod p: "111", "12", "3", "1^2 1" or "1^3".
std::string shape_mod_p(const MonicCubic& f, long long p);

// All cubic fields with |d_K| <= bound, sorted by (|disc|, disc).
std::vector<OracleField> enumerate_fields(long long bound);

}  // namespace hunter_oracle
