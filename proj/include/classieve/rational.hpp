#pragma once
// Exact integer / rational plumbing shared by every module.
//
// All densities, sieve remainders and identity checks are carried as exact
// rationals; doubles appear only in human-facing reports. GMP backs both
// types: the sieve identities sum ~1200 fractions with pairwise near-coprime
// denominators, so numerators grow to thousands of digits and fixed-width
// arithmetic is not an option.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace classieve {

using Int = mpz_class;       // arbitrary-precision integer
using Rational = mpq_class;  // exact rational, kept canonical (den > 0, gcd 1)

// Build a canonical rational from machine integers. Throws on zero denominator.
inline Rational rat(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

inline Rational rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rat_pow(Rational base, long e) {
  if (e < 0) {
    if (base == 0) throw std::invalid_argument("rational: 0^negative");
    base = rat(Int(base.get_den()), Int(base.get_num()));
    e = -e;
  }
  Rational acc = 1;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

// Exact decimal-free rendering: "p" when integral, else "p/q".
inline std::string rat_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "p", "p/q", optional leading '-'. Throws on malformed input.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rational: empty string");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Rational q{Int(s)};
      q.canonicalize();
      return q;
    }
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    return rat(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("rational: cannot parse '" + s + "'");
  }
}

inline double rat_double(const Rational& q) { return q.get_d(); }

}  // namespace classieve
