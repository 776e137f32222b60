#include "classieve/quadratic.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace classieve {

namespace {

bool is_prime_small(i64 p) {
  if (p < 2) return false;
  for (i64 q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

void validate_conditions(const std::vector<PrimeCondition>& conds) {
  std::set<i64> seen;
  for (const auto& c : conds) {
    if (!is_prime_small(c.p))
      throw std::invalid_argument("prime condition: p must be prime");
    if (!seen.insert(c.p).second)
      throw std::invalid_argument("prime condition: primes must be distinct");
  }
}

constexpr i64 kCensusBudget = i64(4) * 100 * 1000 * 1000;  // flags allocated

// Append fundamental discriminants with lo <= |D|-candidate n <= hi.
// Emits the odd branch (n ≡ 1 mod 4 squarefree -> D = ±n) and the 4m branch
// in terms of n = |D| so the caller can sort by |D| later.
void collect_range(i64 lo, i64 hi, SignClass sign, std::vector<i64>& out) {
  const auto sqfree = squarefree_sieve(lo, hi);
  const bool want_real = sign != SignClass::imaginary;
  const bool want_imag = sign != SignClass::real;
  for (i64 n = lo; n <= hi; ++n) {
    if (!sqfree[static_cast<size_t>(n - lo)]) continue;
    const i64 r4 = n % 4;
    // D = +n (n ≡ 1 mod 4) or D = -n (n ≡ 3 mod 4), n squarefree, n > 1.
    if (n > 1 && r4 == 1 && want_real) out.push_back(n);
    if (r4 == 3 && want_imag) out.push_back(-n);
    // D = ±4n: requires n ≡ 2,3 (m = n) resp. n ≡ 1,2 for the negative side.
    if (4 * n <= 0) continue;  // overflow guard (not reachable within budget)
    if (want_real && (r4 == 2 || r4 == 3)) out.push_back(4 * n);
    if (want_imag && (r4 == 1 || r4 == 2)) out.push_back(-4 * n);
  }
}

void sort_census(std::vector<i64>& D) {
  std::sort(D.begin(), D.end(), [](i64 x, i64 y) {
    const i64 ax = x < 0 ? -x : x, ay = y < 0 ? -y : y;
    if (ax != ay) return ax < ay;
    return x < y;  // negative first on |D| ties
  });
}

}  // namespace

QSplit splitting_type_quadratic(i64 D, i64 p) {
  if (!is_prime_small(p))
    throw std::invalid_argument("splitting_type_quadratic: p must be prime");
  if (!is_fundamental_discriminant(D))
    throw std::invalid_argument("splitting_type_quadratic: D must be fundamental");
  const int k = kronecker(D, p);
  if (k == 1) return QSplit::split;
  if (k == -1) return QSplit::inert;
  return QSplit::ramified;
}

QuadraticCensus enumerate_quadratic_serial(i64 X, SignClass sign) {
  if (X < 1) throw std::invalid_argument("enumerate_quadratic: X must be >= 1");
  if (X > kCensusBudget)
    throw std::length_error("enumerate_quadratic: X exceeds memory budget");
  QuadraticCensus census;
  census.X = X;
  census.sign = sign;
  std::vector<i64> cand;
  collect_range(1, X, sign, cand);
  // collect_range produced |D| <= 4X on the 4m branch; trim to |D| <= X.
  std::erase_if(cand, [X](i64 d) { return (d < 0 ? -d : d) > X; });
  sort_census(cand);
  census.D = std::move(cand);
  return census;
}

QuadraticCensus enumerate_quadratic(i64 X, SignClass sign) {
  if (X < 1) throw std::invalid_argument("enumerate_quadratic: X must be >= 1");
  if (X > kCensusBudget)
    throw std::length_error("enumerate_quadratic: X exceeds memory budget");
  QuadraticCensus census;
  census.X = X;
  census.sign = sign;

  const i64 chunk = 1 << 16;
  const i64 nchunks = (X + chunk - 1) / chunk;
  std::vector<std::vector<i64>> parts(static_cast<size_t>(nchunks));
#pragma omp parallel for schedule(dynamic)
  for (i64 ci = 0; ci < nchunks; ++ci) {
    const i64 lo = ci * chunk + 1;
    const i64 hi = std::min<i64>(X, (ci + 1) * chunk);
    collect_range(lo, hi, sign, parts[static_cast<size_t>(ci)]);
  }
  std::vector<i64> cand;
  for (auto& part : parts) cand.insert(cand.end(), part.begin(), part.end());
  std::erase_if(cand, [X](i64 d) { return (d < 0 ? -d : d) > X; });
  sort_census(cand);
  census.D = std::move(cand);
  return census;
}

Rational density_prediction_quadratic(const PrimeCondition& cond) {
  const i64 p = cond.p;
  if (!is_prime_small(p))
    throw std::invalid_argument("density_prediction_quadratic: p must be prime");
  if (cond.type == QSplit::ramified) return rat(1, p + 1);
  return rat(p, 2 * (p + 1));
}

Rational density_prediction_quadratic(const std::vector<PrimeCondition>& conds) {
  validate_conditions(conds);
  Rational d = 1;
  for (const auto& c : conds) d *= density_prediction_quadratic(c);
  return d;
}

i64 count_with_conditions_direct(const QuadraticCensus& census,
                                 const std::vector<PrimeCondition>& conds) {
  validate_conditions(conds);
  i64 count = 0;
  for (const i64 D : census.D) {
    bool ok = true;
    for (const auto& c : conds) {
      const int k = kronecker(D, c.p);
      const int want = c.type == QSplit::split ? 1 : (c.type == QSplit::inert ? -1 : 0);
      if (k != want) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

namespace {

// n in [1, X] with n ≡ r (mod M), 0 <= r < M.
i64 ap_count(i64 X, i64 r, i64 M) {
  if (r == 0) return X / M;
  if (r > X) return 0;
  return (X - r) / M + 1;
}

// x ≡ r1 (mod m1), x ≡ r2 (mod m2), gcd(m1, m2) = 1 -> residue mod m1*m2.
i64 crt(i64 r1, i64 m1, i64 r2, i64 m2) {
  // Solve m1*t ≡ r2 - r1 (mod m2) via extended gcd.
  i64 a = m1 % m2, b = m2;
  i64 u0 = 1, u1 = 0;
  while (b != 0) {
    const i64 q = a / b;
    i64 t = a - q * b;
    a = b;
    b = t;
    t = u0 - q * u1;
    u0 = u1;
    u1 = t;
  }
  // a = gcd = 1, u0 = inverse of m1 mod m2 (up to sign conventions).
  i64 inv = u0 % m2;
  if (inv < 0) inv += m2;
  i64 diff = (r2 - r1) % m2;
  if (diff < 0) diff += m2;
  const i64 t = static_cast<i64>(static_cast<i128>(diff) * inv % m2);
  return r1 + m1 * t;  // in [0, m1*m2)
}

struct Family {
  i64 g2 = 4;  // modulus 2^g
  i64 b = 1;   // residue mod 2^g
};

// Exact count of one family for one sign:
//   n ∈ [1,X] (real) or [-X,-1] (imaginary), n ≡ b (mod g2), e0 | n,
//   n free of odd squares, (n/p) = eps_p for p in split_inert.
i64 count_family(i64 X, bool negative, const Family& fam, i64 e0,
                 const std::vector<PrimeCondition>& split_inert) {
  // Residue sets S_p = {u mod p : (u/p) = eps_p}.
  std::vector<std::vector<i64>> residue_sets;
  std::vector<i64> ps;
  for (const auto& c : split_inert) {
    const int want = c.type == QSplit::split ? 1 : -1;
    std::vector<i64> s;
    for (i64 u = 1; u < c.p; ++u)
      if (kronecker(u, c.p) == want) s.push_back(u);
    residue_sets.push_back(std::move(s));
    ps.push_back(c.p);
  }

  i64 total = 0;
  for (i64 d = 1; d * d <= X; d += 2) {
    const int mu = moebius(d);
    if (mu == 0) continue;
    // d sharing a factor with a split/inert prime forces (n/p) = 0: empty.
    bool clash = false;
    for (const i64 p : ps)
      if (d % p == 0) clash = true;
    if (clash) continue;
    const i64 modd = std::lcm(e0, d * d);  // odd
    // Enumerate residue combinations over the split/inert primes.
    i64 combo_count = 0;
    std::vector<size_t> idx(residue_sets.size(), 0);
    while (true) {
      // CRT: n ≡ b (mod 2^g), n ≡ 0 (mod modd), n ≡ u_i (mod p_i).
      i64 r = fam.b % fam.g2, M = fam.g2;
      r = crt(r, M, 0, modd);
      M *= modd;
      bool overflow = false;
      for (size_t i = 0; i < idx.size(); ++i) {
        if (M > (i64(1) << 62) / ps[i]) {
          overflow = true;
          break;
        }
        r = crt(r, M, residue_sets[i][idx[i]], ps[i]);
        M *= ps[i];
      }
      if (overflow)
        throw std::overflow_error("count_with_conditions_sieve: modulus overflow");
      // Count n of the right sign: negative means m = -n ≡ (M - r) mod M.
      const i64 rr = negative ? (M - r) % M : r;
      combo_count += ap_count(X, rr, M);
      // Advance the mixed-radix index.
      size_t i = 0;
      for (; i < idx.size(); ++i) {
        if (++idx[i] < residue_sets[i].size()) break;
        idx[i] = 0;
      }
      if (idx.empty() || i == idx.size()) break;
    }
    total += mu * combo_count;
  }
  return total;
}

i64 count_sieve_one_sign(i64 X, bool negative,
                         const std::vector<PrimeCondition>& conds) {
  // Partition conditions at 2 and odd primes.
  const PrimeCondition* two = nullptr;
  std::vector<PrimeCondition> split_inert;
  i64 e0 = 1;
  for (const auto& c : conds) {
    if (c.p == 2) {
      two = &c;
    } else if (c.type == QSplit::ramified) {
      e0 *= c.p;
    } else {
      split_inert.push_back(c);
    }
  }

  std::vector<Family> families;
  if (two == nullptr) {
    families.push_back({4, 1});    // n ≡ 1 (mod 4): odd discriminants
    families.push_back({16, 8});   // n ≡ 8 (mod 16): D = 4m, m ≡ 2 (mod 4)
    families.push_back({16, 12});  // n ≡ 12 (mod 16): D = 4m, m ≡ 3 (mod 4)
  } else if (two->type == QSplit::ramified) {
    families.push_back({16, 8});
    families.push_back({16, 12});
  } else if (two->type == QSplit::split) {
    families.push_back({8, 1});  // (n/2) = +1 <=> n ≡ 1 (mod 8)
  } else {
    families.push_back({8, 5});  // (n/2) = -1 <=> n ≡ 5 (mod 8)
  }

  i64 total = 0;
  for (const auto& fam : families)
    total += count_family(X, negative, fam, e0, split_inert);

  // n = 1 satisfies "≡ 1, squarefree" and every split condition, but is not a
  // discriminant; remove it when the families would have counted it.
  if (!negative && e0 == 1) {
    bool one_passes = two == nullptr || two->type == QSplit::split;
    for (const auto& c : split_inert)
      if (c.type == QSplit::inert) one_passes = false;
    if (one_passes) total -= 1;
  }
  return total;
}

}  // namespace

i64 count_with_conditions_sieve(i64 X, SignClass sign,
                                const std::vector<PrimeCondition>& conds) {
  if (X < 1) throw std::invalid_argument("count_with_conditions_sieve: X >= 1");
  validate_conditions(conds);
  i64 total = 0;
  if (sign != SignClass::imaginary) total += count_sieve_one_sign(X, false, conds);
  if (sign != SignClass::real) total += count_sieve_one_sign(X, true, conds);
  return total;
}

double quadratic_main_term(i64 X, SignClass sign,
                           const std::vector<PrimeCondition>& conds) {
  const double zeta2 = M_PI * M_PI / 6.0;
  const double signs = sign == SignClass::both ? 2.0 : 1.0;
  return rat_double(density_prediction_quadratic(conds)) * signs *
         static_cast<double>(X) / (2.0 * zeta2);
}

std::string census_to_csv(const QuadraticCensus& census) {
  std::ostringstream os;
  os << "D,sign\n";
  for (const i64 D : census.D)
    os << D << "," << (D < 0 ? "imaginary" : "real") << "\n";
  return os.str();
}

}  // namespace classieve
