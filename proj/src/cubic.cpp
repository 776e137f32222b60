#include "classieve/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "classieve/cubic_reduce.hpp"

namespace classieve {

namespace {

i64 iabs(i64 x) { return x < 0 ? -x : x; }

i64 floor_div(i64 x, i64 y) {  // y > 0
  i64 q = x / y;
  if ((x % y) != 0 && x < 0) --q;
  return q;
}

i64 ceil_div(i64 x, i64 y) {  // y > 0
  i64 q = x / y;
  if ((x % y) != 0 && x > 0) ++q;
  return q;
}

i64 isqrt_i64(i64 n) {
  if (n < 0) throw std::invalid_argument("isqrt of negative");
  i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

i128 disc_i128(const CubicForm& f) {
  const i128 a = f.a, b = f.b, c = f.c, d = f.d;
  return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c -
         4 * a * c * c * c - 27 * a * a * d * d;
}

i64 mod_pos(i64 x, i64 m) {
  i64 r = x % m;
  return r < 0 ? r + m : r;
}

i64 mulmod(i64 x, i64 y, i64 m) {
  return static_cast<i64>(static_cast<i128>(x) * y % m);
}

i64 powmod(i64 base, i64 exp, i64 m) {
  i64 r = 1 % m;
  base = mod_pos(base, m);
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// f(r) and f'(r) mod p of the dehomogenized cubic (formal derivative; valid
// in any characteristic).
i64 eval_mod(const CubicForm& f, i64 r, i64 p) {
  const i64 a = mod_pos(f.a, p), b = mod_pos(f.b, p), c = mod_pos(f.c, p),
            d = mod_pos(f.d, p);
  return (mulmod(mulmod(mulmod(a, r, p) + b, r, p) + c, r, p) + d) % p;
}

i64 eval_deriv_mod(const CubicForm& f, i64 r, i64 p) {
  const i64 a3 = mulmod(3, mod_pos(f.a, p), p);
  const i64 b2 = mulmod(2, mod_pos(f.b, p), p);
  const i64 c = mod_pos(f.c, p);
  return (mulmod(mulmod(a3, r, p) + b2, r, p) + c) % p;
}

// Finite multiple roots of F(x, 1) mod p: common roots of f and f' mod p.
std::vector<i64> multiple_roots_mod_p(const CubicForm& f, i64 p) {
  std::vector<i64> roots;
  auto is_multiple = [&](i64 r) {
    return eval_mod(f, r, p) == 0 && eval_deriv_mod(f, r, p) == 0;
  };
  if (p < 1024) {
    for (i64 r = 0; r < p; ++r)
      if (is_multiple(r)) roots.push_back(r);
    return roots;
  }
  // Large p: candidates from gcd(f, f') mod p, which has degree <= 2. A cubic
  // cannot have two distinct multiple roots, so a degree-2 gcd is a perfect
  // square (x - r)^2 with r = -g1 / (2 g2); a degree-1 gcd gives -g0 / g1.
  std::vector<i64> u = {mod_pos(f.d, p), mod_pos(f.c, p), mod_pos(f.b, p),
                        mod_pos(f.a, p)};
  std::vector<i64> v = {mod_pos(f.c, p), mulmod(2, mod_pos(f.b, p), p),
                        mulmod(3, mod_pos(f.a, p), p)};
  auto deg = [](const std::vector<i64>& g) {
    for (int i = static_cast<int>(g.size()) - 1; i >= 0; --i)
      if (g[static_cast<size_t>(i)] != 0) return i;
    return -1;
  };
  while (deg(v) >= 0) {
    const int du = deg(u), dv = deg(v);
    if (du < dv) {
      std::swap(u, v);
      continue;
    }
    // u -= (lead_u / lead_v) x^(du-dv) * v
    const i64 factor =
        mulmod(u[static_cast<size_t>(du)],
               powmod(v[static_cast<size_t>(dv)], p - 2, p), p);
    for (int i = 0; i <= dv; ++i) {
      auto& coef = u[static_cast<size_t>(du - dv + i)];
      coef = mod_pos(coef - mulmod(factor, v[static_cast<size_t>(i)], p), p);
    }
    if (deg(u) < dv) std::swap(u, v);
  }
  const int dg = deg(u);
  std::vector<i64> cands;
  if (dg == 1) {
    cands.push_back(mod_pos(-mulmod(u[0], powmod(u[1], p - 2, p), p), p));
  } else if (dg == 2) {
    const i64 inv = powmod(mulmod(2, u[2], p), p - 2, p);
    cands.push_back(mod_pos(-mulmod(u[1], inv, p), p));
  }
  for (i64 r : cands)
    if (is_multiple(r)) roots.push_back(r);
  return roots;
}

// Maximality given the prime factorization of |disc|.
bool maximal_with_factors(const CubicForm& f,
                          const std::vector<std::pair<i64, int>>& factors) {
  for (const auto& [p, e] : factors) {
    if (e < 2) continue;
    if (!cubic_maximal_at(f, p)) return false;
  }
  return true;
}

}  // namespace

i64 cubic_disc(const CubicForm& f) {
  const i128 d = disc_i128(f);
  const i128 lim = i128(1) << 62;
  if (d > lim || d < -lim) throw std::overflow_error("cubic_disc overflow");
  return static_cast<i64>(d);
}

i64 cubic_content(const CubicForm& f) {
  i64 g = std::gcd(std::gcd(iabs(f.a), iabs(f.b)),
                   std::gcd(iabs(f.c), iabs(f.d)));
  return g;
}

static CubicForm cubicTransformImpl(const CubicForm& f, i128 p, i128 q, i128 r,
                                    i128 s) {
  const i128 a = f.a, b = f.b, c = f.c, d = f.d;
  const i128 na = a * p * p * p + b * p * p * r + c * p * r * r + d * r * r * r;
  const i128 nd = a * q * q * q + b * q * q * s + c * q * s * s + d * s * s * s;
  const i128 nb = 3 * a * p * p * q + b * (p * p * s + 2 * p * q * r) +
                  c * (2 * p * r * s + q * r * r) + 3 * d * r * r * s;
  const i128 nc = 3 * a * p * q * q + b * (q * q * r + 2 * p * q * s) +
                  c * (p * s * s + 2 * q * r * s) + 3 * d * r * s * s;
  const i128 lim = i128(1) << 62;
  for (i128 v : {na, nb, nc, nd})
    if (v > lim || v < -lim)
      throw std::overflow_error("cubic_transform overflow");
  return {static_cast<i64>(na), static_cast<i64>(nb), static_cast<i64>(nc),
          static_cast<i64>(nd)};
}

CubicForm cubic_transform(const CubicForm& f, i64 p, i64 q, i64 r, i64 s) {
  return cubicTransformImpl(f, p, q, r, s);
}

bool cubic_irreducible(const CubicForm& f) {
  if (f.a == 0 || f.d == 0) return false;
  // Certificate: no root in P^1(F_p) for some small p implies no rational
  // root, hence irreducibility (degree 3).
  for (i64 p : {2, 3, 5, 7, 11}) {
    bool root = (mod_pos(f.a, p) == 0);  // infinity
    for (i64 r = 0; !root && r < p; ++r) root = (eval_mod(f, r, p) == 0);
    if (!root) return true;
  }
  // Rational root test: roots (u : v) with u | d, v | a, gcd(u, v) = 1.
  std::vector<i64> us, vs;
  for (i64 u = 1; u * u <= iabs(f.d); ++u)
    if (iabs(f.d) % u == 0) {
      us.push_back(u);
      us.push_back(iabs(f.d) / u);
    }
  for (i64 v = 1; v * v <= iabs(f.a); ++v)
    if (iabs(f.a) % v == 0) {
      vs.push_back(v);
      vs.push_back(iabs(f.a) / v);
    }
  for (i64 u : us)
    for (i64 v : vs) {
      if (std::gcd(u, v) != 1) continue;
      for (i64 su : {u, -u}) {
        const i128 val = ((i128(f.a) * su + i128(f.b) * v) * su +
                          i128(f.c) * v * v) *
                             su +
                         i128(f.d) * v * v * v;
        if (val == 0) return false;
      }
    }
  return true;
}

bool cubic_maximal_at(const CubicForm& f, i64 p) {
  if (p < 2) throw std::invalid_argument("cubic_maximal_at: p < 2");
  if (cubic_content(f) % p == 0) return false;
  if (p > (i64(1) << 31)) return true;  // p^2 cannot divide a 62-bit disc
  const i64 p2 = p * p;
  for (i64 r : multiple_roots_mod_p(f, p)) {
    // F(r, 1) mod p^2 (independent of the lift since f'(r) = 0 mod p).
    const i64 v =
        static_cast<i64>(((((i128(mod_pos(f.a, p2)) * r + mod_pos(f.b, p2)) %
                            p2 * r) +
                           mod_pos(f.c, p2)) %
                              p2 * r +
                          mod_pos(f.d, p2)) %
                         p2);
    if (v == 0) return false;
  }
  if (mod_pos(f.a, p) == 0 && mod_pos(f.b, p) == 0) {
    if (mod_pos(f.a, p2) == 0) return false;
  }
  return true;
}

bool cubic_maximal(const CubicForm& f) {
  const i64 D = cubic_disc(f);
  if (D == 0) throw std::invalid_argument("cubic_maximal: disc = 0");
  return maximal_with_factors(f, factorize_trial(iabs(D)));
}

std::string csplit_name(CSplit s) {
  switch (s) {
    case CSplit::s111: return "111";
    case CSplit::s12: return "12";
    case CSplit::s3: return "3";
    case CSplit::ram_partial: return "1^2 1";
    case CSplit::ram_total: return "1^3";
  }
  throw std::logic_error("csplit_name");
}

CSplit cubic_splitting(const CubicForm& f, i64 p) {
  if (p < 2) throw std::invalid_argument("cubic_splitting: p < 2");
  if (cubic_content(f) % p == 0)
    throw std::invalid_argument("cubic_splitting: p divides content");
  int distinct = 0, max_mult = 0, total = 0;
  // Root at infinity: multiplicity = number of leading coefficients = 0.
  if (mod_pos(f.a, p) == 0) {
    int m = 1;
    if (mod_pos(f.b, p) == 0) {
      ++m;
      if (mod_pos(f.c, p) == 0) ++m;
    }
    ++distinct;
    total += m;
    max_mult = std::max(max_mult, m);
  }
  for (i64 r = 0; r < p; ++r) {
    if (eval_mod(f, r, p) != 0) continue;
    // Multiplicity by repeated synthetic division by (x - r) mod p.
    std::vector<i64> g = {mod_pos(f.a, p), mod_pos(f.b, p), mod_pos(f.c, p),
                          mod_pos(f.d, p)};
    int m = 0;
    while (g.size() > 1) {
      // divide: quotient q_i = g_0 r^i + ... (Horner); remainder = value
      std::vector<i64> q(g.size() - 1);
      i64 acc = 0;
      for (size_t i = 0; i + 1 < g.size(); ++i) {
        acc = (mulmod(acc, r, p) + g[i]) % p;
        q[i] = acc;
      }
      const i64 rem = (mulmod(acc, r, p) + g.back()) % p;
      if (rem != 0) break;
      ++m;
      g = std::move(q);
    }
    if (m == 0) continue;  // can happen only if eval bug; be safe
    ++distinct;
    total += m;
    max_mult = std::max(max_mult, m);
  }
  (void)total;
  if (max_mult <= 1) {
    if (distinct == 3) return CSplit::s111;
    if (distinct == 1) return CSplit::s12;
    if (distinct == 0) return CSplit::s3;
    throw std::logic_error("cubic_splitting: two simple roots of a cubic");
  }
  return max_mult == 2 ? CSplit::ram_partial : CSplit::ram_total;
}

namespace {

// Shared tail of both scans: candidate has exact disc in range and passed the
// sign-specific reduction (pre)filter.
void census_push(const CubicForm& F, i64 disc, bool negative,
                 const std::vector<std::int32_t>& spf,
                 std::vector<CubicField>& out) {
  if (!cubic_irreducible(F)) return;
  if (!maximal_with_factors(F, factorize(iabs(disc), spf))) return;
  if (negative && !detail::j_reduced_exact(F)) return;
  const auto canon = detail::canonical_cubic(F);
  if (!canon) throw std::logic_error("census: reduced form lost in sweep");
  out.push_back({*canon, disc});
}

// Totally real fields: Hessian (P, Q, R) weakly reduced, 0 < disc <= X.
// Bounds: P <= sqrt(disc) <= sqrt(X); 27 disc a^2 <= 4 P^3 (syzygy at (1,0))
// gives a <= (2/sqrt(27)) X^{1/4}; |b| <= sqrt(P) + 3a/2 from the identity
// 9 a^2 R = 3abQ - P b^2 + P^2 with R >= P and |Q| <= P.
void scan_a_positive(i64 a, i64 X, const std::vector<std::int32_t>& spf,
                     std::vector<CubicField>& out) {
  const i64 sX = isqrt_i64(X);
  const i64 bmax = isqrt_i64(sX) + (3 * a + 1) / 2 + 2;
  for (i64 b = -bmax; b <= bmax; ++b) {
    const i64 clo = ceil_div(b * b - sX, 3 * a);
    const i64 chi = floor_div(b * b - 1, 3 * a);
    for (i64 c = clo; c <= chi; ++c) {
      const i64 P = b * b - 3 * a * c;  // in [1, sX]
      const i64 bc = b * c;
      const i64 dlo = ceil_div(bc - P, 9 * a);
      const i64 dhi = floor_div(bc + P, 9 * a);
      for (i64 d = dlo; d <= dhi; ++d) {
        const i64 Q = bc - 9 * a * d;
        const i128 R128 = i128(c) * c - i128(3) * b * d;
        if (R128 < P) continue;  // want P <= R
        const i128 disc3 = 4 * i128(P) * R128 - i128(Q) * Q;  // = 3 disc
        if (disc3 < 3 || disc3 > i128(3) * X) continue;
        const i64 disc = static_cast<i64>(disc3 / 3);
        census_push({a, b, c, d}, disc, false, spf, out);
      }
    }
  }
}

// Complex fields: J covariant weakly reduced, -X <= disc < 0. Bounds (all
// proved from |B| <= A <= C, det J = |disc|/2, A = a^2 (theta-rho)^2
// + 2 a^2 sigma^2): A <= sqrt(2X/3); a <= (32/27)^{1/4} X^{1/4};
// |b| <= 4 sqrt(A) + 3a/2; |b^2 - 3ac| <= (3/2) A  (P = a^2[(th-rho)^2
// - 3 sigma^2]); |c^2 - 3bd| <= (3/2) C <= (3/2) 0.56 |disc|^{2/3}.
void scan_a_negative(i64 a, i64 X, const std::vector<std::int32_t>& spf,
                     std::vector<CubicField>& out) {
  const double Amax = std::sqrt(2.0 * static_cast<double>(X) / 3.0);
  const i64 bmax =
      static_cast<i64>(4.0 * std::sqrt(Amax) + 1.5 * static_cast<double>(a)) +
      2;
  const i64 Pmax =
      static_cast<i64>(1.2248 * std::sqrt(static_cast<double>(X))) + 3;
  const i64 Rmax = static_cast<i64>(
                       0.8434 * std::pow(static_cast<double>(X), 2.0 / 3.0)) +
                   3;
  const double a2 = static_cast<double>(a) * static_cast<double>(a);
  for (i64 b = -bmax; b <= bmax; ++b) {
    const i64 clo = ceil_div(b * b - Pmax, 3 * a);
    const i64 chi = floor_div(b * b + Pmax, 3 * a);
    for (i64 c = clo; c <= chi; ++c) {
      // disc(d) = -27 a^2 d^2 + q1 d + q0
      const i64 q1 = 18 * a * b * c - 4 * b * b * b;
      const i128 q0 = i128(b) * b * c * c - i128(4) * a * c * c * c;
      const i128 discX = i128(q1) * q1 + i128(108) * a * a * (q0 + X);
      if (discX < 0) continue;  // disc < -X for every d
      const double sX = std::sqrt(static_cast<double>(discX));
      const double den = 54.0 * a2;
      const double rlo = (static_cast<double>(q1) - sX) / den;
      const double rhi = (static_cast<double>(q1) + sX) / den;
      const i128 disc0 = discX - i128(108) * a * a * X;
      i64 lo1, hi1, lo2 = 1, hi2 = 0;
      if (disc0 >= 0) {
        // Exclude the middle where disc(d) >= 0.
        const double s0 = std::sqrt(static_cast<double>(disc0));
        lo1 = static_cast<i64>(std::floor(rlo)) - 1;
        hi1 = static_cast<i64>(std::ceil((static_cast<double>(q1) - s0) / den)) + 1;
        lo2 = static_cast<i64>(std::floor((static_cast<double>(q1) + s0) / den)) - 1;
        hi2 = static_cast<i64>(std::ceil(rhi)) + 1;
      } else {
        lo1 = static_cast<i64>(std::floor(rlo)) - 1;
        hi1 = static_cast<i64>(std::ceil(rhi)) + 1;
      }
      for (int band = 0; band < 2; ++band) {
        const i64 dlo = band == 0 ? lo1 : lo2;
        const i64 dhi = band == 0 ? hi1 : hi2;
        for (i64 d = dlo; d <= dhi; ++d) {
          const i128 disc128 =
              i128(-27) * a * a * d * d + i128(q1) * d + q0;
          if (disc128 > -1 || disc128 < -i128(X)) continue;
          const i128 R128 = i128(c) * c - i128(3) * b * d;
          if (R128 > Rmax || R128 < -Rmax) continue;
          const CubicForm F{a, b, c, d};
          if (!detail::j_reduced_maybe(F)) continue;
          census_push(F, static_cast<i64>(disc128), true, spf, out);
        }
      }
    }
  }
}

i64 amax_for(i64 X, bool negative) {
  // disc > 0: a <= (2 / sqrt(27)) X^{1/4} = 0.38490 X^{1/4};
  // disc < 0: a <= (16/27)^{1/2} (2/3)^{3/4} X^{1/4} = 0.56795 X^{1/4}.
  const double X4 = std::pow(static_cast<double>(X), 0.25);
  return static_cast<i64>((negative ? 0.5681 : 0.3850) * X4) + 2;
}

void sort_unique(CubicCensus& census) {
  auto& v = census.fields;
  std::sort(v.begin(), v.end(), [](const CubicField& x, const CubicField& y) {
    const i64 ax = iabs(x.disc), ay = iabs(y.disc);
    if (ax != ay) return ax < ay;
    return x.f < y.f;
  });
  v.erase(std::unique(v.begin(), v.end(),
                      [](const CubicField& x, const CubicField& y) {
                        return x.disc == y.disc && x.f == y.f;
                      }),
          v.end());
}

}  // namespace

CubicCensus enumerate_cubic_serial(i64 X, bool negative) {
  if (X < 1) throw std::invalid_argument("enumerate_cubic: X < 1");
  CubicCensus census{X, negative, {}};
  const auto spf = spf_table(X);
  const i64 amax = amax_for(X, negative);
  for (i64 a = 1; a <= amax; ++a) {
    if (negative)
      scan_a_negative(a, X, spf, census.fields);
    else
      scan_a_positive(a, X, spf, census.fields);
  }
  sort_unique(census);
  return census;
}

CubicCensus enumerate_cubic(i64 X, bool negative) {
  if (X < 1) throw std::invalid_argument("enumerate_cubic: X < 1");
  CubicCensus census{X, negative, {}};
  const auto spf = spf_table(X);
  const i64 amax = amax_for(X, negative);
#pragma omp parallel
  {
    std::vector<CubicField> local;
#pragma omp for schedule(dynamic) nowait
    for (i64 a = 1; a <= amax; ++a) {
      if (negative)
        scan_a_negative(a, X, spf, local);
      else
        scan_a_positive(a, X, spf, local);
    }
#pragma omp critical
    census.fields.insert(census.fields.end(), local.begin(), local.end());
  }
  sort_unique(census);
  return census;
}

i64 count_cubic_with_splitting(const CubicCensus& census, i64 p, CSplit s) {
  i64 n = 0;
  for (const auto& fld : census.fields)
    if (cubic_splitting(fld.f, p) == s) ++n;
  return n;
}

double cubic_main_term(i64 X, bool negative) {
  constexpr double kZeta3 = 1.2020569031595942854;
  return static_cast<double>(X) / ((negative ? 4.0 : 12.0) * kZeta3);
}

std::string cubic_census_to_csv(const CubicCensus& census) {
  std::ostringstream os;
  os << "a,b,c,d,disc\n";
  for (const auto& fld : census.fields)
    os << fld.f.a << ',' << fld.f.b << ',' << fld.f.c << ',' << fld.f.d << ','
       << fld.disc << '\n';
  return os.str();
}

}  // namespace classieve
