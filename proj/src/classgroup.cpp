#include "classieve/classgroup.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace classieve {

namespace {

i64 isqrt(i64 n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative");
  i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(i64 n) {
  if (n < 0) return false;
  const i64 r = isqrt(n);
  return r * r == n;
}

void check_nondegenerate(i64 D) {
  if (D == 0 || (D > 0 && is_square(D)))
    throw std::invalid_argument("quadform: degenerate discriminant");
}

// Extended gcd: returns g = gcd(a, b) and x, y with a*x + b*y = g.
i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
  i64 old_r = a, r = b, old_x = 1, xx = 0, old_y = 0, yy = 1;
  while (r != 0) {
    const i64 q = old_r / r;
    i64 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * xx;
    old_x = xx;
    xx = t;
    t = old_y - q * yy;
    old_y = yy;
    yy = t;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  x = old_x;
  y = old_y;
  return old_r;
}

QuadForm reduce_definite(QuadForm f, i64 D) {
  if (f.a < 0) throw std::invalid_argument("reduce: negative definite form");
  while (true) {
    if (f.b > f.a || f.b <= -f.a) {
      // Normalize b into (-a, a]; c follows from the fixed discriminant.
      const i64 two_a = 2 * f.a;
      i64 r = f.b % two_a;
      if (r > f.a) r -= two_a;
      if (r <= -f.a) r += two_a;
      f.c = static_cast<i64>((static_cast<i128>(r) * r - D) / (4 * f.a));
      f.b = r;
    }
    if (f.a > f.c) {
      f = {f.c, -f.b, f.a};
      continue;
    }
    break;
  }
  if (f.b < 0 && (f.a == f.c || f.a == -f.b)) f.b = -f.b;
  return f;
}

bool is_reduced_indefinite(const QuadForm& f, i64 D) {
  if (f.b <= 0) return false;
  if (f.b * f.b >= D) return false;
  const i64 twoa = 2 * (f.a < 0 ? -f.a : f.a);
  if (D >= (twoa + f.b) * (twoa + f.b)) return false;       // sqrt(D) - b < 2|a|
  if (twoa > f.b && (twoa - f.b) * (twoa - f.b) >= D) return false;  // 2|a| < sqrt(D)+b
  return true;
}

QuadForm rho_step(const QuadForm& f, i64 D) {
  // (a, b, c) -> (c, b', c') with b' ≡ -b (mod 2c) in the reduction window.
  const i64 ac = f.c < 0 ? -f.c : f.c;
  const i64 two_c = 2 * ac;
  const i64 s = isqrt(D);
  i64 bp;
  if (ac > s) {
    // Window (-|c|, |c|].
    bp = (-f.b) % two_c;
    if (bp > ac) bp -= two_c;
    if (bp <= -ac) bp += two_c;
  } else {
    // Window (s - 2|c|, s].
    i64 t = (s + f.b) % two_c;
    if (t < 0) t += two_c;
    bp = s - t;
  }
  const i64 cp = static_cast<i64>((static_cast<i128>(bp) * bp - D) / (4 * f.c));
  return {f.c, bp, cp};
}

QuadForm reduce_indefinite(QuadForm f, i64 D) {
  while (!is_reduced_indefinite(f, D)) f = rho_step(f, D);
  return f;
}

}  // namespace

i64 form_disc(const QuadForm& f) {
  const i128 d = static_cast<i128>(f.b) * f.b - static_cast<i128>(4) * f.a * f.c;
  if (d > i128(1) << 62 || d < -(i128(1) << 62))
    throw std::overflow_error("form_disc: discriminant overflow");
  return static_cast<i64>(d);
}

bool is_reduced(const QuadForm& f) {
  const i64 D = form_disc(f);
  check_nondegenerate(D);
  if (D < 0) {
    if (f.a <= 0) return false;
    const i64 ab = f.b < 0 ? -f.b : f.b;
    if (!(ab <= f.a && f.a <= f.c)) return false;
    if (f.b < 0 && (f.a == f.c || ab == f.a)) return false;
    return true;
  }
  return is_reduced_indefinite(f, D);
}

QuadForm reduce(QuadForm f) {
  const i64 D = form_disc(f);
  check_nondegenerate(D);
  return D < 0 ? reduce_definite(f, D) : reduce_indefinite(f, D);
}

QuadForm rho(const QuadForm& f) {
  const i64 D = form_disc(f);
  check_nondegenerate(D);
  if (D < 0) throw std::invalid_argument("rho: only defined for indefinite forms");
  return rho_step(f, D);
}

std::vector<QuadForm> cycle_of(const QuadForm& f) {
  const i64 D = form_disc(f);
  check_nondegenerate(D);
  if (D < 0 || !is_reduced_indefinite(f, D))
    throw std::invalid_argument("cycle_of: need a reduced indefinite form");
  std::vector<QuadForm> cyc{f};
  for (QuadForm g = rho_step(f, D); g != f; g = rho_step(g, D)) {
    cyc.push_back(g);
    if (cyc.size() > 1u << 24)
      throw std::runtime_error("cycle_of: runaway cycle");
  }
  return cyc;
}

QuadForm canonical_form(QuadForm f) {
  const i64 D = form_disc(f);
  check_nondegenerate(D);
  if (D < 0) return reduce_definite(f, D);
  const auto cyc = cycle_of(reduce_indefinite(f, D));
  return *std::min_element(cyc.begin(), cyc.end());
}

QuadForm compose(const QuadForm& f, const QuadForm& g) {
  const i64 D = form_disc(f);
  if (form_disc(g) != D)
    throw std::invalid_argument("compose: discriminants differ");
  check_nondegenerate(D);

  const i64 s = (f.b + g.b) / 2;  // b1 ≡ b2 (mod 2), both ≡ D
  i64 x1, x2, y1, y2;
  const i64 g1 = ext_gcd(f.a, g.a, x1, x2);
  const i64 e = ext_gcd(g1, s, y1, y2);
  // (y1*x1)*a1 + v*a2 + w*s = e; only v and w enter the formula below.
  const i64 v = y1 * x2, w = y2;

  const i64 a3 = (f.a / e) * (g.a / e);
  const i64 two_a3 = 2 * (a3 < 0 ? -a3 : a3);
  // B = b2 + 2(a2/e) * (v*(b1-b2)/2 - w*c2)  (mod 2*a3)
  const i128 inner = static_cast<i128>(v) * ((f.b - g.b) / 2) - static_cast<i128>(w) * g.c;
  i128 B = g.b + 2 * static_cast<i128>(g.a / e) * inner;
  B %= two_a3;
  if (B < 0) B += two_a3;
  const i64 b3 = static_cast<i64>(B);
  const i64 c3 = static_cast<i64>((static_cast<i128>(b3) * b3 - D) / (4 * a3));
  return canonical_form({a3, b3, c3});
}

QuadForm identity_form(i64 D) {
  check_nondegenerate(D);
  const i64 r = ((D % 2) + 2) % 2;  // 0 or 1, matching D mod 4 ∈ {0, 1}
  const i64 c = static_cast<i64>((static_cast<i128>(r) - D) / 4);
  return canonical_form({1, r, c});
}

QuadForm inverse_form(const QuadForm& f) { return canonical_form({f.a, -f.b, f.c}); }

QuadForm form_pow(const QuadForm& f, i64 e) {
  if (e < 0) throw std::invalid_argument("form_pow: negative exponent");
  const i64 D = form_disc(f);
  QuadForm acc = identity_form(D);
  QuadForm base = canonical_form(f);
  while (e > 0) {
    if (e & 1) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

namespace {

// All reduced forms of an imaginary fundamental discriminant D < 0.
std::vector<QuadForm> reduced_forms_definite(i64 D) {
  std::vector<QuadForm> out;
  const i64 absD = -D;
  const i64 amax = isqrt(absD / 3);
  for (i64 a = 1; a <= amax; ++a) {
    for (i64 b = -a + 1; b <= a; ++b) {
      if (((b - D) & 1) != 0) continue;  // b ≡ D (mod 2)
      const i64 n = b * b - D;
      if (n % (4 * a) != 0) continue;
      const i64 c = n / (4 * a);
      if (c < a) continue;
      if (b < 0 && (a == c || -b == a)) continue;
      out.push_back({a, b, c});
    }
  }
  return out;
}

// All reduced indefinite forms of fundamental D > 0 (both signs of a).
std::vector<QuadForm> reduced_forms_indefinite(i64 D) {
  std::vector<QuadForm> out;
  const i64 s = isqrt(D);
  for (i64 b = 1; b <= s; ++b) {
    if (((b - D) & 1) != 0) continue;  // parity b ≡ D (mod 2)
    const i64 m4 = D - b * b;          // = -4ac > 0
    if (m4 % 4 != 0) continue;
    const i64 m = m4 / 4;  // = -ac = |a| |c| with ac < 0
    for (i64 a = 1; a * a <= m; ++a) {
      if (m % a != 0) continue;
      const i64 c = m / a;
      // candidates (±a, b, ∓c) and (±c, b, ∓a)
      const QuadForm cands[4] = {
          {a, b, -c}, {-a, b, c}, {c, b, -a}, {-c, b, a}};
      const size_t n = (a == c) ? 2 : 4;
      for (size_t i = 0; i < n; ++i)
        if (is_reduced_indefinite(cands[i], D)) out.push_back(cands[i]);
    }
  }
  return out;
}

}  // namespace

ClassGroup class_group(i64 D) {
  if (!is_fundamental_discriminant(D))
    throw std::invalid_argument("class_group: D must be fundamental");
  ClassGroup G;
  G.D = D;
  if (D < 0) {
    G.classes = reduced_forms_definite(D);
  } else {
    auto forms = reduced_forms_indefinite(D);
    std::sort(forms.begin(), forms.end());
    std::vector<QuadForm> canon;
    std::vector<QuadForm> seen;
    for (const auto& f : forms) {
      if (std::binary_search(seen.begin(), seen.end(), f)) continue;
      auto cyc = cycle_of(f);
      canon.push_back(*std::min_element(cyc.begin(), cyc.end()));
      seen.insert(seen.end(), cyc.begin(), cyc.end());
      std::sort(seen.begin(), seen.end());
    }
    G.classes = std::move(canon);
  }
  std::sort(G.classes.begin(), G.classes.end());
  return G;
}

i64 class_number(i64 D) { return static_cast<i64>(class_group(D).classes.size()); }

i64 torsion_count(const ClassGroup& G, i64 ell) {
  if (ell < 1) throw std::invalid_argument("torsion_count: ell must be >= 1");
  if (G.D > 0 && ell % 2 == 0)
    throw std::invalid_argument(
        "torsion_count: even ell over a real discriminant requires unit/genus "
        "data the narrow-cycle representation does not carry");
  const QuadForm id = identity_form(G.D);
  i64 count = 0;
  for (const auto& f : G.classes)
    if (form_pow(f, ell) == id) ++count;
  return count;
}

void for_each_imaginary_class_group(
    i64 lo, i64 hi,
    const std::function<void(i64 D, const std::vector<QuadForm>&)>& cb) {
  if (lo < 3) lo = 3;
  if (hi < lo) return;
  const i64 block = 1 << 13;
  for (i64 blo = lo; blo <= hi; blo += block) {
    const i64 bhi = std::min<i64>(hi, blo + block - 1);
    const size_t width = static_cast<size_t>(bhi - blo + 1);

    // Fundamental flags for D = -n, n in [blo, bhi]: either n ≡ 3 (mod 4)
    // squarefree, or n = 4m with m ≡ 1, 2 (mod 4) squarefree.
    const auto sf = squarefree_sieve(blo, bhi);
    const i64 qlo = (blo + 3) / 4, qhi = bhi / 4;
    const auto sf4 = qhi >= qlo ? squarefree_sieve(qlo, qhi)
                                : std::vector<std::uint8_t>{};
    std::vector<std::uint8_t> fund(width, 0);
    for (i64 n = blo; n <= bhi; ++n) {
      const size_t i = static_cast<size_t>(n - blo);
      if (n % 4 == 3) {
        fund[i] = sf[i];
      } else if (n % 4 == 0) {
        const i64 m = n / 4;
        if (m % 4 == 1 || m % 4 == 2) fund[i] = sf4[static_cast<size_t>(m - qlo)];
      }
    }

    // Bucket reduced forms by |D| = 4ac - b^2, parallel over a.
    std::vector<std::vector<QuadForm>> bucket(width);
    const i64 amax = isqrt(bhi / 3);
#pragma omp parallel
    {
      std::vector<std::vector<QuadForm>> local(width);
#pragma omp for schedule(dynamic) nowait
      for (i64 a = 1; a <= amax; ++a) {
        for (i64 b = -a + 1; b <= a; ++b) {
          i64 cmin = (blo + b * b + 4 * a - 1) / (4 * a);
          if (cmin < a) cmin = a;
          const i64 cmax = (bhi + b * b) / (4 * a);
          for (i64 c = cmin; c <= cmax; ++c) {
            const i64 absD = 4 * a * c - b * b;
            if (absD < blo || absD > bhi) continue;
            if (!fund[static_cast<size_t>(absD - blo)]) continue;
            if (b < 0 && (a == c || -b == a)) continue;
            local[static_cast<size_t>(absD - blo)].push_back({a, b, c});
          }
        }
      }
#pragma omp critical
      for (size_t i = 0; i < width; ++i)
        bucket[i].insert(bucket[i].end(), local[i].begin(), local[i].end());
    }

    for (i64 n = blo; n <= bhi; ++n) {
      const size_t i = static_cast<size_t>(n - blo);
      if (!fund[i]) continue;
      std::sort(bucket[i].begin(), bucket[i].end());
      cb(-n, bucket[i]);
    }
  }
}

}  // namespace classieve
