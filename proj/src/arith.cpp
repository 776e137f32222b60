#include "classieve/arith.hpp"

#include <cmath>
#include <stdexcept>

namespace classieve {

PrimeTable primes_up_to(i64 limit) {
  PrimeTable t;
  if (limit > (i64(1) << 31))
    throw std::length_error("primes_up_to: limit exceeds memory budget");
  t.limit = limit;
  if (limit < 2) return t;
  std::vector<std::uint8_t> comp(static_cast<size_t>(limit) + 1, 0);
  for (i64 p = 2; p * p <= limit; ++p)
    if (!comp[p])
      for (i64 m = p * p; m <= limit; m += p) comp[m] = 1;
  for (i64 n = 2; n <= limit; ++n)
    if (!comp[n]) t.primes.push_back(n);
  return t;
}

int moebius(i64 n) {
  if (n < 1) throw std::invalid_argument("moebius: n must be >= 1");
  int k = 0;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++k;
    }
  }
  if (n > 1) ++k;
  return (k & 1) ? -1 : 1;
}

bool is_squarefree(i64 n) {
  if (n < 1) throw std::invalid_argument("is_squarefree: n must be >= 1");
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return false;
    }
  }
  return true;
}

std::vector<std::uint8_t> squarefree_sieve(i64 lo, i64 hi) {
  if (lo < 1 || hi < lo)
    throw std::invalid_argument("squarefree_sieve: need 1 <= lo <= hi");
  if (hi - lo > (i64(1) << 31))
    throw std::length_error("squarefree_sieve: range exceeds memory budget");
  std::vector<std::uint8_t> flags(static_cast<size_t>(hi - lo) + 1, 1);
  for (i64 p = 2; p * p <= hi; ++p) {
    const i64 p2 = p * p;
    i64 m = (lo + p2 - 1) / p2 * p2;
    for (; m <= hi; m += p2) flags[static_cast<size_t>(m - lo)] = 0;
  }
  return flags;
}

int kronecker(i64 a, i64 n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if ((a & 1) == 0 && (n & 1) == 0) return 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;  // (a / -1)
  }
  int v = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++v;
  }
  if (v & 1) {
    const i64 am = ((a % 8) + 8) % 8;  // a odd here
    if (am == 3 || am == 5) result = -result;
  }
  // Jacobi loop: n odd positive from here on.
  a = ((a % n) + n) % n;
  while (a != 0) {
    v = 0;
    while ((a & 1) == 0) {
      a >>= 1;
      ++v;
    }
    if (v & 1) {
      const i64 nm = n % 8;
      if (nm == 3 || nm == 5) result = -result;
    }
    if ((a % 4) == 3 && (n % 4) == 3) result = -result;
    const i64 t = n % a;
    n = a;
    a = t;
  }
  return (n == 1) ? result : 0;
}

bool is_fundamental_discriminant(i64 D) {
  if (D == 0 || D == 1) return false;
  const i64 r4 = ((D % 4) + 4) % 4;
  if (r4 == 1) return is_squarefree(D < 0 ? -D : D);
  if (r4 != 0) return false;
  const i64 m = D / 4;
  const i64 m4 = ((m % 4) + 4) % 4;
  if (m4 != 2 && m4 != 3) return false;
  return is_squarefree(m < 0 ? -m : m);
}

std::vector<std::int32_t> spf_table(i64 limit) {
  if (limit < 1 || limit > (i64(1) << 31))
    throw std::length_error("spf_table: limit out of range");
  std::vector<std::int32_t> spf(static_cast<size_t>(limit) + 1, 0);
  for (i64 i = 2; i <= limit; ++i) {
    if (spf[i] == 0) {
      for (i64 m = i; m <= limit; m += i)
        if (spf[m] == 0) spf[m] = static_cast<std::int32_t>(i);
    }
  }
  return spf;
}

std::vector<std::pair<i64, int>> factorize(i64 n, const std::vector<std::int32_t>& spf) {
  if (n < 0) n = -n;
  if (n < 1) throw std::invalid_argument("factorize: |n| must be >= 1");
  if (static_cast<size_t>(n) >= spf.size())
    throw std::out_of_range("factorize: n exceeds SPF table");
  std::vector<std::pair<i64, int>> out;
  while (n > 1) {
    const i64 p = spf[static_cast<size_t>(n)];
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  return out;
}

std::vector<std::pair<i64, int>> factorize_trial(i64 n) {
  if (n < 0) n = -n;
  if (n < 1) throw std::invalid_argument("factorize_trial: |n| must be >= 1");
  std::vector<std::pair<i64, int>> out;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int omega(i64 n, const std::vector<std::int32_t>& spf) {
  return static_cast<int>(factorize(n, spf).size());
}

}  // namespace classieve
