#include "classieve/densities.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace classieve {

namespace {

void check_degree(int d) {
  if (d < 2 || d > 5) throw std::invalid_argument("degree must be in 2..5");
}

void check_prime_positive(i64 p) {
  if (p < 2) throw std::invalid_argument("p must be >= 2");
}

// Unramified rows: residue-degree pattern and the proportion of the
// corresponding cycle type in S_d.
struct UnramRow {
  const char* type;
  long num, den;  // weight = num/den, Sum over rows = 1 per degree
};

const UnramRow kRows2[] = {{"11", 1, 2}, {"2", 1, 2}};
const UnramRow kRows3[] = {{"111", 1, 6}, {"12", 1, 2}, {"3", 1, 3}};
const UnramRow kRows4[] = {
    {"1111", 1, 24}, {"112", 1, 4}, {"13", 1, 3}, {"22", 1, 8}, {"4", 1, 4}};
const UnramRow kRows5[] = {{"11111", 1, 120}, {"1112", 1, 12}, {"122", 1, 8},
                           {"113", 1, 6},     {"23", 1, 6},    {"14", 1, 4},
                           {"5", 1, 5}};

std::pair<const UnramRow*, size_t> unram_rows(int d) {
  switch (d) {
    case 2: return {kRows2, std::size(kRows2)};
    case 3: return {kRows3, std::size(kRows3)};
    case 4: return {kRows4, std::size(kRows4)};
    default: return {kRows5, std::size(kRows5)};
  }
}

// Ramified-mass numerator: local_mass = 1 + ram_mass_numerator.
Rational ram_mass_numerator(int d, i64 p) {
  const Rational q = rat(1, p);
  switch (d) {
    case 2: return q;
    case 3: return q + q * q;
    case 4: return q + 2 * q * q + q * q * q;
    default: {
      const Rational q2 = q * q;
      return q + 2 * q2 + 2 * q2 * q + q2 * q2;
    }
  }
}

}  // namespace

Rational local_mass(int d, i64 p) {
  check_degree(d);
  check_prime_positive(p);
  return Rational(1) + ram_mass_numerator(d, p);
}

std::vector<DensityRow> local_densities(int d, i64 p) {
  check_degree(d);
  check_prime_positive(p);
  const Rational mass = local_mass(d, p);
  std::vector<DensityRow> table;
  const auto [rows, n] = unram_rows(d);
  for (size_t i = 0; i < n; ++i)
    table.push_back({rows[i].type, rat(rows[i].num, rows[i].den) / mass});
  table.push_back({"ram", ram_mass_numerator(d, p) / mass});
  return table;
}

Rational split_density(int d, i64 p) {
  check_degree(d);
  check_prime_positive(p);
  const auto [rows, n] = unram_rows(d);
  (void)n;
  return rat(rows[0].num, rows[0].den) / local_mass(d, p);
}

Rational ramified_density(int d, i64 p) {
  check_degree(d);
  check_prime_positive(p);
  return ram_mass_numerator(d, p) / local_mass(d, p);
}

std::pair<Rational, Rational> cubic_ramified_split(i64 p) {
  check_prime_positive(p);
  const Rational mass = local_mass(3, p);
  return {rat(1, p) / mass, rat(1, p * p) / mass};
}

Rational nu_quartic(i64 p) {
  check_prime_positive(p);
  // nu(p) = p^-2 + 2p^-3 + 2p^-4 - 3p^-5 - 4p^-6 - p^-7
  //         + 3p^-8 + 3p^-9 - p^-10 - p^-11
  static const long coeff[] = {1, 2, 2, -3, -4, -1, 3, 3, -1, -1};  // p^-2..p^-11
  Rational nu = 0;
  Rational qk = rat(1, p) * rat(1, p);
  const Rational q = rat(1, p);
  for (long c : coeff) {
    nu += c * qk;
    qk *= q;
  }
  return nu;
}

Rational nu_quintic(i64 p) {
  check_prime_positive(p);
  // 1 - (p-1)^8 p^12 (p+1)^4 (p^2+1)^2 (p^2+p+1)^2
  //       (p^4+p^3+p^2+p+1) (p^4+p^3+2p^2+2p+1) / p^40
  const Int P(static_cast<long>(p));
  auto ipow = [](Int base, int e) {
    Int r(1);
    while (e-- > 0) r *= base;
    return r;
  };
  const Int p2 = P * P, p3 = p2 * P, p4 = p3 * P;
  Int num = ipow(P - 1, 8) * ipow(P, 12) * ipow(P + 1, 4) *
            ipow(p2 + 1, 2) * ipow(p2 + P + 1, 2) * (p4 + p3 + p2 + P + 1) *
            (p4 + p3 + 2 * p2 + 2 * P + 1);
  return Rational(1) - rat(num, ipow(P, 40));
}

i64 ell_threshold(int d) {
  check_degree(d);
  switch (d) {
    case 2:
    case 3: return 1;
    case 4: return 8;
    default: return 25;
  }
}

Rational delta0(int d) {
  check_degree(d);
  switch (d) {
    case 2: return rat(1, 6);
    case 3: return rat(2, 25);
    case 4: return rat(1, 48);
    default: return rat(1, 200);
  }
}

CountingExponents counting_exponents(int d) {
  check_degree(d);
  switch (d) {
    case 2: return {rat(1, 2), rat(1), {}};
    case 3: return {rat(7, 9), rat(8, 9), {rat(1, 4)}};
    case 4: return {rat(23, 24), rat(1, 2), {}};
    default:
      // Secondary error X^gamma with gamma = 199/200 caps delta_0 at 1-gamma.
      return {rat(79, 80), rat(1, 2), {rat(1, 200)}};
  }
}

Rational delta0_from_exponents(const CountingExponents& ce) {
  Rational best = (Rational(1) - ce.tau) / (Rational(1) + 2 * ce.sigma);
  for (const auto& cap : ce.caps) best = std::min(best, cap);
  return best;
}

std::pair<Rational, Rational> u_window(int d) {
  check_degree(d);
  switch (d) {
    case 2: return {rat(1, 3), rat(1, 2)};
    case 3: return {rat(2, 21), rat(1, 6)};
    case 4: return {rat(1, 51), rat(1, 24)};
    default: return {rat(2, 555), rat(1, 120)};
  }
}

std::string densities_csv(const std::vector<int>& degrees,
                          const std::vector<i64>& primes) {
  std::ostringstream out;
  out << "degree,p,type,density,density_decimal\n";
  for (int d : degrees)
    for (i64 p : primes)
      for (const auto& row : local_densities(d, p))
        out << d << ',' << p << ',' << row.type << ',' << rat_str(row.density)
            << ',' << rat_double(row.density) << '\n';
  return out.str();
}

}  // namespace classieve
