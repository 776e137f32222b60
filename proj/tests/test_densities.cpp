#include "doctest.h"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "classieve/arith.hpp"
#include "classieve/densities.hpp"

using namespace classieve;

TEST_SUITE("densities") {
  TEST_CASE("local masses at p = 2") {
    CHECK(local_mass(2, 2) == rat(3, 2));
    CHECK(local_mass(3, 2) == rat(7, 4));
    CHECK(local_mass(4, 2) == rat(17, 8));   // 1 + 1/2 + 2/4 + 1/8
    CHECK(local_mass(5, 2) == rat(37, 16));  // 1 + 1/2 + 2/4 + 2/8 + 1/16
  }

  TEST_CASE("rows sum to one exactly for every degree and p <= 1000") {
    const auto table = primes_up_to(1000);
    for (int d = 2; d <= 5; ++d)
      for (i64 p : table.primes) {
        Rational sum = rat(0);
        for (const auto& row : local_densities(d, p)) {
          CHECK(row.density > rat(0));
          sum += row.density;
        }
        CHECK_MESSAGE(sum == rat(1), "d = ", d, " p = ", p);
      }
  }

  TEST_CASE("pinned split densities") {
    // degree 2: split = inert = p/(2(p+1)); ramified = 1/(p+1)
    CHECK(split_density(2, 2) == rat(1, 3));
    CHECK(ramified_density(2, 2) == rat(1, 3));
    CHECK(split_density(2, 5) == rat(5, 12));
    // degree 3: completely split = (1/6)/(1 + 1/p + 1/p^2)
    CHECK(split_density(3, 2) == rat(2, 21));
    CHECK(split_density(3, 3) == rat(9, 78));
    // degree 3 ramified total mass = (1/p + 1/p^2)/mass... pinned at p = 2:
    CHECK(ramified_density(3, 2) == rat(3, 7));
    const auto [partial, total] = cubic_ramified_split(2);
    CHECK(partial + total == ramified_density(3, 2));
    CHECK(partial > rat(0));
    CHECK(total > rat(0));
  }

  TEST_CASE("row multiplicities follow the cycle-index counts") {
    // Unramified rows for degree d are indexed by partitions of d; the
    // density of pattern with k parts scales like 1/|centralizer|.
    for (i64 p : {2, 3, 101}) {
      const auto rows = local_densities(3, p);
      Rational s111 = 0, s12 = 0, s3 = 0;
      for (const auto& row : rows) {
        if (row.type == "111") s111 = row.density;
        if (row.type == "12") s12 = row.density;
        if (row.type == "3") s3 = row.density;
      }
      CHECK(s12 == 3 * s111);  // |C(S3 transposition)| vs |C(identity)|
      CHECK(s3 == 2 * s111);
    }
  }

  TEST_CASE("quartic and quintic nu: positive, and p^2 nu -> 1") {
    const auto table = primes_up_to(2000);
    for (i64 p : table.primes) {
      const Rational n4 = nu_quartic(p);
      const Rational n5 = nu_quintic(p);
      CHECK(n4 > rat(0));
      CHECK(n5 > rat(0));
      if (p >= 50) {
        const double s4 = rat_double(rat(p) * p * n4);
        const double s5 = rat_double(rat(p) * p * n5);
        CHECK(std::abs(s4 - 1.0) < 10.0 / static_cast<double>(p));
        CHECK(std::abs(s5 - 1.0) < 10.0 / static_cast<double>(p));
      }
    }
  }

  TEST_CASE("ell thresholds and delta0") {
    CHECK(ell_threshold(2) == 1);
    CHECK(ell_threshold(3) == 1);
    CHECK(ell_threshold(4) == 8);
    CHECK(ell_threshold(5) == 25);
    CHECK(delta0(2) == rat(1, 6));
    CHECK(delta0(3) == rat(2, 25));
    CHECK(delta0(4) == rat(1, 48));
    CHECK(delta0(5) == rat(1, 200));
  }

  TEST_CASE("delta0 is recovered from the counting exponents") {
    for (int d = 2; d <= 5; ++d) {
      const auto ce = counting_exponents(d);
      CHECK(delta0_from_exponents(ce) == delta0(d));
    }
    // Pinned exponents.
    CHECK(counting_exponents(2).tau == rat(1, 2));
    CHECK(counting_exponents(2).sigma == rat(1));
    CHECK(counting_exponents(3).tau == rat(7, 9));
    CHECK(counting_exponents(3).sigma == rat(8, 9));
    CHECK(counting_exponents(4).tau == rat(23, 24));
    CHECK(counting_exponents(4).sigma == rat(1, 2));
    CHECK(counting_exponents(5).tau == rat(79, 80));
    CHECK(counting_exponents(5).sigma == rat(1, 2));
  }

  TEST_CASE("U(z) windows") {
    CHECK(u_window(2) == std::pair<Rational, Rational>(rat(1, 3), rat(1, 2)));
    CHECK(u_window(3) == std::pair<Rational, Rational>(rat(2, 21), rat(1, 6)));
    CHECK(u_window(4) == std::pair<Rational, Rational>(rat(1, 51), rat(1, 24)));
    CHECK(u_window(5) ==
          std::pair<Rational, Rational>(rat(2, 555), rat(1, 120)));
  }

  TEST_CASE("CSV export has one row per (degree, prime, type)") {
    const auto csv = densities_csv({2, 3}, {2, 3});
    // header + degree 2 (3 types x 2 primes) + degree 3 (4 types x 2 primes)
    size_t lines = 0;
    for (char c : csv)
      if (c == '\n') ++lines;
    CHECK(lines == 1 + 6 + 8);
    CHECK(csv.find("degree,p,type,density,density_decimal") == 0);
  }
}
