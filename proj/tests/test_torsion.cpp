#include "doctest.h"

#include <cmath>
#include <numbers>

#include "classieve/densities.hpp"
#include "classieve/torsion.hpp"

using namespace classieve;

TEST_SUITE("torsion") {
  TEST_CASE("delta* = min{1/(2 ell (d-1)), delta0(d)}") {
    for (int d = 2; d <= 5; ++d)
      for (i64 ell = 2; ell <= 30; ++ell) {
        const Rational direct = torsion_delta_star(d, ell);
        const Rational a = rat(1, 2 * ell * (d - 1));
        const Rational b = delta0(d);
        CHECK(direct == (a < b ? a : b));
      }
    // The threshold where the generic term takes over is ell(d).
    CHECK(torsion_delta_star(4, 8) == rat(1, 48));
    CHECK(torsion_delta_star(4, 7) == rat(1, 48));   // still the cap
    CHECK(torsion_delta_star(4, 9) == rat(1, 54));   // now the generic term
    CHECK(torsion_delta_star(5, 25) == rat(1, 200));
    CHECK(torsion_delta_star(5, 26) == rat(1, 208));
  }

  TEST_CASE("exponent rows: pointwise, exceptional, average") {
    const auto row = exponent_row(2, 3);
    CHECK(row.delta_star == rat(1, 6));
    CHECK(row.pointwise == rat(1, 2) - rat(1, 6));
    CHECK(row.exceptional == rat(1) - rat(1, 6));
    CHECK(row.average == rat(3, 2) - rat(1, 6));
    const auto table = exponent_table(3, 10);
    REQUIRE(table.size() == 10);  // ell = 1..10
    CHECK(table.front().ell == 1);
    CHECK(table.back().ell == 10);
    for (const auto& r : table) {
      CHECK(r.average == rat(3, 2) - r.delta_star);
      CHECK(r.pointwise + rat(1) == r.exceptional + rat(1, 2));
    }
    const auto csv = exponent_table_csv(exponent_table(3, 4));
    CHECK(csv.find("degree,ell,delta_star,pointwise,exceptional,average") == 0);
  }

  TEST_CASE("dyadic average bound: the pinned 11/8 example") {
    // d = 2, ell = 4: the average over a dyadic block obeys the exponent
    // 3/2 - min{1/8, 1/6} = 11/8; blocks are summed up to X.
    const auto b = dyadic_average_bound(2, 4, rat(1, 8), rat(1, 6), 1 << 20);
    CHECK(b.delta_star == rat(1, 8));
    CHECK(b.exponent == rat(11, 8));
    double total = 0;
    for (const auto& r : b.ranges) {
      CHECK(r.hi == 2 * r.lo);  // exact powers of two
      total += r.contribution;
    }
    CHECK(b.total == doctest::Approx(total));
    const auto smaller = dyadic_average_bound(2, 4, rat(1, 8), rat(1, 6), 1 << 10);
    CHECK(smaller.total < b.total);
    CHECK(smaller.ranges.size() < b.ranges.size());
  }

  TEST_CASE("split profiles: hand-checked counts below 10") {
    const auto census = enumerate_quadratic(10, SignClass::imaginary);
    const auto profiles = split_profile(census, 10);
    REQUIRE(profiles.size() == census.D.size());
    for (const auto& pr : profiles) {
      CHECK(pr.Y == 10);
      if (pr.disc == -3) CHECK(pr.N == 1);  // only 7 = (2+w)(2+w^bar)
      if (pr.disc == -4) CHECK(pr.N == 1);  // only 5 = (2+i)(2-i)
      if (pr.disc == -7) CHECK(pr.N == 1);  // only 2 (since -7 = 1 mod 8)
      if (pr.disc == -8) CHECK(pr.N == 1);  // only 3 = (1+sqrt(-2))(1-sqrt(-2))
    }
  }

  TEST_CASE("bad set counting against an explicit threshold") {
    const auto census = enumerate_quadratic(100, SignClass::real);
    const auto profiles = split_profile(census, 50);
    CHECK(bad_set(profiles, rat(-1)) == 0);
    CHECK(bad_set(profiles, rat(1000)) ==
          static_cast<i64>(profiles.size()));
    // Threshold 0 counts exactly the fields with no split prime at all.
    i64 none = 0;
    for (const auto& pr : profiles)
      if (pr.N == 0) ++none;
    CHECK(bad_set(profiles, rat(0)) == none);
  }

  TEST_CASE("bad-set report wiring") {
    const auto rep = bad_set_report(2, 10000);
    CHECK(rep.degree == 2);
    CHECK(rep.X == 10000);
    CHECK(rep.n_fields > 1000);
    CHECK(rep.count >= 0);
    CHECK(rep.fraction ==
          doctest::Approx(static_cast<double>(rep.count) /
                          static_cast<double>(rep.n_fields)));
    CHECK(rep.m_ratio > 0);
  }

  TEST_CASE("EV bound closed form") {
    // M = 1, C = 1, eps = 0: bound is exactly D^(1/2).
    const auto b = ev_bound(10000.0, 2, 3, 0.125, 1, 0.0, 1.0);
    CHECK(b.defined);
    CHECK(b.bound == doctest::Approx(100.0));
    CHECK(b.delta_ok);
    // More split primes push the bound down linearly.
    const auto b5 = ev_bound(10000.0, 2, 3, 0.125, 5, 0.0, 1.0);
    CHECK(b5.bound == doctest::Approx(20.0));
    const auto undef = ev_bound(10000.0, 2, 3, 0.125, 0, 0.0, 1.0);
    CHECK(!undef.defined);
    const auto bigdelta = ev_bound(10000.0, 2, 3, 0.5, 1, 0.0, 1.0);
    CHECK(!bigdelta.delta_ok);  // delta >= 1/(2 ell (d-1)) = 1/6
  }

  TEST_CASE("average 3-torsion: exact small sums") {
    // X = 4: fields -3, -4, both with h = 1, so sum = 2 and per-field = 1.
    const auto a4 = average_torsion_imaginary(4, 3);
    CHECK(a4.n_fields == 2);
    CHECK(a4.sum_torsion == 2);
    CHECK(a4.per_field == doctest::Approx(1.0));
    CHECK(a4.ratio_x == doctest::Approx(0.5));
    // X = 23: eight fields with trivial 3-torsion plus Cl(-23) = Z/3.
    const auto a23 = average_torsion_imaginary(23, 3);
    CHECK(a23.n_fields == 9);
    CHECK(a23.sum_torsion == 11);
    CHECK(a23.dh_limit ==
          doctest::Approx(6.0 / (std::numbers::pi * std::numbers::pi)));
  }

  TEST_CASE("average torsion via census overload matches the direct sweep") {
    const auto census = enumerate_quadratic(4000, SignClass::imaginary);
    const auto via_census = average_torsion(census, 3);
    const auto direct = average_torsion_imaginary(4000, 3);
    CHECK(via_census.sum_torsion == direct.sum_torsion);
    CHECK(via_census.n_fields == direct.n_fields);
  }

  TEST_CASE("EV-consistency scan at X = 10^4") {
    const auto scan = ev_consistency_scan(10000, 0.12, true);
    CHECK(scan.n_fields == 3043);
    CHECK(scan.sum_h3 == average_torsion_imaginary(10000, 3).sum_torsion);
    CHECK(scan.max_ratio < 1.0);
    CHECK(scan.p99 <= scan.max_ratio);
    CHECK(scan.rows.size() == static_cast<size_t>(scan.n_fields));
    i64 with_split = 0;
    for (const auto& r : scan.rows)
      if (r.nsplit >= 1) ++with_split;
    CHECK(with_split == scan.n_with_split);
    CHECK_THROWS(ev_consistency_scan(10000, 0.5, false));  // delta >= 1/6
  }
}
