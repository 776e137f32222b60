#include "doctest.h"

#include <vector>

#include "classieve/arith.hpp"
#include "classieve/quadratic.hpp"

using namespace classieve;

namespace {

// Brute-force census: walk every |D| <= X and keep fundamental discriminants.
std::vector<i64> census_brute(i64 X, SignClass sign) {
  std::vector<i64> out;
  for (i64 a = 1; a <= X; ++a) {
    if (sign != SignClass::real && is_fundamental_discriminant(-a))
      out.push_back(-a);
    if (sign != SignClass::imaginary && is_fundamental_discriminant(a))
      out.push_back(a);
  }
  return out;
}

}  // namespace

TEST_SUITE("quadratic") {
  TEST_CASE("census at X = 8 is exactly the textbook list") {
    CHECK(enumerate_quadratic(8, SignClass::imaginary).D ==
          std::vector<i64>{-3, -4, -7, -8});
    CHECK(enumerate_quadratic(8, SignClass::real).D == std::vector<i64>{5, 8});
    CHECK(enumerate_quadratic(8, SignClass::both).D ==
          std::vector<i64>{-3, -4, 5, -7, -8, 8});
  }

  TEST_CASE("census matches the brute-force definition at X = 10^4") {
    for (SignClass sign :
         {SignClass::imaginary, SignClass::real, SignClass::both}) {
      const auto brute = census_brute(10000, sign);
      CHECK(enumerate_quadratic(10000, sign).D == brute);
      CHECK(enumerate_quadratic_serial(10000, sign).D == brute);
    }
  }

  TEST_CASE("parallel and serial censuses agree across chunk boundaries") {
    for (i64 X : {1, 2, 3, 4, 1023, 1024, 1025, 65536}) {
      CHECK(enumerate_quadratic(X, SignClass::both).D ==
            enumerate_quadratic_serial(X, SignClass::both).D);
    }
  }

  TEST_CASE("census size at X = 1000 (both signs) is 607") {
    CHECK(enumerate_quadratic(1000, SignClass::both).D.size() == 607);
  }

  TEST_CASE("splitting type is the kronecker symbol") {
    const auto census = enumerate_quadratic(500, SignClass::both);
    for (i64 D : census.D)
      for (i64 p : {2, 3, 5, 7, 11}) {
        const int k = kronecker(D, p);
        const QSplit expect = (k == 1)    ? QSplit::split
                              : (k == -1) ? QSplit::inert
                                          : QSplit::ramified;
        CHECK(splitting_type_quadratic(D, p) == expect);
      }
    CHECK_THROWS(splitting_type_quadratic(-3, 4));  // 4 not prime
    CHECK_THROWS(splitting_type_quadratic(18, 5));  // 18 not fundamental
  }

  TEST_CASE("local density values") {
    CHECK(density_prediction_quadratic({2, QSplit::split}) == rat(1, 3));
    CHECK(density_prediction_quadratic({3, QSplit::split}) == rat(3, 8));
    CHECK(density_prediction_quadratic({3, QSplit::inert}) == rat(3, 8));
    CHECK(density_prediction_quadratic({3, QSplit::ramified}) == rat(1, 4));
    CHECK(density_prediction_quadratic(
              std::vector<PrimeCondition>{{2, QSplit::split},
                                          {3, QSplit::ramified}}) ==
          rat(1, 12));
  }

  TEST_CASE("direct and inclusion-exclusion counts agree exactly") {
    const std::vector<std::vector<PrimeCondition>> sets = {
        {},
        {{2, QSplit::split}},
        {{2, QSplit::ramified}},
        {{3, QSplit::inert}},
        {{5, QSplit::ramified}},
        {{2, QSplit::split}, {3, QSplit::split}},
        {{3, QSplit::ramified}, {7, QSplit::inert}},
        {{11, QSplit::split}, {13, QSplit::ramified}},
    };
    for (i64 X : {100, 1000, 20000}) {
      for (SignClass sign : {SignClass::imaginary, SignClass::real}) {
        const auto census = enumerate_quadratic(X, sign);
        for (const auto& conds : sets) {
          const i64 direct = count_with_conditions_direct(census, conds);
          const i64 sieve = count_with_conditions_sieve(X, sign, conds);
          CHECK_MESSAGE(direct == sieve, "X = ", X,
                        " sign = ", static_cast<int>(sign),
                        " #conds = ", conds.size());
        }
      }
    }
  }

  TEST_CASE("duplicate primes in a condition set are rejected") {
    const auto census = enumerate_quadratic(100, SignClass::imaginary);
    const std::vector<PrimeCondition> dup = {{3, QSplit::split},
                                             {3, QSplit::inert}};
    CHECK_THROWS(count_with_conditions_direct(census, dup));
    CHECK_THROWS(count_with_conditions_sieve(100, SignClass::imaginary, dup));
  }

  TEST_CASE("observed frequency approaches the local density") {
    const i64 X = 100000;
    const auto census = enumerate_quadratic(X, SignClass::imaginary);
    const std::vector<PrimeCondition> conds = {{3, QSplit::split}};
    const double freq =
        static_cast<double>(count_with_conditions_direct(census, conds)) /
        static_cast<double>(census.D.size());
    const double delta = rat_double(density_prediction_quadratic(conds));
    CHECK(freq == doctest::Approx(delta).epsilon(0.02));
  }

  TEST_CASE("CSV export shape") {
    const auto csv = census_to_csv(enumerate_quadratic(8, SignClass::real));
    CHECK(csv == "D,sign\n5,real\n8,real\n");
  }
}
