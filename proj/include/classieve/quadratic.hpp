#pragma once
// Census of fundamental quadratic discriminants and two independent ways of
// counting them under local splitting conditions:
//   * a direct scan of the census, and
//   * an inclusion-exclusion count over arithmetic progressions (the
//     square-sieve construction), which never touches the census.
// Their exact agreement is one of the acceptance gates.

#include <string>
#include <vector>

#include "classieve/arith.hpp"
#include "classieve/rational.hpp"

namespace classieve {

enum class SignClass { real = 0, imaginary = 1, both = 2 };

enum class QSplit { split, inert, ramified };

struct QuadraticCensus {
  i64 X = 0;
  SignClass sign = SignClass::both;
  std::vector<i64> D;  // sorted by |D|; negative before positive on |D| ties
};

// Splitting of p in Q(sqrt(D)) for fundamental D: (D/p) = +1 split, -1 inert,
// 0 ramified. Throws if p is not prime or D is not fundamental.
QSplit splitting_type_quadratic(i64 D, i64 p);

// All fundamental discriminants with |D| <= X of the given sign.
// The parallel version chunk-sieves [1, X] with OpenMP; the serial version is
// the reference implementation. Identical output guaranteed (and tested).
QuadraticCensus enumerate_quadratic(i64 X, SignClass sign);
QuadraticCensus enumerate_quadratic_serial(i64 X, SignClass sign);

struct PrimeCondition {
  i64 p = 2;
  QSplit type = QSplit::split;
};

// Exact local density delta_p of one splitting condition among fundamental
// discriminants: split = inert = p/(2(p+1)), ramified = 1/(p+1).
Rational density_prediction_quadratic(const PrimeCondition& cond);

// Product over a set of conditions at distinct primes.
Rational density_prediction_quadratic(const std::vector<PrimeCondition>& conds);

// Route 1: filter the census (validates distinct primes).
i64 count_with_conditions_direct(const QuadraticCensus& census,
                                 const std::vector<PrimeCondition>& conds);

// Route 2: inclusion-exclusion over odd squares + CRT/AP counting; exact and
// census-free. sign = both sums the two single-sign counts.
i64 count_with_conditions_sieve(i64 X, SignClass sign,
                                const std::vector<PrimeCondition>& conds);

// Analytic main term delta_P * X/(2 zeta(2)) per sign (doubled for both).
// Reporting aid only; zeta(2) = pi^2/6 makes this inherently non-exact.
double quadratic_main_term(i64 X, SignClass sign,
                           const std::vector<PrimeCondition>& conds);

// CSV export: header "D,sign", one row per discriminant.
std::string census_to_csv(const QuadraticCensus& census);

}  // namespace classieve
