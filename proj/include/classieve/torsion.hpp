#pragma once
// ell-torsion statistics in class groups of degree-d fields (d = 2..5).
//
// The bounding mechanism (Ellenberg--Venkatesh): if M unramified rational
// primes of norm <= D^delta split completely in K (and do not arise from a
// proper subfield), with delta < 1/(2 ell (d-1)), then
//   |Cl_K[ell]| << D^{1/2+eps} / M.
// The Chebyshev sieve supplies the primes for all but O(X^{1-delta0(d)+eps})
// fields, so with delta*(d, ell) = min{ 1/(2 ell (d-1)), delta0(d) }:
//   * pointwise: all but O(X^{1-delta*+eps}) fields with D_K <= X have
//     |Cl_K[ell]| << D_K^{1/2-delta*+eps};
//   * averaged (summing dyadically): sum |Cl_K[ell]| << X^{3/2-delta*+eps}.
// All exponents are exact rationals here; fitted constants are outputs.
//
// Measured side: split_profile counts totally split primes per field on the
// exact censuses (real quadratic, totally real cubic), bad_set counts the
// fields below a threshold, and average_torsion reproduces the
// Davenport--Heilbronn average  sum_{|D|<=X} #Cl_D[3] = (6/pi^2) X + o(X)
// over imaginary quadratic fields.

#include <string>
#include <vector>

#include "classieve/arith.hpp"
#include "classieve/cubic.hpp"
#include "classieve/quadratic.hpp"
#include "classieve/rational.hpp"

namespace classieve {

// ------------------------------------------------------------------ exponents

// delta*(d, ell) = min{ 1/(2 ell (d-1)), delta0(degree) }; d in 2..5, ell>=1.
Rational torsion_delta_star(int degree, i64 ell);

struct ExponentRow {
  int degree = 0;
  i64 ell = 0;
  Rational delta_star;   // min{1/(2 ell (d-1)), delta0(d)}
  Rational pointwise;    // 1/2 - delta*: exponent of D_K outside exceptions
  Rational exceptional;  // 1   - delta*: exponent of X counting exceptions
  Rational average;      // 3/2 - delta*: exponent of X in the summed bound
};
ExponentRow exponent_row(int degree, i64 ell);

// Rows ell = 1..ell_max for one degree.
std::vector<ExponentRow> exponent_table(int degree, i64 ell_max);

// CSV "degree,ell,delta_star,pointwise,exceptional,average", exact entries.
std::string exponent_table_csv(const std::vector<ExponentRow>& rows);

// Averaged bound with caller-chosen constraints: exponent 3/2 - min{d1, d2}
// and the dyadic breakdown behind it (ranges (2^{j-1}, 2^j] up to X, each
// contributing << 2^{j * exponent}).
struct DyadicRange {
  int j = 0;
  double lo = 0, hi = 0;     // dyadic window (lo, hi]
  double contribution = 0;   // 2^{j * exponent}
};
struct DyadicBound {
  int degree = 0;
  i64 ell = 0;
  Rational delta1, delta2;  // typically 1/(2 ell (d-1)) and delta0(d)
  Rational delta_star;      // min{delta1, delta2}
  Rational exponent;        // 3/2 - delta_star
  std::vector<DyadicRange> ranges;
  double total = 0;  // sum of contributions ~ X^{exponent} up to constants
};
DyadicBound dyadic_average_bound(int degree, i64 ell, const Rational& delta1,
                                 const Rational& delta2, i64 X);

// --------------------------------------------------------- per-field profiles

struct SplitPrimeProfile {
  i64 id = 0;    // index into the census
  i64 disc = 0;  // discriminant (cubic discs may repeat; id is the key)
  i64 Y = 0;     // prime bound
  i64 N = 0;     // #{p <= Y totally split}
};
std::vector<SplitPrimeProfile> split_profile(const QuadraticCensus& census,
                                             i64 Y);
std::vector<SplitPrimeProfile> split_profile(const CubicCensus& census, i64 Y);

// #{fields : N(K;Y) <= M}. M < 0 gives 0; M >= pi(Y) gives all of them.
i64 bad_set(const std::vector<SplitPrimeProfile>& profiles, const Rational& M);

struct BadSetReport {
  int degree = 0;  // 2 = real quadratic, 3 = totally real cubic
  i64 X = 0;
  double Y = 0;             // prime bound z = (X/2)^{delta0(degree)}
  std::vector<i64> primes;  // sieving primes <= Y (may be empty)
  i64 n_fields = 0;
  Rational mean;        // empirical mean of N(K;Y) over the family
  Rational threshold;   // bad-set cutoff M = mean/2
  i64 count = 0;        // #{K : N(K;Y) <= threshold}
  double fraction = 0;  // count / n_fields
  double m_ratio = 0;   // mean / (Y/log Y): brackets the c0(d)..c1(d) fit
};
// Family at the lemma's own parameters: Y = (X/2)^{delta0}, M = mean/2.
BadSetReport bad_set_report(int degree, i64 X);
BadSetReport bad_set_report(const QuadraticCensus& census);
BadSetReport bad_set_report(const CubicCensus& census);

// --------------------------------------------------------------- field bounds

// |Cl_K[ell]| <= C * D^{1/2+eps} / M, valid when delta < 1/(2 ell (d-1))
// and M >= 1 primes of norm <= D^delta split completely.
struct TorsionBound {
  double D = 0;
  int degree = 0;
  i64 ell = 0;
  double delta = 0, epsilon = 0;
  i64 M = 0;
  double C = 1;
  bool delta_ok = false;  // delta < 1/(2 ell (d-1))
  bool defined = false;   // M >= 1
  double bound = 0;       // C * D^{1/2+eps} / M when defined
};
TorsionBound ev_bound(double D, int degree, i64 ell, double delta, i64 M,
                      double epsilon = 0.05, double C = 1.0);

// ------------------------------------------------------------------- averages

struct TorsionAverage {
  i64 X = 0;  // discriminant bound of the family
  i64 ell = 0;
  i64 n_fields = 0;
  i64 sum_torsion = 0;   // sum over fields of #Cl_D[ell]
  double ratio_x = 0;    // sum_torsion / X
  double per_field = 0;  // sum_torsion / n_fields
  double dh_limit = 0;   // 6/pi^2 for imaginary ell = 3, else 0
};
// Sum of torsion_count over a quadratic census (even ell + real sign throws,
// as in classgroup). Fine for modest X or real sign.
TorsionAverage average_torsion(const QuadraticCensus& census, i64 ell);
// Fast bulk path over imaginary fundamental |D| <= X (block-parallel).
TorsionAverage average_torsion_imaginary(i64 X, i64 ell);

// Consistency scan of the Ellenberg--Venkatesh inequality over imaginary
// quadratics with ell = 3: among fields with N(K; D^delta) >= 1, the ratio
// #Cl_D[3] * N(K; D^delta) / D^{1/2+0.05} must admit a finite fitted
// constant (its max), with a stable 99th percentile across scales.
// One sweep also accumulates the ell = 3 average (n_fields, sum_h3).
struct EVScanRow {
  i64 D = 0;
  i64 h3 = 0;      // #Cl_D[3]
  i64 nsplit = 0;  // N(K; |D|^delta)
  double ratio = 0;
};
struct EVScan {
  i64 X = 0;
  double delta = 0.12;    // requires delta < 1/(2*3*(2-1)) = 1/6
  i64 n_fields = 0;       // all imaginary fundamental |D| <= X
  i64 sum_h3 = 0;         // sum of #Cl_D[3] over the whole family
  i64 n_with_split = 0;   // fields with N(K; D^delta) >= 1
  double max_ratio = 0;   // fitted constant
  double p99 = 0;         // 99th percentile of the ratio
  std::vector<EVScanRow> rows;  // per-field detail when requested
};
EVScan ev_consistency_scan(i64 X, double delta = 0.12, bool keep_rows = false);

}  // namespace classieve
