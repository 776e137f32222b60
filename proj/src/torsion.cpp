#include "classieve/torsion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "classieve/classgroup.hpp"
#include "classieve/densities.hpp"
#include "classieve/sieve.hpp"

namespace classieve {

// ------------------------------------------------------------------ exponents

Rational torsion_delta_star(int degree, i64 ell) {
  if (ell < 1) throw std::invalid_argument("torsion_delta_star: ell < 1");
  const Rational d0 = delta0(degree);  // validates degree
  const Rational lemma = rat(1, 2 * ell * (degree - 1));
  return std::min(lemma, d0);
}

ExponentRow exponent_row(int degree, i64 ell) {
  ExponentRow r;
  r.degree = degree;
  r.ell = ell;
  r.delta_star = torsion_delta_star(degree, ell);
  r.pointwise = rat(1, 2) - r.delta_star;
  r.exceptional = rat(1) - r.delta_star;
  r.average = rat(3, 2) - r.delta_star;
  return r;
}

std::vector<ExponentRow> exponent_table(int degree, i64 ell_max) {
  if (ell_max < 1) throw std::invalid_argument("exponent_table: ell_max < 1");
  std::vector<ExponentRow> rows;
  rows.reserve(static_cast<size_t>(ell_max));
  for (i64 ell = 1; ell <= ell_max; ++ell)
    rows.push_back(exponent_row(degree, ell));
  return rows;
}

std::string exponent_table_csv(const std::vector<ExponentRow>& rows) {
  std::ostringstream os;
  os << "degree,ell,delta_star,pointwise,exceptional,average\n";
  for (const auto& r : rows)
    os << r.degree << ',' << r.ell << ',' << rat_str(r.delta_star) << ','
       << rat_str(r.pointwise) << ',' << rat_str(r.exceptional) << ','
       << rat_str(r.average) << '\n';
  return os.str();
}

DyadicBound dyadic_average_bound(int degree, i64 ell, const Rational& delta1,
                                 const Rational& delta2, i64 X) {
  if (X < 1) throw std::invalid_argument("dyadic_average_bound: X < 1");
  DyadicBound out;
  out.degree = degree;
  out.ell = ell;
  out.delta1 = delta1;
  out.delta2 = delta2;
  out.delta_star = std::min(delta1, delta2);
  out.exponent = rat(3, 2) - out.delta_star;
  const double e = rat_double(out.exponent);
  int jmax = 0;
  while ((i64{1} << (jmax + 1)) < X) ++jmax;  // 2^jmax < X <= 2^{jmax+1}
  for (int j = 0; j <= jmax; ++j) {
    DyadicRange r;
    r.j = j;
    r.lo = std::ldexp(1.0, j);
    r.hi = std::ldexp(1.0, j + 1);
    r.contribution = std::pow(2.0, e * j);
    out.total += r.contribution;
    out.ranges.push_back(r);
  }
  return out;
}

// --------------------------------------------------------- per-field profiles

std::vector<SplitPrimeProfile> split_profile(const QuadraticCensus& census,
                                             i64 Y) {
  const auto primes = Y >= 2 ? primes_up_to(Y).primes : std::vector<i64>{};
  std::vector<SplitPrimeProfile> out;
  out.reserve(census.D.size());
  for (size_t i = 0; i < census.D.size(); ++i) {
    SplitPrimeProfile pr;
    pr.id = static_cast<i64>(i);
    pr.disc = census.D[i];
    pr.Y = Y;
    for (i64 p : primes) pr.N += (kronecker(census.D[i], p) == 1) ? 1 : 0;
    out.push_back(pr);
  }
  return out;
}

std::vector<SplitPrimeProfile> split_profile(const CubicCensus& census,
                                             i64 Y) {
  const auto primes = Y >= 2 ? primes_up_to(Y).primes : std::vector<i64>{};
  std::vector<SplitPrimeProfile> out;
  out.reserve(census.fields.size());
  for (size_t i = 0; i < census.fields.size(); ++i) {
    SplitPrimeProfile pr;
    pr.id = static_cast<i64>(i);
    pr.disc = census.fields[i].disc;
    pr.Y = Y;
    for (i64 p : primes)
      pr.N += (cubic_splitting(census.fields[i].f, p) == CSplit::s111) ? 1 : 0;
    out.push_back(pr);
  }
  return out;
}

i64 bad_set(const std::vector<SplitPrimeProfile>& profiles,
            const Rational& M) {
  i64 count = 0;
  for (const auto& pr : profiles) count += (rat(pr.N) <= M) ? 1 : 0;
  return count;
}

namespace {

BadSetReport report_from_instance(int degree, i64 X,
                                  const SieveInstance& inst) {
  const SieveStats st = sieve_stats(inst);
  const Rational threshold = st.M / rat(2);
  const ExceptionalSet ex = exceptional_set(inst, threshold);
  BadSetReport rep;
  rep.degree = degree;
  rep.X = X;
  rep.Y = inst.z;
  rep.primes = inst.primes;
  rep.n_fields = inst.N;
  rep.mean = st.M;
  rep.threshold = threshold;
  rep.count = ex.E;
  rep.fraction = static_cast<double>(ex.E) / static_cast<double>(inst.N);
  rep.m_ratio =
      inst.z > 1.0 ? rat_double(st.M) / (inst.z / std::log(inst.z)) : 0.0;
  return rep;
}

}  // namespace

BadSetReport bad_set_report(const QuadraticCensus& census) {
  return report_from_instance(2, census.X,
                              quadratic_sieve_instance(census, delta0(2)));
}

BadSetReport bad_set_report(const CubicCensus& census) {
  return report_from_instance(3, census.X,
                              cubic_sieve_instance(census, delta0(3)));
}

BadSetReport bad_set_report(int degree, i64 X) {
  if (degree == 2)
    return bad_set_report(enumerate_quadratic(X, SignClass::real));
  if (degree == 3) return bad_set_report(enumerate_cubic(X, false));
  throw std::invalid_argument("bad_set_report: census only for degree 2, 3");
}

// --------------------------------------------------------------- field bounds

TorsionBound ev_bound(double D, int degree, i64 ell, double delta, i64 M,
                      double epsilon, double C) {
  if (degree < 2 || ell < 1)
    throw std::invalid_argument("ev_bound: need degree >= 2, ell >= 1");
  TorsionBound b;
  b.D = D;
  b.degree = degree;
  b.ell = ell;
  b.delta = delta;
  b.epsilon = epsilon;
  b.M = M;
  b.C = C;
  b.delta_ok =
      delta < 1.0 / (2.0 * static_cast<double>(ell) * (degree - 1));
  b.defined = M >= 1;
  b.bound = b.defined
                ? C * std::pow(D, 0.5 + epsilon) / static_cast<double>(M)
                : std::numeric_limits<double>::infinity();
  return b;
}

// ------------------------------------------------------------------- averages

namespace {

// #Cl_D[3] via one composition per class: f^3 = e  <=>  f*f = f^{-1}.
i64 three_torsion(const std::vector<QuadForm>& classes) {
  i64 t = 0;
  for (const auto& f : classes)
    t += (compose(f, f) == inverse_form(f)) ? 1 : 0;
  return t;
}

constexpr double kDHLimit = 6.0 / (std::numbers::pi * std::numbers::pi);

}  // namespace

TorsionAverage average_torsion(const QuadraticCensus& census, i64 ell) {
  if (ell < 1) throw std::invalid_argument("average_torsion: ell < 1");
  TorsionAverage out;
  out.X = census.X;
  out.ell = ell;
  out.n_fields = static_cast<i64>(census.D.size());
  for (i64 D : census.D) {
    const ClassGroup G = class_group(D);
    out.sum_torsion += torsion_count(G, ell);
  }
  out.ratio_x =
      static_cast<double>(out.sum_torsion) / static_cast<double>(census.X);
  out.per_field = out.n_fields > 0 ? static_cast<double>(out.sum_torsion) /
                                         static_cast<double>(out.n_fields)
                                   : 0.0;
  out.dh_limit =
      (ell == 3 && census.sign == SignClass::imaginary) ? kDHLimit : 0.0;
  return out;
}

TorsionAverage average_torsion_imaginary(i64 X, i64 ell) {
  if (X < 3) throw std::invalid_argument("average_torsion_imaginary: X < 3");
  if (ell < 1) throw std::invalid_argument("average_torsion_imaginary: ell");
  TorsionAverage out;
  out.X = X;
  out.ell = ell;
  i64 n = 0, sum = 0;
  for_each_imaginary_class_group(
      1, X, [&](i64 D, const std::vector<QuadForm>& classes) {
        ++n;
        if (ell == 3) {
          sum += three_torsion(classes);
        } else {
          const ClassGroup G{D, classes};
          sum += torsion_count(G, ell);
        }
      });
  out.n_fields = n;
  out.sum_torsion = sum;
  out.ratio_x = static_cast<double>(sum) / static_cast<double>(X);
  out.per_field =
      n > 0 ? static_cast<double>(sum) / static_cast<double>(n) : 0.0;
  out.dh_limit = ell == 3 ? kDHLimit : 0.0;
  return out;
}

EVScan ev_consistency_scan(i64 X, double delta, bool keep_rows) {
  if (X < 3) throw std::invalid_argument("ev_consistency_scan: X < 3");
  if (!(delta > 0) || !(delta < 1.0 / 6.0))
    throw std::invalid_argument(
        "ev_consistency_scan: need 0 < delta < 1/(2*3*(d-1)) = 1/6");
  EVScan scan;
  scan.X = X;
  scan.delta = delta;
  const auto primes =
      primes_up_to(static_cast<i64>(std::pow(static_cast<double>(X), delta)) +
                   1)
          .primes;
  std::vector<double> ratios;
  for_each_imaginary_class_group(
      1, X, [&](i64 D, const std::vector<QuadForm>& classes) {
        ++scan.n_fields;
        const i64 h3 = three_torsion(classes);
        scan.sum_h3 += h3;
        const double bound =
            std::pow(static_cast<double>(-D), delta);
        i64 nsplit = 0;
        for (i64 p : primes) {
          if (static_cast<double>(p) > bound) break;
          nsplit += (kronecker(D, p) == 1) ? 1 : 0;
        }
        double ratio = 0;
        if (nsplit >= 1) {
          ++scan.n_with_split;
          ratio = static_cast<double>(h3) * static_cast<double>(nsplit) /
                  std::pow(static_cast<double>(-D), 0.55);
          ratios.push_back(ratio);
        }
        if (keep_rows) scan.rows.push_back({D, h3, nsplit, ratio});
      });
  if (!ratios.empty()) {
    scan.max_ratio = *std::max_element(ratios.begin(), ratios.end());
    // p99 = smallest value with at least 99% of the sample at or below it.
    const size_t k = static_cast<size_t>(std::ceil(
                         0.99 * static_cast<double>(ratios.size()))) -
                     1;
    std::nth_element(ratios.begin(),
                     ratios.begin() + static_cast<std::ptrdiff_t>(k),
                     ratios.end());
    scan.p99 = ratios[k];
  }
  return scan;
}

}  // namespace classieve
