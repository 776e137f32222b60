#include "classieve/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "classieve/cubic.hpp"
#include "classieve/densities.hpp"
#include "json.hpp"

namespace classieve {

void validate_instance(const SieveInstance& inst) {
  if (inst.N <= 0) throw std::invalid_argument("sieve: empty family");
  const size_t P = inst.primes.size();
  if (inst.densities.size() != P || inst.member.size() != P)
    throw std::invalid_argument("sieve: primes/densities/member mismatch");
  for (size_t i = 0; i + 1 < P; ++i)
    if (inst.primes[i] >= inst.primes[i + 1])
      throw std::invalid_argument("sieve: primes not ascending");
  for (const auto& d : inst.densities)
    if (d < 0 || d >= 1)
      throw std::invalid_argument("sieve: density outside [0,1)");
  for (const auto& row : inst.member)
    if (static_cast<i64>(row.size()) != inst.N)
      throw std::invalid_argument("sieve: membership row size != N");
}

namespace {

SieveStats stats_impl(const SieveInstance& inst, bool parallel) {
  validate_instance(inst);
  const i64 N = inst.N;
  const int P = static_cast<int>(inst.primes.size());
  SieveStats st;
  st.N = N;
  st.primes = inst.primes;
  st.densities = inst.densities;
  st.count_p.assign(P, 0);
  st.count_pq.assign(P, std::vector<i64>(P, 0));

  // Pairwise intersection counts; the (i, j) cells are independent, so the
  // parallel kernel is deterministic.
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < P; ++i)
    for (int j = i; j < P; ++j) cells.push_back({i, j});
  const int C = static_cast<int>(cells.size());
#pragma omp parallel for schedule(static) if (parallel)
  for (int k = 0; k < C; ++k) {
    const auto [i, j] = cells[static_cast<size_t>(k)];
    const auto& mi = inst.member[static_cast<size_t>(i)];
    const auto& mj = inst.member[static_cast<size_t>(j)];
    i64 n = 0;
    for (i64 a = 0; a < N; ++a)
      if (mi[static_cast<size_t>(a)] && mj[static_cast<size_t>(a)]) ++n;
    st.count_pq[static_cast<size_t>(i)][static_cast<size_t>(j)] = n;
  }
  for (int i = 0; i < P; ++i) {
    st.count_p[static_cast<size_t>(i)] =
        st.count_pq[static_cast<size_t>(i)][static_cast<size_t>(i)];
    for (int j = 0; j < i; ++j)
      st.count_pq[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          st.count_pq[static_cast<size_t>(j)][static_cast<size_t>(i)];
  }

  st.R_p.resize(P);
  st.R_pq.assign(P, std::vector<Rational>(P));
  for (int i = 0; i < P; ++i) {
    st.R_p[static_cast<size_t>(i)] =
        rat(st.count_p[static_cast<size_t>(i)]) -
        inst.densities[static_cast<size_t>(i)] * N;
    for (int j = 0; j < P; ++j) {
      if (i == j)
        st.R_pq[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            st.R_p[static_cast<size_t>(i)];
      else
        st.R_pq[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            rat(st.count_pq[static_cast<size_t>(i)][static_cast<size_t>(j)]) -
            inst.densities[static_cast<size_t>(i)] *
                inst.densities[static_cast<size_t>(j)] * N;
    }
  }

  st.histogram.assign(P + 1, 0);
  i64 sum_w = 0, sum_w2 = 0;
  for (i64 a = 0; a < N; ++a) {
    int w = 0;
    for (int i = 0; i < P; ++i)
      if (inst.member[static_cast<size_t>(i)][static_cast<size_t>(a)]) ++w;
    ++st.histogram[static_cast<size_t>(w)];
    sum_w += w;
    sum_w2 += static_cast<i64>(w) * w;
  }

  st.U = 0;
  for (const auto& d : inst.densities) st.U += d;
  st.M = rat(sum_w, N);
  // (1/N) sum (w - M)^2 = (sum w^2)/N - M^2 because sum w = N M exactly.
  st.variance = rat(sum_w2, N) - st.M * st.M;
  return st;
}

}  // namespace

SieveStats sieve_stats(const SieveInstance& inst) {
  return stats_impl(inst, true);
}

SieveStats sieve_stats_serial(const SieveInstance& inst) {
  return stats_impl(inst, false);
}

ExceptionalSet exceptional_set(const SieveInstance& inst,
                               const Rational& threshold) {
  validate_instance(inst);
  ExceptionalSet ex;
  ex.threshold = threshold;
  const int P = static_cast<int>(inst.primes.size());
  for (i64 a = 0; a < inst.N; ++a) {
    int w = 0;
    for (int i = 0; i < P; ++i)
      if (inst.member[static_cast<size_t>(i)][static_cast<size_t>(a)]) ++w;
    if (rat(w) <= threshold) ex.members.push_back(a);
  }
  ex.E = static_cast<i64>(ex.members.size());
  return ex;
}

Rational mean_identity_rhs(const SieveStats& st) {
  Rational s = 0;
  for (const auto& r : st.R_p) s += r;
  return st.U + s / st.N;
}

Rational variance_identity_rhs(const SieveStats& st) {
  const size_t P = st.primes.size();
  Rational acc = 0;
  for (size_t i = 0; i < P; ++i) acc += st.densities[i] * (1 - st.densities[i]);
  Rational rr = 0;
  for (size_t i = 0; i < P; ++i)
    for (size_t j = 0; j < P; ++j) rr += st.R_pq[i][j];
  acc += rr / st.N;
  Rational r1 = 0;
  for (const auto& r : st.R_p) r1 += r;
  r1 /= st.N;
  acc -= 2 * st.U * r1;
  acc -= r1 * r1;
  return acc;
}

Rational lemma_rhs(const SieveStats& st) {
  if (st.M == 0) throw std::domain_error("lemma_rhs: mean M(z) = 0");
  const size_t P = st.primes.size();
  Rational abs_pq = 0;
  for (size_t i = 0; i < P; ++i)
    for (size_t j = 0; j < P; ++j) abs_pq += abs(st.R_pq[i][j]);
  Rational abs_p = 0;
  for (const auto& r : st.R_p) abs_p += abs(r);
  const Rational inner = st.U + abs_pq / st.N + 2 * st.U * abs_p / st.N +
                         (abs_p / st.N) * (abs_p / st.N);
  return rat(4 * st.N) / (st.M * st.M) * inner;
}

SieveCertificate certify_lemma(const SieveInstance& inst) {
  const SieveStats st = sieve_stats(inst);
  SieveCertificate cert;
  cert.N = st.N;
  cert.z = inst.z;
  cert.n_primes = static_cast<i64>(st.primes.size());
  cert.U = st.U;
  cert.M = st.M;
  cert.variance = st.variance;
  cert.E = exceptional_set(inst, st.M / 2).E;
  cert.rhs = lemma_rhs(st);
  cert.holds = rat(cert.E) <= cert.rhs;
  cert.mean_identity = (st.M == mean_identity_rhs(st));
  cert.variance_identity = (st.variance == variance_identity_rhs(st));
  return cert;
}

std::string certificate_json(const SieveCertificate& cert) {
  nlohmann::json j;
  j["N"] = cert.N;
  j["z"] = cert.z;
  j["n_primes"] = cert.n_primes;
  j["U"] = rat_str(cert.U);
  j["M"] = rat_str(cert.M);
  j["variance"] = rat_str(cert.variance);
  j["E"] = cert.E;
  j["rhs"] = rat_str(cert.rhs);
  j["rhs_decimal"] = rat_double(cert.rhs);
  j["holds"] = cert.holds;
  j["mean_identity"] = cert.mean_identity;
  j["variance_identity"] = cert.variance_identity;
  return j.dump(2);
}

UBoundsReport u_bounds_check(int degree, double z) {
  if (z < 2) throw std::invalid_argument("u_bounds_check: z < 2");
  UBoundsReport rep;
  rep.degree = degree;
  rep.z = z;
  rep.U = 0;
  for (i64 p : primes_up_to(static_cast<i64>(z)).primes)
    rep.U += split_density(degree, p);
  const auto [lo, hi] = u_window(degree);
  rep.lo = rat_double(lo);
  rep.hi = rat_double(hi);
  rep.ratio = rat_double(rep.U) / (z / std::log(z));
  rep.slack = 1.0 / std::log(z);
  rep.ok = rep.ratio >= rep.lo - rep.slack && rep.ratio <= rep.hi + rep.slack;
  return rep;
}

SieveInstance divisibility_instance(i64 N, i64 z) {
  if (N <= 0 || z < 2) throw std::invalid_argument("divisibility_instance");
  SieveInstance inst;
  inst.N = N;
  inst.z = static_cast<double>(z);
  inst.primes = primes_up_to(z).primes;
  for (i64 p : inst.primes) {
    inst.densities.push_back(rat(1, p));
    std::vector<std::uint8_t> row(static_cast<size_t>(N), 0);
    for (i64 a = 0; a < N; ++a) row[static_cast<size_t>(a)] = ((a + 1) % p == 0);
    inst.member.push_back(std::move(row));
  }
  return inst;
}

SieveInstance quadratic_sieve_instance(const QuadraticCensus& census,
                                       const Rational& delta) {
  if (census.sign == SignClass::both)
    throw std::invalid_argument(
        "quadratic_sieve_instance: census must be single-sign");
  if (census.D.empty())
    throw std::invalid_argument("quadratic_sieve_instance: empty census");
  if (delta <= rat(0) || delta >= rat(1))
    throw std::invalid_argument(
        "quadratic_sieve_instance: delta outside (0, 1)");
  SieveInstance inst;
  inst.z = std::pow(static_cast<double>(census.X) / 2.0, rat_double(delta));
  inst.primes = primes_up_to(static_cast<i64>(inst.z)).primes;
  inst.N = static_cast<i64>(census.D.size());
  for (i64 p : inst.primes) {
    inst.densities.push_back(rat(p, 2 * (p + 1)));
    std::vector<std::uint8_t> row(census.D.size(), 0);
    for (size_t a = 0; a < census.D.size(); ++a)
      row[a] = (kronecker(census.D[a], p) == 1);
    inst.member.push_back(std::move(row));
  }
  return inst;
}

SieveInstance quadratic_sieve_instance(i64 X, const Rational& delta) {
  if (X < 5) throw std::invalid_argument("quadratic_sieve_instance: X < 5");
  return quadratic_sieve_instance(enumerate_quadratic(X, SignClass::real),
                                  delta);
}

SieveInstance cubic_sieve_instance(const CubicCensus& census,
                                   const Rational& delta) {
  if (census.negative)
    throw std::invalid_argument("cubic_sieve_instance: need disc > 0");
  if (census.fields.empty())
    throw std::invalid_argument("cubic_sieve_instance: empty census");
  if (delta <= rat(0) || delta >= rat(1))
    throw std::invalid_argument("cubic_sieve_instance: delta outside (0, 1)");
  SieveInstance inst;
  inst.z = std::pow(static_cast<double>(census.X) / 2.0, rat_double(delta));
  inst.primes = primes_up_to(static_cast<i64>(inst.z)).primes;
  inst.N = static_cast<i64>(census.fields.size());
  for (i64 p : inst.primes) {
    inst.densities.push_back(split_density(3, p));
    std::vector<std::uint8_t> row(census.fields.size(), 0);
    for (size_t a = 0; a < census.fields.size(); ++a)
      row[a] = (cubic_splitting(census.fields[a].f, p) == CSplit::s111);
    inst.member.push_back(std::move(row));
  }
  return inst;
}

SieveInstance cubic_sieve_instance(i64 X, const Rational& delta) {
  return cubic_sieve_instance(enumerate_cubic(X, false), delta);
}

SieveInstance synthetic_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uint_below = [&](std::uint64_t n) { return rng() % n; };
  auto unit = [&](void) { return (rng() >> 11) * 0x1.0p-53; };

  SieveInstance inst;
  inst.N = 50 + static_cast<i64>(uint_below(1951));  // 50..2000
  const int P = 1 + static_cast<int>(uint_below(12));
  const auto all = primes_up_to(200).primes;
  // P distinct primes: a sorted random subset of the first 20.
  std::vector<int> idx(20);
  for (int i = 0; i < 20; ++i) idx[static_cast<size_t>(i)] = i;
  for (int i = 0; i < P; ++i) {
    const int j = i + static_cast<int>(uint_below(static_cast<u64>(20 - i)));
    std::swap(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(j)]);
  }
  idx.resize(static_cast<size_t>(P));
  std::sort(idx.begin(), idx.end());
  for (int i : idx) inst.primes.push_back(all[static_cast<size_t>(i)]);
  inst.z = static_cast<double>(inst.primes.back());

  for (int i = 0; i < P; ++i) {
    const i64 den = 2 + static_cast<i64>(uint_below(96));
    const i64 num = static_cast<i64>(uint_below(static_cast<u64>(den)));
    inst.densities.push_back(rat(num, den));
    // Plant a bias so the declared density differs from the empirical one
    // and the remainders R_p are genuinely nonzero.
    const double bias = (unit() - 0.5) * 0.4;
    double prob = rat_double(inst.densities.back()) + bias;
    prob = std::min(0.999, std::max(0.0, prob));
    std::vector<std::uint8_t> row(static_cast<size_t>(inst.N), 0);
    for (i64 a = 0; a < inst.N; ++a)
      row[static_cast<size_t>(a)] = (unit() < prob);
    inst.member.push_back(std::move(row));
  }
  return inst;
}

SieveInstance synthetic_instance(std::uint64_t seed, i64 items, i64 zmax) {
  if (items < 1) throw std::invalid_argument("synthetic_instance: items < 1");
  if (zmax < 2) throw std::invalid_argument("synthetic_instance: zmax < 2");
  std::mt19937_64 rng(seed);
  auto uint_below = [&](std::uint64_t n) { return rng() % n; };
  auto unit = [&](void) { return (rng() >> 11) * 0x1.0p-53; };

  SieveInstance inst;
  inst.N = items;
  inst.primes = primes_up_to(zmax).primes;
  inst.z = static_cast<double>(zmax);
  for (size_t i = 0; i < inst.primes.size(); ++i) {
    const i64 den = 2 + static_cast<i64>(uint_below(96));
    const i64 num = static_cast<i64>(uint_below(static_cast<u64>(den)));
    inst.densities.push_back(rat(num, den));
    const double bias = (unit() - 0.5) * 0.4;
    double prob = rat_double(inst.densities.back()) + bias;
    prob = std::min(0.999, std::max(0.0, prob));
    std::vector<std::uint8_t> row(static_cast<size_t>(inst.N), 0);
    for (i64 a = 0; a < inst.N; ++a)
      row[static_cast<size_t>(a)] = (unit() < prob);
    inst.member.push_back(std::move(row));
  }
  return inst;
}

}  // namespace classieve
