// classieve: censuses of quadratic/cubic fields, exact dual-route counts
// under splitting conditions, Chebyshev sieve certification, class-group
// torsion experiments, and exact local density tables.
//
// Data goes to stdout (deterministic: fixed inputs give byte-identical
// output regardless of thread count); progress and timing go to stderr.
// Commands exit nonzero whenever an exact identity or invariant fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "classieve/cache.hpp"
#include "classieve/classgroup.hpp"
#include "classieve/cubic.hpp"
#include "classieve/densities.hpp"
#include "classieve/quadratic.hpp"
#include "classieve/sieve.hpp"
#include "classieve/torsion.hpp"
#include "json.hpp"

namespace {

using namespace classieve;
using nlohmann::json;

// ------------------------------------------------------------------- helpers

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// "1/6", "0.1667" or "3" as an exact rational.
Rational parse_delta(const std::string& s) {
  const auto dot = s.find('.');
  if (dot == std::string::npos) return parse_rational(s);
  const std::string frac = s.substr(dot + 1);
  if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("cannot parse decimal '" + s + "'");
  std::string digits = s.substr(0, dot) + frac;
  const bool neg = !digits.empty() && digits[0] == '-';
  if (neg) digits = digits.substr(1);
  if (digits.empty() ||
      digits.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("cannot parse decimal '" + s + "'");
  Int num(digits);
  Int den = 1;
  for (size_t i = 0; i < frac.size(); ++i) den *= 10;
  return rat(neg ? Int(-num) : num, den);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot write " + path);
  os << text;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_text(out_path, text);
}

std::string json_scalar(const json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

// --------------------------------------------------------------- subcommands

struct EnumerateArgs {
  int degree = 2;
  i64 X = 0;
  std::string sign = "both";
  std::string out;
};

int cmd_enumerate(const EnumerateArgs& a) {
  if (a.degree == 4) {
    std::cerr << "error: quartic enumeration out of scope: degree-4 censuses "
                 "need Bhargava's parametrization of quartic rings by pairs "
                 "of ternary quadratic forms (Ann. of Math. 2004/2005)\n";
    return 1;
  }
  if (a.degree == 5) {
    std::cerr << "error: quintic enumeration out of scope: degree-5 censuses "
                 "need Bhargava's parametrization of quintic rings by "
                 "quadruples of alternating forms (Ann. of Math. 2008/2010)\n";
    return 1;
  }
  if (a.degree != 2 && a.degree != 3) {
    std::cerr << "error: unsupported degree " << a.degree << "\n";
    return 1;
  }
  Timer t;
  if (a.degree == 2) {
    if (a.sign == "complex") {
      std::cerr << "error: sign 'complex' applies to degree 3 only\n";
      return 1;
    }
    const SignClass sc = a.sign == "real"        ? SignClass::real
                         : a.sign == "imaginary" ? SignClass::imaginary
                                                 : SignClass::both;
    const auto census = enumerate_quadratic_cached(a.X, sc);
    std::cout << "degree=2 X=" << a.X << " sign=" << a.sign
              << " N=" << census.D.size() << "\n";
    if (!a.out.empty()) write_text(a.out, census_to_csv(census));
    if (!cache_dir().empty())
      std::cerr << "cache: " << cache_dir() << "/"
                << quadratic_cache_name(a.X, sc) << "\n";
  } else {
    if (a.sign == "imaginary") {
      std::cerr << "error: sign 'imaginary' applies to degree 2 only\n";
      return 1;
    }
    std::string csv;
    i64 total = 0;
    const bool want_real = a.sign == "real" || a.sign == "both";
    const bool want_complex = a.sign == "complex" || a.sign == "both";
    if (want_real) {
      const auto census = enumerate_cubic_cached(a.X, false);
      total += static_cast<i64>(census.fields.size());
      std::cout << "degree=3 X=" << a.X
                << " sign=real N=" << census.fields.size() << "\n";
      csv += cubic_census_to_csv(census);
    }
    if (want_complex) {
      const auto census = enumerate_cubic_cached(a.X, true);
      total += static_cast<i64>(census.fields.size());
      std::cout << "degree=3 X=" << a.X
                << " sign=complex N=" << census.fields.size() << "\n";
      const std::string part = cubic_census_to_csv(census);
      csv += csv.empty() ? part : part.substr(part.find('\n') + 1);
    }
    if (a.sign == "both")
      std::cout << "degree=3 X=" << a.X << " sign=both N=" << total << "\n";
    if (!a.out.empty()) write_text(a.out, csv);
  }
  std::cerr << "elapsed: " << t.seconds() << " s\n";
  return 0;
}

struct CountArgs {
  int degree = 2;
  i64 X = 0;
  std::string sign = "both";
  std::vector<i64> split, inert, ram;
  std::vector<std::string> type;  // degree 3: "p:111|12|3|121|13|ram"
};

Rational cubic_condition_density(i64 p, const std::string& code) {
  if (code == "111" || code == "12" || code == "3") {
    for (const auto& row : local_densities(3, p))
      if (row.type == code) return row.density;
  }
  if (code == "ram") return ramified_density(3, p);
  if (code == "121") return cubic_ramified_split(p).first;
  if (code == "13") return cubic_ramified_split(p).second;
  throw std::invalid_argument("unknown cubic splitting code '" + code + "'");
}

bool cubic_condition_match(const CubicForm& f, i64 p, const std::string& code) {
  const CSplit s = cubic_splitting(f, p);
  if (code == "111") return s == CSplit::s111;
  if (code == "12") return s == CSplit::s12;
  if (code == "3") return s == CSplit::s3;
  if (code == "121") return s == CSplit::ram_partial;
  if (code == "13") return s == CSplit::ram_total;
  if (code == "ram")
    return s == CSplit::ram_partial || s == CSplit::ram_total;
  throw std::invalid_argument("unknown cubic splitting code '" + code + "'");
}

int cmd_count(const CountArgs& a) {
  Timer t;
  if (a.degree == 2) {
    if (!a.type.empty()) {
      std::cerr << "error: --type is a degree-3 condition\n";
      return 1;
    }
    std::vector<PrimeCondition> conds;
    std::string label;
    auto add = [&](const std::vector<i64>& ps, QSplit q, const char* name) {
      for (i64 p : ps) {
        conds.push_back({p, q});
        label += (label.empty() ? "" : ",") + std::string(name) + "@" +
                 std::to_string(p);
      }
    };
    add(a.split, QSplit::split, "split");
    add(a.inert, QSplit::inert, "inert");
    add(a.ram, QSplit::ramified, "ram");
    const SignClass sc = a.sign == "real"        ? SignClass::real
                         : a.sign == "imaginary" ? SignClass::imaginary
                                                 : SignClass::both;
    const auto census = enumerate_quadratic_cached(a.X, sc);
    const i64 direct = count_with_conditions_direct(census, conds);
    const i64 sieve = count_with_conditions_sieve(a.X, sc, conds);
    const Rational pred = density_prediction_quadratic(conds);
    const double freq = census.D.empty()
                            ? 0.0
                            : static_cast<double>(direct) /
                                  static_cast<double>(census.D.size());
    std::cout << "count degree=2 X=" << a.X << " sign=" << a.sign
              << " conditions=" << (label.empty() ? "none" : label) << "\n";
    std::cout << "direct=" << direct << " sieve=" << sieve
              << " equal=" << (direct == sieve ? "yes" : "NO") << "\n";
    std::cout << "density=" << rat_str(pred) << " (" << rat_double(pred)
              << ") family=" << census.D.size() << " freq=" << freq
              << " deviation=" << freq - rat_double(pred) << "\n";
    std::cerr << "elapsed: " << t.seconds() << " s\n";
    return direct == sieve ? 0 : 1;
  }
  if (a.degree != 3) {
    std::cerr << "error: count supports degrees 2 and 3\n";
    return 1;
  }
  // Degree 3: conditions as (p, code) pairs.
  std::vector<std::pair<i64, std::string>> conds;
  std::string label;
  auto add = [&](i64 p, const std::string& code) {
    for (const auto& c : conds)
      if (c.first == p)
        throw std::invalid_argument("duplicate prime in conditions");
    conds.push_back({p, code});
    label += (label.empty() ? "" : ",") + code + "@" + std::to_string(p);
  };
  try {
    for (i64 p : a.split) add(p, "111");
    for (i64 p : a.inert) add(p, "3");
    for (i64 p : a.ram) add(p, "ram");
    for (const auto& s : a.type) {
      const auto colon = s.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("--type expects p:code, got '" + s + "'");
      add(std::stoll(s.substr(0, colon)), s.substr(colon + 1));
    }
    const bool want_real = a.sign == "real" || a.sign == "both";
    const bool want_complex = a.sign == "complex" || a.sign == "both";
    if (!want_real && !want_complex)
      throw std::invalid_argument("degree-3 sign must be real|complex|both");
    i64 family = 0, count = 0;
    Rational pred = rat(1);
    for (const auto& [p, code] : conds) pred *= cubic_condition_density(p, code);
    for (int neg = 0; neg <= 1; ++neg) {
      if ((neg == 0 && !want_real) || (neg == 1 && !want_complex)) continue;
      const auto census = enumerate_cubic_cached(a.X, neg == 1);
      family += static_cast<i64>(census.fields.size());
      for (const auto& fld : census.fields) {
        bool all = true;
        for (const auto& [p, code] : conds)
          if (!cubic_condition_match(fld.f, p, code)) {
            all = false;
            break;
          }
        count += all ? 1 : 0;
      }
    }
    const double freq =
        family > 0
            ? static_cast<double>(count) / static_cast<double>(family)
            : 0.0;
    std::cout << "count degree=3 X=" << a.X << " sign=" << a.sign
              << " conditions=" << (label.empty() ? "none" : label) << "\n";
    std::cout << "count=" << count << " family=" << family << "\n";
    std::cout << "density=" << rat_str(pred) << " (" << rat_double(pred)
              << ") freq=" << freq
              << " deviation=" << freq - rat_double(pred) << "\n";
    std::cerr << "elapsed: " << t.seconds() << " s\n";
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

struct SieveArgs {
  // synthetic
  i64 items = 1000;
  i64 zmax = 50;
  std::uint64_t seed = 1;
  // quadratic / cubic
  i64 X = 100000;
  std::string delta;
  std::string out;
};

json certificate_to_json(const SieveCertificate& cert) {
  return json::parse(certificate_json(cert));
}

int run_sieve(const SieveInstance& inst, std::optional<int> degree, i64 X,
              const Rational* delta, const std::string& out) {
  const SieveCertificate cert = certify_lemma(inst);
  json j;
  j["certificate"] = certificate_to_json(cert);
  if (degree) {
    json fam;
    fam["degree"] = *degree;
    fam["X"] = X;
    fam["delta"] = rat_str(*delta);
    fam["m_ratio"] = inst.z > 1.0
                         ? rat_double(cert.M) / (inst.z / std::log(inst.z))
                         : 0.0;
    const UBoundsReport ub = u_bounds_check(*degree, inst.z);
    fam["u_bounds"] = {{"U", rat_str(ub.U)},     {"ratio", ub.ratio},
                       {"lo", ub.lo},            {"hi", ub.hi},
                       {"slack", ub.slack},      {"ok", ub.ok}};
    j["family"] = fam;
  }
  emit(j.dump(2) + "\n", out);
  const bool exact_ok =
      cert.holds && cert.mean_identity && cert.variance_identity;
  if (!exact_ok) std::cerr << "error: exact sieve identity failed\n";
  return exact_ok ? 0 : 1;
}

struct TorsionArgs {
  i64 X = 0;
  i64 ell = 3;
  std::string sign = "imaginary";
  double delta = 0.12;
  std::string out;
  std::string detail;
};

std::vector<i64> experiment_scales(i64 X) {
  std::vector<i64> scales;
  for (i64 s = 1000; s < X; s *= 10) scales.push_back(s);
  scales.push_back(X);
  return scales;
}

int cmd_torsion(const TorsionArgs& a) {
  Timer t;
  json params{{"X", a.X},
              {"ell", a.ell},
              {"sign", a.sign},
              {"delta", a.delta},
              {"threshold", "mean/2"}};
  const bool dh = (a.ell == 3 && a.sign == "imaginary");
  const double prediction = 6.0 / (std::numbers::pi * std::numbers::pi);
  if (dh)
    params["prediction"] = prediction;
  else
    params["prediction"] = nullptr;

  json per_scale = json::array();
  double c0 = 0, c1 = 0;
  bool have_c = false;
  double ev_max = 0, ev_p99_top = 0, ev_p99_first = -1;
  for (i64 scale : experiment_scales(a.X)) {
    i64 sum = 0;
    if (a.sign == "imaginary") {
      if (a.ell == 3) {
        const bool keep = !a.detail.empty() && scale == a.X;
        const EVScan sc = ev_consistency_scan(scale, a.delta, keep);
        sum = sc.sum_h3;
        ev_max = sc.max_ratio;
        ev_p99_top = sc.p99;
        if (ev_p99_first < 0) ev_p99_first = sc.p99;
        if (keep) {
          std::ostringstream os;
          os << "D,h3,nsplit,ratio\n";
          for (const auto& r : sc.rows)
            os << r.D << ',' << r.h3 << ',' << r.nsplit << ',' << r.ratio
               << '\n';
          write_text(a.detail, os.str());
        }
      } else {
        sum = average_torsion_imaginary(scale, a.ell).sum_torsion;
      }
    } else {
      const auto census = enumerate_quadratic_cached(scale, SignClass::real);
      const auto avg = average_torsion(census, a.ell);  // throws on even ell
      sum = avg.sum_torsion;
      if (!a.detail.empty() && scale == a.X) {
        std::ostringstream os;
        os << "D,torsion\n";
        for (i64 D : census.D)
          os << D << ',' << torsion_count(class_group(D), a.ell) << '\n';
        write_text(a.detail, os.str());
      }
    }
    const auto census_for_badset =
        enumerate_quadratic_cached(scale, a.sign == "imaginary"
                                              ? SignClass::imaginary
                                              : SignClass::real);
    const BadSetReport bad = bad_set_report(census_for_badset);
    if (!bad.primes.empty()) {
      c0 = have_c ? std::min(c0, bad.m_ratio) : bad.m_ratio;
      c1 = have_c ? std::max(c1, bad.m_ratio) : bad.m_ratio;
      have_c = true;
    }
    const double ratio_x =
        static_cast<double>(sum) / static_cast<double>(scale);
    json row{{"X", scale},
             {"sum_torsion", sum},
             {"ratio_to_prediction", dh ? json(ratio_x / prediction) : json()},
             {"bad_fraction", bad.fraction}};
    per_scale.push_back(row);
    std::cerr << "scale " << scale << " done (" << t.seconds() << " s)\n";
  }

  json fitted{{"c0", have_c ? json(c0) : json()},
              {"c1", have_c ? json(c1) : json()}};
  if (a.sign == "imaginary" && a.ell == 3) {
    fitted["ev_max_ratio"] = ev_max;
    fitted["ev_p99"] = ev_p99_top;
    fitted["ev_p99_smallest_scale"] = ev_p99_first;
  }
  json j{{"parameters", params},
         {"fitted_constants", fitted},
         {"per_scale", per_scale}};
  emit(j.dump(2) + "\n", a.out);
  std::cerr << "elapsed: " << t.seconds() << " s\n";
  return 0;
}

struct DensitiesArgs {
  std::vector<int> degrees{2, 3, 4, 5};
  i64 pmax = 100;
  bool as_json = false;
};

int cmd_densities(const DensitiesArgs& a) {
  const auto primes = primes_up_to(a.pmax).primes;
  // Exactness gate: every table must sum to exactly 1.
  for (int d : a.degrees)
    for (i64 p : primes) {
      Rational total = 0;
      for (const auto& row : local_densities(d, p)) total += row.density;
      if (total != 1) {
        std::cerr << "error: densities at degree " << d << ", p = " << p
                  << " sum to " << rat_str(total) << " != 1\n";
        return 1;
      }
    }
  if (!a.as_json) {
    std::cout << densities_csv(a.degrees, primes);
    return 0;
  }
  json j;
  j["tables"] = json::array();
  for (int d : a.degrees)
    for (i64 p : primes)
      for (const auto& row : local_densities(d, p))
        j["tables"].push_back({{"degree", d},
                               {"p", p},
                               {"type", row.type},
                               {"density", rat_str(row.density)},
                               {"density_decimal", rat_double(row.density)}});
  for (int d : a.degrees) {
    const std::string key = std::to_string(d);
    j["delta0"][key] = rat_str(delta0(d));
    j["ell_threshold"][key] = ell_threshold(d);
    const auto [lo, hi] = u_window(d);
    j["u_window"][key] = {rat_str(lo), rat_str(hi)};
    if (d == 4 || d == 5) {
      for (i64 p : primes) {
        const Rational nu = d == 4 ? nu_quartic(p) : nu_quintic(p);
        j["nu"][key].push_back({{"p", p}, {"nu", rat_str(nu)}});
      }
    }
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

struct ReportArgs {
  std::string in;
  std::string out;
};

// Flatten experiment/certificate JSON to long-format CSV
// "section,key,X,value" (array elements keyed by their "X" field if any).
int cmd_report(const ReportArgs& a) {
  std::ifstream is(a.in);
  if (!is) {
    std::cerr << "error: cannot read " << a.in << "\n";
    return 1;
  }
  json j;
  try {
    is >> j;
  } catch (const json::parse_error& e) {
    std::cerr << "error: " << a.in << " is not JSON: " << e.what() << "\n";
    return 1;
  }
  std::ostringstream os;
  os << "section,key,X,value\n";
  for (const auto& [section, value] : j.items()) {
    if (value.is_object()) {
      for (const auto& [k, v] : value.items())
        os << section << ',' << k << ",," << json_scalar(v) << '\n';
    } else if (value.is_array()) {
      for (const auto& elem : value) {
        const std::string x =
            elem.is_object() && elem.contains("X") ? elem["X"].dump() : "";
        if (elem.is_object()) {
          for (const auto& [k, v] : elem.items())
            if (k != "X") os << section << ',' << k << ',' << x << ','
                             << json_scalar(v) << '\n';
        } else {
          os << section << ",," << x << ',' << json_scalar(elem) << '\n';
        }
      }
    } else {
      os << section << ",,," << json_scalar(value) << '\n';
    }
  }
  emit(os.str(), a.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "classieve: censuses, splitting counts, Chebyshev sieve certificates "
      "and class-group torsion statistics for quadratic and cubic fields"};
  app.require_subcommand(1);

  int threads = 0;
  std::string cache_dir_flag;
  app.add_option("--threads", threads, "OpenMP thread count (0 = default)");
  app.add_option("--cache-dir", cache_dir_flag,
                 "census cache directory (env CLASS_SIEVE_CACHE overrides)");

  EnumerateArgs ea;
  auto* enumerate = app.add_subcommand(
      "enumerate", "enumerate a census of fundamental discriminants (degree "
                   "2) or cubic fields (degree 3)");
  enumerate->add_option("degree", ea.degree, "field degree")->required();
  enumerate->add_option("--x", ea.X, "discriminant bound |D| <= X")
      ->required();
  enumerate
      ->add_option("--sign", ea.sign,
                   "real|imaginary|both (degree 2), real|complex|both "
                   "(degree 3)")
      ->check(CLI::IsMember({"real", "imaginary", "complex", "both"}));
  enumerate->add_option("--out", ea.out, "write census CSV to this path");

  CountArgs ca;
  auto* count = app.add_subcommand(
      "count", "count census fields under splitting conditions (degree 2: "
               "two independent routes)");
  count->add_option("degree", ca.degree, "field degree")->required();
  count->add_option("--x", ca.X, "discriminant bound")->required();
  count->add_option("--sign", ca.sign, "real|imaginary|complex|both")
      ->check(CLI::IsMember({"real", "imaginary", "complex", "both"}));
  count->add_option("--split", ca.split, "prime that splits completely");
  count->add_option("--inert", ca.inert, "prime that stays inert");
  count->add_option("--ram", ca.ram, "prime that ramifies");
  count->add_option("--type", ca.type,
                    "degree 3 fine type p:code, code in "
                    "{111,12,3,121,13,ram}");

  SieveArgs sa;
  auto* sieve = app.add_subcommand(
      "sieve", "certify the Chebyshev sieve bound on an instance");
  sieve->require_subcommand(1);
  auto* s_syn = sieve->add_subcommand("synthetic", "seeded random instance");
  s_syn->add_option("--items", sa.items, "family size");
  s_syn->add_option("--zmax", sa.zmax, "largest sieving prime");
  s_syn->add_option("--seed", sa.seed, "RNG seed");
  s_syn->add_option("--out", sa.out, "write certificate JSON to this path");
  auto* s_quad =
      sieve->add_subcommand("quadratic", "real quadratic fields 0 < D <= X");
  s_quad->add_option("--x", sa.X, "discriminant bound");
  s_quad->add_option("--delta", sa.delta,
                     "z = (X/2)^delta; fraction or decimal (default 1/6)");
  s_quad->add_option("--out", sa.out, "write certificate JSON to this path");
  auto* s_cub = sieve->add_subcommand(
      "cubic", "totally real cubic fields 0 < disc <= X");
  s_cub->add_option("--x", sa.X, "discriminant bound");
  s_cub->add_option("--delta", sa.delta,
                    "z = (X/2)^delta; fraction or decimal (default 2/25)");
  s_cub->add_option("--out", sa.out, "write certificate JSON to this path");

  TorsionArgs ta;
  auto* torsion = app.add_subcommand(
      "torsion", "class-group ell-torsion experiment over quadratic fields");
  torsion->add_option("--x", ta.X, "discriminant bound")->required();
  torsion->add_option("--ell", ta.ell, "torsion order (default 3)");
  torsion->add_option("--sign", ta.sign, "imaginary|real")
      ->check(CLI::IsMember({"imaginary", "real"}));
  torsion->add_option("--delta", ta.delta,
                      "split-prime exponent for the consistency scan");
  torsion->add_option("--out", ta.out, "write experiment JSON to this path");
  torsion->add_option("--detail", ta.detail,
                      "write per-field CSV detail to this path");

  DensitiesArgs da;
  auto* densities = app.add_subcommand(
      "densities", "dump exact local splitting-density tables");
  densities->add_option("--degrees", da.degrees, "degrees (default 2 3 4 5)");
  densities->add_option("--pmax", da.pmax, "largest prime");
  densities->add_flag("--json", da.as_json, "JSON instead of CSV");

  ReportArgs ra;
  auto* report = app.add_subcommand(
      "report", "re-render experiment JSON as long-format CSV");
  report->add_option("--in", ra.in, "experiment JSON path")->required();
  report->add_option("--out", ra.out, "CSV output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif
  if (!cache_dir_flag.empty() && std::getenv("CLASS_SIEVE_CACHE") == nullptr)
    setenv("CLASS_SIEVE_CACHE", cache_dir_flag.c_str(), 0);

  try {
    if (*enumerate) return cmd_enumerate(ea);
    if (*count) return cmd_count(ca);
    if (*sieve) {
      if (*s_syn)
        return run_sieve(synthetic_instance(sa.seed, sa.items, sa.zmax),
                         std::nullopt, 0, nullptr, sa.out);
      const bool quad = static_cast<bool>(*s_quad);
      const Rational delta =
          parse_delta(sa.delta.empty() ? (quad ? "1/6" : "2/25") : sa.delta);
      const SieveInstance inst = quad
                                     ? quadratic_sieve_instance(
                                           enumerate_quadratic_cached(
                                               sa.X, SignClass::real),
                                           delta)
                                     : cubic_sieve_instance(
                                           enumerate_cubic_cached(sa.X, false),
                                           delta);
      return run_sieve(inst, quad ? 2 : 3, sa.X, &delta, sa.out);
    }
    if (*torsion) return cmd_torsion(ta);
    if (*densities) return cmd_densities(da);
    if (*report) return cmd_report(ra);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
