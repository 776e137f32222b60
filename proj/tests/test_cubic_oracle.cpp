// Cross-validation of the binary-cubic-form census against a fully
// independent construction of the same objects: monic cubic polynomials
// enumerated under the Hunter bound, with the maximal order computed by the
// Pohst-Zassenhaus Round-2 algorithm over exact rationals. The two pipelines
// share no code beyond the prime table.
#include "doctest.h"

#include <map>
#include <string>
#include <vector>

#include "classieve/cubic.hpp"
#include "oracles/hunter.hpp"

using namespace classieve;
using hunter_oracle::MonicCubic;

namespace {

std::string csplit_as_shape(CSplit s) {
  switch (s) {
    case CSplit::s111: return "111";
    case CSplit::s12: return "12";
    case CSplit::s3: return "3";
    case CSplit::ram_partial: return "1^2 1";
    case CSplit::ram_total: return "1^3";
  }
  return "?";
}

}  // namespace

TEST_SUITE("cubic_oracle") {
  TEST_CASE("Dedekind's non-monogenic example x^3 - x^2 - 2x - 8") {
    const MonicCubic f{1, -2, 8};
    CHECK(hunter_oracle::poly_disc(-1, -2, -8) == -2012);  // = 4 * (-503)
    CHECK(hunter_oracle::field_discriminant(f) == -503);   // index 2 removed
    // The census sees the same field, and 2 splits completely in it even
    // though the polynomial is an index-2 (hence useless) generator at 2.
    const auto census = enumerate_cubic(503, true);
    bool found = false;
    for (const auto& field : census.fields)
      if (field.disc == -503) {
        found = true;
        CHECK(cubic_splitting(field.f, 2) == CSplit::s111);
      }
    CHECK(found);
  }

  TEST_CASE("census discriminants == Hunter/Round-2 discriminants, |disc| <= 500") {
    const auto oracle = hunter_oracle::enumerate_fields(500);
    std::map<i64, int> oracle_count, census_count;
    for (const auto& f : oracle) oracle_count[f.disc]++;
    const auto neg = enumerate_cubic(500, true);
    const auto pos = enumerate_cubic(500, false);
    for (const auto& f : neg.fields) census_count[f.disc]++;
    for (const auto& f : pos.fields) census_count[f.disc]++;
    CHECK(oracle.size() == 70);  // 58 complex + 12 totally real
    CHECK(neg.fields.size() == 58);
    CHECK(pos.fields.size() == 12);
    REQUIRE(oracle_count == census_count);
    // In this range every discriminant determines the field uniquely.
    for (const auto& [d, c] : oracle_count) CHECK(c == 1);
  }

  TEST_CASE("splitting types agree at good primes") {
    const auto oracle = hunter_oracle::enumerate_fields(300);
    std::map<i64, MonicCubic> poly_of;
    std::map<i64, long long> pdisc_of;
    for (const auto& f : oracle) {
      poly_of[f.disc] = f.poly;
      pdisc_of[f.disc] = f.poly_disc;
    }
    const auto neg = enumerate_cubic(300, true);
    const auto pos = enumerate_cubic(300, false);
    std::vector<CubicField> all(neg.fields);
    all.insert(all.end(), pos.fields.begin(), pos.fields.end());
    int compared = 0;
    for (const auto& field : all) {
      REQUIRE(poly_of.count(field.disc) == 1);
      const auto& poly = poly_of[field.disc];
      for (i64 p : {2, 3, 5, 7, 11, 13}) {
        if (pdisc_of[field.disc] % p == 0) continue;  // good primes only
        const std::string census_shape =
            csplit_as_shape(cubic_splitting(field.f, p));
        CHECK_MESSAGE(census_shape == hunter_oracle::shape_mod_p(poly, p),
                      "disc = ", field.disc, " p = ", p);
        ++compared;
      }
    }
    CHECK(compared > 150);  // the comparison actually exercised many primes
  }

  TEST_CASE("ramified primes of the census divide the field discriminant") {
    const auto census = enumerate_cubic(400, true);
    for (const auto& field : census.fields)
      for (i64 p : {2, 3, 5, 7}) {
        const CSplit s = cubic_splitting(field.f, p);
        const bool ram =
            (s == CSplit::ram_partial || s == CSplit::ram_total);
        CHECK_MESSAGE(ram == (field.disc % p == 0),
                      "disc = ", field.disc, " p = ", p);
      }
  }
}
