#include "doctest.h"

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include "classieve/cache.hpp"

using namespace classieve;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("classieve_cache_test_" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() {
    fs::remove_all(path);
    ::unsetenv("CLASS_SIEVE_CACHE");
  }
};

void corrupt_byte(const fs::path& p, std::streamoff off, char value) {
  std::fstream f(p, std::ios::in | std::ios::out | std::ios::binary);
  f.seekp(off);
  f.put(value);
}

}  // namespace

TEST_SUITE("cache") {
  TEST_CASE("quadratic census round-trips bit for bit") {
    TempDir tmp;
    const auto census = enumerate_quadratic(5000, SignClass::both);
    const auto path = (tmp.path / "q.qcen").string();
    save_quadratic_census(census, path);
    const auto back = load_quadratic_census(path);
    CHECK(back.X == census.X);
    CHECK(back.sign == census.sign);
    CHECK(back.D == census.D);
  }

  TEST_CASE("cubic census round-trips bit for bit") {
    TempDir tmp;
    const auto census = enumerate_cubic(2000, true);
    const auto path = (tmp.path / "c.ccen").string();
    save_cubic_census(census, path);
    const auto back = load_cubic_census(path);
    CHECK(back.X == census.X);
    CHECK(back.negative == census.negative);
    CHECK(back.fields == census.fields);
  }

  TEST_CASE("corruption and truncation are detected") {
    TempDir tmp;
    const auto census = enumerate_quadratic(1000, SignClass::imaginary);
    const auto path = tmp.path / "q.qcen";
    save_quadratic_census(census, path.string());

    corrupt_byte(path, 0, 'X');  // magic
    CHECK_THROWS_AS(load_quadratic_census(path.string()), std::runtime_error);
    save_quadratic_census(census, path.string());
    corrupt_byte(path, 4, 9);  // version
    CHECK_THROWS_AS(load_quadratic_census(path.string()), std::runtime_error);

    save_quadratic_census(census, path.string());
    fs::resize_file(path, fs::file_size(path) - 3);  // truncate payload
    CHECK_THROWS_AS(load_quadratic_census(path.string()), std::runtime_error);

    // Trailing garbage is also a hard error.
    save_quadratic_census(census, path.string());
    {
      std::ofstream f(path, std::ios::binary | std::ios::app);
      f.put(0);
    }
    CHECK_THROWS_AS(load_quadratic_census(path.string()), std::runtime_error);

    CHECK_THROWS_AS(load_quadratic_census((tmp.path / "nope.qcen").string()),
                    std::runtime_error);
  }

  TEST_CASE("file names encode parameters") {
    CHECK(quadratic_cache_name(1000, SignClass::real) == "qcen_real_1000.qcen");
    CHECK(quadratic_cache_name(5, SignClass::both) == "qcen_both_5.qcen");
    CHECK(cubic_cache_name(99, true) == "ccen_neg_99.ccen");
    CHECK(cubic_cache_name(99, false) == "ccen_pos_99.ccen");
  }

  TEST_CASE("cached wrappers: miss computes and saves, hit loads") {
    TempDir tmp;
    ::setenv("CLASS_SIEVE_CACHE", tmp.path.c_str(), 1);
    CHECK(cache_dir() == tmp.path.string());

    const auto first = enumerate_quadratic_cached(3000, SignClass::real);
    const auto file = tmp.path / quadratic_cache_name(3000, SignClass::real);
    CHECK(fs::exists(file));
    const auto second = enumerate_quadratic_cached(3000, SignClass::real);
    CHECK(first.D == second.D);
    CHECK(first.D == enumerate_quadratic(3000, SignClass::real).D);

    const auto c1 = enumerate_cubic_cached(1500, false);
    CHECK(fs::exists(tmp.path / cubic_cache_name(1500, false)));
    const auto c2 = enumerate_cubic_cached(1500, false);
    CHECK(c1.fields == c2.fields);
    CHECK(c1.fields == enumerate_cubic(1500, false).fields);

    // A cache file whose header does not match its name is rejected, not
    // silently served.
    const auto wrong = enumerate_quadratic(100, SignClass::real);
    save_quadratic_census(wrong,
                          (tmp.path / quadratic_cache_name(200, SignClass::real)).string());
    CHECK_THROWS_AS(enumerate_quadratic_cached(200, SignClass::real),
                    std::runtime_error);

    ::unsetenv("CLASS_SIEVE_CACHE");
    CHECK(cache_dir().empty());
    // Without the environment variable the wrapper is a plain computation.
    const auto plain = enumerate_quadratic_cached(123, SignClass::imaginary);
    CHECK(plain.D == enumerate_quadratic(123, SignClass::imaginary).D);
  }
}
