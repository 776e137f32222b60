#pragma once
// Binary on-disk caches for the two expensive censuses. Fixed little-endian
// layout:
//   QCEN: "QCEN" | u32 version=1 | u64 X | u8 sign (0 real, 1 imaginary,
//         2 both) | u64 count | count x i64 discriminant (census order)
//   CCEN: "CCEN" | u32 version=1 | u64 X | u8 sign (0 disc>0, 1 disc<0)
//         | u64 count | count x (a,b,c,d,disc) as 5 i64 (census order)
// Loaders validate magic, version, header consistency and exact payload
// size, throwing std::runtime_error on any mismatch.
//
// The cached wrappers consult the CLASS_SIEVE_CACHE environment variable:
// when set to a directory, censuses are loaded from / saved to files named
// by quadratic_cache_name / cubic_cache_name inside it.

#include <string>

#include "classieve/cubic.hpp"
#include "classieve/quadratic.hpp"

namespace classieve {

// Value of CLASS_SIEVE_CACHE, or "" when unset/empty.
std::string cache_dir();

std::string quadratic_cache_name(i64 X, SignClass sign);
std::string cubic_cache_name(i64 X, bool negative);

void save_quadratic_census(const QuadraticCensus& census,
                           const std::string& path);
QuadraticCensus load_quadratic_census(const std::string& path);

void save_cubic_census(const CubicCensus& census, const std::string& path);
CubicCensus load_cubic_census(const std::string& path);

// Enumerate with the parallel kernels, transparently using the cache
// directory when CLASS_SIEVE_CACHE is set: hit = load, miss = compute+save.
QuadraticCensus enumerate_quadratic_cached(i64 X, SignClass sign);
CubicCensus enumerate_cubic_cached(i64 X, bool negative);

}  // namespace classieve
