#include "classieve/cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

namespace classieve {

namespace {

constexpr std::uint32_t kVersion = 1;

void put_bytes(std::ofstream& os, std::uint64_t v, int n) {
  for (int i = 0; i < n; ++i) {
    const char byte = static_cast<char>((v >> (8 * i)) & 0xff);
    os.put(byte);
  }
}

std::uint64_t get_bytes(std::ifstream& is, int n) {
  std::uint64_t v = 0;
  for (int i = 0; i < n; ++i) {
    const int byte = is.get();
    if (byte == std::ifstream::traits_type::eof())
      throw std::runtime_error("census cache: truncated file");
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(byte))
         << (8 * i);
  }
  return v;
}

void put_i64(std::ofstream& os, i64 v) {
  put_bytes(os, static_cast<std::uint64_t>(v), 8);
}

i64 get_i64(std::ifstream& is) {
  return static_cast<i64>(get_bytes(is, 8));
}

struct Header {
  std::uint64_t X = 0;
  std::uint8_t sign = 0;
  std::uint64_t count = 0;
};

void write_header(std::ofstream& os, const char magic[4], const Header& h) {
  os.write(magic, 4);
  put_bytes(os, kVersion, 4);
  put_bytes(os, h.X, 8);
  os.put(static_cast<char>(h.sign));
  put_bytes(os, h.count, 8);
}

Header read_header(std::ifstream& is, const char magic[4]) {
  char m[4];
  is.read(m, 4);
  if (!is || std::string(m, 4) != std::string(magic, 4))
    throw std::runtime_error("census cache: bad magic");
  const auto version = get_bytes(is, 4);
  if (version != kVersion)
    throw std::runtime_error("census cache: unsupported version");
  Header h;
  h.X = get_bytes(is, 8);
  const int sign = is.get();
  if (sign == std::ifstream::traits_type::eof())
    throw std::runtime_error("census cache: truncated file");
  h.sign = static_cast<std::uint8_t>(sign);
  h.count = get_bytes(is, 8);
  return h;
}

void check_trailing(std::ifstream& is, const std::string& path) {
  if (is.get() != std::ifstream::traits_type::eof())
    throw std::runtime_error("census cache: trailing bytes in " + path);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("census cache: cannot write " + path);
  return os;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("census cache: cannot read " + path);
  return is;
}

}  // namespace

std::string cache_dir() {
  const char* dir = std::getenv("CLASS_SIEVE_CACHE");
  return dir == nullptr ? std::string() : std::string(dir);
}

std::string quadratic_cache_name(i64 X, SignClass sign) {
  static const char* tag[] = {"real", "imag", "both"};
  return "qcen_" + std::string(tag[static_cast<int>(sign)]) + "_" +
         std::to_string(X) + ".qcen";
}

std::string cubic_cache_name(i64 X, bool negative) {
  return std::string("ccen_") + (negative ? "neg" : "pos") + "_" +
         std::to_string(X) + ".ccen";
}

void save_quadratic_census(const QuadraticCensus& census,
                           const std::string& path) {
  auto os = open_out(path);
  write_header(os, "QCEN",
               {static_cast<std::uint64_t>(census.X),
                static_cast<std::uint8_t>(census.sign), census.D.size()});
  for (i64 D : census.D) put_i64(os, D);
  if (!os) throw std::runtime_error("census cache: write failed " + path);
}

QuadraticCensus load_quadratic_census(const std::string& path) {
  auto is = open_in(path);
  const Header h = read_header(is, "QCEN");
  if (h.sign > 2) throw std::runtime_error("census cache: bad sign byte");
  QuadraticCensus census;
  census.X = static_cast<i64>(h.X);
  census.sign = static_cast<SignClass>(h.sign);
  census.D.reserve(h.count);
  for (std::uint64_t i = 0; i < h.count; ++i) census.D.push_back(get_i64(is));
  check_trailing(is, path);
  return census;
}

void save_cubic_census(const CubicCensus& census, const std::string& path) {
  auto os = open_out(path);
  write_header(os, "CCEN",
               {static_cast<std::uint64_t>(census.X),
                static_cast<std::uint8_t>(census.negative ? 1 : 0),
                census.fields.size()});
  for (const auto& fld : census.fields) {
    put_i64(os, fld.f.a);
    put_i64(os, fld.f.b);
    put_i64(os, fld.f.c);
    put_i64(os, fld.f.d);
    put_i64(os, fld.disc);
  }
  if (!os) throw std::runtime_error("census cache: write failed " + path);
}

CubicCensus load_cubic_census(const std::string& path) {
  auto is = open_in(path);
  const Header h = read_header(is, "CCEN");
  if (h.sign > 1) throw std::runtime_error("census cache: bad sign byte");
  CubicCensus census;
  census.X = static_cast<i64>(h.X);
  census.negative = (h.sign == 1);
  census.fields.reserve(h.count);
  for (std::uint64_t i = 0; i < h.count; ++i) {
    CubicField fld;
    fld.f.a = get_i64(is);
    fld.f.b = get_i64(is);
    fld.f.c = get_i64(is);
    fld.f.d = get_i64(is);
    fld.disc = get_i64(is);
    census.fields.push_back(fld);
  }
  check_trailing(is, path);
  return census;
}

QuadraticCensus enumerate_quadratic_cached(i64 X, SignClass sign) {
  const std::string dir = cache_dir();
  if (dir.empty()) return enumerate_quadratic(X, sign);
  const auto path =
      (std::filesystem::path(dir) / quadratic_cache_name(X, sign)).string();
  if (std::filesystem::exists(path)) {
    auto census = load_quadratic_census(path);
    if (census.X != X || census.sign != sign)
      throw std::runtime_error("census cache: header mismatch in " + path);
    return census;
  }
  auto census = enumerate_quadratic(X, sign);
  std::filesystem::create_directories(dir);
  save_quadratic_census(census, path);
  return census;
}

CubicCensus enumerate_cubic_cached(i64 X, bool negative) {
  const std::string dir = cache_dir();
  if (dir.empty()) return enumerate_cubic(X, negative);
  const auto path =
      (std::filesystem::path(dir) / cubic_cache_name(X, negative)).string();
  if (std::filesystem::exists(path)) {
    auto census = load_cubic_census(path);
    if (census.X != X || census.negative != negative)
      throw std::runtime_error("census cache: header mismatch in " + path);
    return census;
  }
  auto census = enumerate_cubic(X, negative);
  std::filesystem::create_directories(dir);
  save_cubic_census(census, path);
  return census;
}

}  // namespace classieve
