#pragma once

#include <bit>
#include <chrono>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include <zlib.h>

#include "roast/core/band_split.hpp"
#include "roast/core/error.hpp"
#include "roast/transform/roast_basis.hpp"

namespace roast {

// Layout: "ROAST\0" | u16 version | u32 header length | JSON header |
// V column-major, complex128 interleaved re/im | u32 CRC-32 of everything
// before it. Integers and doubles are little-endian.
inline constexpr char kBasisMagic[6] = {'R', 'O', 'A', 'S', 'T', '\0'};
inline constexpr std::uint16_t kBasisFormatVersion = 1;

namespace detail {

inline void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}
inline void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
}
inline void put_f64(std::vector<std::uint8_t>& out, double d) {
  const auto v = std::bit_cast<std::uint64_t>(d);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
}
inline std::uint64_t get_le(const std::uint8_t* p, int bytes) {
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  return v;
}
inline std::uint32_t crc32_of(const std::uint8_t* data, std::size_t size) {
  uLong crc = ::crc32(0L, Z_NULL, 0);
  while (size > 0) {
    const auto chunk = static_cast<uInt>(std::min<std::size_t>(size, 1u << 30));
    crc = ::crc32(crc, data, chunk);
    data += chunk;
    size -= chunk;
  }
  return static_cast<std::uint32_t>(crc);
}

}  // namespace detail

/// Byte encoding of a basis. `created_unix_seconds` defaults to now; pass a
/// fixed value for reproducible files.
inline std::vector<std::uint8_t> serialize_basis(const RoastBasis& basis,
                                                 std::optional<std::int64_t> created_unix_seconds = std::nullopt) {
  nlohmann::json header;
  header["n"] = basis.n();
  header["w"] = basis.w();
  header["r"] = basis.r();
  header["method"] = to_string(basis.method());
  if (basis.sketch_width()) header["p"] = *basis.sketch_width();
  if (basis.seed()) header["seed"] = *basis.seed();
  header["created_unix_seconds"] =
      created_unix_seconds.value_or(std::chrono::duration_cast<std::chrono::seconds>(
                                        std::chrono::system_clock::now().time_since_epoch())
                                        .count());
  const std::string text = header.dump();

  std::vector<std::uint8_t> out(std::begin(kBasisMagic), std::end(kBasisMagic));
  detail::put_u16(out, kBasisFormatVersion);
  detail::put_u32(out, static_cast<std::uint32_t>(text.size()));
  out.insert(out.end(), text.begin(), text.end());
  const CMat& v = basis.v();
  out.reserve(out.size() + static_cast<std::size_t>(v.size()) * 16 + 4);
  for (Index j = 0; j < v.cols(); ++j)
    for (Index i = 0; i < v.rows(); ++i) {
      detail::put_f64(out, v(i, j).real());
      detail::put_f64(out, v(i, j).imag());
    }
  detail::put_u32(out, detail::crc32_of(out.data(), out.size()));
  return out;
}

inline RoastBasis deserialize_basis(const std::uint8_t* data, std::size_t size) {
  constexpr std::size_t fixed = sizeof(kBasisMagic) + 2 + 4;
  if (size < fixed + 4) throw CorruptInput("basis stream truncated before the header");
  if (std::memcmp(data, kBasisMagic, sizeof(kBasisMagic)) != 0) throw CorruptInput("bad magic bytes");
  const auto version = static_cast<std::uint16_t>(detail::get_le(data + 6, 2));
  if (version != kBasisFormatVersion) throw CorruptInput("unsupported basis format version " + std::to_string(version));
  const auto header_len = static_cast<std::size_t>(detail::get_le(data + 8, 4));
  if (header_len > size - fixed - 4) throw CorruptInput("basis stream truncated inside the header");

  const std::uint32_t stored_crc = static_cast<std::uint32_t>(detail::get_le(data + size - 4, 4));
  if (detail::crc32_of(data, size - 4) != stored_crc) throw CorruptInput("checksum mismatch");

  nlohmann::json header;
  try {
    header = nlohmann::json::parse(data + fixed, data + fixed + header_len);
  } catch (const nlohmann::json::exception& e) {
    throw CorruptInput(std::string("malformed header: ") + e.what());
  }
  long n = 0, r = 0;
  double w = 0.0;
  RoastMethod method{};
  std::optional<long> p;
  std::optional<std::uint64_t> seed;
  try {
    n = header.at("n").get<long>();
    w = header.at("w").get<double>();
    r = header.at("r").get<long>();
    method = parse_roast_method(header.at("method").get<std::string>());
    if (header.contains("p")) p = header.at("p").get<long>();
    if (header.contains("seed")) seed = header.at("seed").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw CorruptInput(std::string("header field missing or mistyped: ") + e.what());
  }
  detail::require(n >= 2, "basis header: n must be >= 2");
  DftBandSplit split = build_band_split(n, w);
  detail::require(r >= 0 && r <= split.high_size(), "basis header: r exceeds the high-band width");

  const std::size_t rows = static_cast<std::size_t>(split.high_size());
  const std::size_t payload = rows * static_cast<std::size_t>(r) * 16;
  if (fixed + header_len + payload + 4 != size) throw CorruptInput("payload size disagrees with header dimensions");
  CMat v(static_cast<Index>(rows), r);
  const std::uint8_t* q = data + fixed + header_len;
  for (Index j = 0; j < r; ++j)
    for (Index i = 0; i < static_cast<Index>(rows); ++i) {
      const double re = std::bit_cast<double>(detail::get_le(q, 8));
      const double im = std::bit_cast<double>(detail::get_le(q + 8, 8));
      v(i, j) = Complex(re, im);
      q += 16;
    }
  return RoastBasis(std::move(split), std::move(v), method, p, seed);
}

inline RoastBasis deserialize_basis(const std::vector<std::uint8_t>& bytes) {
  return deserialize_basis(bytes.data(), bytes.size());
}

inline void save_basis(const RoastBasis& basis, const std::string& path,
                       std::optional<std::int64_t> created_unix_seconds = std::nullopt) {
  const auto bytes = serialize_basis(basis, created_unix_seconds);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open '" + path + "' for writing");
  f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw Error("write to '" + path + "' failed");
}

inline RoastBasis load_basis(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open '" + path + "' for reading");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  return deserialize_basis(bytes);
}

}  // namespace roast
