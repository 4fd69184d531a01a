#include "hpauth/snapshot.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <ostream>

#include "hpauth/error.hpp"

namespace hpauth {

namespace wire {

namespace {

template <typename T>
void put_le(std::ostream& out, T v) {
  std::array<char, sizeof(T)> bytes{};
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    bytes[i] = static_cast<char>((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xFF);
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

template <typename T>
T get_le(std::istream& in) {
  std::array<unsigned char, sizeof(T)> bytes{};
  in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (in.gcount() != static_cast<std::streamsize>(bytes.size())) {
    throw Error(ErrorCode::CorruptFile, "unexpected end of file");
  }
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= std::uint64_t{bytes[i]} << (8 * i);
  return static_cast<T>(v);
}

}  // namespace

void put_u8(std::ostream& out, std::uint8_t v) { put_le(out, v); }
void put_u16(std::ostream& out, std::uint16_t v) { put_le(out, v); }
void put_u32(std::ostream& out, std::uint32_t v) { put_le(out, v); }
void put_u64(std::ostream& out, std::uint64_t v) { put_le(out, v); }
void put_i32(std::ostream& out, std::int32_t v) { put_le(out, static_cast<std::uint32_t>(v)); }

std::uint8_t get_u8(std::istream& in) { return get_le<std::uint8_t>(in); }
std::uint16_t get_u16(std::istream& in) { return get_le<std::uint16_t>(in); }
std::uint32_t get_u32(std::istream& in) { return get_le<std::uint32_t>(in); }
std::uint64_t get_u64(std::istream& in) { return get_le<std::uint64_t>(in); }
std::int32_t get_i32(std::istream& in) { return static_cast<std::int32_t>(get_le<std::uint32_t>(in)); }

std::string get_bytes(std::istream& in, std::size_t n) {
  std::string s(n, '\0');
  in.read(s.data(), static_cast<std::streamsize>(n));
  if (in.gcount() != static_cast<std::streamsize>(n)) {
    throw Error(ErrorCode::CorruptFile, "unexpected end of file");
  }
  return s;
}

}  // namespace wire

void write_snapshot(std::ostream& out, const WeightMatrix& w) {
  out.write(kSnapshotMagic, sizeof kSnapshotMagic);
  wire::put_u32(out, static_cast<std::uint32_t>(w.size()));
  wire::put_u32(out, w.pattern_count());
  wire::put_i32(out, w.alpha());
  for (std::int32_t e : w.entries()) wire::put_i32(out, e);
}

WeightMatrix read_snapshot(std::istream& in) {
  const std::string magic = wire::get_bytes(in, sizeof kSnapshotMagic);
  if (magic != std::string_view(kSnapshotMagic, sizeof kSnapshotMagic)) {
    throw Error(ErrorCode::CorruptFile, "bad magic, not an HPN1 snapshot");
  }
  const std::uint32_t m = wire::get_u32(in);
  const std::uint32_t pattern_count = wire::get_u32(in);
  const std::int32_t alpha = wire::get_i32(in);
  if (m == 0 || m > (1u << 15)) {
    throw Error(ErrorCode::CorruptFile, "implausible network size " + std::to_string(m));
  }
  std::vector<std::int32_t> entries(std::size_t{m} * m);
  for (auto& e : entries) e = wire::get_i32(in);
  return WeightMatrix::from_entries(m, alpha, pattern_count, std::move(entries));
}

void save_network(const std::filesystem::path& path, const WeightMatrix& w) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot open " + path.string() + " for writing");
  write_snapshot(out, w);
  if (!out.flush()) throw Error(ErrorCode::IoFailure, "write to " + path.string() + " failed");
}

WeightMatrix load_network(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + path.string());
  return read_snapshot(in);
}

}  // namespace hpauth
