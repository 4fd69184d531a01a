#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "hpauth/network.hpp"

namespace hpauth {

/// Network snapshot layout, all integers little-endian:
///
///   "HPN1"            4 bytes magic
///   m                 u32
///   pattern_count     u32
///   alpha             i32
///   entries           m*m i32, row-major
///
/// Readers reject anything that is not symmetric with a zero diagonal.
inline constexpr char kSnapshotMagic[4] = {'H', 'P', 'N', '1'};

void write_snapshot(std::ostream& out, const WeightMatrix& w);
/// Throws Error(CorruptFile) on bad magic, truncation or broken invariants.
WeightMatrix read_snapshot(std::istream& in);

void save_network(const std::filesystem::path& path, const WeightMatrix& w);
WeightMatrix load_network(const std::filesystem::path& path);

namespace wire {

// Little-endian primitives shared with the store file format.
void put_u8(std::ostream& out, std::uint8_t v);
void put_u16(std::ostream& out, std::uint16_t v);
void put_u32(std::ostream& out, std::uint32_t v);
void put_u64(std::ostream& out, std::uint64_t v);
void put_i32(std::ostream& out, std::int32_t v);

std::uint8_t get_u8(std::istream& in);
std::uint16_t get_u16(std::istream& in);
std::uint32_t get_u32(std::istream& in);
std::uint64_t get_u64(std::istream& in);
std::int32_t get_i32(std::istream& in);
/// Reads exactly n bytes.
std::string get_bytes(std::istream& in, std::size_t n);

}  // namespace wire

}  // namespace hpauth
