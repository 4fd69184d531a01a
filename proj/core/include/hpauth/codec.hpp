#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "hpauth/bipolar.hpp"

namespace hpauth {

/// Separates username and password inside a merged credential (ASCII US).
inline constexpr char kDelimiter = '\x1F';

/// A string over {'0', '1'}, most significant bit first.
using BitString = std::string;

struct MergedCredential {
  std::string username;
  std::string password;
  BitString merged_bits;
};

bool is_printable_ascii(std::string_view s) noexcept;

/// Big-endian 8-bit expansion of an ASCII code point. Error(NonAscii) above 0x7F.
BitString char_to_bits(char c);

/// username || US || password || NUL padding, as exactly m bits.
MergedCredential merge(std::string_view username, std::string_view password, std::size_t m);

/// Bit-level merge for graphical secrets: username || US || secret_bits,
/// zero-padded to m. secret_bits may hold any byte values.
BitString merge_bits(std::string_view username, const BitString& secret_bits, std::size_t m);

/// Inverse of merge. Error(MalformedPattern) unless the bytes before the
/// NUL padding are printable with exactly one delimiter.
std::pair<std::string, std::string> unmerge(const BitString& merged_bits);
inline std::pair<std::string, std::string> unmerge(const MergedCredential& merged) {
  return unmerge(merged.merged_bits);
}

/// 0 -> -1, 1 -> +1 (that is, 2X - 1).
BipolarPattern binary_to_bipolar(std::string_view bits);
BitString bipolar_to_binary(const BipolarPattern& x);

}  // namespace hpauth
