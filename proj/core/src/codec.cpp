#include "hpauth/codec.hpp"

#include <algorithm>
#include <string>

#include "hpauth/error.hpp"

namespace hpauth {

namespace {

void append_byte(BitString& out, unsigned char byte) {
  for (int bit = 7; bit >= 0; --bit) out.push_back(((byte >> bit) & 1) ? '1' : '0');
}

void check_field(std::string_view field, const char* name) {
  if (field.find(kDelimiter) != std::string_view::npos) {
    throw Error(ErrorCode::DelimiterInInput, std::string(name) + " contains the delimiter byte");
  }
  if (!is_printable_ascii(field)) {
    throw Error(ErrorCode::NonAscii, std::string(name) + " must be printable ASCII");
  }
}

void check_bits(std::string_view bits) {
  if (bits.find_first_not_of("01") != std::string_view::npos) {
    throw Error(ErrorCode::MalformedPattern, "bit string contains characters other than 0/1");
  }
}

}  // namespace

bool is_printable_ascii(std::string_view s) noexcept {
  return std::all_of(s.begin(), s.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return u >= 0x20 && u <= 0x7E;
  });
}

BitString char_to_bits(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (u > 0x7F) throw Error(ErrorCode::NonAscii, "character outside ASCII");
  BitString out;
  append_byte(out, u);
  return out;
}

MergedCredential merge(std::string_view username, std::string_view password, std::size_t m) {
  check_field(username, "username");
  check_field(password, "password");
  const std::size_t needed = 8 * (username.size() + password.size() + 1);
  if (needed > m) {
    throw Error(ErrorCode::TooLong, "credential needs " + std::to_string(needed) +
                                        " bits but the pattern holds " + std::to_string(m));
  }
  BitString bits;
  bits.reserve(m);
  for (char c : username) append_byte(bits, static_cast<unsigned char>(c));
  append_byte(bits, kDelimiter);
  for (char c : password) append_byte(bits, static_cast<unsigned char>(c));
  bits.resize(m, '0');
  return {std::string(username), std::string(password), std::move(bits)};
}

BitString merge_bits(std::string_view username, const BitString& secret_bits, std::size_t m) {
  check_field(username, "username");
  check_bits(secret_bits);
  const std::size_t needed = 8 * (username.size() + 1) + secret_bits.size();
  if (needed > m) {
    throw Error(ErrorCode::TooLong, "credential needs " + std::to_string(needed) +
                                        " bits but the pattern holds " + std::to_string(m));
  }
  BitString bits;
  bits.reserve(m);
  for (char c : username) append_byte(bits, static_cast<unsigned char>(c));
  append_byte(bits, kDelimiter);
  bits += secret_bits;
  bits.resize(m, '0');
  return bits;
}

std::pair<std::string, std::string> unmerge(const BitString& merged_bits) {
  check_bits(merged_bits);
  if (merged_bits.size() % 8 != 0) {
    throw Error(ErrorCode::MalformedPattern, "merged bit length is not a whole number of bytes");
  }
  std::string bytes;
  for (std::size_t i = 0; i < merged_bits.size(); i += 8) {
    unsigned char b = 0;
    for (std::size_t k = 0; k < 8; ++k) b = static_cast<unsigned char>((b << 1) | (merged_bits[i + k] == '1'));
    bytes.push_back(static_cast<char>(b));
  }
  const std::size_t end = std::min(bytes.find('\0'), bytes.size());
  if (bytes.find_first_not_of('\0', end) != std::string::npos) {
    throw Error(ErrorCode::MalformedPattern, "non-NUL byte inside the padding");
  }
  const std::string_view body(bytes.data(), end);
  const std::size_t delim = body.find(kDelimiter);
  if (delim == std::string_view::npos) {
    throw Error(ErrorCode::MalformedPattern, "no delimiter in merged credential");
  }
  if (body.find(kDelimiter, delim + 1) != std::string_view::npos) {
    throw Error(ErrorCode::MalformedPattern, "more than one delimiter in merged credential");
  }
  const auto username = body.substr(0, delim);
  const auto password = body.substr(delim + 1);
  if (!is_printable_ascii(username) || !is_printable_ascii(password)) {
    throw Error(ErrorCode::MalformedPattern, "non-printable byte in merged credential");
  }
  return {std::string(username), std::string(password)};
}

BipolarPattern binary_to_bipolar(std::string_view bits) {
  check_bits(bits);
  std::vector<std::int8_t> v(bits.size());
  std::transform(bits.begin(), bits.end(), v.begin(),
                 [](char b) { return static_cast<std::int8_t>(2 * (b - '0') - 1); });
  return BipolarPattern(std::move(v));
}

BitString bipolar_to_binary(const BipolarPattern& x) {
  BitString out;
  out.reserve(x.size());
  for (std::int8_t v : x.values()) out.push_back(v > 0 ? '1' : '0');
  return out;
}

}  // namespace hpauth
