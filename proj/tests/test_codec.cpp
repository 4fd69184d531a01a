#include <bitset>
#include <set>

#include "doctest.h"

#include "hpauth/codec.hpp"
#include "hpauth/error.hpp"
#include "hpauth/random.hpp"

using namespace hpauth;

namespace {

/// Independent expansion through std::bitset.
std::string ascii_bits(std::string_view s) {
  std::string out;
  for (char c : s) out += std::bitset<8>(static_cast<unsigned char>(c)).to_string();
  return out;
}

std::string random_printable(std::size_t len, Rng& rng) {
  std::string s(len, ' ');
  for (auto& c : s) c = static_cast<char>(0x20 + rng.below(95));
  return s;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected hpauth::Error");
  return ErrorCode::BadParams;
}

}  // namespace

TEST_CASE("char_to_bits") {
  CHECK(char_to_bits('A') == "01000001");
  CHECK(char_to_bits('a') == "01100001");
  CHECK(char_to_bits('\0') == "00000000");
  CHECK(code_of([] { char_to_bits(static_cast<char>(0xC3)); }) == ErrorCode::NonAscii);
  for (int c = 0; c < 128; ++c) CHECK(char_to_bits(static_cast<char>(c)) == ascii_bits(std::string(1, static_cast<char>(c))));
}

TEST_CASE("merge") {
  const auto mc = merge("ab", "cd", 48);
  CHECK(mc.merged_bits == ascii_bits(std::string("ab\x1F" "cd\0", 6)));
  CHECK(mc.username == "ab");
  CHECK(mc.password == "cd");

  CHECK(merge("ab", "c", 64).merged_bits != merge("a", "bc", 64).merged_bits);
  CHECK(merge("", "", 8).merged_bits == "00011111");

  CHECK(code_of([] { merge("abc", "de", 40); }) == ErrorCode::TooLong);
  CHECK_NOTHROW(merge("abc", "d", 40));
  CHECK(code_of([] { merge("a\tb", "x", 64); }) == ErrorCode::NonAscii);
  CHECK(code_of([] { merge("a", "\xE9", 64); }) == ErrorCode::NonAscii);
  CHECK(code_of([] { merge("a\x1F", "x", 64); }) == ErrorCode::DelimiterInInput);
}

TEST_CASE("merge is injective over a collision search") {
  // every (u, p) over a 3-letter alphabet with |u| + |p| <= 4
  const std::string alphabet = "ab\x7E";
  std::vector<std::string> words = {""};
  for (int len = 1; len <= 4; ++len) {
    const std::size_t start = words.size();
    for (std::size_t i = 0; i < start; ++i) {
      if (words[i].size() != static_cast<std::size_t>(len - 1)) continue;
      for (char c : alphabet) words.push_back(words[i] + c);
    }
  }
  std::set<std::string> seen;
  std::size_t pairs = 0;
  for (const auto& u : words)
    for (const auto& p : words)
      if (u.size() + p.size() <= 4) {
        ++pairs;
        CHECK(seen.insert(merge(u, p, 48).merged_bits).second);
      }
  CHECK(seen.size() == pairs);
}

TEST_CASE("unmerge") {
  CHECK(unmerge(merge("ab", "cd", 48)) == std::pair<std::string, std::string>{"ab", "cd"});
  CHECK(unmerge(merge("", "", 8)) == std::pair<std::string, std::string>{"", ""});
  CHECK(code_of([] { unmerge(std::string(64, '0')); }) == ErrorCode::MalformedPattern);
  CHECK(code_of([] { unmerge(ascii_bits("a\x1F\x1F" "b")); }) == ErrorCode::MalformedPattern);
  CHECK(code_of([] { unmerge(ascii_bits(std::string("a\x1F" "b\0c", 5))); }) == ErrorCode::MalformedPattern);
  CHECK(code_of([] { unmerge(ascii_bits("a\x1F\x01")); }) == ErrorCode::MalformedPattern);
  CHECK(code_of([] { unmerge("0101"); }) == ErrorCode::MalformedPattern);
  CHECK(code_of([] { unmerge("0a011111"); }) == ErrorCode::MalformedPattern);
}

TEST_CASE("merge/unmerge round trip over random credentials") {
  Rng rng(2718);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t m = 8 * (1 + rng.below(40));
    const std::size_t budget = m / 8 - 1;
    const std::size_t ulen = rng.below(budget + 1);
    const std::size_t plen = rng.below(budget - ulen + 1);
    const std::string u = random_printable(ulen, rng);
    const std::string p = random_printable(plen, rng);
    const auto mc = merge(u, p, m);
    REQUIRE(mc.merged_bits.size() == m);
    CHECK(unmerge(mc) == std::pair{u, p});
  }
}

TEST_CASE("merge_bits places arbitrary secret bits after the delimiter") {
  const std::string secret = ascii_bits(std::string("\x1F\x00\xFF", 3));
  const auto bits = merge_bits("u", secret, 48);
  CHECK(bits == ascii_bits("u\x1F") + secret + std::string(48 - 16 - 24, '0'));
  CHECK(code_of([&] { merge_bits("u", secret, 32); }) == ErrorCode::TooLong);
  CHECK(code_of([] { merge_bits("u", "012", 64); }) == ErrorCode::MalformedPattern);
}

TEST_CASE("binary/bipolar conversion") {
  CHECK(binary_to_bipolar("0") == BipolarPattern{-1});
  CHECK(binary_to_bipolar("1") == BipolarPattern{1});
  CHECK(binary_to_bipolar("0110") == BipolarPattern{-1, 1, 1, -1});
  CHECK(bipolar_to_binary(BipolarPattern{-1, 1}) == "01");
  CHECK(bipolar_to_binary(BipolarPattern{}) == "");
  CHECK(binary_to_bipolar("").empty());

  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::string bits(64, '0');
    for (auto& b : bits) b = rng.coin() ? '1' : '0';
    CHECK(bipolar_to_binary(binary_to_bipolar(bits)) == bits);
    const BipolarPattern x = BipolarPattern::random(1 + rng.below(100), rng);
    CHECK(binary_to_bipolar(bipolar_to_binary(x)) == x);
  }
}
