#include "hpauth/scrambler.hpp"

#include <bit>
#include <map>
#include <memory>
#include <mutex>

#include "hpauth/error.hpp"
#include "hpauth/random.hpp"

namespace hpauth {

namespace {

constexpr std::uint64_t kStoreScramblerSeed = 0x48504E31;  // "HPN1"

void set_bit(std::uint64_t* row, std::size_t j) { row[j / 64] |= std::uint64_t{1} << (j % 64); }

}  // namespace

PatternScrambler::PatternScrambler(std::size_t m, std::uint64_t seed)
    : m_(m), words_((m + 63) / 64), lower_(m * words_, 0), upper_(m * words_, 0) {
  Rng rng(seed);
  for (std::size_t i = 0; i < m_; ++i) {
    std::uint64_t* lo = lower_.data() + i * words_;
    std::uint64_t* up = upper_.data() + i * words_;
    for (std::size_t j = 0; j < m_; ++j) {
      if (j == i) {
        set_bit(lo, j);
        set_bit(up, j);
      } else if (rng.coin()) {
        set_bit(j < i ? lo : up, j);
      }
    }
  }
}

const PatternScrambler& PatternScrambler::for_width(std::size_t m) {
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<PatternScrambler>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[m];
  if (!slot) slot = std::make_unique<PatternScrambler>(m, derive_seed(kStoreScramblerSeed, m));
  return *slot;
}

PatternScrambler::Words PatternScrambler::pack(const BitString& bits) const {
  if (bits.size() != m_) {
    throw Error(ErrorCode::LengthMismatch, "scrambler: bit string length does not match width");
  }
  Words v(words_, 0);
  for (std::size_t j = 0; j < m_; ++j) {
    if (bits[j] == '1') {
      set_bit(v.data(), j);
    } else if (bits[j] != '0') {
      throw Error(ErrorCode::MalformedPattern, "scrambler: bit string contains non-binary characters");
    }
  }
  return v;
}

BitString PatternScrambler::unpack(const Words& words) const {
  BitString out(m_, '0');
  for (std::size_t j = 0; j < m_; ++j) {
    if ((words[j / 64] >> (j % 64)) & 1u) out[j] = '1';
  }
  return out;
}

bool PatternScrambler::row_parity(const Words& rows, std::size_t i, const Words& v) const {
  const std::uint64_t* row = rows.data() + i * words_;
  int ones = 0;
  for (std::size_t k = 0; k < words_; ++k) ones += std::popcount(row[k] & v[k]);
  return (ones & 1) != 0;
}

BitString PatternScrambler::scramble(const BitString& bits) const {
  const Words b = pack(bits);
  Words y(words_, 0);
  for (std::size_t i = 0; i < m_; ++i) {
    if (row_parity(upper_, i, b)) set_bit(y.data(), i);
  }
  Words z(words_, 0);
  for (std::size_t i = 0; i < m_; ++i) {
    if (row_parity(lower_, i, y)) set_bit(z.data(), i);
  }
  return unpack(z);
}

BitString PatternScrambler::unscramble(const BitString& bits) const {
  const Words z = pack(bits);
  // forward substitution through L; y_i is still zero when row i is read
  Words y(words_, 0);
  for (std::size_t i = 0; i < m_; ++i) {
    const bool zi = (z[i / 64] >> (i % 64)) & 1u;
    if (zi != row_parity(lower_, i, y)) set_bit(y.data(), i);
  }
  // back substitution through U
  Words b(words_, 0);
  for (std::size_t i = m_; i-- > 0;) {
    const bool yi = (y[i / 64] >> (i % 64)) & 1u;
    if (yi != row_parity(upper_, i, b)) set_bit(b.data(), i);
  }
  return unpack(b);
}

}  // namespace hpauth
