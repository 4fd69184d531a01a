#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hpauth/codec.hpp"

namespace hpauth {

/// Fixed invertible linear map over GF(2)^m, A = L * U with random
/// unit-triangular factors drawn from a seed.
///
/// Merged credentials share their NUL padding, their ASCII high bits and
/// often long username prefixes, so their bipolar images are strongly
/// correlated and Hebbian crosstalk destroys them at a handful of users.
/// A maps any nonzero difference to a pseudo-random one, which restores the
/// near-orthogonality recall relies on. It is a bijection, so distinct
/// credentials still give distinct patterns.
class PatternScrambler {
 public:
  PatternScrambler(std::size_t m, std::uint64_t seed);

  /// The map used by every AuthStore of width m.
  static const PatternScrambler& for_width(std::size_t m);

  std::size_t size() const noexcept { return m_; }

  BitString scramble(const BitString& bits) const;
  BitString unscramble(const BitString& bits) const;

 private:
  using Words = std::vector<std::uint64_t>;

  Words pack(const BitString& bits) const;
  BitString unpack(const Words& words) const;
  bool row_parity(const Words& rows, std::size_t i, const Words& v) const;

  std::size_t m_;
  std::size_t words_;
  Words lower_;  // m rows of words_ each, unit diagonal
  Words upper_;
};

}  // namespace hpauth
