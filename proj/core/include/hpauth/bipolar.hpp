#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "hpauth/random.hpp"

namespace hpauth {

/// A vector over {-1, +1}. Construction rejects any other value.
class BipolarPattern {
 public:
  BipolarPattern() = default;
  explicit BipolarPattern(std::vector<std::int8_t> values);
  BipolarPattern(std::initializer_list<int> values);

  /// Uniform random pattern of length m.
  static BipolarPattern random(std::size_t m, Rng& rng);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  std::int8_t operator[](std::size_t i) const { return values_[i]; }
  std::span<const std::int8_t> values() const noexcept { return values_; }

  BipolarPattern negated() const;
  /// Copy with unit i flipped.
  BipolarPattern flipped(std::size_t i) const;

  friend bool operator==(const BipolarPattern&, const BipolarPattern&) = default;

 private:
  std::vector<std::int8_t> values_;
};

std::size_t hamming_distance(const BipolarPattern& a, const BipolarPattern& b);

}  // namespace hpauth
