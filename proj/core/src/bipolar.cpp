#include "hpauth/bipolar.hpp"

#include <string>

#include "hpauth/error.hpp"

namespace hpauth {

BipolarPattern::BipolarPattern(std::vector<std::int8_t> values)
    : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] != 1 && values_[i] != -1) {
      throw Error(ErrorCode::MalformedPattern,
                  "bipolar pattern entry " + std::to_string(i) + " is " +
                      std::to_string(values_[i]) + ", expected -1 or +1");
    }
  }
}

BipolarPattern::BipolarPattern(std::initializer_list<int> values)
    : BipolarPattern([&] {
        std::vector<std::int8_t> v;
        v.reserve(values.size());
        for (int x : values) {
          // out-of-range values survive the narrowing as something other
          // than +-1 and are rejected by the delegated constructor
          v.push_back(static_cast<std::int8_t>(x == 1 || x == -1 ? x : 0));
        }
        return v;
      }()) {}

BipolarPattern BipolarPattern::random(std::size_t m, Rng& rng) {
  std::vector<std::int8_t> v(m);
  for (auto& x : v) x = rng.coin() ? 1 : -1;
  return BipolarPattern(std::move(v));
}

BipolarPattern BipolarPattern::negated() const {
  std::vector<std::int8_t> v(values_);
  for (auto& x : v) x = static_cast<std::int8_t>(-x);
  return BipolarPattern(std::move(v));
}

BipolarPattern BipolarPattern::flipped(std::size_t i) const {
  std::vector<std::int8_t> v(values_);
  v.at(i) = static_cast<std::int8_t>(-v[i]);
  return BipolarPattern(std::move(v));
}

std::size_t hamming_distance(const BipolarPattern& a, const BipolarPattern& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::LengthMismatch, "hamming_distance: lengths differ");
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

}  // namespace hpauth
