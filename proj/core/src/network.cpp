#include "hpauth/network.hpp"

#include <cassert>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

#include "hpauth/error.hpp"

namespace hpauth {

namespace {

void require_length(const BipolarPattern& x, std::size_t m, const char* op) {
  if (x.size() != m) {
    throw Error(ErrorCode::LengthMismatch,
                std::string(op) + ": pattern length " + std::to_string(x.size()) +
                    " does not match network size " + std::to_string(m));
  }
}

void require_room(std::uint32_t stored, std::size_t extra, const NetworkConfig& config,
                  const char* op) {
  const std::size_t cap = capacity(config);
  if (stored + extra > cap) {
    throw Error(ErrorCode::CapacityExceeded,
                std::string(op) + ": " + std::to_string(stored + extra) +
                    " patterns exceed capacity " + std::to_string(cap) + " (m=" +
                    std::to_string(config.m) + ")");
  }
}

}  // namespace

void NetworkConfig::validate() const {
  if (m == 0) throw Error(ErrorCode::BadConfig, "pattern length m must be positive");
  if (m > (std::size_t{1} << 15)) {
    throw Error(ErrorCode::BadConfig, "pattern length m exceeds 32768");
  }
  if (alpha < 1) throw Error(ErrorCode::BadConfig, "alpha must be positive");
  if (!(capacity_factor > 0.0 && capacity_factor <= 1.0)) {
    throw Error(ErrorCode::BadConfig, "capacity_factor must lie in (0, 1]");
  }
  if (!bias.empty() && bias.size() != m) {
    throw Error(ErrorCode::BadConfig, "bias must be empty or have length m");
  }
  if (hybrid_group_size == 0) {
    throw Error(ErrorCode::BadConfig, "hybrid_group_size must be positive");
  }
}

std::size_t capacity(const NetworkConfig& config) {
  // the epsilon absorbs representation error such as 0.15 * 100 = 14.999...
  const double raw = config.capacity_factor * static_cast<double>(config.m);
  return raw <= 0.0 ? 0 : static_cast<std::size_t>(std::floor(raw + 1e-9));
}

WeightMatrix::WeightMatrix(std::size_t m, std::int32_t alpha)
    : m_(m), alpha_(alpha), entries_(m * m, 0) {}

WeightMatrix WeightMatrix::from_entries(std::size_t m, std::int32_t alpha,
                                        std::uint32_t pattern_count,
                                        std::vector<std::int32_t> entries) {
  if (entries.size() != m * m) {
    throw Error(ErrorCode::CorruptFile, "weight entry count does not match m*m");
  }
  if (alpha < 1) throw Error(ErrorCode::CorruptFile, "alpha must be positive");
  WeightMatrix w(0, alpha);
  w.m_ = m;
  w.pattern_count_ = pattern_count;
  w.entries_ = std::move(entries);
  if (!w.is_structurally_valid()) {
    throw Error(ErrorCode::CorruptFile, "weight matrix is not symmetric with zero diagonal");
  }
  if (!w.invariants_hold()) {
    throw Error(ErrorCode::CorruptFile, "weight entry exceeds alpha * pattern_count");
  }
  return w;
}

void WeightMatrix::accumulate(const BipolarPattern& x, std::int32_t sign) {
  const std::int32_t scale = sign * alpha_;
  const auto v = x.values();
  for (std::size_t i = 0; i < m_; ++i) {
    std::int32_t* row = entries_.data() + i * m_;
    const std::int32_t vi = scale * v[i];
    for (std::size_t j = 0; j < m_; ++j) row[j] += vi * v[j];
    // x_i * x_i = 1, minus the identity contribution
    row[i] -= scale;
  }
  assert(is_structurally_valid());
}

void WeightMatrix::learn(const BipolarPattern& x) {
  require_length(x, m_, "learn");
  const auto limit = static_cast<std::uint32_t>(std::numeric_limits<std::int32_t>::max() / alpha_);
  if (pattern_count_ >= limit) {
    throw Error(ErrorCode::Overflow, "learn: weight entries would overflow int32");
  }
  accumulate(x, 1);
  ++pattern_count_;
}

void WeightMatrix::unlearn(const BipolarPattern& x) {
  require_length(x, m_, "unlearn");
  if (pattern_count_ == 0) {
    throw Error(ErrorCode::EmptyNetwork, "unlearn: network holds no patterns");
  }
  accumulate(x, -1);
  --pattern_count_;
}

bool WeightMatrix::is_structurally_valid() const {
  if (entries_.size() != m_ * m_) return false;
  for (std::size_t i = 0; i < m_; ++i) {
    if ((*this)(i, i) != 0) return false;
    for (std::size_t j = i + 1; j < m_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

bool WeightMatrix::invariants_hold() const {
  if (!is_structurally_valid()) return false;
  const std::int64_t bound = std::int64_t{alpha_} * pattern_count_;
  for (std::int32_t e : entries_) {
    if (std::llabs(e) > bound) return false;
  }
  return true;
}

WeightMatrix store(std::span<const BipolarPattern> patterns, const NetworkConfig& config) {
  config.validate();
  for (const auto& x : patterns) require_length(x, config.m, "store");
  require_room(0, patterns.size(), config, "store");
  WeightMatrix w(config.m, config.alpha);
  for (const auto& x : patterns) w.learn(x);
  return w;
}

WeightMatrix add_pattern(const WeightMatrix& w, const BipolarPattern& x,
                         const NetworkConfig& config) {
  require_length(x, w.size(), "add_pattern");
  require_room(w.pattern_count(), 1, config, "add_pattern");
  WeightMatrix out = w;
  out.learn(x);
  return out;
}

WeightMatrix remove_pattern(const WeightMatrix& w, const BipolarPattern& x,
                            const NetworkConfig& /*config*/) {
  if (w.pattern_count() == 0) {
    throw Error(ErrorCode::EmptyNetwork, "remove_pattern: network holds no patterns");
  }
  require_length(x, w.size(), "remove_pattern");
  WeightMatrix out = w;
  out.unlearn(x);
  return out;
}

std::int64_t energy(const WeightMatrix& w, const BipolarPattern& x,
                    const NetworkConfig& config) {
  const std::size_t m = w.size();
  require_length(x, m, "energy");
  std::int64_t quad = 0;
  std::int64_t linear = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto row = w.row(i);
    std::int64_t h = 0;
    for (std::size_t j = 0; j < m; ++j) h += std::int64_t{row[j]} * x[j];
    quad += h * x[i];
    linear += std::int64_t{config.bias_at(i)} * x[i];
  }
  // symmetric W with zero diagonal: x^T W x = 2 * sum_{i<j} w_ij x_i x_j
  if (quad % 2 != 0) {
    throw std::logic_error("energy: odd quadratic form, weight matrix invariants broken");
  }
  return -(quad / 2) - linear;
}

}  // namespace hpauth
