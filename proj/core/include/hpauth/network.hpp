#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hpauth/bipolar.hpp"

namespace hpauth {

enum class Schedule { Synchronous, Asynchronous, Hybrid };

enum class AsyncOrder { Sequential, SeededRandom };

struct NetworkConfig {
  std::size_t m = 128;
  std::int32_t alpha = 1;
  double capacity_factor = 0.10;
  /// External input per unit. Empty means all zeros.
  std::vector<std::int32_t> bias;
  std::size_t max_sweeps = 100;
  Schedule schedule = Schedule::Synchronous;
  AsyncOrder async_order = AsyncOrder::Sequential;
  std::uint64_t async_seed = 0;
  std::size_t hybrid_group_size = 8;

  /// Throws Error(BadConfig) unless m is in [1, 32768], alpha is positive,
  /// the factor lies in (0, 1] and bias is empty or length m. Byte alignment
  /// is only required where credentials are encoded (AuthStore).
  void validate() const;

  std::int32_t bias_at(std::size_t i) const { return bias.empty() ? 0 : bias[i]; }
};

/// floor(capacity_factor * m).
std::size_t capacity(const NetworkConfig& config);

/// Symmetric m x m integer matrix with zero diagonal, the sum of alpha-scaled
/// Hebbian contributions of pattern_count patterns.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  WeightMatrix(std::size_t m, std::int32_t alpha);

  /// Builds from raw row-major entries and verifies every invariant.
  /// Throws Error(CorruptFile) on violation, which is what snapshot readers
  /// need.
  static WeightMatrix from_entries(std::size_t m, std::int32_t alpha,
                                   std::uint32_t pattern_count,
                                   std::vector<std::int32_t> entries);

  std::size_t size() const noexcept { return m_; }
  std::int32_t alpha() const noexcept { return alpha_; }
  std::uint32_t pattern_count() const noexcept { return pattern_count_; }

  std::int32_t operator()(std::size_t i, std::size_t j) const {
    return entries_[i * m_ + j];
  }
  std::span<const std::int32_t> row(std::size_t i) const {
    return {entries_.data() + i * m_, m_};
  }
  std::span<const std::int32_t> entries() const noexcept { return entries_; }

  /// W += alpha * (x x^T - I), in place. No capacity check.
  void learn(const BipolarPattern& x);
  /// W -= alpha * (x x^T - I), in place.
  void unlearn(const BipolarPattern& x);

  /// Symmetric with zero diagonal.
  bool is_structurally_valid() const;
  /// Structurally valid and |w_ij| <= alpha * pattern_count. Removing a
  /// never-stored pattern breaks the bound while keeping the structure.
  bool invariants_hold() const;

  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

 private:
  void accumulate(const BipolarPattern& x, std::int32_t sign);

  std::size_t m_ = 0;
  std::int32_t alpha_ = 1;
  std::uint32_t pattern_count_ = 0;
  std::vector<std::int32_t> entries_;
};

/// W = alpha * sum_k (x_k x_k^T - I).
WeightMatrix store(std::span<const BipolarPattern> patterns, const NetworkConfig& config);
WeightMatrix add_pattern(const WeightMatrix& w, const BipolarPattern& x,
                         const NetworkConfig& config);
/// Does not check that x was ever stored; the Hebbian sum keeps no record.
WeightMatrix remove_pattern(const WeightMatrix& w, const BipolarPattern& x,
                            const NetworkConfig& config);

/// +1 for positive input, -1 for negative, previous on a tie.
constexpr std::int8_t activate(std::int64_t net_input, std::int8_t previous) noexcept {
  return net_input > 0 ? std::int8_t{1} : net_input < 0 ? std::int8_t{-1} : previous;
}

/// E = -1/2 x^T W x - bias^T x. Always integral for a zero-diagonal integer W.
std::int64_t energy(const WeightMatrix& w, const BipolarPattern& x,
                    const NetworkConfig& config);

struct RecallResult {
  BipolarPattern final_state;
  bool converged = false;
  std::size_t sweeps_used = 0;
  bool cycle_detected = false;
};

/// Called after every update step with the full current state. Async calls it
/// once per unit, sync once per sweep, hybrid once per group.
using UpdateObserver = std::function<void(std::span<const std::int8_t> state)>;

RecallResult recall_sync(const WeightMatrix& w, const BipolarPattern& x0,
                         const NetworkConfig& config,
                         const UpdateObserver& observer = {});
RecallResult recall_async(const WeightMatrix& w, const BipolarPattern& x0,
                          const NetworkConfig& config,
                          const UpdateObserver& observer = {});
RecallResult recall_hybrid(const WeightMatrix& w, const BipolarPattern& x0,
                           const NetworkConfig& config,
                           const UpdateObserver& observer = {});

/// Dispatches on config.schedule.
RecallResult recall(const WeightMatrix& w, const BipolarPattern& x0,
                    const NetworkConfig& config);

/// One full sweep of the configured schedule applied to x, with no
/// convergence bookkeeping. Used to double-check fixed points.
BipolarPattern sweep_once(const WeightMatrix& w, const BipolarPattern& x,
                          const NetworkConfig& config);

}  // namespace hpauth
