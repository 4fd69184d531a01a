#include <numeric>
#include <string>

#include "hpauth/error.hpp"
#include "hpauth/network.hpp"

namespace hpauth {

namespace {

using State = std::vector<std::int8_t>;

std::int64_t net_input(const WeightMatrix& w, const State& x, std::size_t i,
                       const NetworkConfig& config) {
  const auto row = w.row(i);
  std::int64_t h = config.bias_at(i);
  for (std::size_t j = 0; j < x.size(); ++j) h += std::int64_t{row[j]} * x[j];
  return h;
}

State start_state(const WeightMatrix& w, const BipolarPattern& x0, const char* op) {
  if (x0.size() != w.size()) {
    throw Error(ErrorCode::LengthMismatch,
                std::string(op) + ": probe length " + std::to_string(x0.size()) +
                    " does not match network size " + std::to_string(w.size()));
  }
  return State(x0.values().begin(), x0.values().end());
}

/// Updates units [begin, end) simultaneously from the current state.
/// Returns true when any unit changed.
bool update_block(const WeightMatrix& w, State& x, std::size_t begin, std::size_t end,
                  const NetworkConfig& config, State& scratch) {
  scratch.resize(end - begin);
  for (std::size_t i = begin; i < end; ++i) {
    scratch[i - begin] = activate(net_input(w, x, i, config), x[i]);
  }
  bool changed = false;
  for (std::size_t i = begin; i < end; ++i) {
    changed |= x[i] != scratch[i - begin];
    x[i] = scratch[i - begin];
  }
  return changed;
}

/// Block-synchronous sweeps with 2-cycle detection; sync is one block of m.
RecallResult recall_blocks(const WeightMatrix& w, State x, std::size_t group,
                           const NetworkConfig& config, const UpdateObserver& observer) {
  const std::size_t m = x.size();
  RecallResult result;
  State two_back;
  State scratch;
  for (std::size_t sweep = 0; sweep < config.max_sweeps; ++sweep) {
    State before = x;
    bool changed = false;
    for (std::size_t begin = 0; begin < m; begin += group) {
      changed |= update_block(w, x, begin, std::min(m, begin + group), config, scratch);
      if (observer) observer(x);
    }
    result.sweeps_used = sweep + 1;
    if (!changed) {
      result.converged = true;
      break;
    }
    if (!two_back.empty() && x == two_back) {
      result.cycle_detected = true;
      break;
    }
    two_back = std::move(before);
  }
  result.final_state = BipolarPattern(std::move(x));
  return result;
}

}  // namespace

RecallResult recall_sync(const WeightMatrix& w, const BipolarPattern& x0,
                         const NetworkConfig& config, const UpdateObserver& observer) {
  State x = start_state(w, x0, "recall_sync");
  const std::size_t m = x.size();
  return recall_blocks(w, std::move(x), m == 0 ? 1 : m, config, observer);
}

RecallResult recall_hybrid(const WeightMatrix& w, const BipolarPattern& x0,
                           const NetworkConfig& config, const UpdateObserver& observer) {
  State x = start_state(w, x0, "recall_hybrid");
  if (config.hybrid_group_size == 0 || config.hybrid_group_size > x.size()) {
    throw Error(ErrorCode::BadConfig, "recall_hybrid: group size must lie in [1, m]");
  }
  return recall_blocks(w, std::move(x), config.hybrid_group_size, config, observer);
}

RecallResult recall_async(const WeightMatrix& w, const BipolarPattern& x0,
                          const NetworkConfig& config, const UpdateObserver& observer) {
  State x = start_state(w, x0, "recall_async");
  const std::size_t m = x.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(config.async_seed);

  RecallResult result;
  for (std::size_t sweep = 0; sweep < config.max_sweeps; ++sweep) {
    if (config.async_order == AsyncOrder::SeededRandom) rng.shuffle(std::span(order));
    bool changed = false;
    for (std::size_t i : order) {
      const std::int8_t next = activate(net_input(w, x, i, config), x[i]);
      changed |= next != x[i];
      x[i] = next;
      if (observer) observer(x);
    }
    result.sweeps_used = sweep + 1;
    if (!changed) {
      result.converged = true;
      break;
    }
  }
  result.final_state = BipolarPattern(std::move(x));
  return result;
}

RecallResult recall(const WeightMatrix& w, const BipolarPattern& x0,
                    const NetworkConfig& config) {
  switch (config.schedule) {
    case Schedule::Synchronous: return recall_sync(w, x0, config);
    case Schedule::Asynchronous: return recall_async(w, x0, config);
    case Schedule::Hybrid: return recall_hybrid(w, x0, config);
  }
  return recall_sync(w, x0, config);
}

BipolarPattern sweep_once(const WeightMatrix& w, const BipolarPattern& x,
                          const NetworkConfig& config) {
  NetworkConfig one = config;
  one.max_sweeps = 1;
  return recall(w, x, one).final_state;
}

}  // namespace hpauth
