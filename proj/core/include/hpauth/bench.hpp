#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hpauth/network.hpp"

namespace hpauth::bench {

struct SweepPoint {
  std::size_t p = 0;
  std::size_t trials = 0;
  /// Mean fraction of wrong bits after recall_sync from each stored pattern.
  double bit_error_rate = 0.0;
  /// Fraction of stored patterns that are exact fixed points.
  double exact_recall_rate = 0.0;
};

struct SweepReport {
  std::size_t m = 0;
  std::vector<SweepPoint> points;  // sorted by p
  std::uint64_t seed = 0;

  std::string to_tsv() const;
  std::string to_json() const;
};

/// Stores p uniform random patterns per trial and probes each with
/// recall_sync. Capacity limits are not applied. Deterministic in seed.
SweepReport capacity_sweep(std::size_t m, std::vector<std::size_t> p_values,
                           std::size_t trials, std::uint64_t seed);

struct TimingRow {
  std::size_t n_users = 0;
  // seconds for all n registrations / all n logins
  double mean_register_time = 0.0;
  double mean_login_time = 0.0;
  double median_register_time = 0.0;
  double median_login_time = 0.0;

  double register_per_user() const { return mean_register_time / static_cast<double>(n_users); }
  double login_per_user() const { return mean_login_time / static_cast<double>(n_users); }
};

struct TimingReport {
  std::size_t m = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<TimingRow> rows;
  std::string hardware_note;

  std::string to_tsv() const;
  std::string to_json() const;
};

/// Times registration of n synthetic users into a fresh store followed by
/// one login per user. One warm-up trial per row is discarded.
TimingReport timing_bench(std::vector<std::size_t> n_users_list, std::size_t m,
                          std::size_t trials, std::uint64_t seed);

struct StoreProfile {
  std::size_t m = 512;
  std::size_t n_users = 10;
  double capacity_factor = 0.10;
};

struct FalseAcceptReport {
  StoreProfile profile;
  std::size_t attempts = 0;  // per probe class
  std::uint64_t seed = 0;
  double correct_accept_rate = 0.0;
  double random_wrong_accept_rate = 0.0;
  double perturbed_accept_rate = 0.0;

  double false_reject_rate() const { return 1.0 - correct_accept_rate; }
  std::string to_tsv() const;
  std::string to_json() const;
};

/// Probes a synthetic store with correct secrets, uniformly random wrong
/// secrets and secrets with one character changed.
FalseAcceptReport false_accept_sweep(const StoreProfile& profile, std::size_t attempts,
                                     std::uint64_t seed);

/// Random printable-ASCII string of exactly len bytes.
std::string random_printable(std::size_t len, Rng& rng);

/// Reference values quoted from the source publication; never compared
/// against measurements.
struct PublishedTimingRow {
  const char* users;
  const char* hopfield;
  const char* layered;
};
inline constexpr PublishedTimingRow kPublishedTimingTable[] = {
    {"25", "0.000435 sec", "91.00 sec"},
    {"50", "0.000794 sec", "317.0 sec"},
    {"100", "0.001360 sec", "1876 sec"},
    {"10 million", "213.0000 sec", "Computational cost is high"},
};
struct PublishedTrainingRow {
  const char* network;
  int values[3];
};
inline constexpr PublishedTrainingRow kPublishedTrainingTable[] = {
    {"BPNN", {360, 450, 500}},
    {"HPNN", {136, 50, 100}},
};

}  // namespace hpauth::bench
