#include "hpauth/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <set>
#include <numeric>
#include <sstream>
#include <thread>

#include "hpauth/authstore.hpp"
#include "hpauth/error.hpp"

namespace hpauth::bench {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

struct SyntheticUser {
  std::string username;
  std::string password;
};

/// Unique usernames, lengths chosen so that u + US + p fits m bits.
std::vector<SyntheticUser> synthetic_users(std::size_t n, std::size_t m, Rng& rng) {
  const std::size_t budget = m / 8 - 1;
  if (budget < 2) throw Error(ErrorCode::BadParams, "m too small for synthetic credentials");
  const std::size_t max_user = std::min<std::size_t>(12, budget / 2);
  std::vector<SyntheticUser> users;
  std::set<std::string> seen;
  while (users.size() < n) {
    const std::size_t ulen = 1 + rng.below(max_user);
    const std::size_t plen = 1 + rng.below(std::min<std::size_t>(12, budget - ulen));
    std::string name = random_printable(ulen, rng);
    if (!seen.insert(name).second) continue;
    users.push_back({std::move(name), random_printable(plen, rng)});
  }
  return users;
}

}  // namespace

std::string random_printable(std::size_t len, Rng& rng) {
  std::string s(len, ' ');
  for (auto& c : s) c = static_cast<char>(0x20 + rng.below(95));
  return s;
}

SweepReport capacity_sweep(std::size_t m, std::vector<std::size_t> p_values,
                           std::size_t trials, std::uint64_t seed) {
  if (m == 0 || trials == 0 || p_values.empty()) {
    throw Error(ErrorCode::BadParams, "capacity_sweep needs m >= 1, trials >= 1 and some p values");
  }
  std::sort(p_values.begin(), p_values.end());
  if (p_values.back() > m) throw Error(ErrorCode::BadParams, "p values must not exceed m");

  NetworkConfig config;
  config.m = m;
  config.capacity_factor = 1.0;
  config.schedule = Schedule::Synchronous;

  SweepReport report{m, {}, seed};
  for (std::size_t k = 0; k < p_values.size(); ++k) {
    const std::size_t p = p_values[k];
    std::uint64_t wrong_bits = 0;
    std::uint64_t exact = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      Rng rng(derive_seed(seed, (std::uint64_t{p} << 32) | t));
      std::vector<BipolarPattern> patterns;
      patterns.reserve(p);
      for (std::size_t i = 0; i < p; ++i) patterns.push_back(BipolarPattern::random(m, rng));
      WeightMatrix w(m, config.alpha);
      for (const auto& x : patterns) w.learn(x);
      for (const auto& x : patterns) {
        const RecallResult r = recall_sync(w, x, config);
        const std::size_t d = hamming_distance(r.final_state, x);
        wrong_bits += d;
        exact += r.converged && d == 0;
      }
    }
    const double probes = static_cast<double>(p * trials);
    SweepPoint point{p, trials, 0.0, 1.0};
    if (p > 0) {
      point.bit_error_rate = static_cast<double>(wrong_bits) / (probes * static_cast<double>(m));
      point.exact_recall_rate = static_cast<double>(exact) / probes;
    }
    report.points.push_back(point);
  }
  return report;
}

std::string SweepReport::to_tsv() const {
  std::ostringstream out;
  out << "m\tp\ttrials\tbit_error_rate\texact_recall_rate\tseed\n";
  for (const auto& pt : points) {
    out << m << '\t' << pt.p << '\t' << pt.trials << '\t' << fmt(pt.bit_error_rate) << '\t'
        << fmt(pt.exact_recall_rate) << '\t' << seed << '\n';
  }
  return out.str();
}

std::string SweepReport::to_json() const {
  nlohmann::json j;
  j["m"] = m;
  j["seed"] = seed;
  j["points"] = nlohmann::json::array();
  for (const auto& pt : points) {
    j["points"].push_back({{"p", pt.p},
                           {"trials", pt.trials},
                           {"bit_error_rate", pt.bit_error_rate},
                           {"exact_recall_rate", pt.exact_recall_rate}});
  }
  return j.dump(2);
}

TimingReport timing_bench(std::vector<std::size_t> n_users_list, std::size_t m,
                          std::size_t trials, std::uint64_t seed) {
  if (trials == 0 || n_users_list.empty()) {
    throw Error(ErrorCode::BadParams, "timing_bench needs trials >= 1 and some user counts");
  }
  NetworkConfig config;
  config.m = m;
  if (m < 8 || m % 8 != 0) throw Error(ErrorCode::BadParams, "m must be a positive multiple of 8");
  for (std::size_t n : n_users_list) {
    if (n == 0 || n > capacity(config)) {
      throw Error(ErrorCode::BadParams, "user count " + std::to_string(n) +
                                            " outside [1, capacity " +
                                            std::to_string(capacity(config)) + "]");
    }
  }

  TimingReport report{m, trials, seed, {}, ""};
  report.hardware_note = "steady_clock wall time on the host running this binary; " +
                         std::to_string(std::thread::hardware_concurrency()) +
                         " hardware threads";
  for (std::size_t n : n_users_list) {
    std::vector<double> reg_times;
    std::vector<double> login_times;
    for (std::size_t t = 0; t <= trials; ++t) {
      Rng rng(derive_seed(seed, (std::uint64_t{n} << 32) | t));
      const auto users = synthetic_users(n, m, rng);
      // built before timing so the one-off scrambler setup is not measured
      AuthStore store(config);
      (void)store.encode(users.front().username, Secret::text(users.front().password));

      const auto reg_start = Clock::now();
      for (const auto& u : users) store.register_user(u.username, Secret::text(u.password), 0);
      const double reg = seconds_since(reg_start);

      std::size_t accepted = 0;
      const auto login_start = Clock::now();
      for (const auto& u : users) accepted += store.login(u.username, Secret::text(u.password)).accepted;
      const double login = seconds_since(login_start);
      (void)accepted;

      if (t == 0) continue;  // warm-up
      reg_times.push_back(reg);
      login_times.push_back(login);
    }
    TimingRow row;
    row.n_users = n;
    row.mean_register_time = std::accumulate(reg_times.begin(), reg_times.end(), 0.0) / static_cast<double>(trials);
    row.mean_login_time = std::accumulate(login_times.begin(), login_times.end(), 0.0) / static_cast<double>(trials);
    row.median_register_time = median(reg_times);
    row.median_login_time = median(login_times);
    report.rows.push_back(row);
  }
  return report;
}

std::string TimingReport::to_tsv() const {
  std::ostringstream out;
  out << "n_users\tmean_register_s\tmean_login_s\tmedian_register_s\tmedian_login_s\t"
         "register_per_user_s\tlogin_per_user_s\n";
  for (const auto& r : rows) {
    out << r.n_users << '\t' << fmt(r.mean_register_time) << '\t' << fmt(r.mean_login_time) << '\t'
        << fmt(r.median_register_time) << '\t' << fmt(r.median_login_time) << '\t'
        << fmt(r.register_per_user()) << '\t' << fmt(r.login_per_user()) << '\n';
  }
  out << "# m=" << m << " trials=" << trials << " seed=" << seed << "; " << hardware_note << '\n';
  out << "# reference: paper-reported, different hardware (never compared)\n";
  out << "# users\thopfield\tlayered\n";
  for (const auto& ref : kPublishedTimingTable) {
    out << "# " << ref.users << '\t' << ref.hopfield << '\t' << ref.layered << '\n';
  }
  out << "# reference: paper-reported training times, units unspecified\n";
  for (const auto& ref : kPublishedTrainingTable) {
    out << "# " << ref.network << '\t' << ref.values[0] << '\t' << ref.values[1] << '\t'
        << ref.values[2] << '\n';
  }
  return out.str();
}

std::string TimingReport::to_json() const {
  nlohmann::json j;
  j["m"] = m;
  j["trials"] = trials;
  j["seed"] = seed;
  j["hardware_note"] = hardware_note;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    j["rows"].push_back({{"n_users", r.n_users},
                         {"mean_register_time", r.mean_register_time},
                         {"mean_login_time", r.mean_login_time},
                         {"median_register_time", r.median_register_time},
                         {"median_login_time", r.median_login_time}});
  }
  auto& ref = j["reference_paper_reported_different_hardware"];
  for (const auto& row : kPublishedTimingTable) {
    ref["timing"].push_back({{"users", row.users}, {"hopfield", row.hopfield}, {"layered", row.layered}});
  }
  for (const auto& row : kPublishedTrainingTable) {
    ref["training_time_unitless"][row.network] = {row.values[0], row.values[1], row.values[2]};
  }
  return j.dump(2);
}

FalseAcceptReport false_accept_sweep(const StoreProfile& profile, std::size_t attempts,
                                     std::uint64_t seed) {
  if (attempts == 0) throw Error(ErrorCode::BadParams, "attempts must be positive");
  NetworkConfig config;
  config.m = profile.m;
  config.capacity_factor = profile.capacity_factor;
  if (profile.m < 8 || profile.m % 8 != 0) {
    throw Error(ErrorCode::BadParams, "m must be a positive multiple of 8");
  }
  if (profile.n_users > capacity(config)) {
    throw Error(ErrorCode::BadParams, "profile exceeds store capacity");
  }
  AuthStore store(config);
  Rng rng(derive_seed(seed, 0));
  const auto users = synthetic_users(profile.n_users, profile.m, rng);
  for (const auto& u : users) store.register_user(u.username, Secret::text(u.password), 0);

  const std::size_t budget = profile.m / 8 - 1;
  std::size_t correct = 0, random_wrong = 0, perturbed = 0;
  Rng probe_rng(derive_seed(seed, 1));
  for (std::size_t a = 0; a < attempts; ++a) {
    if (users.empty()) {
      // nothing registered: every probe names an unknown user
      const std::string name = random_printable(1 + probe_rng.below(8), probe_rng);
      correct += store.login(name, Secret::text("x")).accepted;
      random_wrong += store.login(name, Secret::text("y")).accepted;
      perturbed += store.login(name, Secret::text("z")).accepted;
      continue;
    }
    const auto& u = users[probe_rng.below(users.size())];
    correct += store.login(u.username, Secret::text(u.password)).accepted;

    const std::size_t room = budget - u.username.size();
    std::string wrong;
    do {
      wrong = random_printable(1 + probe_rng.below(std::min<std::size_t>(12, room)), probe_rng);
    } while (wrong == u.password);
    random_wrong += store.login(u.username, Secret::text(wrong)).accepted;

    std::string tweak = u.password;
    const std::size_t pos = probe_rng.below(tweak.size());
    const auto shift = static_cast<unsigned>(1 + probe_rng.below(94));
    tweak[pos] = static_cast<char>(0x20 + (static_cast<unsigned>(tweak[pos] - 0x20) + shift) % 95);
    perturbed += store.login(u.username, Secret::text(tweak)).accepted;
  }
  const auto n = static_cast<double>(attempts);
  FalseAcceptReport report;
  report.profile = profile;
  report.attempts = attempts;
  report.seed = seed;
  report.correct_accept_rate = static_cast<double>(correct) / n;
  report.random_wrong_accept_rate = static_cast<double>(random_wrong) / n;
  report.perturbed_accept_rate = static_cast<double>(perturbed) / n;
  return report;
}

std::string FalseAcceptReport::to_tsv() const {
  std::ostringstream out;
  out << "m\tn_users\tattempts\tclass\taccept_rate\tseed\n";
  const std::pair<const char*, double> classes[] = {
      {"correct", correct_accept_rate},
      {"random-wrong", random_wrong_accept_rate},
      {"perturbed", perturbed_accept_rate},
  };
  for (const auto& [name, rate] : classes) {
    out << profile.m << '\t' << profile.n_users << '\t' << attempts << '\t' << name << '\t'
        << fmt(rate) << '\t' << seed << '\n';
  }
  return out.str();
}

std::string FalseAcceptReport::to_json() const {
  nlohmann::json j;
  j["m"] = profile.m;
  j["n_users"] = profile.n_users;
  j["attempts"] = attempts;
  j["seed"] = seed;
  j["correct_accept_rate"] = correct_accept_rate;
  j["random_wrong_accept_rate"] = random_wrong_accept_rate;
  j["perturbed_accept_rate"] = perturbed_accept_rate;
  j["false_reject_rate"] = false_reject_rate();
  return j.dump(2);
}

}  // namespace hpauth::bench
