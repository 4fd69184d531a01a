#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "hpauth/authstore.hpp"
#include "hpauth/bench.hpp"
#include "hpauth/codec.hpp"
#include "hpauth/network.hpp"
#include "hpauth/random.hpp"

using namespace hpauth;

namespace {

NetworkConfig config_for(std::size_t m) {
  NetworkConfig c;
  c.m = m;
  return c;
}

std::vector<BipolarPattern> patterns(std::size_t m, std::size_t p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<BipolarPattern> out;
  for (std::size_t k = 0; k < p; ++k) out.push_back(BipolarPattern::random(m, rng));
  return out;
}

void BM_Learn(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto x = patterns(m, 1, 1).front();
  WeightMatrix w(m, 1);
  for (auto _ : state) {
    w.learn(x);
    w.unlearn(x);
    benchmark::DoNotOptimize(w.entries().data());
  }
}
BENCHMARK(BM_Learn)->Arg(128)->Arg(512)->Arg(1024);

void BM_RecallSync(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto ps = patterns(m, m / 10, 2);
  const WeightMatrix w = store(ps, config_for(m));
  const BipolarPattern probe = ps.front().flipped(0).flipped(m / 2);
  for (auto _ : state) benchmark::DoNotOptimize(recall_sync(w, probe, config_for(m)));
}
BENCHMARK(BM_RecallSync)->Arg(128)->Arg(512)->Arg(1024);

void BM_RecallAsync(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto ps = patterns(m, m / 10, 3);
  auto cfg = config_for(m);
  cfg.schedule = Schedule::Asynchronous;
  const WeightMatrix w = store(ps, cfg);
  const BipolarPattern probe = ps.front().flipped(1);
  for (auto _ : state) benchmark::DoNotOptimize(recall_async(w, probe, cfg));
}
BENCHMARK(BM_RecallAsync)->Arg(128)->Arg(512);

void BM_Merge(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(merge("alice", "correct horse", 512));
}
BENCHMARK(BM_Merge);

void BM_Register(benchmark::State& state) {
  Rng rng(4);
  for (auto _ : state) {
    state.PauseTiming();
    AuthStore s(config_for(512));
    const std::string pass = bench::random_printable(12, rng);
    state.ResumeTiming();
    s.register_user("alice", Secret::text(pass), 0);
    benchmark::DoNotOptimize(s.weights().entries().data());
  }
}
BENCHMARK(BM_Register);

void BM_Login(benchmark::State& state) {
  AuthStore s(config_for(512));
  Rng rng(5);
  for (int k = 0; k < 10; ++k) {
    s.register_user("user" + std::to_string(k), Secret::text(bench::random_printable(12, rng)), 0);
  }
  s.register_user("alice", Secret::text("correct horse"), 0);
  for (auto _ : state) benchmark::DoNotOptimize(s.login("alice", Secret::text("correct horse")));
}
BENCHMARK(BM_Login);

}  // namespace

BENCHMARK_MAIN();
