#include "doctest.h"
#include "oracles.hpp"

#include "hpauth/error.hpp"
#include "hpauth/network.hpp"

using namespace hpauth;

namespace {

NetworkConfig config_for(std::size_t m, double factor = 1.0) {
  NetworkConfig c;
  c.m = m;
  c.capacity_factor = factor;
  return c;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected hpauth::Error");
  return ErrorCode::BadParams;
}

}  // namespace

TEST_CASE("bipolar pattern rejects values other than +-1") {
  CHECK_NOTHROW(BipolarPattern({1, -1, 1}));
  CHECK(code_of([] { BipolarPattern({1, 0}); }) == ErrorCode::MalformedPattern);
  CHECK(code_of([] { BipolarPattern(std::vector<std::int8_t>{2}); }) == ErrorCode::MalformedPattern);
}

TEST_CASE("store of a single pattern is its outer product minus identity") {
  const std::vector<BipolarPattern> ps = {BipolarPattern{1, -1}};
  const WeightMatrix w = store(ps, config_for(2));
  CHECK(w(0, 0) == 0);
  CHECK(w(0, 1) == -1);
  CHECK(w(1, 0) == -1);
  CHECK(w(1, 1) == 0);
  CHECK(w.pattern_count() == 1);
}

TEST_CASE("store of nothing is the zero matrix") {
  const WeightMatrix w = store({}, config_for(2));
  CHECK(w.pattern_count() == 0);
  for (auto e : w.entries()) CHECK(e == 0);
}

TEST_CASE("a pattern and its negation contribute identically") {
  const std::vector<BipolarPattern> ps = {BipolarPattern{1, -1}, BipolarPattern{-1, 1}};
  const WeightMatrix w = store(ps, config_for(2));
  CHECK(oracle::to_matrix(w) == oracle::Matrix{{0, -2}, {-2, 0}});
}

TEST_CASE("store errors") {
  CHECK(code_of([] {
          const std::vector<BipolarPattern> ps = {BipolarPattern{1, -1, 1}};
          store(ps, config_for(2));
        }) == ErrorCode::LengthMismatch);
  CHECK(code_of([] {
          // floor(0.15 * 8) = 1
          Rng rng(1);
          const std::vector<BipolarPattern> ps = {BipolarPattern::random(8, rng),
                                                  BipolarPattern::random(8, rng)};
          store(ps, config_for(8, 0.15));
        }) == ErrorCode::CapacityExceeded);
}

TEST_CASE("store matches the hand-rolled Hebbian oracle") {
  Rng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = 4 + rng.below(30);
    const std::size_t p = rng.below(5);
    std::vector<BipolarPattern> ps;
    std::vector<std::vector<int>> raw;
    for (std::size_t k = 0; k < p; ++k) {
      ps.push_back(BipolarPattern::random(m, rng));
      raw.push_back(oracle::signs(ps.back()));
    }
    const WeightMatrix w = store(ps, config_for(m));
    CHECK(oracle::to_matrix(w) == oracle::hebbian(raw, m));
    CHECK(w.invariants_hold());
  }
}

TEST_CASE("add_pattern") {
  const NetworkConfig cfg = config_for(2);
  const WeightMatrix empty = store({}, cfg);
  const WeightMatrix one = add_pattern(empty, BipolarPattern{1, -1}, cfg);
  CHECK(oracle::to_matrix(one) == oracle::Matrix{{0, -1}, {-1, 0}});
  CHECK(one.pattern_count() == 1);
  CHECK(empty.pattern_count() == 0);  // input untouched

  SUBCASE("equals store of the union") {
    Rng rng(7);
    const NetworkConfig c = config_for(16);
    std::vector<BipolarPattern> ps;
    for (int k = 0; k < 4; ++k) ps.push_back(BipolarPattern::random(16, rng));
    const BipolarPattern x = BipolarPattern::random(16, rng);
    const WeightMatrix lhs = add_pattern(store(ps, c), x, c);
    ps.push_back(x);
    CHECK(lhs == store(ps, c));
  }

  SUBCASE("then remove restores the original") {
    const NetworkConfig c = config_for(4);
    const WeightMatrix base = store(std::vector<BipolarPattern>{BipolarPattern{1, -1, -1, 1}}, c);
    const BipolarPattern ones{1, 1, 1, 1};
    CHECK(remove_pattern(add_pattern(base, ones, c), ones, c) == base);
  }

  SUBCASE("errors") {
    CHECK(code_of([&] { add_pattern(empty, BipolarPattern{1, 1, 1}, cfg); }) ==
          ErrorCode::LengthMismatch);
    const NetworkConfig tight = config_for(8, 0.125);  // capacity 1
    const WeightMatrix full = add_pattern(WeightMatrix(8, 1), BipolarPattern{1, 1, 1, 1, 1, 1, 1, 1}, tight);
    CHECK(code_of([&] { add_pattern(full, BipolarPattern{1, -1, 1, -1, 1, -1, 1, -1}, tight); }) ==
          ErrorCode::CapacityExceeded);
  }
}

TEST_CASE("remove_pattern") {
  const NetworkConfig c = config_for(8);
  const BipolarPattern a{1, -1, 1, 1, -1, -1, 1, -1};
  const BipolarPattern b{-1, -1, 1, -1, 1, 1, 1, -1};

  SUBCASE("only stored pattern leaves zeros") {
    const WeightMatrix w = remove_pattern(store(std::vector{a}, c), a, c);
    CHECK(w.pattern_count() == 0);
    for (auto e : w.entries()) CHECK(e == 0);
  }
  SUBCASE("commutes with the sum") {
    CHECK(remove_pattern(store(std::vector{a, b}, c), a, c) == store(std::vector{b}, c));
  }
  SUBCASE("never-stored pattern leaves a residue") {
    const WeightMatrix w = remove_pattern(store(std::vector{a}, c), b, c);
    // residue computed entry by entry from the definition
    const auto expected_a = oracle::hebbian({oracle::signs(a)}, 8);
    const auto expected_b = oracle::hebbian({oracle::signs(b)}, 8);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) CHECK(w(i, j) == expected_a[i][j] - expected_b[i][j]);
    CHECK(w.is_structurally_valid());
    CHECK_FALSE(w.invariants_hold());  // bound |w| <= p no longer holds
  }
  SUBCASE("errors") {
    CHECK(code_of([&] { remove_pattern(WeightMatrix(8, 1), a, c); }) == ErrorCode::EmptyNetwork);
    CHECK(code_of([&] { remove_pattern(store(std::vector{a}, c), BipolarPattern{1, -1}, c); }) ==
          ErrorCode::LengthMismatch);
  }
}

TEST_CASE("symmetry and zero diagonal survive random mutation sequences") {
  Rng rng(2024);
  const NetworkConfig c = config_for(24);
  for (int run = 0; run < 10; ++run) {
    WeightMatrix w(24, 1);
    std::vector<BipolarPattern> stored;
    for (int step = 0; step < 40; ++step) {
      if (stored.empty() || (rng.coin() && stored.size() < capacity(c))) {
        stored.push_back(BipolarPattern::random(24, rng));
        w = add_pattern(w, stored.back(), c);
      } else {
        const std::size_t k = rng.below(stored.size());
        w = remove_pattern(w, stored[k], c);
        stored.erase(stored.begin() + static_cast<std::ptrdiff_t>(k));
      }
      REQUIRE(w.invariants_hold());
      REQUIRE(w.pattern_count() == stored.size());
    }
    CHECK(w == store(stored, c));
  }
}

TEST_CASE("additivity over disjoint multisets") {
  Rng rng(99);
  const NetworkConfig c = config_for(20);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<BipolarPattern> s1, s2, both;
    for (std::size_t k = rng.below(4); k > 0; --k) s1.push_back(BipolarPattern::random(20, rng));
    for (std::size_t k = rng.below(4); k > 0; --k) s2.push_back(BipolarPattern::random(20, rng));
    both = s1;
    both.insert(both.end(), s2.begin(), s2.end());
    const WeightMatrix a = store(s1, c), b = store(s2, c), ab = store(both, c);
    for (std::size_t i = 0; i < ab.entries().size(); ++i) {
      CHECK(ab.entries()[i] == a.entries()[i] + b.entries()[i]);
    }
  }
}

TEST_CASE("alpha scales every entry") {
  NetworkConfig c = config_for(6);
  c.alpha = 3;
  const std::vector<BipolarPattern> ps = {BipolarPattern{1, -1, 1, -1, 1, 1}};
  const WeightMatrix w = store(ps, c);
  const auto ref = oracle::hebbian({oracle::signs(ps[0])}, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) CHECK(w(i, j) == 3 * ref[i][j]);
}

TEST_CASE("activate") {
  CHECK(activate(5, -1) == 1);
  CHECK(activate(-3, 1) == -1);
  CHECK(activate(0, -1) == -1);
  CHECK(activate(0, 1) == 1);
}

TEST_CASE("energy") {
  const NetworkConfig c = config_for(2);
  const WeightMatrix w = store(std::vector<BipolarPattern>{BipolarPattern{1, -1}}, c);
  CHECK(energy(w, BipolarPattern{1, -1}, c) == -1);
  CHECK(energy(WeightMatrix(2, 1), BipolarPattern{-1, 1}, c) == 0);
  CHECK(code_of([&] { energy(w, BipolarPattern{1, -1, 1}, c); }) == ErrorCode::LengthMismatch);

  SUBCASE("matches the double-sum oracle, with bias") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      NetworkConfig cb = config_for(10);
      cb.bias.resize(10);
      for (auto& b : cb.bias) b = static_cast<std::int32_t>(rng.below(7)) - 3;
      std::vector<BipolarPattern> ps;
      for (int k = 0; k < 3; ++k) ps.push_back(BipolarPattern::random(10, rng));
      const WeightMatrix wm = store(ps, cb);
      const BipolarPattern x = BipolarPattern::random(10, rng);
      const auto twice = oracle::twice_energy(oracle::to_matrix(wm), oracle::signs(x), cb.bias);
      REQUIRE(twice % 2 == 0);
      CHECK(energy(wm, x, cb) == twice / 2);
    }
  }

  SUBCASE("sign symmetric for zero bias") {
    Rng rng(6);
    const NetworkConfig c16 = config_for(16);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<BipolarPattern> ps;
      for (int k = 0; k < 3; ++k) ps.push_back(BipolarPattern::random(16, rng));
      const WeightMatrix wm = store(ps, c16);
      const BipolarPattern x = BipolarPattern::random(16, rng);
      CHECK(energy(wm, x, c16) == energy(wm, x.negated(), c16));
    }
  }
}

TEST_CASE("capacity") {
  NetworkConfig c;
  c.m = 100;
  c.capacity_factor = 0.15;
  CHECK(capacity(c) == 15);
  c.m = 6;
  CHECK(capacity(c) == 0);
  c.m = 64;
  c.capacity_factor = 0.10;
  CHECK(capacity(c) == 6);
  CHECK(capacity(NetworkConfig{}) == 12);  // default m = 128
}

TEST_CASE("config validation") {
  NetworkConfig c;
  CHECK_NOTHROW(c.validate());
  c.m = 0;
  CHECK(code_of([&] { c.validate(); }) == ErrorCode::BadConfig);
  c = {};
  c.capacity_factor = 0.0;
  CHECK(code_of([&] { c.validate(); }) == ErrorCode::BadConfig);
  c = {};
  c.alpha = 0;
  CHECK(code_of([&] { c.validate(); }) == ErrorCode::BadConfig);
  c = {};
  c.bias = {1, 2, 3};
  CHECK(code_of([&] { c.validate(); }) == ErrorCode::BadConfig);
}

TEST_CASE("from_entries rejects broken matrices") {
  CHECK(code_of([] { WeightMatrix::from_entries(2, 1, 1, {0, -1, 1, 0}); }) == ErrorCode::CorruptFile);
  CHECK(code_of([] { WeightMatrix::from_entries(2, 1, 1, {1, -1, -1, 0}); }) == ErrorCode::CorruptFile);
  CHECK(code_of([] { WeightMatrix::from_entries(2, 1, 1, {0, 5, 5, 0}); }) == ErrorCode::CorruptFile);
  CHECK(code_of([] { WeightMatrix::from_entries(2, 1, 1, {0, 1, 1}); }) == ErrorCode::CorruptFile);
  CHECK_NOTHROW(WeightMatrix::from_entries(2, 1, 1, {0, -1, -1, 0}));
}
