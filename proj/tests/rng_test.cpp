#include <cmath>
#include <vector>

#include "doctest.h"
#include "skyplace/rng.hpp"

using namespace skyplace;

TEST_CASE("same seed gives the same sequence") {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("different seeds give different sequences") {
  Rng a(1), b(2);
  int equal = 0;
  for (int i = 0; i < 64; ++i) equal += a.next_u64() == b.next_u64();
  CHECK(equal == 0);
}

TEST_CASE("uniform01 stays in [0, 1) with mean near one half") {
  Rng rng(7);
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform01();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(std::fabs(sum / n - 0.5) < 0.005);  // ~5.5 sigma of the sample mean
}

TEST_CASE("uniform respects its bounds") {
  Rng rng(9);
  for (int i = 0; i < 10000; ++i) {
    const double v = rng.uniform(-3.0, 5.0);
    REQUIRE(v >= -3.0);
    REQUIRE(v < 5.0);
  }
}

TEST_CASE("pick_index covers [0, n) roughly uniformly") {
  Rng rng(11);
  const std::size_t n = 7;
  const int draws = 70000;
  std::vector<int> counts(n, 0);
  for (int i = 0; i < draws; ++i) {
    const std::size_t idx = rng.pick_index(n);
    REQUIRE(idx < n);
    ++counts[idx];
  }
  // Binomial sd per bin is sqrt(draws * p * (1-p)) ~= 93; allow 4 sigma.
  for (int c : counts) CHECK(std::fabs(c - 10000.0) < 4 * 93.0);
}

TEST_CASE("bernoulli edge probabilities") {
  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    CHECK_FALSE(rng.bernoulli(0.0));
    CHECK(rng.bernoulli(1.0));
  }
}

TEST_CASE("derived streams are decorrelated by name and index") {
  const std::uint64_t master = 1234;
  Rng users = derived_stream(master, "users");
  Rng channel = derived_stream(master, "channel");
  Rng agent0 = derived_stream(master, "agent", 0);
  Rng agent1 = derived_stream(master, "agent", 1);
  CHECK(users.next_u64() != channel.next_u64());
  CHECK(agent0.next_u64() != agent1.next_u64());

  Rng again = derived_stream(master, "users");
  Rng fresh = derived_stream(master, "users");
  CHECK(again.next_u64() == fresh.next_u64());
}

TEST_CASE("derived streams depend on the master seed") {
  Rng a = derived_stream(1, "users");
  Rng b = derived_stream(2, "users");
  CHECK(a.next_u64() != b.next_u64());
}
