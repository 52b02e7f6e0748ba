#ifndef QPROB_TESTS_TESTUTIL_HPP
#define QPROB_TESTS_TESTUTIL_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qprob/event_algebra.hpp"

namespace qprob::testing {

// Deterministic RNG wrapper. Only the raw mt19937_64 stream is used (its
// sequence is pinned by the standard); all derived draws go through the
// helpers below so results are stable across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // inclusive bounds
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool chance(int percent) { return uniform(1, 100) <= percent; }

 private:
  std::mt19937_64 gen_;
};

inline UniversePtr letters_universe(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return make_universe(std::move(names));
}

}  // namespace qprob::testing

#endif  // QPROB_TESTS_TESTUTIL_HPP
