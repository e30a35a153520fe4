#pragma once

#include <random>
#include <vector>

#include "cgt/word.hpp"

namespace cgt::testutil {

// Deterministic RNG for property tests.
inline std::mt19937_64 make_rng(std::uint64_t seed = 0x5eed5eed5eedULL) {
  return std::mt19937_64(seed);
}

// Random freely reduced word over the given generators with at most
// max_syllables syllables and exponents in [-max_exp, max_exp] \ {0}.
inline Word random_word(std::mt19937_64& rng, const std::vector<Gen>& gens,
                        int max_syllables, int max_exp) {
  std::uniform_int_distribution<int> len(0, max_syllables);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> exp(1, max_exp);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Syllable> syls;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) {
    int e = exp(rng) * (sign(rng) ? 1 : -1);
    syls.push_back({gens[pick(rng)], e});
  }
  return Word::from_syllables(std::move(syls));
}

}  // namespace cgt::testutil
