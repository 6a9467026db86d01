#pragma once

#include <random>

#include "braidkit/braid_word.hpp"

namespace braidkit::testing {

/// Uniform random word of exactly `length` letters. With `bands` set the
/// alphabet is every a[i,j]^{+-1}, otherwise only Artin letters.
inline BraidWord random_word(std::mt19937& rng, int m, int length,
                             bool bands = true) {
  BraidWord w(m);
  if (m < 2) return w;
  std::uniform_int_distribution<int> sign(0, 1);
  for (int n = 0; n < length; ++n) {
    int i = 0;
    int j = 0;
    if (bands) {
      std::uniform_int_distribution<int> pick(1, m);
      do {
        i = pick(rng);
        j = pick(rng);
      } while (i == j);
      if (i > j) std::swap(i, j);
    } else {
      i = std::uniform_int_distribution<int>(1, m - 1)(rng);
      j = i + 1;
    }
    w.push_back({i, j, sign(rng) != 0 ? 1 : -1});
  }
  return w;
}

inline BraidWord random_word_upto(std::mt19937& rng, int m, int max_length,
                                  bool bands = true) {
  return random_word(rng, m,
                     std::uniform_int_distribution<int>(0, max_length)(rng),
                     bands);
}

/// Inserts three trivial relator words at random positions.
inline BraidWord scramble(std::mt19937& rng, BraidWord b) {
  const int m = b.strands();
  std::vector<Letter> letters = b.letters();
  for (int step = 0; step < 3; ++step) {
    const auto at = static_cast<std::ptrdiff_t>(
        std::uniform_int_distribution<std::size_t>(0, letters.size())(rng));
    const int k = std::uniform_int_distribution<int>(1, m - 1)(rng);
    std::vector<Letter> relator;
    if (k + 1 < m && rng() % 2 == 0) {
      // a_k a_{k+1} a_k a_{k+1}^{-1} a_k^{-1} a_{k+1}^{-1}
      relator = {artin(k), artin(k + 1), artin(k), artin(k + 1, -1),
                 artin(k, -1), artin(k + 1, -1)};
    } else {
      relator = {artin(k), artin(k, -1)};
    }
    letters.insert(letters.begin() + at, relator.begin(), relator.end());
  }
  return BraidWord(m, std::move(letters));
}

}  // namespace braidkit::testing
