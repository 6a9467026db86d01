#pragma once

// Artin's faithful action of Br_m on the free group F_m, used only as an
// independent check of the Garside word problem.

#include <vector>

#include "braidkit/braid_word.hpp"

namespace braidkit::testing {

// Free group letters are +-(k+1) for generator x_k.
using FreeWord = std::vector<int>;

inline void push_reduced(FreeWord& w, int g) {
  if (!w.empty() && w.back() == -g) {
    w.pop_back();
  } else {
    w.push_back(g);
  }
}

inline FreeWord free_inverse(const FreeWord& w) {
  FreeWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

/// Images of x_1..x_m under the automorphism of `b` (Artin letters only).
inline std::vector<FreeWord> artin_action(const BraidWord& b) {
  const int m = b.strands();
  std::vector<FreeWord> images(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) images[static_cast<std::size_t>(k)] = {k + 1};

  for (const Letter& x : b.letters()) {
    // sigma_i:      x_i -> x_i x_{i+1} x_i^{-1},  x_{i+1} -> x_i
    // sigma_i^{-1}: x_i -> x_{i+1},  x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
    const int g = x.i;
    const int h = x.i + 1;
    std::vector<FreeWord> sigma(static_cast<std::size_t>(m));
    for (int k = 1; k <= m; ++k) sigma[static_cast<std::size_t>(k - 1)] = {k};
    if (x.sign > 0) {
      sigma[static_cast<std::size_t>(g - 1)] = {g, h, -g};
      sigma[static_cast<std::size_t>(h - 1)] = {g};
    } else {
      sigma[static_cast<std::size_t>(g - 1)] = {h};
      sigma[static_cast<std::size_t>(h - 1)] = {-h, g, h};
    }
    std::vector<FreeWord> next(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
      FreeWord& out = next[static_cast<std::size_t>(k)];
      for (int letter : sigma[static_cast<std::size_t>(k)]) {
        const FreeWord& piece =
            images[static_cast<std::size_t>((letter > 0 ? letter : -letter) - 1)];
        if (letter > 0) {
          for (int y : piece) push_reduced(out, y);
        } else {
          for (int y : free_inverse(piece)) push_reduced(out, y);
        }
      }
    }
    images = std::move(next);
  }
  return images;
}

inline bool oracle_equal(const BraidWord& u, const BraidWord& v) {
  return artin_action(expand_bands(u)) == artin_action(expand_bands(v));
}

}  // namespace braidkit::testing
