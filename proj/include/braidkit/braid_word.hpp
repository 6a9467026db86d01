#pragma once

// Words in the band-generator alphabet a[i,j]^{+-1} of the braid group Br_m.
//
// Conventions used throughout the library:
//   * strands and generator indices are 1-based in text and in Letter;
//   * a word is read left to right, the leftmost letter acting first;
//   * a[i,i+1] is the Artin generator a_i;
//   * Perm is 0-based and acts on the right: images[s] is the final position
//     of the strand that starts at position s, so perm(uv) = perm(u) then
//     perm(v).

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidkit/errors.hpp"

namespace braidkit {

struct Letter {
  int i = 1;
  int j = 2;
  int sign = 1;

  bool is_artin() const noexcept { return j == i + 1; }
  Letter inverse() const noexcept { return {i, j, -sign}; }

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

class Perm {
 public:
  Perm() = default;
  /// Identity on m points.
  explicit Perm(int m);
  /// Takes ownership of a 0-based image table; throws if it is not a bijection.
  static Perm from_images(std::vector<int> images);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator[](int s) const { return images_[static_cast<std::size_t>(s)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Perm inverse() const;
  /// Right action: (*this).then(q) first applies *this, then q.
  Perm then(const Perm& q) const;
  /// Swaps the images of positions k and k+1 (left multiplication by a_{k+1}).
  void swap_positions(int k);
  /// Swaps the values k and k+1 (right multiplication by a_{k+1}).
  void swap_values(int k);

  int cycle_count() const;
  /// Cycles in 1-based notation, each starting at its smallest element,
  /// ordered by that element. Fixed points are included.
  std::vector<std::vector<int>> cycles() const;

  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

class BraidWord {
 public:
  BraidWord() = default;
  /// The empty word on m strands. Throws std::invalid_argument if m < 1.
  explicit BraidWord(int strands);
  /// Validates every letter against m.
  BraidWord(int strands, std::vector<Letter> letters);

  int strands() const noexcept { return strands_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  void push_back(Letter x);
  void append(const BraidWord& other);

  /// Canonical text form (see parse_braid for the grammar).
  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<Letter> letters_;
};

/// Parses the braid word grammar
///
///   word := ws* (term ws+)* term? ws*
///   term := gen exp?
///   gen  := "a" INT | "a[" INT "," INT "]"
///   exp  := "^" SINT
///
/// where "aK" means a[K,K+1] and an exponent of 0 produces no letters.
/// Throws ParseError on syntax errors and IndexRangeError when a generator
/// does not exist in Br_m.
BraidWord parse_braid(std::string_view text, int strands);

/// The Artin generator a_k (1-based) or its inverse.
Letter artin(int k, int sign = 1);

BraidWord expand_bands(const BraidWord& b);
int degree(const BraidWord& b);
Perm underlying_perm(const BraidWord& b);

BraidWord invert(const BraidWord& b);
BraidWord concat(const BraidWord& u, const BraidWord& v);
BraidWord power(const BraidWord& b, int exponent);
BraidWord free_reduce(const BraidWord& b);

struct CyclicReduction {
  BraidWord word;
  /// `conjugator` c satisfies word = c^{-1} * input * c as group elements.
  BraidWord conjugator;
};
CyclicReduction cyclic_reduce(const BraidWord& b);

}  // namespace braidkit
