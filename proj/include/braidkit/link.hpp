#pragma once

// Invariants of the closed braid of a word: component count, the ribbon
// Seifert surface built from m discs and one band per letter, and certified
// bounds on the Euler number (maximal Euler characteristic of a Seifert
// surface).

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "braidkit/braid_word.hpp"
#include "braidkit/garside.hpp"

namespace braidkit {

int components(const BraidWord& b);

/// Band B_k joins disc `from` to disc `to` (from < to) with a half twist of
/// the given sign.
struct Band {
  int from = 1;
  int to = 2;
  int sign = 1;
  friend bool operator==(const Band&, const Band&) = default;
};

struct RibbonSurface {
  int discs = 1;
  std::vector<Band> bands;
  friend bool operator==(const RibbonSurface&, const RibbonSurface&) = default;
};

RibbonSurface bennequin_surface(const BraidWord& b);
int surface_euler(const RibbonSurface& s);
/// Number of boundary circles of the ribbon surface. Throws
/// std::invalid_argument for a band that does not join two distinct discs.
int boundary_circuits(const RibbonSurface& s);
/// Discs as nodes, bands as labelled edges.
std::string to_dot(const RibbonSurface& s);

struct SearchBudget {
  int depth = 3;
  int length_cap = 256;
  std::uint64_t state_cap = 20'000;
  std::chrono::milliseconds time_cap{10'000};
};

/// Shortens a band word without leaving its conjugacy class: free and cyclic
/// cancellation plus contraction of x^e y x^-e to a single band letter
/// whenever that conjugate is one.
BraidWord band_reduce(const BraidWord& b);

struct NormSearch {
  /// Letter count of `witness`; an upper bound on the conjugacy-class norm.
  int value = 0;
  /// value == |degree|, which no band word can beat.
  bool proven_minimal = false;
  /// A band word conjugate to the input with `value` letters.
  BraidWord witness;
  std::uint64_t states = 0;
  /// State or time cap hit before the depth limit.
  bool exhausted = false;
};

/// Breadth-first search over conjugates by Artin letters, each reduced with
/// band_reduce and deduplicated by Garside normal form.
NormSearch norm_upper(const BraidWord& b, const SearchBudget& budget = {});

struct EulerBounds {
  int lower = 0;
  int upper = 0;
  bool exact = false;
  std::string lower_certificate;
  std::string upper_certificate;
  /// Best band word behind `lower`.
  BraidWord short_word;
  Verdict band_positive = Verdict::unknown;
  bool budget_exhausted = false;
};

EulerBounds euler_bounds(const BraidWord& b, const SearchBudget& budget = {},
                         const EnumerationBudget& positivity = {});

enum class Triviality { nontrivial, unknown };
const char* to_string(Triviality t);

/// Flags the closure as a nontrivial link when it has more components than
/// the Euler number upper bound allows for a trivial link.
Triviality is_nontrivial(const BraidWord& b);

struct GenusBounds {
  int lower = 0;
  int upper = 0;
};

class NotAKnot : public std::invalid_argument {
 public:
  explicit NotAKnot(int components)
      : std::invalid_argument("closure has " + std::to_string(components) +
                              " components, expected a knot") {}
};

GenusBounds knot_genus_bounds(const EulerBounds& bounds);
GenusBounds knot_genus_bounds(const BraidWord& b,
                              const SearchBudget& budget = {},
                              const EnumerationBudget& positivity = {});

struct MirrorReduction {
  BraidWord word;
  bool inverted = false;
};

/// Replaces b by its inverse when degree(b) < 0.
MirrorReduction mirror_reduce(const BraidWord& b);

}  // namespace braidkit
