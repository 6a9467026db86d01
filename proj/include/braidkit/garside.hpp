#pragma once

// Classical Garside structure on Br_m: permutation braids as simple elements,
// Delta = half twist, left-greedy normal form Delta^p s_1 ... s_k.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braidkit/braid_word.hpp"

namespace braidkit {

namespace simple {

/// Permutation of the half twist on m strands.
Perm delta(int m);
/// Conjugation by Delta: x -> Delta^{-1} x Delta.
Perm flip(const Perm& s);
/// Bitmask of k (0-based) such that a_{k+1} left-divides s.
std::uint64_t starting_set(const Perm& s);
/// Bitmask of k (0-based) such that a_{k+1} right-divides s.
std::uint64_t finishing_set(const Perm& s);
/// Positive Artin word of the permutation braid.
BraidWord word(const Perm& s);
/// Makes (s, t) left-weighted in place; returns false if already so.
bool make_left_weighted(Perm& s, Perm& t);

}  // namespace simple

class GarsideForm {
 public:
  GarsideForm() = default;
  /// The identity element of Br_m.
  explicit GarsideForm(int strands);

  int strands() const noexcept { return strands_; }
  int infimum() const noexcept { return infimum_; }
  int supremum() const noexcept {
    return infimum_ + static_cast<int>(simples_.size());
  }
  int canonical_length() const noexcept {
    return static_cast<int>(simples_.size());
  }
  const std::vector<Perm>& simples() const noexcept { return simples_; }

  bool is_identity() const noexcept {
    return infimum_ == 0 && simples_.empty();
  }

  /// Right multiplication, keeping the form normal.
  void multiply(const Letter& x);
  void multiply(const BraidWord& w);
  void multiply_delta_power(int p);

  /// Delta^p followed by the simple factors; deterministic per element.
  BraidWord to_word() const;
  /// Strand permutation of the element.
  Perm perm() const;
  /// Compact byte string, equal iff the forms are equal.
  std::string key() const;

  bool is_left_weighted() const;

  friend bool operator==(const GarsideForm&, const GarsideForm&) = default;

 private:
  void push_artin(int k, int sign);
  void push_simple(Perm s);

  int strands_ = 1;
  int infimum_ = 0;
  std::vector<Perm> simples_;
};

GarsideForm normal_form(const BraidWord& b);
/// Word problem. Throws StrandMismatch if the strand counts differ.
bool equal(const BraidWord& u, const BraidWord& v);
/// normal_form(b).to_word().
BraidWord canonical_word(const BraidWord& b);

/// Positive Artin word of the half twist Delta_m.
BraidWord half_twist(int m);
/// (a_1 a_2 ... a_{m-1})^m. Throws std::invalid_argument if m < 2.
BraidWord delta_squared(int m);

struct ArtinPositivity {
  bool positive = false;
  /// Positive Artin word equal to the input, present iff `positive`.
  std::optional<BraidWord> witness;
};
ArtinPositivity is_artin_positive(const BraidWord& b);

enum class Verdict { yes, no, unknown };
const char* to_string(Verdict v);

struct EnumerationBudget {
  std::uint64_t max_words = 1'000'000;
  std::chrono::milliseconds time_cap{30'000};
};

struct BandPositivity {
  Verdict verdict = Verdict::unknown;
  /// Band-positive word of length degree(b), present iff verdict is yes.
  std::optional<BraidWord> witness;
  std::uint64_t words_enumerated = 0;
};

/// Membership in the monoid generated by all a[i,j]. Artin positivity is
/// tried first; otherwise positive band words of length degree(b) are
/// enumerated breadth-first (deduplicated by element, pruned by Garside
/// infimum/supremum and permutation bounds). The witness from enumeration is
/// the lexicographically least one in (i, j) letter order.
BandPositivity is_band_positive(const BraidWord& b,
                                const EnumerationBudget& budget = {});

struct PositiveLift {
  /// Positive Artin word with r * b = Delta^{2N}.
  BraidWord r;
  int N = 1;
};

/// Least N >= 1 for which Delta^{2N} b^{-1} is Artin-positive and not the
/// identity.
PositiveLift positive_lift(const BraidWord& b);

}  // namespace braidkit
