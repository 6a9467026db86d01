#pragma once

// Factorizations of braids (the factorization semigroup of Br_m), Hurwitz
// moves, braid monodromy factorizations of Hurwitz curves in the Hirzebruch
// surface F_N, and the homology arithmetic on F_N.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "braidkit/braid_word.hpp"
#include "braidkit/garside.hpp"

namespace braidkit {

/// Ordered sequence of nontrivial braids. Factors are stored as Garside
/// canonical words, so two factorizations are equal iff their factor tuples
/// are equal in Br_m. Identity factors are dropped on construction.
class Factorization {
 public:
  explicit Factorization(int strands);
  Factorization(int strands, const std::vector<BraidWord>& factors);

  int strands() const noexcept { return strands_; }
  std::size_t size() const noexcept { return factors_.size(); }
  const std::vector<BraidWord>& factors() const noexcept { return factors_; }

  std::string key() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  int strands_;
  std::vector<BraidWord> factors_;
};

/// Product of the factors, left to right.
BraidWord alpha(const Factorization& f);

/// (g_i, g_{i+1}) -> (g_{i+1}, g_{i+1}^{-1} g_i g_{i+1}); `i` is 0-based and
/// must satisfy i + 1 < f.size(), otherwise std::out_of_range.
Factorization hurwitz_r(const Factorization& f, std::size_t i);
/// (g_i, g_{i+1}) -> (g_i g_{i+1} g_i^{-1}, g_i); inverse of hurwitz_r.
Factorization hurwitz_l(const Factorization& f, std::size_t i);

struct MonodromyFactorization {
  Factorization factorization;
  int N = 1;
};

/// (a_{i_1 j_1}, ..., a_{i_n j_n}, b) where r = a_{i_1 j_1} ... a_{i_n j_n}
/// is the positive lift with r b = Delta^{2N}. Throws std::invalid_argument
/// when degree(b) < 0.
MonodromyFactorization monodromy_factorization(const BraidWord& b);

/// alpha(f) == (Delta^2)^N. Throws std::invalid_argument if N < 1.
bool verify_delta(const Factorization& f, int N);

struct OrbitBudget {
  std::uint64_t state_cap = 100'000;
  std::chrono::milliseconds time_cap{60'000};
};

struct Orbit {
  /// In breadth-first discovery order, starting with the input.
  std::vector<Factorization> elements;
  bool complete = false;
};

Orbit hurwitz_orbit(const Factorization& f, const OrbitBudget& budget = {});

/// Throws StrandMismatch for different strand counts.
Verdict hurwitz_equivalent(const Factorization& f1, const Factorization& f2,
                           const OrbitBudget& budget = {});

/// Reads the factorization text format: a header line "m=<INT>", then one
/// braid word per nonempty line. Lines starting with '#' are comments. A
/// line "---" separates consecutive factorizations in one file.
std::vector<Factorization> parse_factorizations(std::string_view text);
/// Exactly one factorization; throws ParseError otherwise.
Factorization parse_factorization(std::string_view text);
std::string to_text(const Factorization& f);

// ---------------------------------------------------------------- homology

/// e [E_N] + r [R] in H_2(F_N).
struct HClass {
  int N = 1;
  long long e = 0;
  long long r = 0;
  friend bool operator==(const HClass&, const HClass&) = default;
};

HClass fiber_class(int N);
HClass exceptional_class(int N);
/// -2 [E_N] - (N + 2) [R].
HClass canonical_class(int N);
/// m [E_N] + N m [R]. Throws std::invalid_argument unless m, N >= 1.
HClass hurwitz_class(int m, int N);

/// [R].[R] = 0, [R].[E_N] = 1, [E_N].[E_N] = -N, extended bilinearly.
/// Throws std::invalid_argument when the N differ.
long long intersect(const HClass& x, const HClass& y);

/// 1 + (C.C + K.C) / 2; throws std::domain_error on odd C.C + K.C.
long long smooth_genus(const HClass& c);

/// Euler characteristic m - N m(m-1) + deg b of the part of the Hurwitz curve
/// over the outer disc. Throws std::invalid_argument unless
/// N m(m-1) - deg b > 0.
long long chi_hurwitz_piece(int m, int N, int deg_b);

struct ThomCheck {
  long long chi_s = 0;
  long long bound = 0;
  bool holds = false;
};

/// Closed surface S = Seifert surface (chi = e_l) + outer Hurwitz piece,
/// compared against chi of a smooth algebraic curve in the same class.
ThomCheck thom_check(int e_l, int m, int N, int deg_b);

}  // namespace braidkit
