#include "braidkit/link.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace braidkit {

int components(const BraidWord& b) { return underlying_perm(b).cycle_count(); }

// ---------------------------------------------------------------- surface

RibbonSurface bennequin_surface(const BraidWord& b) {
  RibbonSurface s;
  s.discs = b.strands();
  s.bands.reserve(b.length());
  for (const Letter& x : b.letters()) s.bands.push_back({x.i, x.j, x.sign});
  return s;
}

int surface_euler(const RibbonSurface& s) {
  return s.discs - static_cast<int>(s.bands.size());
}

int boundary_circuits(const RibbonSurface& s) {
  const int n = static_cast<int>(s.bands.size());
  for (const Band& band : s.bands) {
    if (band.from < 1 || band.from >= band.to || band.to > s.discs ||
        (band.sign != 1 && band.sign != -1)) {
      throw std::invalid_argument("malformed surface: band joins discs " +
                                  std::to_string(band.from) + " and " +
                                  std::to_string(band.to));
    }
  }

  // Band feet along each disc boundary, in band order. Foot 2k is band k at
  // its `from` disc, foot 2k+1 at its `to` disc.
  std::vector<std::vector<int>> feet(static_cast<std::size_t>(s.discs) + 1);
  std::vector<int> slot(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < n; ++k) {
    for (int end = 0; end < 2; ++end) {
      const int disc = end == 0 ? s.bands[static_cast<std::size_t>(k)].from
                                : s.bands[static_cast<std::size_t>(k)].to;
      auto& list = feet[static_cast<std::size_t>(disc)];
      slot[static_cast<std::size_t>(2 * k + end)] = static_cast<int>(list.size());
      list.push_back(2 * k + end);
    }
  }
  const auto disc_of = [&](int foot) {
    const Band& band = s.bands[static_cast<std::size_t>(foot / 2)];
    return foot % 2 == 0 ? band.from : band.to;
  };

  // Walking the boundary: having arrived at a disc through a foot, follow
  // the disc boundary to its next foot and cross that band to the other disc.
  const auto next = [&](int foot) {
    const auto& list = feet[static_cast<std::size_t>(disc_of(foot))];
    const std::size_t at =
        (static_cast<std::size_t>(slot[static_cast<std::size_t>(foot)]) + 1) %
        list.size();
    return list[at] ^ 1;
  };

  int circuits = 0;
  for (int d = 1; d <= s.discs; ++d) {
    if (feet[static_cast<std::size_t>(d)].empty()) ++circuits;
  }
  std::vector<bool> seen(static_cast<std::size_t>(2 * n), false);
  for (int start = 0; start < 2 * n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++circuits;
    for (int f = start; !seen[static_cast<std::size_t>(f)]; f = next(f)) {
      seen[static_cast<std::size_t>(f)] = true;
    }
  }
  return circuits;
}

std::string to_dot(const RibbonSurface& s) {
  std::ostringstream out;
  out << "graph ribbon {\n  node [shape=circle];\n";
  for (int d = 1; d <= s.discs; ++d) out << "  d" << d << ";\n";
  for (std::size_t k = 0; k < s.bands.size(); ++k) {
    const Band& band = s.bands[k];
    out << "  d" << band.from << " -- d" << band.to << " [label=\"B" << k + 1
        << (band.sign > 0 ? "+" : "-") << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------- reduction

namespace {

// conjugate[(x * 2 + e) * M + y] is the band letter z with
// x^s y x^-s = z (s = +1 for e = 0, -1 for e = 1), or -1.
class ConjugationTable {
 public:
  explicit ConjugationTable(int m) : m_(m) {
    for (int i = 1; i <= m; ++i) {
      for (int j = i + 1; j <= m; ++j) letters_.push_back({i, j, 1});
    }
    const std::size_t count = letters_.size();
    std::unordered_map<std::string, int> by_key;
    for (std::size_t z = 0; z < count; ++z) {
      by_key.emplace(normal_form(BraidWord(m, {letters_[z]})).key(),
                     static_cast<int>(z));
    }
    conjugate_.assign(count * 2 * count, -1);
    for (std::size_t x = 0; x < count; ++x) {
      for (int e = 0; e < 2; ++e) {
        const Letter g = e == 0 ? letters_[x] : letters_[x].inverse();
        for (std::size_t y = 0; y < count; ++y) {
          const BraidWord c(m, {g, letters_[y], g.inverse()});
          const auto it = by_key.find(normal_form(c).key());
          if (it != by_key.end()) {
            conjugate_[(x * 2 + static_cast<std::size_t>(e)) * count + y] =
                it->second;
          }
        }
      }
    }
  }

  /// z^{sign(y)} with g y g^{-1} = z^{sign(y)}, if it is a single letter.
  std::optional<Letter> contract(const Letter& g, const Letter& y) const {
    const std::size_t count = letters_.size();
    const int z = conjugate_[(index(g) * 2 + (g.sign > 0 ? 0 : 1)) * count +
                             index(y)];
    if (z < 0) return std::nullopt;
    Letter out = letters_[static_cast<std::size_t>(z)];
    out.sign = y.sign;
    return out;
  }

 private:
  std::size_t index(const Letter& x) const {
    // Row-major position of (i, j) among pairs i < j.
    const int i = x.i - 1;
    const int j = x.j - 1;
    return static_cast<std::size_t>(i * (2 * m_ - i - 1) / 2 + (j - i - 1));
  }

  int m_;
  std::vector<Letter> letters_;
  std::vector<int> conjugate_;
};

std::shared_ptr<const ConjugationTable> table_for(int m) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const ConjugationTable>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& entry = cache[m];
  if (!entry) entry = std::make_shared<const ConjugationTable>(m);
  return entry;
}

// One pass of linear reductions; returns true if anything changed.
bool reduce_linear(std::vector<Letter>& w, const ConjugationTable& table) {
  bool changed = false;
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const Letter& x : w) {
    out.push_back(x);
    for (;;) {
      const std::size_t n = out.size();
      if (n >= 2 && out[n - 1] == out[n - 2].inverse()) {
        out.resize(n - 2);
        changed = true;
        continue;
      }
      if (n >= 3 && out[n - 1] == out[n - 3].inverse()) {
        if (const auto z = table.contract(out[n - 3], out[n - 2])) {
          out.resize(n - 3);
          out.push_back(*z);
          changed = true;
          continue;
        }
      }
      break;
    }
  }
  w = std::move(out);
  return changed;
}

// Reductions across the seam between the last and first letters.
bool reduce_cyclic(std::vector<Letter>& w, const ConjugationTable& table) {
  const std::size_t n = w.size();
  if (n >= 2 && w.front() == w.back().inverse()) {
    w.pop_back();
    w.erase(w.begin());
    return true;
  }
  if (n >= 3) {
    for (std::size_t shift : {n - 1, n - 2}) {
      std::vector<Letter> rotated(w.begin() + static_cast<std::ptrdiff_t>(shift),
                                  w.end());
      rotated.insert(rotated.end(), w.begin(),
                     w.begin() + static_cast<std::ptrdiff_t>(shift));
      if (rotated[2] == rotated[0].inverse()) {
        if (const auto z = table.contract(rotated[0], rotated[1])) {
          rotated.erase(rotated.begin(), rotated.begin() + 3);
          rotated.insert(rotated.begin(), *z);
          w = std::move(rotated);
          return true;
        }
      }
    }
  }
  return false;
}

BraidWord band_reduce_with(const BraidWord& b, const ConjugationTable& table) {
  std::vector<Letter> w = b.letters();
  do {
    reduce_linear(w, table);
  } while (reduce_cyclic(w, table));
  return BraidWord(b.strands(), std::move(w));
}

}  // namespace

BraidWord band_reduce(const BraidWord& b) {
  if (b.strands() < 2) return b;
  return band_reduce_with(b, *table_for(b.strands()));
}

// ---------------------------------------------------------------- norm

NormSearch norm_upper(const BraidWord& b, const SearchBudget& budget) {
  const int m = b.strands();
  const int floor_value = std::abs(degree(b));
  NormSearch result;
  if (m < 2) {
    result.witness = b;
    result.proven_minimal = true;
    return result;
  }
  const auto table = table_for(m);
  const auto deadline = std::chrono::steady_clock::now() + budget.time_cap;

  BraidWord start = band_reduce_with(b, *table);
  result.witness = start;
  result.value = static_cast<int>(start.length());
  result.states = 1;

  std::unordered_set<std::string> visited{normal_form(start).key()};
  std::deque<std::pair<BraidWord, int>> queue;
  queue.emplace_back(std::move(start), 0);

  while (!queue.empty() && result.value > floor_value) {
    auto [word, depth] = std::move(queue.front());
    queue.pop_front();
    if (depth >= budget.depth) continue;
    for (int k = 1; k < m && result.value > floor_value; ++k) {
      for (int sign : {1, -1}) {
        // g^{-1} w g with g = a_k^sign
        const Letter g = artin(k, sign);
        std::vector<Letter> letters{g.inverse()};
        letters.insert(letters.end(), word.letters().begin(),
                       word.letters().end());
        letters.push_back(g);
        BraidWord c = band_reduce_with(BraidWord(m, std::move(letters)), *table);
        if (static_cast<int>(c.length()) > budget.length_cap) continue;
        if (!visited.insert(normal_form(c).key()).second) continue;
        ++result.states;
        if (static_cast<int>(c.length()) < result.value) {
          result.value = static_cast<int>(c.length());
          result.witness = c;
          if (result.value == floor_value) break;
        }
        if (result.states >= budget.state_cap ||
            std::chrono::steady_clock::now() > deadline) {
          result.exhausted = true;
          result.proven_minimal = result.value == floor_value;
          return result;
        }
        queue.emplace_back(std::move(c), depth + 1);
      }
    }
  }
  result.proven_minimal = result.value == floor_value;
  return result;
}

// ---------------------------------------------------------------- Euler

EulerBounds euler_bounds(const BraidWord& b, const SearchBudget& budget,
                         const EnumerationBudget& positivity) {
  const int m = b.strands();
  const int d = degree(b);
  const int abs_d = std::abs(d);

  EulerBounds out;
  out.upper = m - abs_d;
  out.upper_certificate = "m - |deg b| = " + std::to_string(m) + " - " +
                          std::to_string(abs_d);

  // b and its inverse close up to mirror images with the same Euler number.
  // For degree 0 neither is preferred, so both are searched.
  std::vector<BraidWord> candidates{mirror_reduce(b).word};
  if (d == 0) candidates.push_back(invert(b));
  NormSearch best;
  best.value = -1;
  for (const BraidWord& c : candidates) {
    NormSearch found = norm_upper(c, budget);
    out.budget_exhausted = out.budget_exhausted || found.exhausted;
    if (best.value < 0 || found.value < best.value) best = std::move(found);
  }

  const BandPositivity pos = is_band_positive(candidates.front(), positivity);
  out.band_positive = pos.verdict;
  if (pos.verdict == Verdict::unknown) out.budget_exhausted = true;

  int norm = best.value;
  out.short_word = best.witness;
  std::string how = "Bennequin surface of conjugate word \"" +
                    best.witness.to_string() + "\"";
  if (pos.verdict == Verdict::yes &&
      static_cast<int>(pos.witness->length()) < norm) {
    norm = static_cast<int>(pos.witness->length());
    out.short_word = *pos.witness;
    how = "Bennequin surface of band-positive word \"" +
          pos.witness->to_string() + "\"";
  }
  out.lower = m - norm;
  out.lower_certificate = "m - " + std::to_string(norm) + " from " + how;
  if (out.lower > out.upper) {
    throw InvariantViolation("Euler bounds crossed for " + b.to_string());
  }
  out.exact = out.lower == out.upper;
  if (out.exact && pos.verdict == Verdict::yes) {
    out.lower_certificate += (d < 0 ? "; inverse is band-positive"
                                    : "; band-positive");
  }
  return out;
}

const char* to_string(Triviality t) {
  return t == Triviality::nontrivial ? "nontrivial" : "unknown";
}

Triviality is_nontrivial(const BraidWord& b) {
  // A trivial link with k components has Euler number k.
  return components(b) > b.strands() - std::abs(degree(b))
             ? Triviality::nontrivial
             : Triviality::unknown;
}

namespace {

int floor_div2(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }
int ceil_div2(int x) { return -floor_div2(-x); }

}  // namespace

GenusBounds knot_genus_bounds(const EulerBounds& bounds) {
  // e = 1 - 2g for a knot.
  GenusBounds g;
  g.lower = std::max(0, ceil_div2(1 - bounds.upper));
  g.upper = floor_div2(1 - bounds.lower);
  return g;
}

GenusBounds knot_genus_bounds(const BraidWord& b, const SearchBudget& budget,
                              const EnumerationBudget& positivity) {
  const int k = components(b);
  if (k != 1) throw NotAKnot(k);
  return knot_genus_bounds(euler_bounds(b, budget, positivity));
}

MirrorReduction mirror_reduce(const BraidWord& b) {
  if (degree(b) < 0) return {invert(b), true};
  return {b, false};
}

}  // namespace braidkit
