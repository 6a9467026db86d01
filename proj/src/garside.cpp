#include "braidkit/garside.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace braidkit {

namespace {

constexpr int kMaxStrands = 64;

void check_strands(int m) {
  if (m > kMaxStrands) {
    throw std::invalid_argument("Garside computations support at most " +
                                std::to_string(kMaxStrands) + " strands");
  }
}

}  // namespace

// ---------------------------------------------------------------- simples

namespace simple {

Perm delta(int m) {
  std::vector<int> images(static_cast<std::size_t>(m));
  for (int s = 0; s < m; ++s) images[static_cast<std::size_t>(s)] = m - 1 - s;
  return Perm::from_images(std::move(images));
}

Perm flip(const Perm& s) {
  const int m = s.size();
  std::vector<int> images(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x) {
    images[static_cast<std::size_t>(x)] = m - 1 - s[m - 1 - x];
  }
  return Perm::from_images(std::move(images));
}

std::uint64_t starting_set(const Perm& s) {
  std::uint64_t mask = 0;
  for (int k = 0; k + 1 < s.size(); ++k) {
    if (s[k] > s[k + 1]) mask |= std::uint64_t{1} << k;
  }
  return mask;
}

std::uint64_t finishing_set(const Perm& s) {
  return starting_set(s.inverse());
}

BraidWord word(const Perm& s) {
  BraidWord out(std::max(s.size(), 1));
  Perm rest = s;
  for (;;) {
    const std::uint64_t descents = starting_set(rest);
    if (descents == 0) break;
    const int k = std::countr_zero(descents);
    out.push_back(artin(k + 1));
    rest.swap_positions(k);
  }
  return out;
}

bool make_left_weighted(Perm& s, Perm& t) {
  bool changed = false;
  for (;;) {
    const std::uint64_t movable = starting_set(t) & ~finishing_set(s);
    if (movable == 0) return changed;
    const int k = std::countr_zero(movable);
    s.swap_values(k);
    t.swap_positions(k);
    changed = true;
  }
}

}  // namespace simple

// ---------------------------------------------------------------- GarsideForm

GarsideForm::GarsideForm(int strands) : strands_(strands) {
  if (strands < 1) throw std::invalid_argument("strand count must be >= 1");
  check_strands(strands);
}

void GarsideForm::push_simple(Perm s) {
  if (s.is_identity()) return;
  simples_.push_back(std::move(s));
  for (std::size_t j = simples_.size() - 1; j > 0; --j) {
    if (!simple::make_left_weighted(simples_[j - 1], simples_[j])) break;
  }
  while (!simples_.empty() && simples_.back().is_identity()) {
    simples_.pop_back();
  }
  const Perm delta = simple::delta(strands_);
  std::size_t leading = 0;
  while (leading < simples_.size() && simples_[leading] == delta) ++leading;
  if (leading > 0) {
    simples_.erase(simples_.begin(),
                   simples_.begin() + static_cast<std::ptrdiff_t>(leading));
    infimum_ += static_cast<int>(leading);
  }
}

void GarsideForm::push_artin(int k, int sign) {
  if (sign > 0) {
    Perm s(strands_);
    s.swap_positions(k);
    push_simple(std::move(s));
    return;
  }
  // x a_k^{-1} = Delta^{-1} flip(x) (Delta a_k^{-1})
  infimum_ -= 1;
  for (Perm& s : simples_) s = simple::flip(s);
  Perm complement = simple::delta(strands_);
  complement.swap_values(k);
  push_simple(std::move(complement));
}

void GarsideForm::multiply(const Letter& x) {
  if (x.j > strands_) throw IndexRangeError("a[" + std::to_string(x.i) + "," +
                                                std::to_string(x.j) + "]",
                                            strands_);
  for (int k = x.j - 1; k > x.i; --k) push_artin(k - 1, 1);
  push_artin(x.i - 1, x.sign);
  for (int k = x.i + 1; k < x.j; ++k) push_artin(k - 1, -1);
}

void GarsideForm::multiply(const BraidWord& w) {
  if (w.strands() != strands_) throw StrandMismatch(strands_, w.strands());
  for (const Letter& x : w.letters()) multiply(x);
}

void GarsideForm::multiply_delta_power(int p) {
  infimum_ += p;
  if (p % 2 != 0) {
    for (Perm& s : simples_) s = simple::flip(s);
  }
}

BraidWord GarsideForm::to_word() const {
  const BraidWord delta = half_twist(strands_);
  BraidWord out = power(delta, infimum_);
  for (const Perm& s : simples_) out.append(simple::word(s));
  return out;
}

Perm GarsideForm::perm() const {
  Perm p = (infimum_ % 2 != 0) ? simple::delta(strands_) : Perm(strands_);
  for (const Perm& s : simples_) p = p.then(s);
  return p;
}

std::string GarsideForm::key() const {
  std::string out;
  out.reserve(4 + simples_.size() * static_cast<std::size_t>(strands_));
  const auto inf = static_cast<std::uint32_t>(infimum_);
  for (int shift = 0; shift < 32; shift += 8) {
    out.push_back(static_cast<char>((inf >> shift) & 0xff));
  }
  for (const Perm& s : simples_) {
    for (int v : s.images()) out.push_back(static_cast<char>(v));
  }
  return out;
}

bool GarsideForm::is_left_weighted() const {
  const Perm delta = simple::delta(strands_);
  for (std::size_t k = 0; k < simples_.size(); ++k) {
    if (simples_[k].is_identity() || simples_[k] == delta) return false;
    if (k + 1 < simples_.size()) {
      const std::uint64_t start = simple::starting_set(simples_[k + 1]);
      if ((start & ~simple::finishing_set(simples_[k])) != 0) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- queries

GarsideForm normal_form(const BraidWord& b) {
  GarsideForm form(b.strands());
  form.multiply(b);
  return form;
}

bool equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw StrandMismatch(u.strands(), v.strands());
  // u = v  iff  u v^{-1} = 1, which avoids building two forms.
  GarsideForm form(u.strands());
  form.multiply(u);
  form.multiply(invert(v));
  return form.is_identity();
}

BraidWord canonical_word(const BraidWord& b) { return normal_form(b).to_word(); }

BraidWord half_twist(int m) { return simple::word(simple::delta(m)); }

BraidWord delta_squared(int m) {
  if (m < 2) throw std::invalid_argument("delta_squared needs m >= 2");
  BraidWord round(m);
  for (int k = 1; k < m; ++k) round.push_back(artin(k));
  return power(round, m);
}

ArtinPositivity is_artin_positive(const BraidWord& b) {
  const GarsideForm form = normal_form(b);
  if (form.infimum() < 0) return {};
  return {true, form.to_word()};
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    case Verdict::unknown:
      break;
  }
  return "unknown";
}

// ---------------------------------------------------------------- positivity

namespace {

// Every band generator lies between Delta^{-1} and Delta, so a product of L
// of them has infimum >= -L and supremum <= L. Its permutation is a product
// of L transpositions.
bool may_be_band_positive(const GarsideForm& inverse_rest, int letters_left) {
  // inverse_rest is e^{-1}; inf(e) = -sup(e^{-1}), sup(e) = -inf(e^{-1}).
  if (inverse_rest.supremum() > letters_left) return false;
  if (inverse_rest.infimum() < -letters_left) return false;
  const Perm p = inverse_rest.perm();
  return p.size() - p.cycle_count() <= letters_left;
}

struct SearchNode {
  std::uint32_t parent;
  std::uint32_t letter;
};

}  // namespace

BandPositivity is_band_positive(const BraidWord& b,
                                const EnumerationBudget& budget) {
  BandPositivity result;
  const int d = degree(b);
  if (d < 0) {
    result.verdict = Verdict::no;
    return result;
  }
  if (ArtinPositivity artin_check = is_artin_positive(b); artin_check.positive) {
    result.verdict = Verdict::yes;
    result.witness = std::move(artin_check.witness);
    return result;
  }
  const int m = b.strands();

  std::vector<Letter> alphabet;
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) alphabet.push_back({i, j, 1});
  }

  // State after k letters: normal form of b^{-1} x_1 ... x_k. A witness is a
  // path of length d ending at the identity.
  GarsideForm root = normal_form(invert(b));
  if (!may_be_band_positive(root, d)) {
    result.verdict = Verdict::no;
    return result;
  }

  const auto deadline = std::chrono::steady_clock::now() + budget.time_cap;
  std::vector<SearchNode> nodes{{0, 0}};
  std::vector<std::pair<std::uint32_t, GarsideForm>> layer;
  layer.emplace_back(0, std::move(root));

  for (int k = 0; k < d; ++k) {
    const int left = d - k - 1;
    std::vector<std::pair<std::uint32_t, GarsideForm>> next;
    std::unordered_set<std::string> seen;
    for (const auto& [node, form] : layer) {
      for (std::uint32_t x = 0; x < alphabet.size(); ++x) {
        if (++result.words_enumerated > budget.max_words ||
            ((result.words_enumerated & 0x3ff) == 0 &&
             std::chrono::steady_clock::now() > deadline)) {
          result.verdict = Verdict::unknown;
          return result;
        }
        GarsideForm child = form;
        child.multiply(alphabet[x]);
        if (!may_be_band_positive(child, left)) continue;
        if (!seen.insert(child.key()).second) continue;
        nodes.push_back({node, x});
        next.emplace_back(static_cast<std::uint32_t>(nodes.size() - 1),
                          std::move(child));
      }
    }
    layer = std::move(next);
    if (layer.empty()) break;
  }

  // With no letters left the bounds force the identity.
  if (layer.empty() || !layer.front().second.is_identity()) {
    result.verdict = Verdict::no;
    return result;
  }
  std::vector<Letter> letters;
  for (std::uint32_t n = layer.front().first; n != 0; n = nodes[n].parent) {
    letters.push_back(alphabet[nodes[n].letter]);
  }
  std::reverse(letters.begin(), letters.end());
  result.verdict = Verdict::yes;
  result.witness = BraidWord(m, std::move(letters));
  return result;
}

PositiveLift positive_lift(const BraidWord& b) {
  GarsideForm rest = normal_form(invert(b));
  const int q = rest.infimum();
  int n = q >= 0 ? 1 : std::max(1, (-q + 1) / 2);
  if (q + 2 * n == 0 && rest.simples().empty()) ++n;
  rest.multiply_delta_power(2 * n);
  return {rest.to_word(), n};
}

}  // namespace braidkit
