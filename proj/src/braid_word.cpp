#include "braidkit/braid_word.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace braidkit {

// ---------------------------------------------------------------- Perm

Perm::Perm(int m) : images_(static_cast<std::size_t>(std::max(m, 0))) {
  for (int s = 0; s < m; ++s) images_[static_cast<std::size_t>(s)] = s;
}

Perm Perm::from_images(std::vector<int> images) {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 0 || static_cast<std::size_t>(v) >= images.size() ||
        seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("permutation images are not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  Perm p;
  p.images_ = std::move(images);
  return p;
}

bool Perm::is_identity() const noexcept {
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (images_[s] != static_cast<int>(s)) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  Perm q(size());
  for (std::size_t s = 0; s < images_.size(); ++s) {
    q.images_[static_cast<std::size_t>(images_[s])] = static_cast<int>(s);
  }
  return q;
}

Perm Perm::then(const Perm& q) const {
  if (q.size() != size()) throw StrandMismatch(size(), q.size());
  Perm r(size());
  for (std::size_t s = 0; s < images_.size(); ++s) {
    r.images_[s] = q.images_[static_cast<std::size_t>(images_[s])];
  }
  return r;
}

void Perm::swap_positions(int k) {
  std::swap(images_[static_cast<std::size_t>(k)],
            images_[static_cast<std::size_t>(k + 1)]);
}

void Perm::swap_values(int k) {
  for (int& v : images_) {
    if (v == k) {
      v = k + 1;
    } else if (v == k + 1) {
      v = k;
    }
  }
}

int Perm::cycle_count() const {
  return static_cast<int>(cycles().size());
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (std::size_t s = start; !seen[s];
         s = static_cast<std::size_t>(images_[s])) {
      seen[s] = true;
      cycle.push_back(static_cast<int>(s) + 1);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

// ---------------------------------------------------------------- BraidWord

namespace {

void check_letter(const Letter& x, int strands) {
  if (x.sign != 1 && x.sign != -1) {
    throw std::invalid_argument("letter sign must be +1 or -1");
  }
  if (x.i < 1 || x.i >= x.j || x.j > strands) {
    throw IndexRangeError("a[" + std::to_string(x.i) + "," +
                              std::to_string(x.j) + "]",
                          strands);
  }
}

}  // namespace

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 1) throw std::invalid_argument("strand count must be >= 1");
}

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : BraidWord(strands) {
  for (const Letter& x : letters) check_letter(x, strands);
  letters_ = std::move(letters);
}

void BraidWord::push_back(Letter x) {
  check_letter(x, strands_);
  letters_.push_back(x);
}

void BraidWord::append(const BraidWord& other) {
  if (other.strands_ != strands_) throw StrandMismatch(strands_, other.strands_);
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

std::string BraidWord::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < letters_.size();) {
    const Letter& x = letters_[k];
    std::size_t run = 1;
    while (k + run < letters_.size() && letters_[k + run] == x) ++run;

    if (!out.empty()) out += ' ';
    if (x.is_artin()) {
      out += 'a' + std::to_string(x.i);
    } else {
      out += "a[" + std::to_string(x.i) + ',' + std::to_string(x.j) + ']';
    }
    const long long exponent = static_cast<long long>(run) * x.sign;
    if (exponent != 1) out += '^' + std::to_string(exponent);
    k += run;
  }
  return out;
}

// ---------------------------------------------------------------- parsing

namespace {

constexpr long long kMaxExponent = 1'000'000;

class Parser {
 public:
  Parser(std::string_view text, int strands) : text_(text), strands_(strands) {}

  BraidWord run() {
    BraidWord word(strands_);
    skip_ws();
    while (pos_ < text_.size()) {
      const std::size_t start = pos_;
      term(word, start);
      if (pos_ < text_.size() && !is_ws(text_[pos_])) {
        fail("expected whitespace between terms");
      }
      skip_ws();
    }
    return word;
  }

 private:
  static bool is_ws(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && is_ws(text_[pos_])) ++pos_;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  long long integer(bool allow_sign) {
    bool negative = false;
    if (allow_sign && pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (begin == pos_) {
      pos_ = begin;
      fail("expected integer");
    }
    long long value = 0;
    const auto [ptr, ec] =
        std::from_chars(text_.data() + begin, text_.data() + pos_, value);
    if (ec != std::errc{} || value > std::numeric_limits<int>::max()) {
      pos_ = begin;
      fail("integer too large");
    }
    return negative ? -value : value;
  }

  void term(BraidWord& word, std::size_t start) {
    expect('a');
    long long i = 0;
    long long j = 0;
    if (pos_ < text_.size() && text_[pos_] == '[') {
      ++pos_;
      i = integer(false);
      expect(',');
      j = integer(false);
      expect(']');
    } else {
      i = integer(false);
      j = i + 1;
    }
    long long exponent = 1;
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      exponent = integer(true);
    }
    const std::string token(text_.substr(start, pos_ - start));
    if (i < 1) throw ParseError("generator index must be >= 1", start);
    if (i >= j) throw ParseError("expected i < j in '" + token + "'", start);
    if (j > strands_) throw IndexRangeError(token, strands_);

    const Letter x{static_cast<int>(i), static_cast<int>(j),
                   exponent < 0 ? -1 : 1};
    const long long count = exponent < 0 ? -exponent : exponent;
    if (count > kMaxExponent) throw ParseError("exponent too large", start);
    for (long long n = 0; n < count; ++n) word.push_back(x);
  }

  std::string_view text_;
  int strands_;
  std::size_t pos_ = 0;
};

}  // namespace

BraidWord parse_braid(std::string_view text, int strands) {
  if (strands < 1) throw std::invalid_argument("strand count must be >= 1");
  return Parser(text, strands).run();
}

// ---------------------------------------------------------------- algebra

Letter artin(int k, int sign) { return {k, k + 1, sign}; }

BraidWord expand_bands(const BraidWord& b) {
  BraidWord out(b.strands());
  for (const Letter& x : b.letters()) {
    // a[i,j] = (a_{j-1} ... a_{i+1}) a_i (a_{j-1} ... a_{i+1})^{-1}
    for (int k = x.j - 1; k > x.i; --k) out.push_back(artin(k));
    out.push_back(artin(x.i, x.sign));
    for (int k = x.i + 1; k < x.j; ++k) out.push_back(artin(k, -1));
  }
  return out;
}

int degree(const BraidWord& b) {
  int d = 0;
  for (const Letter& x : b.letters()) d += x.sign;
  return d;
}

Perm underlying_perm(const BraidWord& b) {
  // The strands at positions i-1 and j-1 trade places.
  std::vector<int> images = Perm(b.strands()).images();
  for (const Letter& x : b.letters()) {
    for (int& v : images) {
      if (v == x.i - 1) {
        v = x.j - 1;
      } else if (v == x.j - 1) {
        v = x.i - 1;
      }
    }
  }
  return Perm::from_images(std::move(images));
}

BraidWord invert(const BraidWord& b) {
  std::vector<Letter> letters;
  letters.reserve(b.length());
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) {
    letters.push_back(it->inverse());
  }
  return BraidWord(b.strands(), std::move(letters));
}

BraidWord concat(const BraidWord& u, const BraidWord& v) {
  BraidWord out = u;
  out.append(v);
  return out;
}

BraidWord power(const BraidWord& b, int exponent) {
  const BraidWord base = exponent < 0 ? invert(b) : b;
  BraidWord out(b.strands());
  for (int n = 0; n < (exponent < 0 ? -exponent : exponent); ++n) {
    out.append(base);
  }
  return out;
}

BraidWord free_reduce(const BraidWord& b) {
  std::vector<Letter> stack;
  stack.reserve(b.length());
  for (const Letter& x : b.letters()) {
    if (!stack.empty() && stack.back() == x.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }
  return BraidWord(b.strands(), std::move(stack));
}

CyclicReduction cyclic_reduce(const BraidWord& b) {
  std::vector<Letter> letters = free_reduce(b).letters();
  BraidWord conjugator(b.strands());
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == letters[hi - 1].inverse()) {
    conjugator.push_back(letters[lo]);
    ++lo;
    --hi;
  }
  std::vector<Letter> core(letters.begin() + static_cast<std::ptrdiff_t>(lo),
                           letters.begin() + static_cast<std::ptrdiff_t>(hi));
  return {BraidWord(b.strands(), std::move(core)), std::move(conjugator)};
}

}  // namespace braidkit
