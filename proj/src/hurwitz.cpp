#include "braidkit/hurwitz.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace braidkit {

// ---------------------------------------------------------------- semigroup

Factorization::Factorization(int strands) : strands_(strands) {
  if (strands < 1) throw std::invalid_argument("strand count must be >= 1");
}

Factorization::Factorization(int strands, const std::vector<BraidWord>& factors)
    : Factorization(strands) {
  factors_.reserve(factors.size());
  for (const BraidWord& g : factors) {
    if (g.strands() != strands) throw StrandMismatch(strands, g.strands());
    const GarsideForm form = normal_form(g);
    // x_g . x_1 = x_g
    if (!form.is_identity()) factors_.push_back(form.to_word());
  }
}

std::string Factorization::key() const {
  std::string out;
  for (const BraidWord& g : factors_) {
    out += g.to_string();
    out += '|';
  }
  return out;
}

BraidWord alpha(const Factorization& f) {
  BraidWord out(f.strands());
  for (const BraidWord& g : f.factors()) out.append(g);
  return out;
}

namespace {

void check_move_index(const Factorization& f, std::size_t i) {
  if (i + 1 >= f.size()) {
    throw std::out_of_range("Hurwitz move at position " + std::to_string(i) +
                            " needs two factors; factorization has " +
                            std::to_string(f.size()));
  }
}

BraidWord conjugate(const BraidWord& g, const BraidWord& by) {
  // by^{-1} g by
  return concat(concat(invert(by), g), by);
}

}  // namespace

Factorization hurwitz_r(const Factorization& f, std::size_t i) {
  check_move_index(f, i);
  std::vector<BraidWord> factors = f.factors();
  const BraidWord first = factors[i];
  const BraidWord second = factors[i + 1];
  factors[i] = second;
  factors[i + 1] = conjugate(first, second);
  return Factorization(f.strands(), factors);
}

Factorization hurwitz_l(const Factorization& f, std::size_t i) {
  check_move_index(f, i);
  std::vector<BraidWord> factors = f.factors();
  const BraidWord first = factors[i];
  const BraidWord second = factors[i + 1];
  factors[i] = conjugate(second, invert(first));
  factors[i + 1] = first;
  return Factorization(f.strands(), factors);
}

MonodromyFactorization monodromy_factorization(const BraidWord& b) {
  if (degree(b) < 0) {
    throw std::invalid_argument(
        "monodromy factorization needs degree >= 0; mirror-reduce first");
  }
  const PositiveLift lift = positive_lift(b);
  std::vector<BraidWord> factors;
  factors.reserve(lift.r.length() + 1);
  for (const Letter& x : lift.r.letters()) {
    factors.emplace_back(b.strands(), std::vector<Letter>{x});
  }
  factors.push_back(b);
  return {Factorization(b.strands(), factors), lift.N};
}

bool verify_delta(const Factorization& f, int N) {
  if (N < 1) throw std::invalid_argument("verify_delta needs N >= 1");
  if (f.strands() < 2) return false;
  return equal(alpha(f), power(delta_squared(f.strands()), N));
}

// ---------------------------------------------------------------- orbits

namespace {

struct OrbitSearch {
  Orbit orbit;
  bool found = false;
};

OrbitSearch explore(const Factorization& f, const OrbitBudget& budget,
                    const Factorization* target) {
  OrbitSearch out;
  const auto deadline = std::chrono::steady_clock::now() + budget.time_cap;
  std::unordered_set<std::string> seen{f.key()};
  out.orbit.elements.push_back(f);
  if (target != nullptr && f == *target) {
    out.found = true;
    return out;
  }

  for (std::size_t head = 0; head < out.orbit.elements.size(); ++head) {
    const Factorization current = out.orbit.elements[head];
    for (std::size_t i = 0; i + 1 < current.size(); ++i) {
      for (const bool right : {true, false}) {
        Factorization next = right ? hurwitz_r(current, i) : hurwitz_l(current, i);
        if (!seen.insert(next.key()).second) continue;
        if (target != nullptr && next == *target) {
          out.orbit.elements.push_back(std::move(next));
          out.found = true;
          return out;
        }
        out.orbit.elements.push_back(std::move(next));
        if (out.orbit.elements.size() >= budget.state_cap ||
            std::chrono::steady_clock::now() > deadline) {
          return out;
        }
      }
    }
  }
  out.orbit.complete = true;
  return out;
}

}  // namespace

Orbit hurwitz_orbit(const Factorization& f, const OrbitBudget& budget) {
  return explore(f, budget, nullptr).orbit;
}

Verdict hurwitz_equivalent(const Factorization& f1, const Factorization& f2,
                           const OrbitBudget& budget) {
  if (f1.strands() != f2.strands()) throw StrandMismatch(f1.strands(), f2.strands());
  if (f1.size() != f2.size()) return Verdict::no;
  if (!equal(alpha(f1), alpha(f2))) return Verdict::no;

  const OrbitSearch forward = explore(f1, budget, &f2);
  if (forward.found) return Verdict::yes;
  if (forward.orbit.complete) return Verdict::no;
  const OrbitSearch backward = explore(f2, budget, &f1);
  if (backward.found) return Verdict::yes;
  if (backward.orbit.complete) return Verdict::no;
  return Verdict::unknown;
}

// ---------------------------------------------------------------- text format

namespace {

std::string_view trim(std::string_view s) {
  const auto is_ws = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && is_ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_ws(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<Factorization> parse_factorizations(std::string_view text) {
  int strands = 0;
  std::vector<std::vector<BraidWord>> blocks(1);
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view raw = text.substr(offset, end - offset);
    const std::string_view line = trim(raw);
    const std::size_t line_start = offset;
    offset = end + 1;

    if (line.empty() || line.front() == '#') continue;
    if (strands == 0) {
      if (line.substr(0, 2) != "m=") {
        throw ParseError("expected header line \"m=<INT>\"", line_start);
      }
      const std::string digits(line.substr(2));
      if (digits.empty() ||
          digits.find_first_not_of("0123456789") != std::string::npos ||
          digits.size() > 6 || std::stoi(digits) < 1) {
        throw ParseError("bad strand count in header", line_start + 2);
      }
      strands = std::stoi(digits);
      continue;
    }
    if (line == "---") {
      blocks.emplace_back();
      continue;
    }
    try {
      blocks.back().push_back(parse_braid(line, strands));
    } catch (const ParseError& e) {
      const std::size_t lead = static_cast<std::size_t>(line.data() - raw.data());
      throw ParseError("in factor \"" + std::string(line) + "\"",
                       line_start + lead + e.position());
    }
  }
  if (strands == 0) throw ParseError("missing header line \"m=<INT>\"", 0);

  std::vector<Factorization> out;
  out.reserve(blocks.size());
  for (const auto& block : blocks) out.emplace_back(strands, block);
  return out;
}

Factorization parse_factorization(std::string_view text) {
  std::vector<Factorization> all = parse_factorizations(text);
  if (all.size() != 1) {
    throw ParseError("expected a single factorization, found " +
                         std::to_string(all.size()),
                     0);
  }
  return std::move(all.front());
}

std::string to_text(const Factorization& f) {
  std::ostringstream out;
  out << "m=" << f.strands() << '\n';
  for (const BraidWord& g : f.factors()) out << g.to_string() << '\n';
  return out.str();
}

// ---------------------------------------------------------------- homology

HClass fiber_class(int N) { return {N, 0, 1}; }
HClass exceptional_class(int N) { return {N, 1, 0}; }
HClass canonical_class(int N) { return {N, -2, -(static_cast<long long>(N) + 2)}; }

HClass hurwitz_class(int m, int N) {
  if (m < 1 || N < 1) throw std::invalid_argument("hurwitz_class needs m, N >= 1");
  return {N, m, static_cast<long long>(N) * m};
}

long long intersect(const HClass& x, const HClass& y) {
  if (x.N != y.N) {
    throw std::invalid_argument("classes live on different Hirzebruch surfaces");
  }
  return -static_cast<long long>(x.N) * x.e * y.e + x.e * y.r + x.r * y.e;
}

long long smooth_genus(const HClass& c) {
  const long long twice = intersect(c, c) + intersect(canonical_class(c.N), c);
  if (twice % 2 != 0) {
    throw std::domain_error("adjunction gives a non-integer genus");
  }
  return twice / 2 + 1;
}

long long chi_hurwitz_piece(int m, int N, int deg_b) {
  if (m < 1 || N < 1) {
    throw std::invalid_argument("chi_hurwitz_piece needs m, N >= 1");
  }
  const long long full = static_cast<long long>(N) * m * (m - 1);
  if (full - deg_b <= 0) {
    throw std::invalid_argument("N m(m-1) - deg b must be positive; N = " +
                                std::to_string(N) + " is too small");
  }
  return m - full + deg_b;
}

ThomCheck thom_check(int e_l, int m, int N, int deg_b) {
  ThomCheck out;
  out.chi_s = e_l + chi_hurwitz_piece(m, N, deg_b);
  out.bound = 2 - 2 * smooth_genus(hurwitz_class(m, N));
  out.holds = out.chi_s <= out.bound;
  return out;
}

}  // namespace braidkit
