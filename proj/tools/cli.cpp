#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "braidkit/braid_word.hpp"
#include "braidkit/garside.hpp"
#include "braidkit/hurwitz.hpp"
#include "braidkit/link.hpp"
#include "json.hpp"

namespace braidkit::cli {

using nlohmann::json;

namespace {

constexpr const char* kSchema = "1";

/// Raised for bad command input that CLI11 cannot see (files, headers).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int m = 0;
  int N = 1;
  int deg = 0;
  int euler = 0;
  bool dot = false;
  bool quiet = false;
  std::vector<std::string> word;
  std::vector<std::string> files;
  SearchBudget search;
  EnumerationBudget positivity;
  OrbitBudget orbit;
  long long search_ms = 10'000;
  long long positivity_ms = 30'000;
  long long orbit_ms = 60'000;
};

json perm_json(const Perm& p) {
  json images = json::array();
  for (int v : p.images()) images.push_back(v + 1);
  return images;
}

json form_json(const GarsideForm& form) {
  json simples = json::array();
  for (const Perm& s : form.simples()) simples.push_back(perm_json(s));
  return {{"inf", form.infimum()}, {"simples", simples}};
}

json factorization_json(const Factorization& f) {
  json factors = json::array();
  for (const BraidWord& g : f.factors()) factors.push_back(g.to_string());
  return factors;
}

json header(const std::string& command, const std::vector<std::string>& args) {
  return {{"schema", kSchema}, {"command", command}, {"argv", args}};
}

BraidWord read_word(const Options& o) {
  std::string text;
  for (const std::string& piece : o.word) {
    if (!text.empty()) text += ' ';
    text += piece;
  }
  return parse_braid(text, o.m);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open factorization file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<Factorization> read_factorizations(const Options& o) {
  std::vector<Factorization> out;
  for (const std::string& path : o.files) {
    for (Factorization& f : parse_factorizations(read_file(path))) {
      if (f.strands() != o.m) {
        throw InputError("file '" + path + "' declares m=" +
                         std::to_string(f.strands()) + " but -m is " +
                         std::to_string(o.m));
      }
      out.push_back(std::move(f));
    }
  }
  return out;
}

json norm_json(const NormSearch& n) {
  return {{"value", n.value},
          {"proven_minimal", n.proven_minimal},
          {"witness", n.witness.to_string()},
          {"states", n.states},
          {"exhausted", n.exhausted}};
}

// ---------------------------------------------------------------- commands

int cmd_invariants(const Options& o, json& report, std::ostream& err) {
  const BraidWord b = read_word(o);
  const Perm p = underlying_perm(b);
  const NormSearch norm = norm_upper(b, o.search);
  report["m"] = o.m;
  report["word"] = b.to_string();
  report["length"] = b.length();
  report["degree"] = degree(b);
  report["permutation"] = perm_json(p);
  report["cycles"] = p.cycles();
  report["components"] = p.cycle_count();
  report["garside"] = form_json(normal_form(b));
  report["norm"] = norm_json(norm);
  report["norm_bounds"] = {{"lower", std::abs(degree(b))},
                           {"upper", norm.value}};
  if (norm.exhausted) {
    if (!o.quiet) err << "note: norm search stopped at its state/time cap\n";
    return kBudgetExhausted;
  }
  return kOk;
}

int cmd_bounds(const Options& o, json& report, std::ostream& err) {
  const BraidWord b = read_word(o);
  const EulerBounds e = euler_bounds(b, o.search, o.positivity);
  const int k = components(b);
  report["m"] = o.m;
  report["word"] = b.to_string();
  report["degree"] = degree(b);
  report["components"] = k;
  report["lower"] = e.lower;
  report["upper"] = e.upper;
  report["exact"] = e.exact;
  report["certificates"] = {{"lower", e.lower_certificate},
                            {"upper", e.upper_certificate}};
  report["short_word"] = e.short_word.to_string();
  report["band_positive"] = to_string(e.band_positive);
  if (k == 1) {
    const GenusBounds g = knot_genus_bounds(e);
    report["genus"] = {g.lower, g.upper};
  } else {
    report["genus"] = nullptr;
  }
  const Triviality t = is_nontrivial(b);
  report["nontrivial"] = t == Triviality::nontrivial;
  report["triviality"] = to_string(t);
  report["budget_exhausted"] = e.budget_exhausted;
  if (e.budget_exhausted) {
    if (!o.quiet) err << "note: a search budget ran out; bounds may be loose\n";
    return kBudgetExhausted;
  }
  return kOk;
}

int cmd_surface(const Options& o, json& report, std::ostream& out) {
  const BraidWord b = read_word(o);
  const RibbonSurface s = bennequin_surface(b);
  if (o.dot) {
    out << to_dot(s);
    return kOk;
  }
  json bands = json::array();
  for (const Band& band : s.bands) bands.push_back({band.from, band.to, band.sign});
  const int circuits = boundary_circuits(s);
  if (circuits != components(b)) {
    throw InvariantViolation("boundary circuits differ from component count");
  }
  report["m"] = o.m;
  report["word"] = b.to_string();
  report["surface"] = {{"discs", s.discs}, {"bands", bands}};
  report["chi"] = surface_euler(s);
  report["circuits"] = circuits;
  report["components"] = components(b);
  return kOk;
}

int cmd_lift(const Options& o, json& report) {
  const BraidWord b = read_word(o);
  const PositiveLift lift = positive_lift(b);
  const int m = o.m;
  const bool verified =
      m >= 2 && equal(concat(lift.r, b), power(delta_squared(m), lift.N)) &&
      degree(lift.r) == lift.N * m * (m - 1) - degree(b);
  report["m"] = m;
  report["word"] = b.to_string();
  report["r"] = lift.r.to_string();
  report["N"] = lift.N;
  report["degree_r"] = degree(lift.r);
  report["verified"] = verified;
  if (!verified) throw InvariantViolation("positive lift failed verification");
  return kOk;
}

int cmd_monodromy(const Options& o, json& report) {
  const BraidWord input = read_word(o);
  const MirrorReduction reduced = mirror_reduce(input);
  const MonodromyFactorization mf = monodromy_factorization(reduced.word);
  const bool ok = verify_delta(mf.factorization, mf.N);
  report["m"] = o.m;
  report["word"] = input.to_string();
  report["mirror_reduced"] = reduced.inverted;
  report["factors"] = factorization_json(mf.factorization);
  report["factor_count"] = mf.factorization.size();
  report["N"] = mf.N;
  report["verify_delta"] = ok;
  if (!ok) throw InvariantViolation("monodromy factorization is not Delta^{2N}");
  return kOk;
}

int cmd_orbit(const Options& o, json& report, std::ostream& err) {
  const std::vector<Factorization> fs = read_factorizations(o);
  if (fs.size() != 1) throw InputError("orbit expects exactly one factorization");
  const Orbit orbit = hurwitz_orbit(fs.front(), o.orbit);
  json elements = json::array();
  for (const Factorization& f : orbit.elements) {
    elements.push_back(factorization_json(f));
  }
  report["m"] = o.m;
  report["input"] = factorization_json(fs.front());
  report["orbit"] = elements;
  report["size"] = orbit.elements.size();
  report["complete"] = orbit.complete;
  if (!orbit.complete) {
    if (!o.quiet) err << "note: orbit enumeration stopped at its cap\n";
    return kBudgetExhausted;
  }
  return kOk;
}

int cmd_equiv(const Options& o, json& report, std::ostream& err) {
  const std::vector<Factorization> fs = read_factorizations(o);
  if (fs.size() != 2) {
    throw InputError("equiv expects two factorizations (separate them with "
                     "a line \"---\" or pass --file twice)");
  }
  const Verdict v = hurwitz_equivalent(fs[0], fs[1], o.orbit);
  report["m"] = o.m;
  report["first"] = factorization_json(fs[0]);
  report["second"] = factorization_json(fs[1]);
  report["equivalent"] = to_string(v);
  if (v == Verdict::unknown) {
    if (!o.quiet) err << "note: orbit budget ran out before a decision\n";
    return kBudgetExhausted;
  }
  return kOk;
}

int cmd_thom(const Options& o, json& report) {
  const ThomCheck t = thom_check(o.euler, o.m, o.N, o.deg);
  const HClass c = hurwitz_class(o.m, o.N);
  report["m"] = o.m;
  report["N"] = o.N;
  report["deg"] = o.deg;
  report["e"] = o.euler;
  report["class"] = {{"E", c.e}, {"R", c.r}};
  report["genus_C"] = smooth_genus(c);
  report["chi_s"] = t.chi_s;
  report["bound"] = t.bound;
  report["holds"] = t.holds;
  return kOk;
}

void add_search_flags(CLI::App* app, Options& o) {
  app->add_option("--depth", o.search.depth, "Conjugation depth for the norm search")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  app->add_option("--len", o.search.length_cap, "Word-length cap for the norm search")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  app->add_option("--states", o.search.state_cap, "State cap for the norm search")
      ->capture_default_str();
  app->add_option("--time-ms", o.search_ms, "Time cap for the norm search (ms)")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
}

void add_positivity_flags(CLI::App* app, Options& o) {
  app->add_option("--words", o.positivity.max_words,
                  "Word budget for band-positivity enumeration")
      ->capture_default_str();
  app->add_option("--positivity-ms", o.positivity_ms,
                  "Time cap for band-positivity enumeration (ms)")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
}

void add_orbit_flags(CLI::App* app, Options& o) {
  app->add_option("--cap", o.orbit.state_cap, "Orbit state cap")->capture_default_str();
  app->add_option("--orbit-ms", o.orbit_ms, "Orbit time cap (ms)")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Braid group toolkit: closed-braid invariants and Hurwitz factorizations",
               "braidkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("-q,--quiet", o.quiet, "Suppress notes on stderr");

  const auto strands = [&](CLI::App* sub) {
    sub->add_option("-m", o.m, "Number of strands")->required()->check(CLI::Range(1, 64));
  };
  const auto word = [&](CLI::App* sub) {
    sub->add_option("word", o.word, "Braid word, e.g. \"a1 a[1,3]^-2\"");
  };

  CLI::App* invariants = app.add_subcommand("invariants", "Degree, permutation, components, norm bounds");
  strands(invariants);
  word(invariants);
  add_search_flags(invariants, o);

  CLI::App* bounds = app.add_subcommand("bounds", "Euler number and genus bounds of the closure");
  strands(bounds);
  word(bounds);
  add_search_flags(bounds, o);
  add_positivity_flags(bounds, o);

  CLI::App* surface = app.add_subcommand("surface", "Ribbon Seifert surface of the closure");
  strands(surface);
  word(surface);
  surface->add_flag("--dot", o.dot, "Emit a DOT graph instead of JSON");

  CLI::App* lift = app.add_subcommand("lift", "Positive r with r b = Delta^{2N}");
  strands(lift);
  word(lift);

  CLI::App* monodromy = app.add_subcommand("monodromy", "Braid monodromy factorization of Delta^{2N}");
  strands(monodromy);
  word(monodromy);

  CLI::App* orbit = app.add_subcommand("orbit", "Hurwitz orbit of a factorization file");
  strands(orbit);
  orbit->add_option("--file", o.files, "Factorization file")->required()->expected(1);
  add_orbit_flags(orbit, o);

  CLI::App* equiv = app.add_subcommand("equiv", "Hurwitz equivalence of two factorizations");
  strands(equiv);
  equiv->add_option("--file", o.files, "Factorization file(s)")->required()->expected(1, 2);
  add_orbit_flags(equiv, o);

  CLI::App* thom = app.add_subcommand("thom", "Closed-surface Euler characteristic against the curve genus");
  strands(thom);
  thom->add_option("-N", o.N, "Hirzebruch surface index")->required()->check(CLI::PositiveNumber);
  thom->add_option("--deg", o.deg, "Degree of the braid")->required();
  thom->add_option("--e", o.euler, "Euler number of the link")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  o.search.time_cap = std::chrono::milliseconds(o.search_ms);
  o.positivity.time_cap = std::chrono::milliseconds(o.positivity_ms);
  o.orbit.time_cap = std::chrono::milliseconds(o.orbit_ms);

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  json report = header(name, args);
  int code = kOk;
  try {
    if (chosen == invariants) {
      code = cmd_invariants(o, report, err);
    } else if (chosen == bounds) {
      code = cmd_bounds(o, report, err);
    } else if (chosen == surface) {
      code = cmd_surface(o, report, out);
      if (o.dot) return code;
    } else if (chosen == lift) {
      code = cmd_lift(o, report);
    } else if (chosen == monodromy) {
      code = cmd_monodromy(o, report);
    } else if (chosen == orbit) {
      code = cmd_orbit(o, report, err);
    } else if (chosen == equiv) {
      code = cmd_equiv(o, report, err);
    } else {
      code = cmd_thom(o, report);
    }
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kInvariantViolation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInvariantViolation;
  }
  out << report.dump() << '\n';
  return code;
}

}  // namespace braidkit::cli
