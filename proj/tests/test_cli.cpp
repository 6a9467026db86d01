#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"

using nlohmann::json;
namespace cli = braidkit::cli;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

json report(const std::vector<std::string>& args) {
  const Result r = run(args);
  INFO(r.err);
  REQUIRE(r.code == cli::kOk);
  return json::parse(r.out);
}

std::string data(const std::string& name) {
  return std::string(BRAIDKIT_TEST_DATA) + "/" + name;
}

}  // namespace

TEST_CASE("cli invariants") {
  const json j = report({"invariants", "-m", "3", "a2 a1 a2^-1"});
  CHECK(j["schema"] == "1");
  CHECK(j["command"] == "invariants");
  CHECK(j["degree"] == 1);
  CHECK(j["components"] == 2);
  CHECK(j["cycles"] == json::parse("[[1,3],[2]]"));
  CHECK(j["norm"]["value"] == 1);
  CHECK(j["norm"]["witness"] == "a[1,3]");
  CHECK(j["norm"]["proven_minimal"] == true);
}

TEST_CASE("cli bounds") {
  json j = report({"bounds", "-m", "2", "a1^3"});
  CHECK(j["lower"] == -1);
  CHECK(j["upper"] == -1);
  CHECK(j["exact"] == true);
  CHECK(j["genus"] == json::parse("[1,1]"));
  CHECK(j["nontrivial"] == true);

  j = report({"bounds", "-m", "2", "a1^2"});
  CHECK(j["exact"] == true);
  CHECK(j["genus"].is_null());
  CHECK(j["components"] == 2);

  // Word split over several arguments.
  j = report({"bounds", "-m", "3", "a1", "a2^-1", "a1", "a2^-1"});
  CHECK(j["upper"] == 3);
  CHECK(j["exact"] == false);
}

TEST_CASE("cli surface") {
  const json j = report({"surface", "-m", "2", "a1 a1"});
  CHECK(j["chi"] == 0);
  CHECK(j["circuits"] == 2);
  CHECK(j["surface"]["discs"] == 2);
  CHECK(j["surface"]["bands"].size() == 2);

  const Result dot = run({"surface", "-m", "3", "--dot", "a[1,3] a2^-1"});
  CHECK(dot.code == cli::kOk);
  CHECK(dot.out.rfind("graph", 0) == 0);
  CHECK(dot.out.find("d1 -- d3") != std::string::npos);
}

TEST_CASE("cli lift and monodromy") {
  json j = report({"lift", "-m", "2", "a1^-1"});
  CHECK(j["r"] == "a1^3");
  CHECK(j["N"] == 1);
  CHECK(j["verified"] == true);

  j = report({"monodromy", "-m", "2", "a1^3"});
  CHECK(j["factors"] == json::parse(R"(["a1","a1^3"])"));
  CHECK(j["verify_delta"] == true);
  CHECK(j["mirror_reduced"] == false);

  j = report({"monodromy", "-m", "2", "a1^-3"});
  CHECK(j["mirror_reduced"] == true);
  CHECK(j["verify_delta"] == true);
}

TEST_CASE("cli orbit and equiv") {
  json j = report({"orbit", "-m", "3", "--file", data("pair.txt")});
  CHECK(j["size"] == 3);
  CHECK(j["complete"] == true);

  j = report({"equiv", "-m", "3", "--file", data("equiv_yes.txt")});
  CHECK(j["equivalent"] == "yes");
  j = report({"equiv", "-m", "3", "--file", data("equiv_no.txt")});
  CHECK(j["equivalent"] == "no");
  j = report({"equiv", "-m", "3", "--file", data("pair.txt"), "--file",
              data("pair.txt")});
  CHECK(j["equivalent"] == "yes");
  j = report({"equiv", "-m", "3", "--file", data("equiv_far.txt")});
  CHECK(j["equivalent"] == "yes");
}

TEST_CASE("cli thom") {
  const json j = report({"thom", "-m", "2", "-N", "2", "--deg", "3", "--e", "-1"});
  CHECK(j["chi_s"] == 0);
  CHECK(j["bound"] == 0);
  CHECK(j["holds"] == true);
  CHECK(j["genus_C"] == 1);
}

TEST_CASE("cli exit codes") {
  CHECK(run({}).code == cli::kInputError);
  CHECK(run({"bounds", "-m", "2", "a2"}).code == cli::kInputError);
  CHECK(run({"bounds", "-m", "2", "a1a1"}).code == cli::kInputError);
  CHECK(run({"bounds", "-m", "0", "a1"}).code == cli::kInputError);
  CHECK(run({"frobnicate"}).code == cli::kInputError);
  CHECK(run({"orbit", "-m", "3", "--file", data("missing.txt")}).code ==
        cli::kInputError);
  CHECK(run({"orbit", "-m", "3", "--file", data("bad_index.txt")}).code ==
        cli::kInputError);
  CHECK(run({"orbit", "-m", "4", "--file", data("pair.txt")}).code ==
        cli::kInputError);
  CHECK(run({"equiv", "-m", "3", "--file", data("pair.txt")}).code ==
        cli::kInputError);
  CHECK(run({"thom", "-m", "3", "-N", "1", "--deg", "6", "--e", "0"}).code ==
        cli::kInputError);

  Result r = run({"orbit", "-m", "3", "--file", data("pair.txt"), "--cap", "1"});
  CHECK(r.code == cli::kBudgetExhausted);
  CHECK(json::parse(r.out)["complete"] == false);
  CHECK_FALSE(r.err.empty());

  r = run({"equiv", "-m", "3", "--file", data("equiv_far.txt"), "--cap", "2"});
  CHECK(r.code == cli::kBudgetExhausted);
  CHECK(json::parse(r.out)["equivalent"] == "unknown");

  r = run({"equiv", "-m", "3", "--file", data("equiv_far.txt"), "--cap", "2", "-q"});
  CHECK(r.code == cli::kBudgetExhausted);
  CHECK(r.err.empty());

  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("cli reports replay from their argv") {
  const std::vector<std::vector<std::string>> commands = {
      {"invariants", "-m", "4", "a1 a[2,4]^-1 a3^2"},
      {"bounds", "-m", "3", "a1 a2^-1 a1 a2^-1"},
      {"surface", "-m", "3", "a[1,3]^2 a2"},
      {"lift", "-m", "3", "a1^-1 a2"},
      {"monodromy", "-m", "3", "a1 a2^-1"},
      {"orbit", "-m", "3", "--file", data("pair.txt")},
      {"thom", "-m", "2", "-N", "1", "--deg", "1", "--e", "1"},
  };
  for (const auto& args : commands) {
    const Result first = run(args);
    REQUIRE(first.code == cli::kOk);
    const json j = json::parse(first.out);
    CHECK(j["argv"].get<std::vector<std::string>>() == args);
    const Result again = run(j["argv"].get<std::vector<std::string>>());
    CHECK(again.code == first.code);
    CHECK(again.out == first.out);
  }
}
