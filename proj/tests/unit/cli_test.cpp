#include <doctest.h>

#include <sstream>

#include "solfour/cli/catalog_id.hpp"
#include "solfour/cli/cli.hpp"
#include "solfour/cli/json_io.hpp"
#include "solfour/cli/verify.hpp"
#include "solfour/ext/analysis.hpp"

using namespace solfour;
using namespace solfour::cli;

namespace {

struct Run {
  int code;
  json out;
  std::string raw;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  Run r{code, {}, out.str()};
  if (!r.raw.empty() && r.raw.front() == '{') r.out = json::parse(r.raw);
  return r;
}

}  // namespace

TEST_CASE("invariant commands") {
  auto r = run({"invariant", "isom", "3,2;4,3", "3,-2;-4,3"});
  CHECK(r.code == kSuccess);
  CHECK(r.out["isomorphic"] == true);

  r = run({"invariant", "enumerate", "--max", "4"});
  CHECK(r.code == kSuccess);
  CHECK(r.out["invariants"].size() == 4);

  r = run({"invariant", "validate", "2,1;3,2"});
  CHECK(r.code == kInputError);
  CHECK(r.out["valid"] == false);
  CHECK(r.out["defect"].get<std::string>().find("even") != std::string::npos);

  r = run({"invariant", "normalize", "3,-2;-4,3"});
  CHECK(r.code == kSuccess);
  CHECK(invariant_from_json(r.out["invariant"]) == classify::PillowcaseInvariant{3, 2, 4});

  r = run({"invariant", "enumerate", "--max", "30000"});
  CHECK(r.code == kBoundOrSuiteFailure);
}

TEST_CASE("group commands") {
  auto r = run({"group", "center", "kb-monodromy(3,2;4,3)"});
  CHECK(r.code == kSuccess);
  CHECK(r.out["rank"] == 1);
  CHECK(r.out["generator"] == "x^2");

  r = run({"group", "torsion", "pillowcase(3,2,4)", "--max-word", "7"});
  CHECK(r.code == kSuccess);
  CHECK(r.out["torsion_found"] == false);

  r = run({"group", "h1", "G2"});
  CHECK(r.code == kSuccess);
  CHECK(r.out["rank"] == 1);
  CHECK(r.out["torsion"] == json::array({2, 2}));

  r = run({"group", "h1", "pillowcase(3,2,4)"});
  CHECK(r.out["torsion"] == json::array({2, 4, 4}));

  r = run({"group", "center", "bordered((1,0),(3,2;4,3))"});
  CHECK(r.code == kSuccess);
  CHECK(r.out["rank"] == 1);

  r = run({"group", "w1", "pillowcase(3,2,4)"});
  CHECK(r.code == kSuccess);

  r = run({"group", "h1", "no-such-group"});
  CHECK(r.code == kInputError);
}

TEST_CASE("verify commands") {
  auto r = run({"verify", "order-twelve", "--box", "3"});
  CHECK(r.code == kSuccess);
  CHECK(r.out["passed"] == true);
  CHECK(r.out["failures"].empty());
  CHECK(r.out["instances"] == 232);

  r = run({"verify", "bordered-family", "--a-max", "12"});
  CHECK(r.code == kSuccess);

  r = run({"verify", "worked-examples"});
  CHECK(r.code == kSuccess);

  r = run({"verify", "no-such-suite"});
  CHECK(r.code == kInputError);
}

TEST_CASE("verify exit code follows the failure list") {
  for (const auto& name : suite_names()) {
    if (name == "invariant-roundtrip") continue;  // covered by the classifier tests
    CAPTURE(name);
    auto r = run({"verify", name});
    CHECK(r.out["schema"] == "solfour.verify/1");
    CHECK((r.code == kSuccess) == r.out["failures"].empty());
    if (r.code != kSuccess) CHECK(r.code == kBoundOrSuiteFailure);
  }
}

TEST_CASE("commands are deterministic") {
  const std::vector<std::vector<std::string>> cmds{{"invariant", "enumerate", "--max", "20"},
                                                   {"group", "center", "pillowcase(5,4,6)"},
                                                   {"gl2z", "centralizer", "3,2;4,3", "--bound", "4"}};
  for (const auto& c : cmds) {
    const auto a = run(c);
    const auto b = run(c);
    CHECK(a.code == b.code);
    CHECK(a.raw == b.raw);
  }
  // Elapsed times differ between runs; everything else must not.
  auto a = run({"verify", "two-ended"}).out;
  auto b = run({"verify", "two-ended"}).out;
  a.erase("elapsed_ms");
  b.erase("elapsed_ms");
  CHECK(a == b);
}

TEST_CASE("every output carries a schema") {
  for (const auto& c : std::vector<std::vector<std::string>>{{"invariant", "report", "3,2,4"},
                                                             {"group", "describe", "sigma"},
                                                             {"gl2z", "order", "0,1;-1,0"},
                                                             {"invariant", "presentation", "3,2,4"}}) {
    const auto r = run(c);
    CAPTURE(r.raw);
    CHECK(r.code == kSuccess);
    CHECK(r.out.contains("schema"));
  }
}

TEST_CASE("json round trips") {
  const classify::PillowcaseInvariant psi{5, 4, 6};
  CHECK(invariant_from_json(to_json(psi)) == psi);
  const IntMatrix m{{17, 24}, {-12, -17}};
  CHECK(matrix_from_json(to_json(m)) == m);
  Int big = 1;
  for (int i = 0; i < 90; ++i) big *= 3;
  CHECK(int_from_json(to_json(big)) == big);
  for (const auto* id : {"Dinf", "G2", "B1", "B1-sd-theta", "sigma", "sigma-variant", "sigma-x-Z", "kb-monodromy(3,2;4,3)",
                         "bordered((1,0),(3,2;4,3))", "pillowcase(3,2,4)"}) {
    CAPTURE(id);
    const auto g = resolve_group(id).group;
    const auto back = group_from_json(to_json(g));
    CHECK(to_json(back) == to_json(g));
    CHECK(ext::abelianization(back) == ext::abelianization(g));
  }
}

TEST_CASE("catalog id parsing") {
  CHECK(parse_invariant("3,2,4") == classify::PillowcaseInvariant{3, 2, 4});
  CHECK(parse_invariant("3,-2;-4,3") == classify::PillowcaseInvariant{3, 2, 4});
  CHECK(resolve_group("pillowcase(3,2;4,3)").pillowcase);
  CHECK_FALSE(resolve_group("G2").pillowcase);
  CHECK_THROWS(resolve_group("pillowcase(2,1;3,2)"));
}
