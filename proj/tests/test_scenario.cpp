#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "depict/scenario.hpp"

using namespace depict;

namespace {

const Json& result_for(const Json& report, const std::string& cmd,
                       const std::string& ring = "") {
  for (const auto& r : report.at("results")) {
    if (r.at("command") != cmd) continue;
    if (!ring.empty() && (!r.contains("ring") || r.at("ring") != ring)) continue;
    return r;
  }
  throw std::runtime_error("no result for " + cmd);
}

}  // namespace

TEST_CASE("bundled monomial-algebra family") {
  auto s = Scenario::bundled("paper-sn");
  auto run = run_queries(s);
  CHECK_FALSE(run.unsupported);
  const Json& rep = run.report;
  CHECK(rep.at("scenario") == "paper-sn");

  for (const auto* ring : {"S_1", "S_2", "S_3"}) {
    CHECK(result_for(rep, "depict-check", ring).at("result") == true);
    CHECK(result_for(rep, "codim1", ring).at("result") == true);
  }

  const Json& m1 = result_for(rep, "maxdep", "S_1");
  CHECK(m1.at("T_is_base") == true);
  for (const auto* ring : {"S_2", "S_3"}) {
    const Json& m = result_for(rep, "maxdep", ring);
    CHECK(m.at("codim1") == true);
    CHECK(m.at("T_is_base") == false);
    CHECK(m.at("T").at("vars").size() == 3);
    CHECK(m.at("T").at("relations").empty());
    CHECK(m.at("T").at("realized_generators") ==
          Json::array({"x", "y", "z"}));
  }

  const Json& n = result_for(rep, "normalize");
  CHECK(n.at("saturation") == Json::array({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
  CHECK(n.at("normal") == false);

  const Json& g = result_for(rep, "ght");
  CHECK(g.at("exact") == true);
  CHECK(g.at("lower") == 2);
  CHECK(g.at("justification") == "codim1-T");
  const Json& d = result_for(rep, "gdim");
  CHECK(d.at("exact") == true);
  CHECK(d.at("lower") == 1);

  const Json& f = result_for(rep, "fiber");
  CHECK(f.at("unique_minimal") == true);
  CHECK(f.at("minimal_element") == Json::array({"x", "y"}));
  CHECK(result_for(rep, "saturated").at("result") == true);
}

TEST_CASE("bundled localization example") {
  auto s = Scenario::bundled("paper-not1");
  auto rep = run_queries(s).report;

  CHECK(result_for(rep, "depict-check", "S").at("result") == true);
  CHECK(result_for(rep, "codim1", "S").at("result") == false);

  // in the localization the ideal collapses to the single point (1, 0)
  const Json& uT = result_for(rep, "u-locus", "T");
  CHECK(uT.at("kind") == "open-complement");
  CHECK(uT.at("vanishing") == Json::array({"x - 1", "y", "w - 1"}));

  CHECK(result_for(rep, "in-z").at("result") == false);  // the line x = 0

  const Json& g = result_for(rep, "ght");
  CHECK(g.at("exact") == true);
  CHECK(g.at("lower") == 1);
  CHECK(g.at("justification") == "bounds-only");
  CHECK(result_for(rep, "gdim").at("lower") == 1);
  CHECK(result_for(rep, "height").at("result") == 2);

  const Json& f = result_for(rep, "fiber");
  CHECK(f.at("smeared") == true);
  CHECK(f.at("unique_minimal") == true);
  CHECK(f.at("minimal_element") == Json::array({"x - 1", "y", "w - 1"}));

  CHECK(result_for(rep, "saturated").at("result") == false);
  CHECK(result_for(rep, "contraction-equal").at("result") == true);

  const Json& m = result_for(rep, "maxdep");
  CHECK(m.at("codim1") == false);
  CHECK(m.at("T").is_null());
}

TEST_CASE("bundled principal-ideal example") {
  auto s = Scenario::bundled("paper-final");
  auto rep = run_queries(s).report;
  CHECK(result_for(rep, "depict-check").at("result") == true);
  CHECK(result_for(rep, "codim1").at("result") == false);
  CHECK(result_for(rep, "u-locus").at("vanishing") == Json::array({"x"}));
  const Json& g = result_for(rep, "ght");
  CHECK(g.at("exact") == true);
  CHECK(g.at("lower") == 1);
  CHECK(result_for(rep, "saturated").at("result") == true);
  CHECK_FALSE(rep.at("warnings").empty());  // reading of the ideal is recorded
}

TEST_CASE("bundled introduction example") {
  auto s = Scenario::bundled("paper-intro");
  auto run = run_queries(s);
  const Json& rep = run.report;
  CHECK(result_for(rep, "depict-check").at("result") == true);
  CHECK(result_for(rep, "codim1").at("result") == false);
  CHECK(result_for(rep, "maxdep").at("codim1") == false);
  // literature depictions surface as warnings and citations, never results
  bool cited = false;
  for (const auto& c : rep.at("citations"))
    if (c == "B3-3.19") cited = true;
  CHECK(cited);
  bool warned = false;
  for (const auto& w : rep.at("warnings"))
    if (w.get<std::string>().find("literature") != std::string::npos) warned = true;
  CHECK(warned);
}

TEST_CASE("report determinism") {
  for (const auto& id : Scenario::bundled_ids()) {
    auto a = run_queries(Scenario::bundled(id)).report.dump(2);
    auto b = run_queries(Scenario::bundled(id)).report.dump(2);
    CHECK(a == b);
  }
}

TEST_CASE("scenario loading and validation") {
  // minimal scenario: one ring, zero queries -> empty result list
  auto s = Scenario::from_json_text(R"({
    "name": "tiny",
    "rings": {"S": {"vars": ["x", "y"]}},
    "subring": {"ambient": "S", "ideal": ["x"]}
  })");
  auto rep = run_queries(s).report;
  CHECK(rep.at("results").empty());

  // semigroup definition produces a three-dimensional ring
  auto s2 = Scenario::from_json_text(R"({
    "rings": {
      "A": {"vars": ["x", "y", "z"]},
      "S_2": {"semigroup": [[1,0,0],[0,1,0],[1,0,1],[0,1,1],[0,0,2]],
              "ambient_vars": ["x", "y", "z"]}
    },
    "subring": {"ambient": "A", "ideal": ["x", "y"]}
  })");
  CHECK(s2.ring("S_2")->dim() == 3);

  // unknown variable in an ideal generator is reported by name
  try {
    Scenario::from_json_text(R"({
      "rings": {"S": {"vars": ["x", "y"]}},
      "subring": {"ambient": "S", "ideal": ["q + 1"]}
    })");
    FAIL("expected an error");
  } catch (const error& e) {
    CHECK(std::string(e.what()).find("q") != std::string::npos);
  }

  // unknown ring name
  CHECK_THROWS_AS(Scenario::from_json_text(R"({
    "rings": {"S": {"vars": ["x"]}},
    "subring": {"ambient": "W", "ideal": ["x"]}
  })"),
                  error);

  // unknown command
  auto s3 = Scenario::from_json_text(R"({
    "rings": {"S": {"vars": ["x", "y"]}},
    "subring": {"ambient": "S", "ideal": ["x"]},
    "queries": [{"command": "frobnicate"}]
  })");
  CHECK_THROWS_AS(run_queries(s3), error);

  CHECK_THROWS_AS(Scenario::bundled("nope"), error);
}

TEST_CASE("unsupported normalization is reported, not guessed") {
  // presented domain with no attached semigroup: the codim1 branch holds but
  // no normalization procedure is available
  auto s = Scenario::from_json_text(R"({
    "rings": {"Q": {"vars": ["a", "b", "c", "d"], "relations": ["a*d - b*c"]}},
    "subring": {"ambient": "Q", "ideal": ["a", "b", "c"]},
    "queries": [{"command": "maxdep"}]
  })");
  auto run = run_queries(s);
  CHECK(run.unsupported);
  const Json& m = result_for(run.report, "maxdep");
  CHECK(m.at("codim1") == true);
  CHECK(m.at("T").is_null());
  CHECK(m.at("note").get<std::string>().find("unavailable") != std::string::npos);
}

TEST_CASE("prime field mode") {
  auto s = Scenario::from_json_text(R"({
    "name": "fp",
    "field": "fp:7",
    "rings": {"S": {"vars": ["x", "y", "z"]}},
    "subring": {"ambient": "S", "ideal": ["x", "y"]},
    "queries": [{"command": "codim1"}, {"command": "ght", "prime": "smeared"}]
  })");
  auto rep = run_queries(s).report;
  CHECK(rep.at("field") == "fp:7");
  CHECK(result_for(rep, "codim1").at("result") == true);
  CHECK(result_for(rep, "ght").at("lower") == 2);

  // command-line override forces the field
  auto s2 = Scenario::from_json_text(R"({
    "rings": {"S": {"vars": ["x", "y"]}},
    "subring": {"ambient": "S", "ideal": ["x"]}
  })",
                                     std::uint64_t{5}, true);
  CHECK(run_queries(s2).report.at("field") == "fp:5");
}
