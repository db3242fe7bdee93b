#include "coarsehh/error.hpp"
#include "coarsehh/io.hpp"
#include "coarsehh/runner.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace coarsehh;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_space(text);
  } catch (const InvalidInput& e) {
    return e.what();
  }
  return "";
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("parse a small space") {
  const auto x = parse_space(std::string(R"({"points": ["a", "b", "c"], "entourage_generators": [["a", "b"], [2, 2]]})"));
  CHECK(x->size() == 3);
  CHECK(x->related(0, 1));
  CHECK_FALSE(x->related(0, 2));
  CHECK(x->group().order() == 1);
  CHECK(x->bornology_generators().size() == 3);
}

TEST_CASE("parse errors name the field") {
  CHECK(contains(error_of(R"({"points": ["a"], "entourage_generators": [["a", "b"]]})"),
                 "$.entourage_generators[0][1]"));
  CHECK(contains(error_of(R"({"points": ["a", "a"], "entourage_generators": []})"), "$.points[1]"));
  CHECK(contains(error_of(R"({"points": ["a"], "entourage_generators": [], "colour": 1})"), "$.colour"));
  CHECK(contains(error_of(R"({"points": ["a"]})"), "entourage_generators"));
  CHECK(contains(error_of(R"({"points": ["a"], "entourage_generators": [],
      "group": {"elements": ["e", "g"], "table": [[0, 1], [1, 0]]}})"),
                 "action"));
  CHECK(contains(error_of(R"({"points": ["a"], "entourage_generators": [],
      "group": {"elements": ["e", "g"], "table": [[0, 1], [0, 1]]}, "action": [[0], [0]]})"),
                 "$.group"));
  // the identity must act trivially
  CHECK_FALSE(error_of(R"({"points": ["a", "b"], "entourage_generators": [],
      "group": {"elements": ["e", "g"], "table": [[0, 1], [1, 0]]}, "action": [[1, 0], [0, 1]]})")
                  .empty());
  CHECK(contains(error_of("{\n  \"points\": [\"a\",\n}"), "line 3"));
  CHECK(contains(error_of("[1, 2]"), "$"));
}

TEST_CASE("round trip through JSON") {
  for (const char* name : {"@point", "@empty", "@gcanmin:Z3", "@gmodh:S3/Z3", "@minmax:S3/Z2", "@components:2,1"}) {
    const auto x = builtin_space(name);
    const auto y = parse_space(space_to_json(*x).dump());
    CHECK(y->points() == x->points());
    CHECK(y->u_star() == x->u_star());
    CHECK(y->action() == x->action());
    CHECK(y->bornology_generators() == x->bornology_generators());
    CHECK(space_to_json(*y).dump() == space_to_json(*x).dump());
  }
}

TEST_CASE("built-in spaces") {
  CHECK(builtin_space("@point")->size() == 1);
  CHECK(builtin_space("@empty")->size() == 0);
  CHECK(builtin_space("@gcanmin:S3")->size() == 6);
  CHECK(builtin_space("@gmodh:S3/Z3")->size() == 12);
  CHECK(builtin_space("@minmax:Z3/1")->orbits().size() == 1);
  CHECK(builtin_space("@discrete:4")->components().size() == 4);
  CHECK(builtin_space("@component:4")->components().size() == 1);
  CHECK(builtin_space("@components:1,2,3")->size() == 6);
  CHECK_THROWS_AS(builtin_space("@nothing"), InvalidInput);
  CHECK_THROWS_AS(builtin_space("@gcanmin:Q8"), InvalidInput);
  CHECK_THROWS_AS(builtin_space("@gmodh:S3"), InvalidInput);
  CHECK_THROWS_AS(load_space("/nonexistent/space.json"), InvalidInput);
}

TEST_CASE("load from a file") {
  const std::string path = "io_runner_test_space.json";
  {
    std::ofstream out(path);
    out << R"({"points": ["p", "q"], "entourage_generators": [["p", "q"]]})";
  }
  CHECK(load_space(path)->components().size() == 1);
  {
    std::ofstream out(path);
    out << R"({"points": ["p"], "entourage_generators": [["p", "z"]]})";
  }
  try {
    load_space(path);
    FAIL("expected an error");
  } catch (const InvalidInput& e) {
    CHECK(contains(e.what(), path));
    CHECK(contains(e.what(), "unknown point 'z'"));
  }
  std::remove(path.c_str());
}

TEST_CASE("config validation") {
  RunConfig c;
  c.inputs = {"@point"};
  CHECK_NOTHROW(validate(c));
  c.theory = "spectral";
  CHECK_THROWS_AS(validate(c), InvalidInput);
  c.theory = "hochschild";
  c.coeffs = Coefficients::integers();
  CHECK_THROWS_AS(validate(c), InvalidInput);
  c.theory = "ordinary";
  CHECK_NOTHROW(validate(c));
  c.max_degree = 0;
  CHECK_THROWS_AS(validate(c), InvalidInput);
  c.max_degree = 2;
  c.inputs.clear();
  CHECK_THROWS_AS(validate(c), InvalidInput);
}

TEST_CASE("run reports homology in degrees below N") {
  RunConfig c;
  c.inputs = {"@gcanmin:Z2"};
  const auto out = run(c);
  REQUIRE(out.reports.size() == 1);
  REQUIRE(out.reports[0].results.size() == 1);
  const auto& h = out.reports[0].results[0].homology;
  REQUIRE(h.size() == 4);
  CHECK(h[0].betti == 2);
  CHECK(h[3].betti == 0);
  CHECK(out.passed());
  CHECK(contains(render_text(out), "status: pass"));
}

TEST_CASE("JSON report shape") {
  RunConfig c;
  c.inputs = {"@point"};
  c.theory = "ordinary";
  c.coeffs = Coefficients::integers();
  c.max_degree = 2;
  const auto j = render_json(run(c));
  for (const char* key : {"input", "summary", "config", "results", "axioms", "status"}) CHECK(j.contains(key));
  CHECK(j["input"] == "@point");
  CHECK(j["config"]["coeff"] == "Z");
  REQUIRE(j["results"].size() == 2);
  CHECK(j["results"][0]["theory"] == "XH");
  CHECK(j["results"][0]["degree"] == 0);
  CHECK(j["results"][0]["betti"] == 1);
  CHECK(j["results"][0]["torsion"].is_array());
  CHECK(j["status"] == "pass");

  c.inputs = {"@point", "@discrete:2"};
  c.coeffs = Coefficients::rationals();
  const auto both = render_json(run(c));
  REQUIRE(both.is_array());
  CHECK(both.size() == 2);
  CHECK_FALSE(both[0]["results"][0].contains("torsion"));
  CHECK(both[1]["results"][0]["betti"] == 2);
}

TEST_CASE("trace runs record the failing mixed identity") {
  RunConfig c;
  c.inputs = {"@point"};
  c.theory = "trace";
  c.max_degree = 3;
  const auto out = run(c);
  CHECK_FALSE(out.passed());
  const auto text = render_text(out);
  CHECK(contains(text, "trace section (phi iota = id)         pass"));
  CHECK(contains(text, "trace chain map (phi b = ∂ phi)       pass"));
  CHECK(contains(text, "trace mixed extension (phi B = 0)     FAIL"));
  CHECK(contains(text, "status: fail"));
}

TEST_CASE("reruns are byte identical") {
  RunConfig c;
  c.inputs = {"@gcanmin:Z3", "@component:2"};
  c.theory = "all";
  c.max_degree = 2;
  c.format = OutputFormat::json;
  CHECK(render(run(c), c.format) == render(run(c), c.format));
}

TEST_CASE("fuzz input is added for a budget") {
  RunConfig c;
  c.theory = "axioms";
  c.budget = 2;
  c.seed = 5;
  c.max_degree = 2;
  const auto out = run(c);
  REQUIRE(out.reports.size() == 1);
  CHECK(out.reports[0].axioms.size() == 2);
  CHECK(contains(out.reports[0].input, "seed 5"));
}

TEST_CASE("describe") {
  const auto text = describe("@gmodh:S3/Z3", OutputFormat::text);
  CHECK(contains(text, "points: 12"));
  CHECK(contains(text, "group order: 6"));
  const auto j = nlohmann::json::parse(describe("@discrete:3", OutputFormat::json));
  CHECK(j["components"].size() == 3);
  CHECK(j["maximal_entourage_size"] == 3);
}
