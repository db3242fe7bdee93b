#include "coarsehh/error.hpp"
#include "coarsehh/harness/axioms.hpp"
#include "coarsehh/harness/fuzz.hpp"
#include "coarsehh/harness/oracles.hpp"
#include "coarsehh/io.hpp"
#include "generators.hpp"

#include <doctest.h>

using namespace coarsehh;

namespace {

const Coefficients Q = Coefficients::rationals();

bool has_check(const AxiomReport& r, const std::string& prefix, bool pass) {
  for (const auto& c : r.checks)
    if (c.name.rfind(prefix, 0) == 0 && c.pass == pass) return true;
  return false;
}

}  // namespace

TEST_CASE("reports") {
  AxiomReport r;
  r.axiom = "demo";
  r.replay = {{"space", "x"}};
  r.check("first", true);
  CHECK(r.passed());
  CHECK_FALSE(to_json(r).contains("replay"));
  r.check("second", false, "rank 3");
  CHECK_FALSE(r.passed());
  const auto j = to_json(r);
  CHECK(j["verdict"] == "fail");
  CHECK(j["replay"]["space"] == "x");
  CHECK(j["witnesses"][0] == "second: rank 3");
  CHECK(to_text(r).find("[FAIL] demo") == 0);
  AxiomReport outer;
  outer.absorb(r);
  CHECK(outer.checks[1].name == "demo / second");
  CHECK_FALSE(outer.passed());
}

TEST_CASE("oracles") {
  CHECK(oracle::hh_group_algebra(FiniteGroup::trivial().table(), 3, Q) == std::vector<std::size_t>{1, 0, 0});
  CHECK(oracle::hh_group_algebra(FiniteGroup::cyclic(2).table(), 3, Q) == std::vector<std::size_t>{2, 0, 0});
  CHECK(oracle::hh_group_algebra(FiniteGroup::symmetric3().table(), 3, Q) == std::vector<std::size_t>{3, 0, 0});
  CHECK(oracle::hc_group_algebra(FiniteGroup::cyclic(3).table(), 3, Q) == std::vector<std::size_t>{3, 0, 3});
  CHECK_THROWS_AS(oracle::hh_group_algebra(FiniteGroup::cyclic(2).table(), 2, Coefficients::prime_field(2)),
                  DomainError);
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto s = oracle::contractible_simplex(n, 3, Q);
    CHECK(s.homotopy_holds);
    CHECK(s.betti == std::vector<std::size_t>{1, 0, 0});
  }
  const auto g = FiniteGroup::symmetric3();
  const auto t = subgroup_table(g, g.subgroup_by_name("Z3"));
  CHECK(t.size() == 3);
  CHECK(oracle::hh_group_algebra(t, 2, Q) == std::vector<std::size_t>{3, 0});
  CHECK_THROWS_AS(subgroup_table(g, {1, 2}), InvalidInput);
}

TEST_CASE("group algebra agreement") {
  for (const char* name : {"1", "Z2", "Z3"}) CHECK(check_group_algebra_agreement(gen::group(name), {}).passed());
  const auto r = check_group_algebra_agreement(gen::group("S3"), {"Z3"});
  CHECK(r.passed());
}

TEST_CASE("coarse invariance") {
  const auto two = component_space({2});
  const SpaceMap collapse{two, point_space(), {0, 0}};
  for (Theory t : {Theory::ordinary, Theory::hochschild, Theory::cyclic})
    CHECK(check_coarse_invariance(collapse, t).passed());
  const SpaceMap bad{point_space(), component_space({1, 1}), {0}};
  CHECK_THROWS_AS(check_coarse_invariance(bad, Theory::ordinary), InvalidInput);
}

TEST_CASE("excision examples") {
  const auto pt = point_space();
  CHECK(check_excision(pt, {0}, {{}}, Theory::ordinary).passed());
  const auto two = component_space({1, 1});
  for (Theory t : {Theory::ordinary, Theory::hochschild, Theory::cyclic})
    CHECK(check_excision(two, {0}, {{1}}, t).passed());
  const auto x = component_space({2, 1});
  CHECK(check_excision(x, {1, 2}, {{0}, {0, 1}}, Theory::hochschild).passed());
  CHECK_THROWS_AS(check_excision(two, {0}, {{}}, Theory::ordinary), InvalidInput);
}

TEST_CASE("excision detects a wrong square") {
  // Feeding the acyclicity check a non-exact situation: Z and Y overlap in a
  // non-invariant way is rejected before any homology is computed.
  const auto z2 = g_can_min(gen::group("Z2"));
  CHECK_THROWS_AS(check_excision(z2, {0}, {{1}}, Theory::ordinary), InvalidInput);
}

TEST_CASE("u-continuity examples") {
  const auto disc = component_space({1, 1, 1});
  const auto r = check_u_continuity(disc, Theory::ordinary);
  CHECK(r.passed());
  CHECK(r.inputs.find("1 stages") != std::string::npos);
  CHECK(check_u_continuity(component_space({3}), Theory::hochschild).passed());
  CHECK(check_u_continuity(g_can_min(gen::group("Z2")), Theory::cyclic).passed());
}

TEST_CASE("Morita and mixed identities") {
  for (const char* name : {"@point", "@component:3", "@gcanmin:S3", "@gmodh:S3/Z3", "@minmax:Z3/1"}) {
    const auto x = builtin_space(name);
    CHECK(check_morita(x).passed());
    CHECK(check_mixed_identities(x).passed());
  }
  const auto fixed = point_space(gen::group("Z3"));
  const auto m = check_morita(fixed);
  CHECK(m.passed());
}

TEST_CASE("trace report records the known failure") {
  const auto r = check_trace(point_space());
  CHECK(has_check(r, "phi b = ∂ phi", true));
  CHECK_FALSE(has_check(r, "phi b = ∂ phi", false));
  CHECK(has_check(r, "phi B = 0", false));
  CHECK(has_check(r, "phi images are G-invariant", true));
  CHECK(check_point_section().passed());
}

TEST_CASE("flasqueness") {
  CHECK(exhaustive_flasque_count(*component_space({})) == 1);
  CHECK(exhaustive_flasque_count(*point_space()) == 0);
  CHECK(exhaustive_flasque_count(*component_space({3})) == 0);
  CHECK(exhaustive_flasque_count(*g_can_min(gen::group("Z3"))) == 0);
  CHECK_THROWS_AS(exhaustive_flasque_count(*component_space({4})), GuardExceeded);
  CHECK(check_flasque(component_space({})).passed());
  CHECK(check_flasque(component_space({2, 1})).passed());
}

TEST_CASE("chains oracle") {
  for (std::size_t n = 1; n <= 4; ++n) CHECK(check_chain_oracle(component_space({n})).passed());
  CHECK(check_chain_oracle(builtin_space("@gmodh:S3/Z3")).passed());
}

TEST_CASE("fuzz is deterministic and bounded") {
  CHECK(fuzz(0, 0).empty());
  const auto a = fuzz(7, 3), b = fuzz(7, 3);
  REQUIRE(a.size() == 3);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(to_json(a[i]).dump() == to_json(b[i]).dump());
  for (std::size_t i = 0; i < 40; ++i) {
    const FuzzCase c = generate_case(123, i);
    CHECK(c.space->size() <= kFuzzMaxPoints);
    CHECK(c.space->size() >= 1);
    CHECK(is_complementary_pair(*c.space, c.z, c.ys));
    CHECK(is_coarse_equivalence(c.equivalence));
    CHECK(endomorphism_algebra(generator(c.space, Q)).dim <= kFuzzMaxEndDim);
    CHECK(generate_case(123, i).space->points() == c.space->points());
  }
}

TEST_CASE("fuzz reports carry replay data on failure") {
  const auto reports = fuzz(0, 2);
  for (const auto& r : reports) {
    CHECK_FALSE(r.passed());  // the phi B = 0 checks fail on every space
    const auto j = to_json(r);
    CHECK(j["replay"].contains("seed"));
    CHECK(j["replay"].contains("space"));
    CHECK(j["replay"].contains("equivalence"));
    CHECK(j["replay"].contains("complementary_pair"));
    // the replayed space parses back
    CHECK(parse_space(nlohmann::json::parse(j["replay"]["space"].dump()))->size() ==
          generate_case(0, j["replay"]["case"].get<std::size_t>()).space->size());
    for (const auto& c : r.checks)
      if (!c.pass) CHECK(c.name.rfind("trace / ", 0) == 0);
  }
}
