#include "coarsehh/cyclic.hpp"
#include "coarsehh/error.hpp"
#include "coarsehh/harness/oracles.hpp"
#include "generators.hpp"

#include <doctest.h>

using namespace coarsehh;

namespace {

const Coefficients Q = Coefficients::rationals();

std::vector<std::size_t> hh_of(const FiniteAlgebra& a, int top) {
  const MixedComplex m = to_mixed(CyclicModule::from_algebra(a, top));
  std::vector<std::size_t> out;
  for (int n = 0; n < top; ++n) out.push_back(hh(m, n).betti);
  return out;
}

std::vector<std::size_t> hc_of(const FiniteAlgebra& a, int top) {
  const MixedComplex m = to_mixed(CyclicModule::from_algebra(a, top));
  std::vector<std::size_t> out;
  for (int n = 0; n < top; ++n) out.push_back(hc(m, n).betti);
  return out;
}

FiniteAlgebra ground_field() {
  FiniteAlgebra k;
  k.dim = 1;
  k.labels = {"1"};
  k.structure = {1};
  k.unit = {1};
  return k;
}

}  // namespace

TEST_CASE("the ground field") {
  const auto k = ground_field();
  const auto m = CyclicModule::from_algebra(k, 4);
  for (int n = 0; n <= 4; ++n) CHECK(m.dim(n) == 1);
  CHECK(m.verify().empty());
  CHECK(hh_of(k, 4) == std::vector<std::size_t>{1, 0, 0, 0});
  CHECK(hc_of(k, 4) == std::vector<std::size_t>{1, 0, 1, 0});
}

TEST_CASE("t has order n + 1 and B, b anticommute on standard algebras") {
  for (const auto& a : {gen::matrix_algebra(2, Q), gen::group_algebra(FiniteGroup::cyclic(3), Q), gen::dual_numbers(Q)}) {
    const auto m = CyclicModule::from_algebra(a, 3);
    CHECK(m.verify().empty());
    CHECK(to_mixed(m).verify().empty());
  }
}

TEST_CASE("Morita invariance for matrix algebras") {
  CHECK(hh_of(gen::matrix_algebra(2, Q), 3) == std::vector<std::size_t>{1, 0, 0});
  CHECK(hc_of(gen::matrix_algebra(2, Q), 3) == std::vector<std::size_t>{1, 0, 1});
}

TEST_CASE("group algebras match the bar-complex oracle") {
  for (int n : {2, 3, 4}) {
    const auto g = FiniteGroup::cyclic(n);
    const auto a = gen::group_algebra(g, Q);
    CHECK(hh_of(a, 3) == oracle::hh_group_algebra(g.table(), 3, Q));
    CHECK(hc_of(a, 3) == oracle::hc_group_algebra(g.table(), 3, Q));
  }
  const auto s3 = FiniteGroup::symmetric3();
  CHECK(hh_of(gen::group_algebra(s3, Q), 2) == std::vector<std::size_t>{3, 0});
}

TEST_CASE("dual numbers in characteristic zero") {
  CHECK(hh_of(gen::dual_numbers(Q), 3) == std::vector<std::size_t>{2, 1, 1});
}

TEST_CASE("property: incidence algebras have the homology of their semisimple part") {
  gen::Rng rng(23);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 1 + gen::below(rng, 3);
    const auto a = gen::incidence_algebra(rng, n, Q);
    a.validate();
    const auto m = CyclicModule::from_algebra(a, 3);
    CHECK(m.verify().empty());
    CHECK(hh_of(a, 3) == std::vector<std::size_t>{n, 0, 0});
    CHECK(hc_of(a, 3) == std::vector<std::size_t>{n, 0, n});
    CHECK(oracle::commutator_hh0(a) == n);
  }
}

TEST_CASE("property: cell and index_of are inverse") {
  gen::Rng rng(41);
  const auto a = gen::incidence_algebra(rng, 3, Q);
  const auto m = CyclicModule::from_algebra(a, 3);
  for (int n = 0; n <= 3; ++n)
    for (Index i = 0; i < m.dim(n); ++i) CHECK(m.index_of(m.cell(n, i)) == i);
  CHECK_THROWS_AS(m.cell(1, static_cast<Index>(m.dim(1))), InvalidInput);
}

TEST_CASE("multi-object categories") {
  // two objects, Hom(1 -> 0) one-dimensional: the path algebra of A_2 as a category
  LinearCategory cat(Q, {{1, 1}, {0, 1}});
  cat.set_identity(0, {{0, Scalar(1)}});
  cat.set_identity(1, {{0, Scalar(1)}});
  cat.set_compose(0, 0, 0, 0, 0, {{0, Scalar(1)}});
  cat.set_compose(1, 1, 1, 0, 0, {{0, Scalar(1)}});
  cat.set_compose(0, 0, 1, 0, 0, {{0, Scalar(1)}});
  cat.set_compose(0, 1, 1, 0, 0, {{0, Scalar(1)}});
  CHECK(cat.check_laws().empty());
  const auto m = CyclicModule::from_category(cat, 3);
  CHECK(m.verify().empty());
  const auto mixed = to_mixed(m);
  CHECK(hh(mixed, 0).betti == 2);
  CHECK(hh(mixed, 1).betti == 0);
}

TEST_CASE("the basis cap is enforced") {
  CHECK_THROWS_AS(CyclicModule::from_algebra(gen::matrix_algebra(3, Q), 4, 1000), GuardExceeded);
}

TEST_CASE("total complex layout") {
  const auto mixed = to_mixed(CyclicModule::from_algebra(gen::matrix_algebra(2, Q), 4));
  const ChainComplex tot = tot_B(mixed);
  CHECK(tot.verify().empty());
  CHECK(tot.dims[4] == mixed.dims[4] + mixed.dims[2] + mixed.dims[0]);
  CHECK(tot_component_offset(mixed, 4, 1) == mixed.dims[4]);
  CHECK(tot_component_offset(mixed, 4, 2) == mixed.dims[4] + mixed.dims[2]);
}

TEST_CASE("prime fields") {
  const auto f3 = Coefficients::prime_field(3);
  // k[Z3] over F_3 is local: HH_0 = 3 but higher groups do not vanish
  const auto a = gen::group_algebra(FiniteGroup::cyclic(3), f3);
  const auto hhs = hh_of(a, 3);
  CHECK(hhs[0] == 3);
  CHECK(hhs[1] == 3);
  CHECK_THROWS_AS(oracle::hh_group_algebra(FiniteGroup::cyclic(3).table(), 3, f3), DomainError);
}
