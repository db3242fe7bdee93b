#include "coarsehh/controlled.hpp"
#include "coarsehh/error.hpp"
#include "coarsehh/io.hpp"
#include "generators.hpp"

#include <doctest.h>

using namespace coarsehh;

namespace {

const Coefficients Q = Coefficients::rationals();

ObjectPtr rank_one_at(const SpacePtr& x, PointIndex p) {
  std::vector<std::size_t> dims(x->size(), 0);
  dims[p] = 1;
  std::vector<std::vector<DenseMatrix>> rho(1);
  for (PointIndex q = 0; q < x->size(); ++q) rho[0].push_back(DenseMatrix::identity(dims[q]));
  return std::make_shared<const ControlledObject>(x, dims, rho, Q);
}

/// Whole morphism as one matrix, fibres stacked in point order.
Matrix dense(const ControlledMorphism& m) {
  const auto& s = *m.source();
  const auto& t = *m.target();
  std::vector<std::size_t> so(s.dims().size() + 1, 0), to(t.dims().size() + 1, 0);
  for (std::size_t p = 0; p < s.dims().size(); ++p) so[p + 1] = so[p] + s.dim(p);
  for (std::size_t p = 0; p < t.dims().size(); ++p) to[p + 1] = to[p] + t.dim(p);
  std::vector<std::vector<Scalar>> d(to.back(), std::vector<Scalar>(so.back(), 0));
  for (const auto& [key, block] : m.blocks())
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j) d[to[key.second] + i][so[key.first] + j] = block(i, j);
  if (d.empty()) return Matrix(0, so.back());
  return Matrix::from_dense(d);
}

}  // namespace

TEST_CASE("hom dimensions of the basic examples") {
  const auto pt = point_space();
  CHECK(hom_basis(rank_one_at(pt, 0), rank_one_at(pt, 0)).size() == 1);

  const auto disc = component_space({1, 1});
  const auto g = generator(disc, Q);
  CHECK(endomorphism_algebra(g).dim == 2);

  const auto z2 = g_can_min(gen::group("Z2"));
  const auto p = orbit_regular_object(z2, {0, 1}, Q);
  CHECK(hom_basis(p, p).size() == 2);

  const auto comp = component_space({2});
  CHECK(endomorphism_algebra(generator(comp, Q)).dim == 4);
}

TEST_CASE("End of the generator of G_can,min is |G|-dimensional") {
  for (const char* name : {"1", "Z2", "Z3", "S3"}) {
    const auto g = gen::group(name);
    const auto e = endomorphism_algebra(generator(g_can_min(g), Q));
    CHECK(e.dim == g->order());
    e.validate();
  }
}

TEST_CASE("orbit-regular object on a coset space tensored with G_can,min") {
  const auto x = builtin_space("@gmodh:S3/Z3");
  const auto orbits = x->orbits();
  REQUIRE(orbits.size() == 2);
  const auto p = orbit_regular_object(x, orbits[0], Q);
  CHECK(endomorphism_algebra(p).dim == 3);
  CHECK_THROWS_AS(orbit_regular_object(x, {0}, Q), InvalidInput);
}

TEST_CASE("induced objects on fixed points carry the regular representation") {
  const auto g = gen::group("S3");
  const auto fixed = point_space(g);
  const auto trivial = orbit_regular_object(fixed, {0}, Q);
  CHECK(endomorphism_algebra(trivial).dim == 1);
  const auto induced = induced_object(fixed, 0, Q);
  CHECK(induced->dim(0) == 6);
  CHECK(endomorphism_algebra(induced).dim == 6);
  // on a free orbit both constructions agree
  const auto free = g_can_min(g);
  CHECK(*induced_object(free, 0, Q) == *orbit_regular_object(free, free->orbits()[0], Q));
}

TEST_CASE("object and morphism validation") {
  const auto z2 = g_can_min(gen::group("Z2"));
  std::vector<std::vector<DenseMatrix>> rho(2);
  for (auto& r : rho)
    for (int p = 0; p < 2; ++p) r.push_back(DenseMatrix::identity(1));
  CHECK_NOTHROW(ControlledObject(z2, {1, 1}, rho, Q));
  CHECK_THROWS_AS(ControlledObject(z2, {1, 2}, rho, Q), InvalidInput);
  CHECK_THROWS_AS(ControlledObject(z2, {1, 1}, rho, Coefficients::integers()), DomainError);
  auto bad = rho;
  bad[0][0](0, 0) = 2;
  CHECK_THROWS_AS(ControlledObject(z2, {1, 1}, bad, Q), InvalidInput);

  const auto disc = component_space({1, 1});
  const auto a = rank_one_at(disc, 0), b = rank_one_at(disc, 1);
  ControlledMorphism::Blocks off;
  off[{0, 1}] = DenseMatrix::identity(1);
  CHECK_THROWS_AS(ControlledMorphism(a, b, off), InvalidInput);  // crosses components

  // not equivariant: identity block on one point only
  const auto p = orbit_regular_object(z2, {0, 1}, Q);
  ControlledMorphism::Blocks half;
  half[{0, 0}] = DenseMatrix::identity(1);
  CHECK_THROWS_AS(ControlledMorphism(p, p, half), InvalidInput);
}

TEST_CASE("composition") {
  const auto comp = component_space({2});
  const auto a = rank_one_at(comp, 0), b = rank_one_at(comp, 1);
  ControlledMorphism::Blocks ab, ba;
  ab[{0, 1}] = DenseMatrix::identity(1);
  ba[{1, 0}] = DenseMatrix::identity(1);
  const ControlledMorphism f(a, b, ab), g(b, a, ba);
  CHECK(compose(g, f) == ControlledMorphism::identity(a));
  CHECK(compose(ControlledMorphism::identity(b), f) == f);
  CHECK_THROWS_AS(compose(f, f), InvalidInput);
  CHECK(compose(f, ControlledMorphism::zero(a, a)) == ControlledMorphism::zero(a, b));
}

TEST_CASE("property: hom bases are valid and composition is associative") {
  gen::Rng rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const auto x = gen::space(rng, 5);
    const auto objs = generating_objects(x, Q);
    const auto cat = build_category(objs);
    CHECK(cat.linear.check_laws().empty());
    for (std::size_t i = 0; i < objs.size(); ++i)
      for (std::size_t j = 0; j < objs.size(); ++j) {
        const auto& hom = cat.homs[i][j];
        for (std::size_t a = 0; a < hom.dim(); ++a) {
          CHECK(hom.basis()[a].violation().empty());
          const auto c = hom.coordinates(hom.basis()[a]);
          for (std::size_t k = 0; k < c.size(); ++k) CHECK(c[k] == (k == a ? 1 : 0));
        }
      }
    // random triple (i <- j <- k <- l)
    const std::size_t m = objs.size();
    const std::size_t i = gen::below(rng, m), j = gen::below(rng, m), k = gen::below(rng, m), l = gen::below(rng, m);
    const auto &hij = cat.homs[i][j], &hjk = cat.homs[j][k], &hkl = cat.homs[k][l];
    if (hij.dim() && hjk.dim() && hkl.dim()) {
      const auto& f = hij.basis()[gen::below(rng, hij.dim())];
      const auto& g = hjk.basis()[gen::below(rng, hjk.dim())];
      const auto& h = hkl.basis()[gen::below(rng, hkl.dim())];
      CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    }
    const auto e = endomorphism_algebra(generator(x, Q));
    CHECK_NOTHROW(e.validate());
  }
}

TEST_CASE("hom dimension does not depend on point labels") {
  const auto a = component_space({2, 1});
  const auto b = std::make_shared<const GBornCoarseSpace>(std::vector<std::string>{"z", "y", "x"},
                                                          PairSet{{1, 2}}, std::vector<PointSet>{{0}, {1}, {2}},
                                                          gen::group("1"), std::vector<std::vector<PointIndex>>{{0, 1, 2}});
  CHECK(endomorphism_algebra(generator(a, Q)).dim == endomorphism_algebra(generator(b, Q)).dim);
}

TEST_CASE("pushforward") {
  const auto comp = component_space({2});
  const auto pt = point_space();
  const SpaceMap collapse{comp, pt, {0, 0}};
  const auto g = generator(comp, Q);
  const auto pushed = pushforward(collapse, g);
  CHECK(pushed->dim(0) == 2);
  const auto id = pushforward(collapse, ControlledMorphism::identity(g), pushed, pushed);
  CHECK(id == ControlledMorphism::identity(pushed));
  CHECK(*pushforward(identity_map(comp), g) == *g);
  const auto disc = component_space({1, 1});
  CHECK_THROWS_AS(pushforward(SpaceMap{comp, disc, {0, 1}}, g), InvalidInput);
}

TEST_CASE("property: pushforwards along close maps are isomorphic") {
  gen::Rng rng(29);
  int tested = 0;
  for (int trial = 0; trial < 40 && tested < 12; ++trial) {
    const auto x = gen::space(rng, 5, {"1"});
    const auto y = gen::space(rng, 5, {"1"});
    // random controlled maps that are close: same component choices, random points inside
    std::vector<PointIndex> f(x->size()), g(x->size());
    const auto ycomps = y->components();
    std::vector<std::size_t> choice(x->size());
    for (const auto& c : x->components()) {
      const auto& target = ycomps[gen::below(rng, ycomps.size())];
      const std::vector<PointIndex> pts(target.begin(), target.end());
      for (auto p : c) {
        f[p] = pts[gen::below(rng, pts.size())];
        g[p] = pts[gen::below(rng, pts.size())];
      }
    }
    const SpaceMap fm{x, y, f}, gm{x, y, g};
    REQUIRE(is_morphism(fm).ok);
    REQUIRE(are_close(fm, gm));
    const auto m = generator(x, Q);
    const auto a = pushforward(fm, m), b = pushforward(gm, m);
    const HomSpace hom(a, b);
    ControlledMorphism candidate = ControlledMorphism::zero(a, b);
    std::vector<Scalar> coeffs;
    for (std::size_t i = 0; i < hom.dim(); ++i) coeffs.push_back(Scalar(gen::between(rng, -7, 7)));
    candidate = linear_combination(hom.basis(), coeffs, a, b);
    const Matrix d = dense(candidate);
    CHECK(d.rows() == d.cols());
    CHECK(rank(d, Q) == d.rows());
    ++tested;
  }
  CHECK(tested > 0);
}

TEST_CASE("characteristic guard") {
  const auto z2 = g_can_min(gen::group("Z2"));
  CHECK_THROWS_AS(require_good_characteristic(*z2, Coefficients::prime_field(2)), DomainError);
  CHECK_NOTHROW(require_good_characteristic(*z2, Coefficients::prime_field(3)));
  CHECK_NOTHROW(require_good_characteristic(*point_space(), Coefficients::prime_field(2)));
}
