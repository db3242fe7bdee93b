#include "coarsehh/error.hpp"
#include "coarsehh/linalg.hpp"
#include "generators.hpp"

#include <doctest.h>

using namespace coarsehh;

namespace {

const Coefficients Q = Coefficients::rationals();

Matrix diag_matrix(const SmithForm& s, std::size_t rows, std::size_t cols) {
  std::vector<std::vector<Scalar>> d(rows, std::vector<Scalar>(cols, 0));
  for (std::size_t i = 0; i < s.diagonal.size(); ++i) d[i][i] = Scalar(s.diagonal[i]);
  return Matrix::from_dense(d);
}

std::vector<Scalar> apply(const Matrix& m, const std::vector<Scalar>& v) {
  std::vector<Scalar> out(m.rows(), 0);
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const auto& e : m.column(j)) out[e.row] += e.value * v[j];
  return out;
}

}  // namespace

TEST_CASE("coefficient specs parse and normalize") {
  CHECK(Coefficients::parse("Q").domain() == Domain::rational);
  CHECK(Coefficients::parse("Z").domain() == Domain::integer);
  const auto f7 = Coefficients::parse("Fp:7");
  CHECK(f7.characteristic() == 7);
  CHECK(f7.normalize(Scalar(-1)) == 6);
  CHECK(f7.normalize(Scalar(1, 2)) == 4);
  CHECK(f7.to_string() == "Fp:7");
  CHECK_THROWS_AS(Coefficients::parse("Fp:4"), InvalidInput);
  CHECK_THROWS_AS(Coefficients::parse("Fp:"), InvalidInput);
  CHECK_THROWS_AS(Coefficients::parse("R"), InvalidInput);
  CHECK_THROWS_AS(Coefficients::integers().normalize(Scalar(1, 2)), DomainError);
  CHECK_THROWS_AS(f7.inv(Scalar(0)), DomainError);
  CHECK(f7.mul(f7.inv(Scalar(3)), Scalar(3)) == 1);
  CHECK_FALSE(Coefficients::prime_field(3).divides_not(6));
  CHECK(Coefficients::prime_field(5).divides_not(6));
}

TEST_CASE("sparse matrix basics") {
  const Matrix a = Matrix::from_ints({{1, 0, 2}, {0, 3, 0}});
  CHECK(a.rows() == 2);
  CHECK(a.cols() == 3);
  CHECK(a.nnz() == 3);
  CHECK(a.at(0, 2) == 2);
  CHECK(a.transpose().transpose() == a);
  CHECK((a - a).is_zero());
  CHECK(a * Matrix::identity(3) == a);
  Matrix big(3, 4);
  big.add_block(a, 1, 1);
  CHECK(big.at(1, 1) == 1);
  CHECK(big.at(2, 2) == 3);
  CHECK(big.at(1, 3) == 2);
  CHECK(Matrix::from_ints({{2, 4}}).reduced(Coefficients::prime_field(2)).is_zero());
}

TEST_CASE("rank depends on the field") {
  const Matrix m = Matrix::from_ints({{2, 0}, {0, 2}});
  CHECK(rank(m, Q) == 2);
  CHECK(rank(m, Coefficients::prime_field(2)) == 0);
  CHECK(rank(m, Coefficients::prime_field(3)) == 2);
  CHECK_THROWS_AS(rank(m, Coefficients::integers()), DomainError);
  CHECK(rank(Matrix(0, 5), Q) == 0);
}

TEST_CASE("property: rank, kernel and transpose agree on random matrices") {
  gen::Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + gen::below(rng, 7), c = 1 + gen::below(rng, 7), inner = 1 + gen::below(rng, 5);
    const Matrix m = gen::low_rank(rng, r, c, inner);
    for (const auto& k : {Q, Coefficients::prime_field(2), Coefficients::prime_field(101)}) {
      const std::size_t rk = rank(m, k);
      CHECK(rk <= std::min({r, c, inner}));
      CHECK(rank(m.transpose(), k) == rk);
      const KernelBasis ker = kernel_basis(m, k);
      REQUIRE(ker.vectors.size() == c - rk);
      for (std::size_t i = 0; i < ker.vectors.size(); ++i) {
        for (const auto& v : apply(m, ker.vectors[i])) CHECK(k.is_zero(v));
        for (std::size_t j = 0; j < ker.vectors.size(); ++j)
          CHECK(k.normalize(ker.vectors[j][ker.free_columns[i]]) == (i == j ? 1 : 0));
      }
    }
  }
}

TEST_CASE("property: Smith normal form reproduces the matrix") {
  gen::Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + gen::below(rng, 5), c = 1 + gen::below(rng, 5);
    const Matrix m = gen::low_rank(rng, r, c, 1 + gen::below(rng, 4));
    const SmithForm s = smith_normal_form(m);
    CHECK(s.left * m * s.right == diag_matrix(s, r, c));
    CHECK(abs(determinant(s.left)) == 1);
    CHECK(abs(determinant(s.right)) == 1);
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < s.diagonal.size(); ++i) {
      CHECK(s.diagonal[i] >= 0);
      if (s.diagonal[i] != 0) ++nonzero;
      if (i + 1 < s.diagonal.size() && s.diagonal[i] != 0) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
    }
    CHECK(nonzero == rank(m, Q));
    std::vector<mpz_class> expect;
    for (const auto& d : s.diagonal)
      if (d != 0) expect.push_back(d);
    CHECK(invariant_factors(m) == expect);
  }
}

TEST_CASE("determinant of small matrices") {
  CHECK(determinant(Matrix::from_ints({{2, 1}, {1, 1}})) == 1);
  CHECK(determinant(Matrix::from_ints({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 0);
  CHECK(determinant(Matrix::identity(4)) == 1);
}

TEST_CASE("homology sees torsion only over Z") {
  // C_2 = Z --2--> C_1 = Z --0--> C_0 = Z
  const Matrix d2 = Matrix::from_ints({{2}});
  const Matrix d1 = Matrix::from_ints({{0}});
  const auto z = homology_at(d1, d2, Coefficients::integers(), 1);
  CHECK(z.betti == 0);
  REQUIRE(z.torsion.size() == 1);
  CHECK(z.torsion[0] == 2);
  CHECK(homology_at(d1, d2, Q, 1).betti == 0);
  CHECK(homology_at(d1, d2, Coefficients::prime_field(2), 1).betti == 1);
  CHECK(homology_at(d1, d2, Q, 1).torsion.empty());
}

TEST_CASE("homology rejects non-complexes and shape mismatches") {
  CHECK_THROWS_AS(homology_at(Matrix::from_ints({{1}}), Matrix::from_ints({{1}}), Q), InvalidInput);
  CHECK_THROWS_AS(homology_at(Matrix(1, 2), Matrix(3, 1), Q), InvalidInput);
}

TEST_CASE("dense blocks multiply and trace") {
  DenseMatrix a(2, 2), b = DenseMatrix::identity(2);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 3;
  a(1, 1) = 4;
  CHECK(a * b == a);
  CHECK(a.trace() == 5);
  CHECK((a - a).is_zero());
  CHECK((a * a)(1, 1) == 22);
}
