#pragma once

// Cyclic modules from finite linear categories (the additive cyclic nerve),
// the mixed complex (b, B) they define, and HH / HC.
//
// Conventions, with f_i in Hom(C_{i+1} -> C_i) and C_{n+1} = C_0:
//   d_i(f_0 ⊗ ... ⊗ f_n) = f_0 ⊗ ... ⊗ f_i f_{i+1} ⊗ ... ⊗ f_n      (i < n)
//   d_n(f_0 ⊗ ... ⊗ f_n) = f_n f_0 ⊗ f_1 ⊗ ... ⊗ f_{n-1}             (unsigned)
//   s_i inserts id_{C_{i+1}} after f_i (s_n appends id_{C_0})
//   t(f_0 ⊗ ... ⊗ f_n)   = (-1)^n f_n ⊗ f_0 ⊗ ... ⊗ f_{n-1}
//   b = sum (-1)^i d_i,  B = (1 - t) s N  with s = prepend id, N = sum t^i.

#include "coarsehh/algebra.hpp"
#include "coarsehh/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coarsehh {

inline constexpr std::size_t kDefaultBasisCap = 200'000;

/// One basis element of CN_n: objects (C_0..C_n) and hom-basis indices
/// (a_0..a_n), a_i indexing Hom(C_{i+1} -> C_i).
struct NerveCell {
  std::vector<std::uint32_t> objects;
  std::vector<std::uint32_t> morphisms;
  friend bool operator==(const NerveCell&, const NerveCell&) = default;
};

class CyclicModule {
 public:
  /// Degrees 0..max_degree. Throws GuardExceeded when some degree has more
  /// than `cap` basis elements.
  static CyclicModule from_category(const LinearCategory& cat, int max_degree, std::size_t cap = kDefaultBasisCap);
  static CyclicModule from_algebra(const FiniteAlgebra& e, int max_degree, std::size_t cap = kDefaultBasisCap);

  const Coefficients& field() const { return cat_.field(); }
  const LinearCategory& category() const { return cat_; }
  int max_degree() const { return max_degree_; }
  std::size_t dim(int n) const { return dims_[n]; }

  NerveCell cell(int n, Index i) const;
  /// Throws InvalidInput if the cell is not a valid basis element.
  Index index_of(const NerveCell& c) const;

  /// d_i : CN_n -> CN_{n-1}, 1 <= n <= max_degree.
  const Matrix& face(int n, int i) const { return faces_[n][i]; }
  /// s_i : CN_n -> CN_{n+1}, n < max_degree.
  const Matrix& degeneracy(int n, int i) const { return degeneracies_[n][i]; }
  /// t : CN_n -> CN_n.
  const Matrix& cyclic_operator(int n) const { return cyclic_[n]; }
  /// Prepends the identity: CN_n -> CN_{n+1}, n < max_degree.
  const Matrix& extra_degeneracy(int n) const { return extra_[n]; }

  /// Simplicial, cyclic and extra-degeneracy identities on every stored
  /// degree; returns the first failure or an empty string.
  std::string verify() const;

 private:
  std::size_t tuple_offset(int n, const std::vector<std::uint32_t>& objects) const;

  LinearCategory cat_;
  int max_degree_ = 0;
  std::vector<std::size_t> dims_;
  // Per degree, offset of each object tuple (base-m encoding, objects[0]
  // most significant) inside the lexicographic basis.
  std::vector<std::vector<std::size_t>> tuple_offsets_;
  std::vector<std::vector<Matrix>> faces_;
  std::vector<std::vector<Matrix>> degeneracies_;
  std::vector<Matrix> cyclic_;
  std::vector<Matrix> extra_;
};

struct ChainComplex {
  Coefficients coeffs = Coefficients::rationals();
  std::vector<std::size_t> dims;
  /// d[n] : C_n -> C_{n-1}; d[0] has zero rows.
  std::vector<Matrix> d;

  int top() const { return static_cast<int>(dims.size()) - 1; }
  /// Empty when d[n-1] d[n] = 0 for every stored n.
  std::string verify() const;
  /// Needs n + 1 <= top().
  HomologyResult homology(int n) const;
};

struct MixedComplex {
  Coefficients coeffs = Coefficients::rationals();
  std::vector<std::size_t> dims;
  /// b[n] : C_n -> C_{n-1}; b[0] has zero rows.
  std::vector<Matrix> b;
  /// B[n] : C_n -> C_{n+1}, for n < top().
  std::vector<Matrix> B;

  int top() const { return static_cast<int>(dims.size()) - 1; }
  /// b^2 = 0, B^2 = 0, bB + Bb = 0 on every stored degree.
  std::string verify() const;
};

/// Throws IdentityViolation when the result is not a mixed complex.
MixedComplex to_mixed(const CyclicModule& m);

/// Tot_n = C_n ⊕ C_{n-2} ⊕ ..., components in that order; d = b + B.
ChainComplex tot_B(const MixedComplex& c);
/// Embedding of C_{n-2k} as the k-th summand of Tot_n.
std::size_t tot_component_offset(const MixedComplex& c, int n, int k);

/// Hochschild homology in degree n; n + 1 <= top().
HomologyResult hh(const MixedComplex& c, int n);
/// Cyclic homology in degree n; n + 1 <= top().
HomologyResult hc(const MixedComplex& c, int n);

/// (b, hochschild) as a chain complex.
ChainComplex hochschild_complex(const MixedComplex& c);

}  // namespace coarsehh
