#pragma once

// The trace map from the nerve of controlled objects to invariant
// controlled chains over the field:
//   phi(A_0 ⊗ ... ⊗ A_n) = sum over (x_0..x_n) of
//     tr(A_0[x_0->x_n] A_1[x_1->x_0] ... A_n[x_n->x_{n-1}]) (x_0, ..., x_n)
// where A[x->y] is the block M(x) -> M'(y).

#include "coarsehh/chains.hpp"
#include "coarsehh/theories.hpp"

#include <span>
#include <vector>

namespace coarsehh {

class TraceContext {
 public:
  /// Nerve over `objects` and invariant chains over `field`, both up to
  /// max_degree. All objects must live on x, over `field`.
  TraceContext(SpacePtr x, std::vector<ObjectPtr> objects, Coefficients field, int max_degree,
               std::size_t cap = kDefaultBasisCap);
  /// Generating objects of x (characteristic guard applies).
  static TraceContext generating(const SpacePtr& x, const Coefficients& field, int max_degree,
                                    std::size_t cap = kDefaultBasisCap);

  const SpacePtr& space() const { return space_; }
  const Coefficients& field() const { return field_; }
  int max_degree() const { return max_degree_; }
  const ControlledNerve& nerve() const { return nerve_; }
  const std::vector<ObjectPtr>& objects() const { return nerve_.category.objects; }
  const CoarseChainComplex& chains() const { return chains_; }

  /// The basis morphism a of Hom(objects[j] -> objects[i]).
  const ControlledMorphism& basis_morphism(std::size_t i, std::size_t j, std::size_t a) const {
    return nerve_.category.homs[i][j].basis()[a];
  }

  /// phi of one nerve basis element.
  ControlledChain phi_cell(int n, Index cell) const;
  /// phi of a vector in the CN_n basis.
  ControlledChain phi(int n, const std::vector<Scalar>& element) const;
  /// Columns are phi of the nerve basis, rows the invariant chain basis.
  Matrix phi_matrix(int n) const;
  /// Degreewise trace Tot_n(nerve) -> Tot_n(XC, ∂, 0).
  Matrix tot_phi_matrix(int n) const;
  /// Total complex of (XC, ∂, B = 0).
  ChainComplex chain_tot() const;

 private:
  SpacePtr space_;
  Coefficients field_ = Coefficients::rationals();
  int max_degree_;
  ControlledNerve nerve_;
  CoarseChainComplex chains_;
};

/// phi of an arbitrary elementary tensor; A_i : M_{i+1} -> M_i cyclically.
ControlledChain phi_elementary(std::span<const ControlledMorphism> tensor);

/// Point section: coordinates of (·c) ⊗ (·1) ⊗ ... ⊗ (·1) in CN_n. The
/// context must be the rank-one object on the point with trivial group.
std::vector<Scalar> iota(const TraceContext& ctx, int n, const Scalar& c);

struct DennisClass {
  /// Multiplicity of each context object in m.
  std::vector<std::size_t> multiplicities;
  /// Class of id_M in CN_0 coordinates.
  std::vector<Scalar> hochschild;
  /// Its trace, an invariant 0-chain.
  ControlledChain chain;
};

/// Throws InvalidInput unless m is a direct sum of context objects.
DennisClass dennis_trace_k0(const TraceContext& ctx, const ObjectPtr& m);

/// Matrix of the nerve map CN_n(src) -> CN_n(tgt) induced by pushforward
/// along f. object_map[i] is the target object equal to f_* of source
/// object i (checked).
Matrix nerve_map_matrix(const TraceContext& src, const TraceContext& tgt, const SpaceMap& f,
                        const std::vector<std::size_t>& object_map, int n);

/// Same, between bare nerves.
Matrix nerve_map_matrix(const ControlledNerve& src, const ControlledNerve& tgt, const SpaceMap& f,
                        const std::vector<std::size_t>& object_map, int n);

/// For an inclusion of an invariant subspace: target object index of each
/// source generating object.
std::vector<std::size_t> inclusion_object_map(const ControlledNerve& src, const ControlledNerve& tgt,
                                              const SpaceMap& f);

}  // namespace coarsehh
