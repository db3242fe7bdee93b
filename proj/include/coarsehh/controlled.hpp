#pragma once

// The k-linear category V_k^G(X) of equivariant X-controlled finite
// dimensional vector spaces, in its fibrewise model on finite carriers.
//
// An object is a fibre dimension d_x per point plus the equivariance data
// rho(g)_x : M(x) -> M(g^-1 x) (a d_{g^-1 x} x d_x matrix) satisfying
//   rho(e)_x = 1,  rho(g g')_x = rho(g')_{g^-1 x} rho(g)_x.
// A morphism is a block matrix with blocks A^{x->y} : M(x) -> M'(y) supported
// on the maximal entourage and commuting with rho.

#include "coarsehh/algebra.hpp"
#include "coarsehh/coarse_space.hpp"
#include "coarsehh/linalg.hpp"

#include <map>
#include <memory>
#include <span>
#include <vector>

namespace coarsehh {

class ControlledObject {
 public:
  /// rho[g][x] has shape d_{g^-1 x} x d_x. Validates orbit-constant
  /// dimensions, rho(e) = 1 and the cocycle identity over `field`.
  ControlledObject(SpacePtr space, std::vector<std::size_t> dims, std::vector<std::vector<DenseMatrix>> rho,
                   Coefficients field);

  const GBornCoarseSpace& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  const Coefficients& field() const { return field_; }
  std::size_t dim(PointIndex x) const { return dims_[x]; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  const DenseMatrix& rho(GroupElement g, PointIndex x) const { return rho_[g][x]; }
  std::size_t total_dim() const;

  friend bool operator==(const ControlledObject& a, const ControlledObject& b);

 private:
  SpacePtr space_;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<DenseMatrix>> rho_;
  Coefficients field_;
};

using ObjectPtr = std::shared_ptr<const ControlledObject>;

class ControlledMorphism {
 public:
  /// (x, y) -> block M(x) -> M'(y)
  using BlockKey = std::pair<PointIndex, PointIndex>;
  using Blocks = std::map<BlockKey, DenseMatrix>;

  /// Validates block shapes, support in u_star and equivariance.
  ControlledMorphism(ObjectPtr source, ObjectPtr target, Blocks blocks);

  static ControlledMorphism identity(const ObjectPtr& m);
  static ControlledMorphism zero(ObjectPtr source, ObjectPtr target);

  const ObjectPtr& source() const { return source_; }
  const ObjectPtr& target() const { return target_; }
  const Blocks& blocks() const { return blocks_; }
  /// nullptr for a zero block.
  const DenseMatrix* block(PointIndex x, PointIndex y) const;

  /// First violated constraint, or empty.
  std::string violation() const;

  friend bool operator==(const ControlledMorphism& a, const ControlledMorphism& b);

 private:
  struct Unchecked {};
  ControlledMorphism(Unchecked, ObjectPtr source, ObjectPtr target, Blocks blocks);
  friend class HomSpace;
  friend ControlledMorphism compose(const ControlledMorphism& b, const ControlledMorphism& a);
  friend ControlledMorphism linear_combination(std::span<const ControlledMorphism> terms,
                                               std::span<const Scalar> coeffs, ObjectPtr source, ObjectPtr target);
  friend ControlledMorphism pushforward(const SpaceMap& f, const ControlledMorphism& a, const ObjectPtr& source,
                                        const ObjectPtr& target);

  ObjectPtr source_;
  ObjectPtr target_;
  Blocks blocks_;
};

/// b o a. Throws InvalidInput unless a.target == b.source.
ControlledMorphism compose(const ControlledMorphism& b, const ControlledMorphism& a);
ControlledMorphism linear_combination(std::span<const ControlledMorphism> terms, std::span<const Scalar> coeffs,
                                      ObjectPtr source, ObjectPtr target);

/// Hom(source -> target) as the solution space of the support and
/// equivariance constraints, with a reduced basis.
class HomSpace {
 public:
  HomSpace(ObjectPtr source, ObjectPtr target);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<ControlledMorphism>& basis() const { return basis_; }
  /// Coordinates in basis(); throws InvalidInput if `m` is not in the span.
  std::vector<Scalar> coordinates(const ControlledMorphism& m) const;

 private:
  std::vector<Scalar> flatten(const ControlledMorphism& m) const;

  ObjectPtr source_;
  ObjectPtr target_;
  std::map<ControlledMorphism::BlockKey, std::size_t> offsets_;
  std::size_t unknowns_ = 0;
  std::vector<ControlledMorphism> basis_;
  std::vector<Index> free_columns_;
};

std::vector<ControlledMorphism> hom_basis(const ObjectPtr& source, const ObjectPtr& target);

/// Fibre k on the orbit, 0 elsewhere, rho = 1. Throws unless `orbit` is a
/// single G-orbit.
ObjectPtr orbit_regular_object(const SpacePtr& x, const PointSet& orbit, const Coefficients& field);
/// One orbit-regular object per orbit, in orbit order.
std::vector<ObjectPtr> orbit_regular_objects(const SpacePtr& x, const Coefficients& field);
/// Fibres concatenated in list order, rho block diagonal.
ObjectPtr direct_sum(std::span<const ObjectPtr> objects);
/// k[G] placed along the orbit of `base`: M(y) has basis {h : h.base = y}
/// and rho(g) sends e_h to e_{g^-1 h}. Agrees with the orbit-regular object
/// when the orbit is free; on a fixed point it is the regular representation.
ObjectPtr induced_object(const SpacePtr& x, PointIndex base, const Coefficients& field);
/// One induced object per orbit (at its smallest point), in orbit order.
std::vector<ObjectPtr> generating_objects(const SpacePtr& x, const Coefficients& field);
/// Direct sum of the generating objects.
ObjectPtr generator(const SpacePtr& x, const Coefficients& field);

FiniteAlgebra endomorphism_algebra(const ObjectPtr& p);

/// Objects together with their hom spaces and the induced linear category
/// (hom(i, j) is Hom(objects[j] -> objects[i])).
struct ControlledCategory {
  std::vector<ObjectPtr> objects;
  std::vector<std::vector<HomSpace>> homs;
  LinearCategory linear;
};

ControlledCategory build_category(std::vector<ObjectPtr> objects);

/// (f_* M)(y) = sum over x in f^-1(y) of M(x), ordered by x.
ObjectPtr pushforward(const SpaceMap& f, const ObjectPtr& m);
/// Blocks aggregated over fibres; `source`/`target` must be the pushforwards
/// of a.source() / a.target().
ControlledMorphism pushforward(const SpaceMap& f, const ControlledMorphism& a, const ObjectPtr& source,
                               const ObjectPtr& target);

/// Throws DomainError when char(k) divides |G| for a nontrivial group; the
/// generating objects are only known to generate under Maschke.
void require_good_characteristic(const GBornCoarseSpace& x, const Coefficients& field);

}  // namespace coarsehh
