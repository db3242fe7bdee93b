#pragma once

// Controlled chains: finitely supported functions on (n+1)-tuples of points
// lying in one coarse component, with the alternating face boundary. The
// invariant version uses G-orbit sums of tuples as its basis.

#include "coarsehh/coarse_space.hpp"
#include "coarsehh/cyclic.hpp"
#include "coarsehh/linalg.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace coarsehh {

using Tuple = std::vector<PointIndex>;

struct ControlledChain {
  SpacePtr space;
  int degree = 0;
  Coefficients coeffs = Coefficients::rationals();
  std::map<Tuple, Scalar> terms;

  /// Empty string, or the first uncontrolled / malformed tuple.
  std::string violation() const;
  bool is_invariant() const;
};

/// Ordered basis of XC_n. Plain: all controlled tuples, lexicographic.
/// Invariant: one orbit sum per G-orbit of controlled tuples, ordered by the
/// lexicographically smallest member, which is also the tuple whose
/// coefficient gives the coordinate.
class ChainBasis {
 public:
  ChainBasis(const GBornCoarseSpace& x, int n, bool invariant, std::size_t cap = kDefaultBasisCap);

  int degree() const { return degree_; }
  bool invariant() const { return invariant_; }
  std::size_t size() const { return representatives_.size(); }
  Tuple tuple(Index i) const { return decode(representatives_[i]); }

  std::uint64_t encode(const Tuple& t) const;
  Tuple decode(std::uint64_t code) const;
  /// Basis index of the orbit (or tuple) containing a controlled tuple, or
  /// nullopt for an uncontrolled one.
  std::optional<Index> orbit_of(std::uint64_t code) const;
  /// True when `code` is the representative of its basis element.
  bool is_representative(std::uint64_t code) const;
  /// All controlled tuples, sorted by code.
  const std::vector<std::uint64_t>& tuples() const { return all_; }
  /// Members of basis element i.
  std::vector<std::uint64_t> members(Index i) const;

 private:
  int degree_;
  bool invariant_;
  std::uint64_t radix_;
  std::vector<std::uint64_t> all_;
  std::vector<Index> orbit_;  // parallel to all_
  std::vector<std::uint64_t> representatives_;
  std::vector<std::vector<std::uint32_t>> members_;  // positions in all_
};

/// Matrix of the boundary from `source` (degree n) to `target` (degree n-1).
Matrix chain_boundary(const GBornCoarseSpace& x, const ChainBasis& source, const ChainBasis& target,
                      const Coefficients& coeffs);

struct CoarseChainComplex {
  SpacePtr space;
  bool invariant = true;
  std::vector<ChainBasis> bases;
  ChainComplex complex;
};

/// Degrees 0..top.
CoarseChainComplex coarse_chain_complex(const SpacePtr& x, int top, const Coefficients& coeffs, bool invariant,
                                        std::size_t cap = kDefaultBasisCap);

/// Homology in degree n (built up to degree n + 1).
HomologyResult xh(const SpacePtr& x, int n, const Coefficients& coeffs, bool invariant);

std::vector<Scalar> to_coordinates(const ChainBasis& basis, const ControlledChain& c);
ControlledChain from_coordinates(const SpacePtr& x, const ChainBasis& basis, const std::vector<Scalar>& v,
                                 const Coefficients& coeffs);

ControlledChain chain_boundary(const ControlledChain& c);
ControlledChain chain_pushforward(const SpaceMap& f, const ControlledChain& c);
ControlledChain act(GroupElement g, const ControlledChain& c);

/// Matrix of f_* between bases of the same degree and flavour.
Matrix chain_map_matrix(const SpaceMap& f, const ChainBasis& source, const ChainBasis& target,
                        const Coefficients& coeffs);

}  // namespace coarsehh
