#pragma once

// Independent oracles. These build their complexes directly from raw
// tables and share no code with the space, controlled-object or nerve
// modules.

#include "coarsehh/algebra.hpp"
#include "coarsehh/linalg.hpp"

#include <cstdint>
#include <vector>

namespace coarsehh::oracle {

using GroupTable = std::vector<std::vector<std::uint32_t>>;

/// Betti numbers of HH_n(k[G]) for n < top, from the bar-type complex on
/// tuples of group elements. Throws DomainError when char(k) divides |G|.
std::vector<std::size_t> hh_group_algebra(const GroupTable& table, int top, const Coefficients& field);
/// Betti numbers of HC_n(k[G]) for n < top, from the total complex of the
/// same tuples with their own Connes operator.
std::vector<std::size_t> hc_group_algebra(const GroupTable& table, int top, const Coefficients& field);

/// dim E - rank span{ab - ba}.
std::size_t commutator_hh0(const FiniteAlgebra& e);

struct SimplexOracle {
  /// h(x_0..x_n) = (p, x_0..x_n) satisfies ∂h + h∂ = 1 - ε in every degree < top.
  bool homotopy_holds = false;
  /// Betti numbers implied by the homotopy: (1, 0, 0, ...).
  std::vector<std::size_t> betti;
};

/// Full simplex on `points` vertices (all tuples), degrees 0..top.
SimplexOracle contractible_simplex(std::size_t points, int top, const Coefficients& coeffs);

}  // namespace coarsehh::oracle
