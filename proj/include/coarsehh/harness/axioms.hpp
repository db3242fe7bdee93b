#pragma once

// Executable checks of the coarse homology axioms, the agreement results
// and the trace map identities on concrete finite inputs.

#include "coarsehh/coarse_space.hpp"
#include "coarsehh/harness/report.hpp"
#include "coarsehh/theories.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coarsehh {

struct HarnessConfig {
  Coefficients coeffs = Coefficients::rationals();
  /// Complexes are built up to this degree; homology is compared below it.
  int max_degree = 3;
  std::size_t cap = kDefaultBasisCap;
  std::size_t search_bound = 1'000'000;
};

/// Throws InvalidInput unless f is a coarse equivalence.
AxiomReport check_coarse_invariance(const SpaceMap& f, Theory theory, const HarnessConfig& cfg = {});
/// Throws InvalidInput unless (z, ys) is a complementary pair.
AxiomReport check_excision(const SpacePtr& x, const PointSet& z, const std::vector<PointSet>& ys, Theory theory,
                           const HarnessConfig& cfg = {});
AxiomReport check_u_continuity(const SpacePtr& x, Theory theory, const HarnessConfig& cfg = {});

/// Betti numbers of HH_n(k[G]) for n < top from the independent oracle.
std::vector<std::size_t> oracle_hh_group_algebra(const FiniteGroup& g, int top, const Coefficients& field);
/// Multiplication table of a subgroup, re-indexed in element order.
std::vector<std::vector<std::uint32_t>> subgroup_table(const FiniteGroup& g, const std::vector<GroupElement>& h);

/// XHH / XHC of G_{can,min} against the oracles, HH_0 against the class
/// count, and for each named subgroup H the space (G/H)_{min,max} ⊗
/// G_{can,min} against the oracles for H.
AxiomReport check_group_algebra_agreement(const GroupPtr& g, const std::vector<std::string>& subgroups,
                                          const HarnessConfig& cfg = {});

/// Multi-object nerve vs. the nerve of End(generator), degrees < top.
AxiomReport check_morita(const SpacePtr& x, const HarnessConfig& cfg = {});
/// Cyclic and mixed identities for the nerve of x (and of End(generator)
/// when it fits under the cap).
AxiomReport check_mixed_identities(const SpacePtr& x, const HarnessConfig& cfg = {});
/// φ b = ∂ φ, φ B = 0, invariance of φ images, the degreewise Tot trace.
AxiomReport check_trace(const SpacePtr& x, const HarnessConfig& cfg = {});
/// f_* φ_X = φ_Y CN(f_*) for the generating objects of the source.
AxiomReport check_trace_naturality(const SpaceMap& f, const HarnessConfig& cfg = {});
/// φ ι = id on the point in degrees <= top.
AxiomReport check_point_section(const HarnessConfig& cfg = {});
/// The predicate, and an exhaustive self-map search when |X| <= 3.
AxiomReport check_flasque(const SpacePtr& x, const HarnessConfig& cfg = {});
/// XH_0 = number of components (orbits of components for invariant
/// chains) and, on every component with <= 4 points, agreement with the
/// cone-homotopy oracle.
AxiomReport check_chain_oracle(const SpacePtr& x, const HarnessConfig& cfg = {});

/// The empty space has exactly one self-map; for |X| <= 3 every self-map is
/// tried against the three flasqueness conditions. Returns the number of
/// maps that satisfy them.
std::size_t exhaustive_flasque_count(const GBornCoarseSpace& x);

}  // namespace coarsehh
