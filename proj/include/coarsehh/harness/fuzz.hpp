#pragma once

// Random small inputs for the axiom harness. Every case is derived from
// (seed, index) alone, so a single case can be regenerated without the
// ones before it.

#include "coarsehh/harness/axioms.hpp"

#include <cstdint>
#include <vector>

namespace coarsehh {

struct FuzzCase {
  std::uint64_t seed = 0;
  std::size_t index = 0;
  SpacePtr space;
  /// A coarse equivalence between `space` and an invariant subspace, in
  /// either direction (the identity when no proper one was found).
  SpaceMap equivalence;
  PointSet z;
  std::vector<PointSet> ys;
};

/// Largest dim End(generator) accepted for a fuzzed space; it bounds the
/// single-object nerve.
inline constexpr std::size_t kFuzzMaxEndDim = 16;
inline constexpr std::size_t kFuzzMaxPoints = 6;

FuzzCase generate_case(std::uint64_t seed, std::size_t index);
/// One composite report; the sub-checks are named "<axiom> / <check>".
AxiomReport run_case(const FuzzCase& c, const HarnessConfig& cfg = {});
std::vector<AxiomReport> fuzz(std::uint64_t seed, std::size_t budget, const HarnessConfig& cfg = {});

}  // namespace coarsehh
