#pragma once

// XH, XHH and XHC of a finite space at chain level. XHH/XHC use the
// multi-object nerve over the generating objects (one induced object per
// orbit).

#include "coarsehh/chains.hpp"
#include "coarsehh/controlled.hpp"
#include "coarsehh/cyclic.hpp"

#include <string>
#include <vector>

namespace coarsehh {

enum class Theory { ordinary, hochschild, cyclic };

std::string to_string(Theory t);
/// "ordinary" / "XH", "hochschild" / "XHH", "cyclic" / "XHC".
Theory parse_theory(const std::string& text);

struct ControlledNerve {
  ControlledCategory category;
  CyclicModule module;
  MixedComplex mixed;
};

ControlledNerve nerve_of_objects(std::vector<ObjectPtr> objects, int top, std::size_t cap = kDefaultBasisCap);
/// Generating objects of x; applies the characteristic guard.
ControlledNerve controlled_nerve(const SpacePtr& x, const Coefficients& field, int top,
                                 std::size_t cap = kDefaultBasisCap);

/// Homology in degrees 0..top-1, complexes built up to degree top. The
/// invariant flag only affects XH.
std::vector<HomologyResult> theory_homology(const SpacePtr& x, Theory theory, const Coefficients& coeffs, int top,
                                            bool invariant = true, std::size_t cap = kDefaultBasisCap);

/// Homology of a mixed complex in degrees 0..top-1.
std::vector<HomologyResult> mixed_homology(const MixedComplex& c, Theory theory, int top);

std::vector<std::size_t> bettis(const std::vector<HomologyResult>& hs);

}  // namespace coarsehh
