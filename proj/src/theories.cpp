#include "coarsehh/theories.hpp"
#include "coarsehh/error.hpp"

namespace coarsehh {

std::string to_string(Theory t) {
  switch (t) {
    case Theory::ordinary: return "XH";
    case Theory::hochschild: return "XHH";
    case Theory::cyclic: return "XHC";
  }
  return "?";
}

Theory parse_theory(const std::string& text) {
  if (text == "ordinary" || text == "XH") return Theory::ordinary;
  if (text == "hochschild" || text == "XHH") return Theory::hochschild;
  if (text == "cyclic" || text == "XHC") return Theory::cyclic;
  throw InvalidInput("unknown theory '" + text + "'");
}

ControlledNerve nerve_of_objects(std::vector<ObjectPtr> objects, int top, std::size_t cap) {
  ControlledNerve n;
  n.category = build_category(std::move(objects));
  n.module = CyclicModule::from_category(n.category.linear, top, cap);
  n.mixed = to_mixed(n.module);
  return n;
}

ControlledNerve controlled_nerve(const SpacePtr& x, const Coefficients& field, int top, std::size_t cap) {
  require_good_characteristic(*x, field);
  return nerve_of_objects(generating_objects(x, field), top, cap);
}

std::vector<HomologyResult> mixed_homology(const MixedComplex& c, Theory theory, int top) {
  std::vector<HomologyResult> out;
  if (theory == Theory::hochschild) {
    const ChainComplex cc = hochschild_complex(c);
    for (int n = 0; n < top; ++n) out.push_back(cc.homology(n));
  } else {
    const ChainComplex cc = tot_B(c);
    for (int n = 0; n < top; ++n) out.push_back(cc.homology(n));
  }
  return out;
}

std::vector<HomologyResult> theory_homology(const SpacePtr& x, Theory theory, const Coefficients& coeffs, int top,
                                            bool invariant, std::size_t cap) {
  if (top < 1) throw InvalidInput("max degree must be at least 1");
  if (theory == Theory::ordinary) {
    const auto cc = coarse_chain_complex(x, top, coeffs, invariant, cap);
    std::vector<HomologyResult> out;
    for (int n = 0; n < top; ++n) out.push_back(cc.complex.homology(n));
    return out;
  }
  if (!coeffs.is_field()) throw DomainError("Hochschild and cyclic homology need field coefficients");
  return mixed_homology(controlled_nerve(x, coeffs, top, cap).mixed, theory, top);
}

std::vector<std::size_t> bettis(const std::vector<HomologyResult>& hs) {
  std::vector<std::size_t> out;
  for (const auto& h : hs) out.push_back(h.betti);
  return out;
}

}  // namespace coarsehh
