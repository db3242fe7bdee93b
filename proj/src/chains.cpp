#include "coarsehh/chains.hpp"
#include "coarsehh/error.hpp"

#include <algorithm>
#include <limits>

namespace coarsehh {

std::string ControlledChain::violation() const {
  if (!space) return "chain has no space";
  for (const auto& [t, v] : terms) {
    if (t.size() != static_cast<std::size_t>(degree) + 1) return "tuple of the wrong length in a degree " +
                                                                  std::to_string(degree) + " chain";
    for (auto p : t)
      if (p >= space->size()) return "tuple references an unknown point";
    for (auto p : t)
      if (!space->related(t.front(), p)) return "tuple is not controlled";
  }
  return {};
}

bool ControlledChain::is_invariant() const {
  for (GroupElement g = 0; g < space->group().order(); ++g) {
    const ControlledChain moved = act(g, *this);
    if (moved.terms != terms) return false;
  }
  return true;
}

ControlledChain act(GroupElement g, const ControlledChain& c) {
  ControlledChain out{c.space, c.degree, c.coeffs, {}};
  for (const auto& [t, v] : c.terms) {
    Tuple moved(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) moved[i] = c.space->act(g, t[i]);
    out.terms[moved] = v;
  }
  return out;
}

// --- bases ------------------------------------------------------------------

ChainBasis::ChainBasis(const GBornCoarseSpace& x, int n, bool invariant, std::size_t cap)
    : degree_(n), invariant_(invariant), radix_(std::max<std::size_t>(x.size(), 1)) {
  if (n < 0) throw InvalidInput("chain degree must be nonnegative");
  long double bound = 1;
  for (int i = 0; i <= n; ++i) bound *= static_cast<long double>(radix_);
  if (bound >= static_cast<long double>(std::numeric_limits<std::uint64_t>::max() / 2))
    throw GuardExceeded("tuple encoding overflows in degree " + std::to_string(n));

  for (const auto& comp : x.components()) {
    const std::vector<PointIndex> pts(comp.begin(), comp.end());
    std::size_t count = 1;
    for (int i = 0; i <= n; ++i) {
      count *= pts.size();
      if (all_.size() + count > cap)
        throw GuardExceeded("more than " + std::to_string(cap) + " controlled tuples in degree " + std::to_string(n));
    }
    std::vector<std::size_t> digit(n + 1, 0);
    for (std::size_t k = 0; k < count; ++k) {
      Tuple t(n + 1);
      for (int i = 0; i <= n; ++i) t[i] = pts[digit[i]];
      all_.push_back(encode(t));
      for (int i = n; i >= 0; --i) {
        if (++digit[i] < pts.size()) break;
        digit[i] = 0;
      }
    }
  }
  std::sort(all_.begin(), all_.end());

  const auto none = std::numeric_limits<Index>::max();
  orbit_.assign(all_.size(), none);
  for (std::size_t pos = 0; pos < all_.size(); ++pos) {
    if (orbit_[pos] != none) continue;
    const Index id = static_cast<Index>(representatives_.size());
    representatives_.push_back(all_[pos]);
    members_.emplace_back();
    if (!invariant_) {
      orbit_[pos] = id;
      members_.back().push_back(static_cast<std::uint32_t>(pos));
      continue;
    }
    const Tuple t = decode(all_[pos]);
    for (GroupElement g = 0; g < x.group().order(); ++g) {
      Tuple moved(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) moved[i] = x.act(g, t[i]);
      const auto it = std::lower_bound(all_.begin(), all_.end(), encode(moved));
      const auto mpos = static_cast<std::size_t>(it - all_.begin());
      if (orbit_[mpos] == none) {
        orbit_[mpos] = id;
        members_.back().push_back(static_cast<std::uint32_t>(mpos));
      }
    }
  }
  if (!invariant_) members_.clear();
}

std::uint64_t ChainBasis::encode(const Tuple& t) const {
  std::uint64_t code = 0;
  for (auto p : t) code = code * radix_ + p;
  return code;
}

Tuple ChainBasis::decode(std::uint64_t code) const {
  Tuple t(degree_ + 1);
  for (int i = degree_; i >= 0; --i) {
    t[i] = static_cast<PointIndex>(code % radix_);
    code /= radix_;
  }
  return t;
}

std::optional<Index> ChainBasis::orbit_of(std::uint64_t code) const {
  const auto it = std::lower_bound(all_.begin(), all_.end(), code);
  if (it == all_.end() || *it != code) return std::nullopt;
  return orbit_[it - all_.begin()];
}

bool ChainBasis::is_representative(std::uint64_t code) const {
  const auto o = orbit_of(code);
  return o && representatives_[*o] == code;
}

std::vector<std::uint64_t> ChainBasis::members(Index i) const {
  if (!invariant_) return {representatives_[i]};
  std::vector<std::uint64_t> out;
  for (auto pos : members_[i]) out.push_back(all_[pos]);
  return out;
}

// --- complexes --------------------------------------------------------------

Matrix chain_boundary(const GBornCoarseSpace& x, const ChainBasis& source, const ChainBasis& target,
                      const Coefficients& coeffs) {
  (void)x;
  const int n = source.degree();
  if (n < 1 || target.degree() != n - 1 || source.invariant() != target.invariant())
    throw InvalidInput("incompatible chain bases for the boundary");
  Matrix d(target.size(), source.size());
  for (Index j = 0; j < source.size(); ++j) {
    std::vector<Entry> col;
    for (auto code : source.members(j)) {
      const Tuple t = source.decode(code);
      for (int i = 0; i <= n; ++i) {
        Tuple face = t;
        face.erase(face.begin() + i);
        const auto fc = target.encode(face);
        if (!target.is_representative(fc)) continue;
        col.push_back({*target.orbit_of(fc), Scalar(i % 2 == 0 ? 1 : -1)});
      }
    }
    d.set_column(j, std::move(col));
  }
  return d.reduced(coeffs);
}

CoarseChainComplex coarse_chain_complex(const SpacePtr& x, int top, const Coefficients& coeffs, bool invariant,
                                        std::size_t cap) {
  CoarseChainComplex out;
  out.space = x;
  out.invariant = invariant;
  out.complex.coeffs = coeffs;
  for (int n = 0; n <= top; ++n) {
    out.bases.emplace_back(*x, n, invariant, cap);
    out.complex.dims.push_back(out.bases.back().size());
    if (n == 0) out.complex.d.emplace_back(0, out.bases[0].size());
    else out.complex.d.push_back(chain_boundary(*x, out.bases[n], out.bases[n - 1], coeffs));
  }
  const std::string failure = out.complex.verify();
  if (!failure.empty()) throw IdentityViolation("coarse chains: " + failure);
  return out;
}

HomologyResult xh(const SpacePtr& x, int n, const Coefficients& coeffs, bool invariant) {
  if (n < 0) throw InvalidInput("homology degree must be nonnegative");
  return coarse_chain_complex(x, n + 1, coeffs, invariant).complex.homology(n);
}

std::vector<Scalar> to_coordinates(const ChainBasis& basis, const ControlledChain& c) {
  const std::string v = c.violation();
  if (!v.empty()) throw InvalidInput(v);
  if (c.degree != basis.degree()) throw InvalidInput("chain degree does not match the basis");
  if (basis.invariant() && !c.is_invariant()) throw InvalidInput("chain is not G-invariant");
  std::vector<Scalar> out(basis.size());
  for (const auto& [t, value] : c.terms) {
    const auto code = basis.encode(t);
    if (basis.is_representative(code)) out[*basis.orbit_of(code)] = c.coeffs.normalize(value);
  }
  return out;
}

ControlledChain from_coordinates(const SpacePtr& x, const ChainBasis& basis, const std::vector<Scalar>& v,
                                 const Coefficients& coeffs) {
  if (v.size() != basis.size()) throw InvalidInput("coordinate vector has the wrong length");
  ControlledChain c{x, basis.degree(), coeffs, {}};
  for (Index i = 0; i < basis.size(); ++i) {
    const Scalar value = coeffs.normalize(v[i]);
    if (value == 0) continue;
    for (auto code : basis.members(i)) c.terms[basis.decode(code)] = value;
  }
  return c;
}

namespace {

void accumulate(std::map<Tuple, Scalar>& terms, const Tuple& t, const Scalar& v, const Coefficients& k) {
  Scalar& slot = terms[t];
  slot = k.normalize(slot + v);
  if (slot == 0) terms.erase(t);
}

}  // namespace

ControlledChain chain_boundary(const ControlledChain& c) {
  if (c.degree < 1) throw InvalidInput("boundary of a degree 0 chain");
  ControlledChain out{c.space, c.degree - 1, c.coeffs, {}};
  for (const auto& [t, v] : c.terms)
    for (int i = 0; i <= c.degree; ++i) {
      Tuple face = t;
      face.erase(face.begin() + i);
      accumulate(out.terms, face, i % 2 == 0 ? v : Scalar(-v), c.coeffs);
    }
  return out;
}

ControlledChain chain_pushforward(const SpaceMap& f, const ControlledChain& c) {
  if (c.space.get() != f.source.get()) throw InvalidInput("chain does not live on the map's source");
  const auto check = is_morphism(f);
  if (!check.ok) throw InvalidInput("pushforward along an invalid map: " + check.violations.front());
  ControlledChain out{f.target, c.degree, c.coeffs, {}};
  for (const auto& [t, v] : c.terms) {
    Tuple image(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) image[i] = f(t[i]);
    accumulate(out.terms, image, v, c.coeffs);
  }
  return out;
}

Matrix chain_map_matrix(const SpaceMap& f, const ChainBasis& source, const ChainBasis& target,
                        const Coefficients& coeffs) {
  if (source.degree() != target.degree() || source.invariant() != target.invariant())
    throw InvalidInput("incompatible chain bases for a chain map");
  Matrix m(target.size(), source.size());
  for (Index j = 0; j < source.size(); ++j) {
    std::vector<Entry> col;
    for (auto code : source.members(j)) {
      Tuple t = source.decode(code);
      for (auto& p : t) p = f(p);
      const auto tc = target.encode(t);
      const auto o = target.orbit_of(tc);
      if (!o) throw InvalidInput("map sends a controlled tuple to an uncontrolled one");
      if (target.is_representative(tc)) col.push_back({*o, Scalar(1)});
    }
    m.set_column(j, std::move(col));
  }
  return m.reduced(coeffs);
}

}  // namespace coarsehh
