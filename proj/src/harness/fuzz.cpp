#include "coarsehh/harness/fuzz.hpp"

#include "coarsehh/error.hpp"
#include "coarsehh/io.hpp"

#include <array>
#include <random>

namespace coarsehh {

namespace {

using Rng = std::mt19937_64;

std::size_t draw(Rng& rng, std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng() % n); }
bool coin(Rng& rng) { return rng() & 1U; }

GroupPtr random_group(Rng& rng) {
  static const std::array<const char*, 4> names{"1", "Z2", "Z3", "S3"};
  return std::make_shared<const FiniteGroup>(FiniteGroup::by_name(names[draw(rng, names.size())]));
}

/// dim End(generator): Hom(k[G] at x, M) is M over the component of x, so
/// each orbit representative contributes the stabilizer orders of the points
/// related to it.
std::size_t generator_end_dim(const GBornCoarseSpace& x) {
  std::size_t total = 0;
  for (const auto& orbit : x.orbits())
    for (PointIndex z = 0; z < x.size(); ++z)
      if (x.related(*orbit.begin(), z)) total += x.stabilizer(z).size();
  return total;
}

/// A union of coset spaces with at most kFuzzMaxPoints points and a random
/// set of G-saturated entourage generators.
SpacePtr random_space(Rng& rng) {
  for (;;) {
    const GroupPtr g = random_group(rng);
    std::vector<std::string> labels;
    std::vector<std::vector<PointIndex>> action(g->order());
    const std::size_t pieces = 1 + draw(rng, 3);
    for (std::size_t piece = 0; piece < pieces; ++piece) {
      const std::array<GroupElement, 1> gen{static_cast<GroupElement>(draw(rng, g->order()))};
      const auto h = g->generated_subgroup(gen);
      const GSet cosets = coset_space(*g, h);
      if (labels.size() + cosets.labels.size() > kFuzzMaxPoints) continue;
      const auto offset = static_cast<PointIndex>(labels.size());
      for (const auto& l : cosets.labels) labels.push_back("o" + std::to_string(piece) + ":" + l);
      for (GroupElement e = 0; e < g->order(); ++e)
        for (auto p : cosets.action[e]) action[e].push_back(offset + p);
    }
    if (labels.empty()) continue;
    PairSet gens;
    const std::size_t raw = draw(rng, labels.size() + 1);
    for (std::size_t i = 0; i < raw; ++i) {
      const auto a = static_cast<PointIndex>(draw(rng, labels.size()));
      const auto b = static_cast<PointIndex>(draw(rng, labels.size()));
      for (GroupElement e = 0; e < g->order(); ++e) gens.insert({action[e][a], action[e][b]});
    }
    std::vector<PointSet> born;
    for (PointIndex p = 0; p < labels.size(); ++p) born.push_back({p});
    auto x = std::make_shared<const GBornCoarseSpace>(labels, gens, born, g, action);
    if (generator_end_dim(*x) <= kFuzzMaxEndDim) return x;
  }
}

/// Random union of the given invariant blocks.
PointSet random_union(Rng& rng, const std::vector<PointSet>& blocks) {
  PointSet out;
  for (const auto& b : blocks)
    if (coin(rng)) out.insert(b.begin(), b.end());
  return out;
}

std::vector<PointSet> component_orbits(const GBornCoarseSpace& x) {
  std::vector<PointSet> out;
  PointSet seen;
  for (const auto& c : x.components()) {
    if (seen.contains(*c.begin())) continue;
    PointSet orbit;
    for (GroupElement g = 0; g < x.group().order(); ++g)
      for (auto p : c) orbit.insert(x.act(g, p));
    seen.insert(orbit.begin(), orbit.end());
    out.push_back(orbit);
  }
  return out;
}

SpaceMap random_equivalence(Rng& rng, const SpacePtr& x) {
  const auto orbits = x->orbits();
  for (int attempt = 0; attempt < 8; ++attempt) {
    const PointSet z = random_union(rng, orbits);
    if (z.empty() || z.size() == x->size()) continue;
    const SpaceMap inc = subspace_inclusion(x, z);
    const auto inverse = find_coarse_inverse(inc);
    if (!inverse) continue;
    return coin(rng) ? inc : *inverse;
  }
  return identity_map(x);
}

nlohmann::ordered_json labels_json(const GBornCoarseSpace& x, const PointSet& s) {
  auto out = nlohmann::ordered_json::array();
  for (auto p : s) out.push_back(x.points()[p]);
  return out;
}

template <typename F>
void guarded(AxiomReport& r, const std::string& what, F&& f) {
  try {
    r.absorb(f());
  } catch (const GuardExceeded& e) {
    // too large for the configured degree, not a verdict
    r.add_data(what + " skipped (" + e.what() + ")", {});
  } catch (const Error& e) {
    r.check(what + " / completed", false, e.what());
  }
}

}  // namespace

FuzzCase generate_case(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  Rng rng(seq);
  FuzzCase c;
  c.seed = seed;
  c.index = index;
  c.space = random_space(rng);
  c.equivalence = random_equivalence(rng, c.space);

  const auto& x = *c.space;
  const PointSet y_max = random_union(rng, component_orbits(x));
  std::vector<PointSet> inside;
  for (const auto& o : x.orbits())
    if (y_max.contains(*o.begin())) inside.push_back(o);
  c.ys = {random_union(rng, inside), y_max};
  for (PointIndex p = 0; p < x.size(); ++p)
    if (!y_max.contains(p)) c.z.insert(p);
  const PointSet extra = random_union(rng, inside);
  c.z.insert(extra.begin(), extra.end());
  return c;
}

AxiomReport run_case(const FuzzCase& c, const HarnessConfig& cfg) {
  AxiomReport r;
  r.axiom = "fuzz case " + std::to_string(c.index);
  const auto& x = *c.space;
  r.inputs = "seed " + std::to_string(c.seed) + ", |G| = " + std::to_string(x.group().order()) + ", |X| = " +
             std::to_string(x.size()) + ", " + std::to_string(x.components().size()) + " components";
  auto ys = nlohmann::ordered_json::array();
  for (const auto& y : c.ys) ys.push_back(labels_json(x, y));
  const bool forward = c.equivalence.source == c.space;
  const SpacePtr& other = forward ? c.equivalence.target : c.equivalence.source;
  r.replay = {{"seed", c.seed},
              {"case", c.index},
              {"space", space_to_json(x)},
              {"equivalence",
               {{"direction", forward ? "space -> subspace" : "subspace -> space"},
                {"subspace", space_to_json(*other)},
                {"map", c.equivalence.assignment}}},
              {"complementary_pair", {{"z", labels_json(x, c.z)}, {"ys", ys}}}};

  guarded(r, "mixed complex identities", [&] { return check_mixed_identities(c.space, cfg); });
  guarded(r, "trace", [&] { return check_trace(c.space, cfg); });
  guarded(r, "trace naturality", [&] { return check_trace_naturality(c.equivalence, cfg); });
  guarded(r, "Morita", [&] { return check_morita(c.space, cfg); });
  guarded(r, "flasqueness predicate", [&] { return check_flasque(c.space, cfg); });
  guarded(r, "coarse chains oracle", [&] { return check_chain_oracle(c.space, cfg); });
  for (Theory t : {Theory::ordinary, Theory::hochschild, Theory::cyclic}) {
    const std::string name = to_string(t);
    guarded(r, "coarse invariance (" + name + ")", [&] { return check_coarse_invariance(c.equivalence, t, cfg); });
    guarded(r, "excision (" + name + ")", [&] { return check_excision(c.space, c.z, c.ys, t, cfg); });
    guarded(r, "u-continuity (" + name + ")", [&] { return check_u_continuity(c.space, t, cfg); });
  }
  return r;
}

std::vector<AxiomReport> fuzz(std::uint64_t seed, std::size_t budget, const HarnessConfig& cfg) {
  std::vector<AxiomReport> out;
  out.reserve(budget);
  for (std::size_t i = 0; i < budget; ++i) out.push_back(run_case(generate_case(seed, i), cfg));
  return out;
}

}  // namespace coarsehh
