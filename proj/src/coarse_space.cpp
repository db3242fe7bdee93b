#include "coarsehh/coarse_space.hpp"
#include "coarsehh/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace coarsehh {

namespace {

struct UnionFind {
  std::vector<PointIndex> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  PointIndex find(PointIndex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(PointIndex a, PointIndex b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<PointIndex> component_labels(const PairSet& generators, std::size_t n,
                                         const std::vector<std::vector<PointIndex>>& action) {
  UnionFind uf(n);
  for (const auto& [a, b] : generators)
    for (const auto& g : action) uf.unite(g[a], g[b]);
  std::vector<PointIndex> label(n);
  for (PointIndex x = 0; x < n; ++x) label[x] = uf.find(x);
  return label;
}

std::string pair_text(const GBornCoarseSpace& x, PointIndex a, PointIndex b) {
  return "(" + x.points()[a] + ", " + x.points()[b] + ")";
}

}  // namespace

GBornCoarseSpace::GBornCoarseSpace(std::vector<std::string> points, PairSet entourage_generators,
                                   std::vector<PointSet> bornology_generators, GroupPtr group,
                                   std::vector<std::vector<PointIndex>> action)
    : points_(std::move(points)),
      entourage_generators_(std::move(entourage_generators)),
      bornology_generators_(std::move(bornology_generators)),
      group_(std::move(group)),
      action_(std::move(action)) {
  if (!group_) throw InvalidInput("space requires a group");
  const std::size_t n = points_.size();
  {
    std::set<std::string> seen(points_.begin(), points_.end());
    if (seen.size() != n) throw InvalidInput("point labels must be distinct");
  }
  if (action_.size() != group_->order())
    throw InvalidInput("action must have one row per group element (" + std::to_string(group_->order()) + ")");
  for (std::size_t g = 0; g < action_.size(); ++g) {
    if (action_[g].size() != n) throw InvalidInput("action row " + std::to_string(g) + " must have one entry per point");
    std::vector<char> hit(n, 0);
    for (auto y : action_[g]) {
      if (y >= n) throw InvalidInput("action row " + std::to_string(g) + " has an out-of-range point");
      if (hit[y]) throw InvalidInput("action of " + group_->labels()[g] + " is not a bijection");
      hit[y] = 1;
    }
  }
  for (PointIndex x = 0; x < n; ++x)
    if (action_[group_->identity()][x] != x) throw InvalidInput("identity element does not act trivially");
  for (GroupElement g = 0; g < group_->order(); ++g)
    for (GroupElement h = 0; h < group_->order(); ++h)
      for (PointIndex x = 0; x < n; ++x)
        if (action_[group_->multiply(g, h)][x] != action_[g][action_[h][x]])
          throw InvalidInput("action is not compatible with the group law at (" + group_->labels()[g] + ", " +
                             group_->labels()[h] + ")");
  for (const auto& [a, b] : entourage_generators_)
    if (a >= n || b >= n) throw InvalidInput("entourage generator references an unknown point");
  PointSet covered;
  for (const auto& b : bornology_generators_)
    for (auto x : b) {
      if (x >= n) throw InvalidInput("bornology generator references an unknown point");
      covered.insert(x);
    }
  if (covered.size() != n) throw InvalidInput("bornology generators do not cover the carrier");
  component_ = component_labels(entourage_generators_, n, action_);
}

PairSet GBornCoarseSpace::u_star() const {
  PairSet u;
  for (PointIndex a = 0; a < size(); ++a)
    for (PointIndex b = 0; b < size(); ++b)
      if (related(a, b)) u.insert({a, b});
  return u;
}

std::vector<PointSet> GBornCoarseSpace::components() const {
  std::map<PointIndex, PointSet> parts;
  for (PointIndex x = 0; x < size(); ++x) parts[component_[x]].insert(x);
  std::vector<PointSet> out;
  for (auto& [k, s] : parts) out.push_back(std::move(s));
  return out;
}

std::vector<PointSet> GBornCoarseSpace::orbits() const {
  std::vector<char> seen(size(), 0);
  std::vector<PointSet> out;
  for (PointIndex x = 0; x < size(); ++x) {
    if (seen[x]) continue;
    PointSet orbit;
    for (const auto& g : action_) orbit.insert(g[x]);
    for (auto y : orbit) seen[y] = 1;
    out.push_back(std::move(orbit));
  }
  return out;
}

bool GBornCoarseSpace::is_invariant(const PointSet& s) const {
  for (const auto& g : action_)
    for (auto x : s)
      if (!s.contains(g[x])) return false;
  return true;
}

bool GBornCoarseSpace::is_invariant(const PairSet& u) const {
  for (const auto& g : action_)
    for (const auto& [a, b] : u)
      if (!u.contains({g[a], g[b]})) return false;
  return true;
}

std::vector<GroupElement> GBornCoarseSpace::stabilizer(PointIndex x) const {
  std::vector<GroupElement> s;
  for (GroupElement g = 0; g < action_.size(); ++g)
    if (action_[g][x] == x) s.push_back(g);
  return s;
}

SpaceMap identity_map(const SpacePtr& x) {
  SpaceMap f{x, x, std::vector<PointIndex>(x->size())};
  std::iota(f.assignment.begin(), f.assignment.end(), 0);
  return f;
}

SpaceMap compose(const SpaceMap& g, const SpaceMap& f) {
  if (f.target.get() != g.source.get()) throw InvalidInput("maps are not composable");
  SpaceMap h{f.source, g.target, std::vector<PointIndex>(f.source->size())};
  for (PointIndex x = 0; x < f.source->size(); ++x) h.assignment[x] = g(f(x));
  return h;
}

PairSet close_coarse_structure(const PairSet& generators, std::size_t point_count,
                               const std::vector<std::vector<PointIndex>>& action) {
  for (const auto& [a, b] : generators)
    if (a >= point_count || b >= point_count) throw InvalidInput("generator references an unknown point");
  const auto label = component_labels(generators, point_count, action);
  PairSet u;
  for (PointIndex a = 0; a < point_count; ++a)
    for (PointIndex b = 0; b < point_count; ++b)
      if (label[a] == label[b]) u.insert({a, b});
  return u;
}

PointSet thickening(const PairSet& u, const PointSet& b) {
  PointSet out;
  for (const auto& [x, y] : u)
    if (b.contains(y)) out.insert(x);
  return out;
}

SpacePtr point_space(GroupPtr group) {
  if (!group) group = std::make_shared<const FiniteGroup>(FiniteGroup::trivial());
  std::vector<std::vector<PointIndex>> action(group->order(), std::vector<PointIndex>{0});
  return std::make_shared<const GBornCoarseSpace>(std::vector<std::string>{"pt"}, PairSet{},
                                                  std::vector<PointSet>{{0}}, std::move(group), std::move(action));
}

SpacePtr g_can_min(GroupPtr group) {
  const std::size_t n = group->order();
  PairSet gens;
  for (PointIndex a = 0; a < n; ++a)
    for (PointIndex b = 0; b < n; ++b) gens.insert({a, b});
  std::vector<PointSet> born;
  for (PointIndex a = 0; a < n; ++a) born.push_back({a});
  std::vector<std::vector<PointIndex>> action(n, std::vector<PointIndex>(n));
  for (GroupElement g = 0; g < n; ++g)
    for (PointIndex x = 0; x < n; ++x) action[g][x] = group->multiply(g, x);
  auto labels = group->labels();
  return std::make_shared<const GBornCoarseSpace>(std::move(labels), std::move(gens), std::move(born),
                                                  std::move(group), std::move(action));
}

SpacePtr subspace(const GBornCoarseSpace& x, const PointSet& z) {
  for (auto p : z)
    if (p >= x.size()) throw InvalidInput("subspace references an unknown point");
  if (!x.is_invariant(z)) throw InvalidInput("subspace carrier is not G-invariant");
  std::vector<PointIndex> local(x.size(), 0);
  std::vector<std::string> labels;
  for (auto p : z) {
    local[p] = static_cast<PointIndex>(labels.size());
    labels.push_back(x.points()[p]);
  }
  PairSet gens;
  for (auto a : z)
    for (auto b : z)
      if (a != b && x.related(a, b)) gens.insert({local[a], local[b]});
  std::vector<PointSet> born;
  for (const auto& b : x.bornology_generators()) {
    PointSet r;
    for (auto p : b)
      if (z.contains(p)) r.insert(local[p]);
    if (!r.empty()) born.push_back(std::move(r));
  }
  std::vector<std::vector<PointIndex>> action(x.group().order());
  for (GroupElement g = 0; g < x.group().order(); ++g)
    for (auto p : z) action[g].push_back(local[x.act(g, p)]);
  return std::make_shared<const GBornCoarseSpace>(std::move(labels), std::move(gens), std::move(born),
                                                  x.group_ptr(), std::move(action));
}

SpaceMap subspace_inclusion(const SpacePtr& x, const PointSet& z) {
  SpaceMap f{subspace(*x, z), x, {}};
  f.assignment.assign(z.begin(), z.end());
  return f;
}

SpacePtr restrict_entourage(const GBornCoarseSpace& x, const PairSet& u) {
  for (const auto& [a, b] : u)
    if (a >= x.size() || b >= x.size() || !x.related(a, b))
      throw InvalidInput("entourage is not contained in the maximal entourage");
  if (!x.is_invariant(u)) throw InvalidInput("entourage is not G-invariant");
  return std::make_shared<const GBornCoarseSpace>(x.points(), u, x.bornology_generators(), x.group_ptr(),
                                                  x.action());
}

SpacePtr tensor(const GBornCoarseSpace& x, const GBornCoarseSpace& y) {
  if (x.group().table() != y.group().table()) throw InvalidInput("tensor factors carry different groups");
  const std::size_t nx = x.size(), ny = y.size();
  auto idx = [ny](PointIndex i, PointIndex j) { return static_cast<PointIndex>(i * ny + j); };
  std::vector<std::string> labels;
  for (PointIndex i = 0; i < nx; ++i)
    for (PointIndex j = 0; j < ny; ++j) labels.push_back("(" + x.points()[i] + "," + y.points()[j] + ")");
  PairSet gens;
  for (PointIndex i = 0; i < nx; ++i)
    for (PointIndex k = 0; k < nx; ++k) {
      if (!x.related(i, k)) continue;
      for (PointIndex j = 0; j < ny; ++j)
        for (PointIndex l = 0; l < ny; ++l)
          if (y.related(j, l) && idx(i, j) != idx(k, l)) gens.insert({idx(i, j), idx(k, l)});
    }
  std::vector<PointSet> born;
  for (const auto& bx : x.bornology_generators())
    for (const auto& by : y.bornology_generators()) {
      PointSet b;
      for (auto i : bx)
        for (auto j : by) b.insert(idx(i, j));
      born.push_back(std::move(b));
    }
  std::vector<std::vector<PointIndex>> action(x.group().order(), std::vector<PointIndex>(nx * ny));
  for (GroupElement g = 0; g < x.group().order(); ++g)
    for (PointIndex i = 0; i < nx; ++i)
      for (PointIndex j = 0; j < ny; ++j) action[g][idx(i, j)] = idx(x.act(g, i), y.act(g, j));
  return std::make_shared<const GBornCoarseSpace>(std::move(labels), std::move(gens), std::move(born),
                                                  x.group_ptr(), std::move(action));
}

SpacePtr min_max_space(GroupPtr group, const GSet& gset) {
  const std::size_t n = gset.labels.size();
  // Maximal bornology: the whole carrier is one bounded generator.
  PointSet all;
  for (PointIndex x = 0; x < n; ++x) all.insert(x);
  std::vector<PointSet> born;
  if (n != 0) born.push_back(all);
  return std::make_shared<const GBornCoarseSpace>(gset.labels, PairSet{}, std::move(born), std::move(group),
                                                  gset.action);
}

SpacePtr component_space(const std::vector<std::size_t>& component_sizes) {
  auto group = std::make_shared<const FiniteGroup>(FiniteGroup::trivial());
  std::vector<std::string> labels;
  PairSet gens;
  std::vector<PointSet> born;
  PointIndex next = 0;
  for (std::size_t c = 0; c < component_sizes.size(); ++c) {
    const PointIndex first = next;
    for (std::size_t k = 0; k < component_sizes[c]; ++k) {
      labels.push_back("c" + std::to_string(c) + "_" + std::to_string(k));
      born.push_back({next});
      if (next != first) gens.insert({first, next});
      ++next;
    }
  }
  std::vector<std::vector<PointIndex>> action(1, std::vector<PointIndex>(next));
  std::iota(action[0].begin(), action[0].end(), 0);
  return std::make_shared<const GBornCoarseSpace>(std::move(labels), std::move(gens), std::move(born),
                                                  std::move(group), std::move(action));
}

MorphismCheck is_morphism(const SpaceMap& f) {
  MorphismCheck r;
  const auto& x = *f.source;
  const auto& y = *f.target;
  if (f.assignment.size() != x.size()) {
    r.ok = false;
    r.violations.push_back("assignment has " + std::to_string(f.assignment.size()) + " entries for " +
                           std::to_string(x.size()) + " points");
    return r;
  }
  for (auto v : f.assignment)
    if (v >= y.size()) {
      r.ok = false;
      r.violations.push_back("assignment references an unknown target point");
      return r;
    }
  if (x.group().table() != y.group().table()) {
    r.ok = false;
    r.violations.push_back("source and target carry different groups");
    return r;
  }
  for (GroupElement g = 0; g < x.group().order(); ++g)
    for (PointIndex p = 0; p < x.size(); ++p)
      if (f(x.act(g, p)) != y.act(g, f(p))) {
        r.ok = false;
        r.violations.push_back("not equivariant: f(" + x.group().labels()[g] + "." + x.points()[p] + ") != " +
                               x.group().labels()[g] + ".f(" + x.points()[p] + ")");
      }
  for (PointIndex a = 0; a < x.size(); ++a)
    for (PointIndex b = a + 1; b < x.size(); ++b)
      if (x.related(a, b) && !y.related(f(a), f(b))) {
        r.ok = false;
        r.violations.push_back("not controlled: " + pair_text(x, a, b) + " maps to " + pair_text(y, f(a), f(b)));
      }
  // Properness: the preimage of every bounded generator must be covered by
  // bounded generators of the source (finite unions are bounded).
  PointSet bounded;
  for (const auto& b : x.bornology_generators()) bounded.insert(b.begin(), b.end());
  for (const auto& b : y.bornology_generators())
    for (PointIndex p = 0; p < x.size(); ++p)
      if (b.contains(f(p)) && !bounded.contains(p)) {
        r.ok = false;
        r.violations.push_back("not proper at " + x.points()[p]);
      }
  return r;
}

bool are_close(const SpaceMap& f, const SpaceMap& g) {
  if (f.source.get() != g.source.get() || f.target.get() != g.target.get())
    throw InvalidInput("closeness requires maps with the same source and target");
  for (PointIndex x = 0; x < f.source->size(); ++x)
    if (!f.target->related(f(x), g(x))) return false;
  return true;
}

std::optional<SpaceMap> find_coarse_inverse(const SpaceMap& f, std::size_t search_bound) {
  if (!is_morphism(f).ok) return std::nullopt;
  const auto& x = *f.source;
  const auto& y = *f.target;
  const auto y_orbits = y.orbits();

  // Candidate images for each orbit representative of Y.
  std::vector<PointIndex> reps;
  std::vector<std::vector<PointIndex>> candidates;
  std::size_t total = 1;
  for (const auto& orbit : y_orbits) {
    const PointIndex rep = *orbit.begin();
    reps.push_back(rep);
    std::vector<PointIndex> cands;
    const auto stab = y.stabilizer(rep);
    for (PointIndex p = 0; p < x.size(); ++p) {
      bool ok = std::all_of(stab.begin(), stab.end(), [&](GroupElement g) { return x.act(g, p) == p; });
      // f(g(rep)) must be close to rep.
      if (ok && y.related(f(p), rep)) cands.push_back(p);
    }
    if (cands.empty()) return std::nullopt;
    total *= cands.size();
    if (total > search_bound)
      throw GuardExceeded("coarse inverse search exceeds bound " + std::to_string(search_bound));
    candidates.push_back(std::move(cands));
  }

  std::vector<std::size_t> choice(reps.size(), 0);
  const auto& group = y.group();
  while (true) {
    SpaceMap g{f.target, f.source, std::vector<PointIndex>(y.size())};
    for (std::size_t o = 0; o < reps.size(); ++o)
      for (GroupElement h = 0; h < group.order(); ++h) g.assignment[y.act(h, reps[o])] = x.act(h, candidates[o][choice[o]]);
    bool ok = is_morphism(g).ok;
    for (PointIndex p = 0; ok && p < x.size(); ++p) ok = x.related(g(f(p)), p);
    for (PointIndex q = 0; ok && q < y.size(); ++q) ok = y.related(f(g(q)), q);
    if (ok) return g;
    std::size_t o = 0;
    while (o < reps.size() && ++choice[o] == candidates[o].size()) choice[o++] = 0;
    if (o == reps.size()) break;
  }
  return std::nullopt;
}

bool is_coarse_equivalence(const SpaceMap& f, std::size_t search_bound) {
  return find_coarse_inverse(f, search_bound).has_value();
}

bool is_flasque(const GBornCoarseSpace& x) { return x.size() == 0; }

bool is_complementary_pair(const GBornCoarseSpace& x, const PointSet& z, const std::vector<PointSet>& ys) {
  if (ys.empty()) return false;
  if (!x.is_invariant(z)) return false;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (!x.is_invariant(ys[i])) return false;
    if (i > 0 && !std::includes(ys[i].begin(), ys[i].end(), ys[i - 1].begin(), ys[i - 1].end())) return false;
  }
  const PairSet u = x.u_star();
  for (const auto& yi : ys) {
    const PointSet thick = thickening(u, yi);
    bool absorbed = std::any_of(ys.begin(), ys.end(), [&](const PointSet& yj) {
      return std::includes(yj.begin(), yj.end(), thick.begin(), thick.end());
    });
    if (!absorbed) return false;
  }
  PointSet cover = z;
  cover.insert(ys.back().begin(), ys.back().end());
  return cover.size() == x.size();
}

std::vector<PointSet> orbits(const GBornCoarseSpace& x) { return x.orbits(); }

}  // namespace coarsehh
