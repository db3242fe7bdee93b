#pragma once

// Finite models of G-bornological coarse spaces.
//
// On a finite carrier the coarse structure has a largest entourage, the
// equivalence relation generated by the entourage generators and their
// G-translates. It is stored as a component labelling; "U is an entourage"
// becomes "U is contained in u_star". The bornology is always the full power
// set; its generators are kept for round-tripping and for products.

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace coarsehh {

using PointIndex = std::uint32_t;
using GroupElement = std::uint32_t;
using PointSet = std::set<PointIndex>;
using PointPair = std::pair<PointIndex, PointIndex>;
using PairSet = std::set<PointPair>;

class FiniteGroup {
 public:
  /// table[a][b] is the index of a*b. Validates closure, associativity,
  /// identity and inverses; throws InvalidInput otherwise.
  FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<GroupElement>> table);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(std::size_t n);
  /// S_3 as permutations of {0,1,2}, lexicographic order, identity first.
  static FiniteGroup symmetric3();
  /// "1", "Z<n>" or "S3".
  static FiniteGroup by_name(const std::string& name);

  std::size_t order() const { return labels_.size(); }
  GroupElement identity() const { return identity_; }
  GroupElement multiply(GroupElement a, GroupElement b) const { return table_[a][b]; }
  GroupElement inverse(GroupElement a) const { return inverse_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<GroupElement>>& table() const { return table_; }

  std::vector<GroupElement> generated_subgroup(std::span<const GroupElement> generators) const;
  /// Named subgroup: "1", the whole group by its own name, "Z<d>" as the
  /// cyclic subgroup of order d (the first one in element order).
  std::vector<GroupElement> subgroup_by_name(const std::string& name) const;
  std::size_t conjugacy_class_count() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<GroupElement>> table_;
  GroupElement identity_ = 0;
  std::vector<GroupElement> inverse_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite G-set; action[g][x] = g.x.
struct GSet {
  std::vector<std::string> labels;
  std::vector<std::vector<PointIndex>> action;
};

/// Left cosets gH with G acting by left multiplication.
GSet coset_space(const FiniteGroup& group, std::span<const GroupElement> subgroup);

class GBornCoarseSpace {
 public:
  /// Validates the action (bijections, homomorphism, identity acts
  /// trivially) and that the bornology generators cover the carrier. The
  /// maximal entourage is the closure of the generators under G-translates.
  GBornCoarseSpace(std::vector<std::string> points, PairSet entourage_generators,
                   std::vector<PointSet> bornology_generators, GroupPtr group,
                   std::vector<std::vector<PointIndex>> action);

  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  PointIndex act(GroupElement g, PointIndex x) const { return action_[g][x]; }
  const std::vector<std::vector<PointIndex>>& action() const { return action_; }
  const PairSet& entourage_generators() const { return entourage_generators_; }
  const std::vector<PointSet>& bornology_generators() const { return bornology_generators_; }

  /// The maximal entourage as an explicit pair set.
  PairSet u_star() const;
  bool related(PointIndex x, PointIndex y) const { return component_[x] == component_[y]; }
  /// Canonical label of the coarse component: its smallest point.
  PointIndex component_of(PointIndex x) const { return component_[x]; }
  std::vector<PointSet> components() const;
  std::vector<PointSet> orbits() const;

  bool is_invariant(const PointSet& s) const;
  bool is_invariant(const PairSet& u) const;
  /// Stabilizer subgroup of a point.
  std::vector<GroupElement> stabilizer(PointIndex x) const;

 private:
  std::vector<std::string> points_;
  PairSet entourage_generators_;
  std::vector<PointSet> bornology_generators_;
  GroupPtr group_;
  std::vector<std::vector<PointIndex>> action_;
  std::vector<PointIndex> component_;
};

using SpacePtr = std::shared_ptr<const GBornCoarseSpace>;

struct SpaceMap {
  SpacePtr source;
  SpacePtr target;
  std::vector<PointIndex> assignment;

  PointIndex operator()(PointIndex x) const { return assignment[x]; }
};

SpaceMap identity_map(const SpacePtr& x);
/// g after f.
SpaceMap compose(const SpaceMap& g, const SpaceMap& f);

// --- constructions ----------------------------------------------------------

/// Smallest equivalence relation containing the generators and all their
/// G-translates, as an explicit pair set.
PairSet close_coarse_structure(const PairSet& generators, std::size_t point_count,
                               const std::vector<std::vector<PointIndex>>& action);

/// U[B] = { x | exists b in B with (x, b) in U }.
PointSet thickening(const PairSet& u, const PointSet& b);

SpacePtr point_space(GroupPtr group = nullptr);
/// Carrier G with left multiplication; every pair is generated, so the
/// maximal entourage is G x G.
SpacePtr g_can_min(GroupPtr group);
/// Invariant subset with the induced structures; points keep index order.
SpacePtr subspace(const GBornCoarseSpace& x, const PointSet& z);
/// Inclusion of subspace(x, z) into x.
SpaceMap subspace_inclusion(const SpacePtr& x, const PointSet& z);
/// X_U: same carrier and bornology, coarse structure generated by u alone.
SpacePtr restrict_entourage(const GBornCoarseSpace& x, const PairSet& u);
/// Product with diagonal action, product coarse structure and product
/// bornology generators. Point (i, j) has index i * |Y| + j.
SpacePtr tensor(const GBornCoarseSpace& x, const GBornCoarseSpace& y);
/// Minimal coarse structure, maximal bornology.
SpacePtr min_max_space(GroupPtr group, const GSet& gset);
/// `count` points, trivial group, components given by consecutive blocks of
/// the listed sizes.
SpacePtr component_space(const std::vector<std::size_t>& component_sizes);

// --- predicates -------------------------------------------------------------

struct MorphismCheck {
  bool ok = true;
  std::vector<std::string> violations;
};

MorphismCheck is_morphism(const SpaceMap& f);
/// Throws InvalidInput if sources/targets differ.
bool are_close(const SpaceMap& f, const SpaceMap& g);

/// Searches all equivariant candidate inverses g: target -> source (images
/// of orbit representatives range over points with a larger stabilizer).
/// Throws GuardExceeded when the candidate count exceeds `search_bound`.
std::optional<SpaceMap> find_coarse_inverse(const SpaceMap& f, std::size_t search_bound = 1'000'000);
bool is_coarse_equivalence(const SpaceMap& f, std::size_t search_bound = 1'000'000);

/// Only the empty space is flasque among finite spaces: the carrier itself
/// is bounded, so no iterate can leave it.
bool is_flasque(const GBornCoarseSpace& x);

/// ys must be increasing; checks the big-family thickening condition and
/// z u max(ys) = X.
bool is_complementary_pair(const GBornCoarseSpace& x, const PointSet& z, const std::vector<PointSet>& ys);

std::vector<PointSet> orbits(const GBornCoarseSpace& x);

}  // namespace coarsehh
