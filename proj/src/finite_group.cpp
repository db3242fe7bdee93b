#include "coarsehh/coarse_space.hpp"
#include "coarsehh/error.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace coarsehh {

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<GroupElement>> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw InvalidInput("group must have at least one element");
  if (table_.size() != n) throw InvalidInput("group table must have " + std::to_string(n) + " rows");
  for (std::size_t a = 0; a < n; ++a) {
    if (table_[a].size() != n)
      throw InvalidInput("group table row " + std::to_string(a) + " must have " + std::to_string(n) + " entries");
    for (auto v : table_[a])
      if (v >= n) throw InvalidInput("group table entry out of range in row " + std::to_string(a));
  }
  bool found = false;
  for (GroupElement e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (GroupElement a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw InvalidInput("group table has no identity element");
  for (GroupElement a = 0; a < n; ++a)
    for (GroupElement b = 0; b < n; ++b)
      for (GroupElement c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw InvalidInput("group table is not associative at (" + labels_[a] + ", " + labels_[b] + ", " +
                             labels_[c] + ")");
  inverse_.assign(n, 0);
  for (GroupElement a = 0; a < n; ++a) {
    auto it = std::find(table_[a].begin(), table_[a].end(), identity_);
    if (it == table_[a].end()) throw InvalidInput("element " + labels_[a] + " has no inverse");
    const auto b = static_cast<GroupElement>(it - table_[a].begin());
    if (table_[b][a] != identity_) throw InvalidInput("element " + labels_[a] + " has no two-sided inverse");
    inverse_[a] = b;
  }
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup({"e"}, {{0}}); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw InvalidInput("cyclic group of order 0");
  std::vector<std::string> labels;
  std::vector<std::vector<GroupElement>> table(n, std::vector<GroupElement>(n));
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(a == 0 ? "e" : "g" + std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) table[a][b] = static_cast<GroupElement>((a + b) % n);
  }
  return FiniteGroup(std::move(labels), std::move(table));
}

FiniteGroup FiniteGroup::symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t n = perms.size();
  std::vector<std::string> labels;
  for (const auto& q : perms)
    labels.push_back(std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
  labels[0] = "e";
  std::vector<std::vector<GroupElement>> table(n, std::vector<GroupElement>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];  // (a*b)(i) = a(b(i))
      table[a][b] = static_cast<GroupElement>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteGroup(std::move(labels), std::move(table));
}

FiniteGroup FiniteGroup::by_name(const std::string& name) {
  if (name == "1" || name == "trivial") return trivial();
  if (name == "S3") return symmetric3();
  if (name.size() > 1 && name[0] == 'Z' && name.find_first_not_of("0123456789", 1) == std::string::npos) {
    const auto n = std::stoul(name.substr(1));
    if (n == 0 || n > 64) throw InvalidInput("unsupported cyclic group '" + name + "'");
    return cyclic(n);
  }
  throw InvalidInput("unknown group '" + name + "' (expected 1, Z<n> or S3)");
}

std::vector<GroupElement> FiniteGroup::generated_subgroup(std::span<const GroupElement> generators) const {
  std::vector<char> in(order(), 0);
  std::vector<GroupElement> elems{identity_};
  in[identity_] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (auto g : generators) {
      const auto h = multiply(elems[i], g);
      if (!in[h]) {
        in[h] = 1;
        elems.push_back(h);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<GroupElement> FiniteGroup::subgroup_by_name(const std::string& name) const {
  if (name == "1" || name == "trivial") return {identity_};
  if (name.size() > 1 && name[0] == 'Z' && name.find_first_not_of("0123456789", 1) == std::string::npos) {
    const auto d = std::stoul(name.substr(1));
    for (GroupElement g = 0; g < order(); ++g) {
      const std::array<GroupElement, 1> gen{g};
      if (generated_subgroup(gen).size() == d) return generated_subgroup(gen);
    }
    throw InvalidInput("no cyclic subgroup of order " + std::to_string(d));
  }
  if (name == "S3" && order() == 6) {
    std::vector<GroupElement> all(order());
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  throw InvalidInput("unknown subgroup '" + name + "'");
}

std::size_t FiniteGroup::conjugacy_class_count() const {
  std::vector<char> seen(order(), 0);
  std::size_t classes = 0;
  for (GroupElement a = 0; a < order(); ++a) {
    if (seen[a]) continue;
    ++classes;
    for (GroupElement g = 0; g < order(); ++g) seen[multiply(multiply(g, a), inverse(g))] = 1;
  }
  return classes;
}

GSet coset_space(const FiniteGroup& group, std::span<const GroupElement> subgroup) {
  // Coset of g is identified by its sorted element list.
  std::vector<std::vector<GroupElement>> cosets;
  std::vector<PointIndex> coset_of(group.order());
  std::vector<char> assigned(group.order(), 0);
  GSet gs;
  for (GroupElement g = 0; g < group.order(); ++g) {
    if (assigned[g]) continue;
    std::vector<GroupElement> c;
    for (auto h : subgroup) c.push_back(group.multiply(g, h));
    std::sort(c.begin(), c.end());
    for (auto x : c) {
      assigned[x] = 1;
      coset_of[x] = static_cast<PointIndex>(cosets.size());
    }
    gs.labels.push_back(group.labels()[g] + "H");
    cosets.push_back(std::move(c));
  }
  gs.action.assign(group.order(), std::vector<PointIndex>(cosets.size()));
  for (GroupElement g = 0; g < group.order(); ++g)
    for (std::size_t c = 0; c < cosets.size(); ++c) gs.action[g][c] = coset_of[group.multiply(g, cosets[c].front())];
  return gs;
}

}  // namespace coarsehh
