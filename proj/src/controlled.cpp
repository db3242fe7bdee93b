#include "coarsehh/controlled.hpp"
#include "coarsehh/error.hpp"

#include <algorithm>

namespace coarsehh {

namespace {

PointIndex inverse_act(const GBornCoarseSpace& x, GroupElement g, PointIndex p) {
  return x.act(x.group().inverse(g), p);
}

}  // namespace

// --- objects ----------------------------------------------------------------

ControlledObject::ControlledObject(SpacePtr space, std::vector<std::size_t> dims,
                                   std::vector<std::vector<DenseMatrix>> rho, Coefficients field)
    : space_(std::move(space)), dims_(std::move(dims)), rho_(std::move(rho)), field_(field) {
  if (!field_.is_field()) throw DomainError("controlled objects require a field");
  const auto& x = *space_;
  const auto& group = x.group();
  if (dims_.size() != x.size()) throw InvalidInput("object needs one fibre dimension per point");
  if (rho_.size() != group.order()) throw InvalidInput("object needs rho for every group element");
  for (GroupElement g = 0; g < group.order(); ++g) {
    if (rho_[g].size() != x.size()) throw InvalidInput("rho needs one component per point");
    for (PointIndex p = 0; p < x.size(); ++p) {
      const PointIndex q = inverse_act(x, g, p);
      if (dims_[q] != dims_[p]) throw InvalidInput("fibre dimensions are not constant along orbits");
      auto& r = rho_[g][p];
      if (r.rows() != dims_[q] || r.cols() != dims_[p]) throw InvalidInput("rho component has the wrong shape");
      r = r.reduced(field_);
    }
  }
  for (PointIndex p = 0; p < x.size(); ++p)
    if (!(rho_[group.identity()][p] == DenseMatrix::identity(dims_[p])))
      throw InvalidInput("rho(e) is not the identity at " + x.points()[p]);
  for (GroupElement g = 0; g < group.order(); ++g)
    for (GroupElement h = 0; h < group.order(); ++h)
      for (PointIndex p = 0; p < x.size(); ++p) {
        const DenseMatrix lhs = rho_[group.multiply(g, h)][p];
        const DenseMatrix rhs = (rho_[h][inverse_act(x, g, p)] * rho_[g][p]).reduced(field_);
        if (!(lhs == rhs))
          throw InvalidInput("rho violates the cocycle identity at (" + group.labels()[g] + ", " +
                             group.labels()[h] + ", " + x.points()[p] + ")");
      }
}

std::size_t ControlledObject::total_dim() const {
  std::size_t n = 0;
  for (auto d : dims_) n += d;
  return n;
}

bool operator==(const ControlledObject& a, const ControlledObject& b) {
  return a.space_.get() == b.space_.get() && a.dims_ == b.dims_ && a.rho_ == b.rho_ && a.field_ == b.field_;
}

// --- morphisms --------------------------------------------------------------

ControlledMorphism::ControlledMorphism(Unchecked, ObjectPtr source, ObjectPtr target, Blocks blocks)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)) {}

ControlledMorphism::ControlledMorphism(ObjectPtr source, ObjectPtr target, Blocks blocks)
    : source_(std::move(source)), target_(std::move(target)) {
  if (source_->space_ptr().get() != target_->space_ptr().get())
    throw InvalidInput("morphism between objects over different spaces");
  const auto& field = source_->field();
  for (auto& [key, block] : blocks) {
    const auto [x, y] = key;
    if (x >= source_->space().size() || y >= source_->space().size())
      throw InvalidInput("morphism block references an unknown point");
    if (block.rows() != target_->dim(y) || block.cols() != source_->dim(x))
      throw InvalidInput("morphism block has the wrong shape");
    DenseMatrix r = block.reduced(field);
    if (!r.is_zero()) blocks_.emplace(key, std::move(r));
  }
  const std::string v = violation();
  if (!v.empty()) throw InvalidInput(v);
}

ControlledMorphism ControlledMorphism::identity(const ObjectPtr& m) {
  Blocks b;
  for (PointIndex x = 0; x < m->space().size(); ++x)
    if (m->dim(x) != 0) b.emplace(BlockKey{x, x}, DenseMatrix::identity(m->dim(x)));
  return ControlledMorphism(Unchecked{}, m, m, std::move(b));
}

ControlledMorphism ControlledMorphism::zero(ObjectPtr source, ObjectPtr target) {
  return ControlledMorphism(Unchecked{}, std::move(source), std::move(target), {});
}

const DenseMatrix* ControlledMorphism::block(PointIndex x, PointIndex y) const {
  auto it = blocks_.find({x, y});
  return it == blocks_.end() ? nullptr : &it->second;
}

std::string ControlledMorphism::violation() const {
  const auto& x = source_->space();
  const auto& group = x.group();
  const auto& field = source_->field();
  for (const auto& [key, block] : blocks_)
    if (!x.related(key.first, key.second))
      return "block " + x.points()[key.first] + "->" + x.points()[key.second] + " is not controlled";
  for (GroupElement g = 0; g < group.order(); ++g) {
    if (g == group.identity()) continue;
    for (PointIndex p = 0; p < x.size(); ++p)
      for (PointIndex q = 0; q < x.size(); ++q) {
        if (source_->dim(p) == 0 || target_->dim(q) == 0 || !x.related(p, q)) continue;
        const PointIndex gp = inverse_act(x, g, p), gq = inverse_act(x, g, q);
        const DenseMatrix zero_pq(target_->dim(q), source_->dim(p));
        const DenseMatrix zero_g(target_->dim(gq), source_->dim(gp));
        const DenseMatrix* a = block(p, q);
        const DenseMatrix* ga = block(gp, gq);
        const DenseMatrix lhs = (target_->rho(g, q) * (a ? *a : zero_pq)).reduced(field);
        const DenseMatrix rhs = ((ga ? *ga : zero_g) * source_->rho(g, p)).reduced(field);
        if (!(lhs == rhs))
          return "morphism is not equivariant for " + group.labels()[g] + " at block " + x.points()[p] + "->" +
                 x.points()[q];
      }
  }
  return {};
}

bool operator==(const ControlledMorphism& a, const ControlledMorphism& b) {
  return *a.source_ == *b.source_ && *a.target_ == *b.target_ && a.blocks_ == b.blocks_;
}

ControlledMorphism compose(const ControlledMorphism& b, const ControlledMorphism& a) {
  if (!(*a.target() == *b.source())) throw InvalidInput("composition of incompatible morphisms");
  const auto& field = a.source()->field();
  std::map<PointIndex, std::vector<const std::pair<const ControlledMorphism::BlockKey, DenseMatrix>*>> by_source;
  for (const auto& entry : b.blocks()) by_source[entry.first.first].push_back(&entry);
  ControlledMorphism::Blocks out;
  for (const auto& [key_a, block_a] : a.blocks()) {
    auto it = by_source.find(key_a.second);
    if (it == by_source.end()) continue;
    for (const auto* entry : it->second) {
      const ControlledMorphism::BlockKey key{key_a.first, entry->first.second};
      DenseMatrix prod = entry->second * block_a;
      auto [pos, inserted] = out.try_emplace(key, prod);
      if (!inserted) pos->second = pos->second + prod;
    }
  }
  ControlledMorphism::Blocks cleaned;
  for (auto& [key, block] : out) {
    DenseMatrix r = block.reduced(field);
    if (!r.is_zero()) cleaned.emplace(key, std::move(r));
  }
  return ControlledMorphism(ControlledMorphism::Unchecked{}, a.source(), b.target(), std::move(cleaned));
}

ControlledMorphism linear_combination(std::span<const ControlledMorphism> terms, std::span<const Scalar> coeffs,
                                      ObjectPtr source, ObjectPtr target) {
  const auto& field = source->field();
  ControlledMorphism::Blocks out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (const auto& [key, block] : terms[i].blocks()) {
      DenseMatrix scaled = block;
      for (std::size_t r = 0; r < scaled.rows(); ++r)
        for (std::size_t c = 0; c < scaled.cols(); ++c) scaled(r, c) *= coeffs[i];
      auto [pos, inserted] = out.try_emplace(key, scaled);
      if (!inserted) pos->second = pos->second + scaled;
    }
  }
  ControlledMorphism::Blocks cleaned;
  for (auto& [key, block] : out) {
    DenseMatrix r = block.reduced(field);
    if (!r.is_zero()) cleaned.emplace(key, std::move(r));
  }
  return ControlledMorphism(ControlledMorphism::Unchecked{}, std::move(source), std::move(target),
                            std::move(cleaned));
}

// --- hom spaces -------------------------------------------------------------

HomSpace::HomSpace(ObjectPtr source, ObjectPtr target) : source_(std::move(source)), target_(std::move(target)) {
  if (source_->space_ptr().get() != target_->space_ptr().get())
    throw InvalidInput("hom space between objects over different spaces");
  if (!(source_->field() == target_->field())) throw InvalidInput("hom space between objects over different fields");
  const auto& x = source_->space();
  const auto& group = x.group();
  const auto& field = source_->field();

  for (PointIndex p = 0; p < x.size(); ++p)
    for (PointIndex q = 0; q < x.size(); ++q)
      if (source_->dim(p) != 0 && target_->dim(q) != 0 && x.related(p, q)) {
        offsets_[{p, q}] = unknowns_;
        unknowns_ += source_->dim(p) * target_->dim(q);
      }

  // Blocks on a G-orbit of pairs are determined by the block at its smallest
  // pair, which only has to commute with the stabilizer of that pair:
  //   A^{g^-1 p -> g^-1 q} = rho'(g)_q A^{p->q} rho(g^-1)_{g^-1 p}.
  std::map<ControlledMorphism::BlockKey, bool> seen;
  for (const auto& [key, off] : offsets_) {
    if (seen.count(key)) continue;
    const auto [p, q] = key;
    const std::size_t dp = source_->dim(p), dq = target_->dim(q);
    std::map<ControlledMorphism::BlockKey, GroupElement> orbit;  // pair -> first g reaching it
    std::vector<std::vector<Scalar>> equations;
    for (GroupElement g = 0; g < group.order(); ++g) {
      const ControlledMorphism::BlockKey gk{inverse_act(x, g, p), inverse_act(x, g, q)};
      orbit.try_emplace(gk, g);
      seen[gk] = true;
      if (gk != key) continue;
      const DenseMatrix& rt = target_->rho(g, q);
      const DenseMatrix& rs = source_->rho(g, p);
      for (std::size_t r = 0; r < dq; ++r)
        for (std::size_t c = 0; c < dp; ++c) {
          std::vector<Scalar> eq(dp * dq);
          for (std::size_t k = 0; k < dq; ++k) eq[k * dp + c] += rt(r, k);
          for (std::size_t k = 0; k < dp; ++k) eq[r * dp + k] -= rs(k, c);
          if (std::any_of(eq.begin(), eq.end(), [&](const Scalar& v) { return field.normalize(v) != 0; }))
            equations.push_back(std::move(eq));
        }
    }
    Matrix system(0, dp * dq);
    if (!equations.empty()) system = Matrix::from_dense(equations);
    const KernelBasis kb = kernel_basis(system, field);
    for (std::size_t i = 0; i < kb.vectors.size(); ++i) {
      DenseMatrix a(dq, dp);
      for (std::size_t r = 0; r < dq; ++r)
        for (std::size_t c = 0; c < dp; ++c) a(r, c) = kb.vectors[i][r * dp + c];
      ControlledMorphism::Blocks blocks;
      for (const auto& [gk, g] : orbit) {
        const GroupElement gi = group.inverse(g);
        DenseMatrix b = (target_->rho(g, q) * a * source_->rho(gi, gk.first)).reduced(field);
        if (!b.is_zero()) blocks.emplace(gk, std::move(b));
      }
      basis_.push_back(ControlledMorphism(ControlledMorphism::Unchecked{}, source_, target_, std::move(blocks)));
      free_columns_.push_back(static_cast<Index>(off + kb.free_columns[i]));
    }
  }
}

std::vector<Scalar> HomSpace::flatten(const ControlledMorphism& m) const {
  std::vector<Scalar> v(unknowns_);
  for (const auto& [key, block] : m.blocks()) {
    auto it = offsets_.find(key);
    if (it == offsets_.end()) throw InvalidInput("morphism has a block outside the hom space support");
    const std::size_t dp = block.cols();
    for (std::size_t r = 0; r < block.rows(); ++r)
      for (std::size_t c = 0; c < dp; ++c) v[it->second + r * dp + c] = block(r, c);
  }
  return v;
}

std::vector<Scalar> HomSpace::coordinates(const ControlledMorphism& m) const {
  if (!(*m.source() == *source_) || !(*m.target() == *target_))
    throw InvalidInput("morphism does not belong to this hom space");
  const auto& field = source_->field();
  const std::vector<Scalar> flat = flatten(m);
  std::vector<Scalar> coords;
  coords.reserve(free_columns_.size());
  for (auto c : free_columns_) coords.push_back(field.normalize(flat[c]));
  const ControlledMorphism rebuilt = linear_combination(basis_, coords, source_, target_);
  if (!(rebuilt.blocks() == m.blocks())) throw InvalidInput("morphism is not in the span of the hom basis");
  return coords;
}

std::vector<ControlledMorphism> hom_basis(const ObjectPtr& source, const ObjectPtr& target) {
  return HomSpace(source, target).basis();
}

// --- generators -------------------------------------------------------------

ObjectPtr orbit_regular_object(const SpacePtr& x, const PointSet& orbit, const Coefficients& field) {
  if (orbit.empty()) throw InvalidInput("orbit must be nonempty");
  PointSet expected;
  for (GroupElement g = 0; g < x->group().order(); ++g) expected.insert(x->act(g, *orbit.begin()));
  if (expected != orbit) throw InvalidInput("point set is not a single G-orbit");
  std::vector<std::size_t> dims(x->size(), 0);
  for (auto p : orbit) dims[p] = 1;
  std::vector<std::vector<DenseMatrix>> rho(x->group().order());
  for (auto& row : rho)
    for (PointIndex p = 0; p < x->size(); ++p) row.push_back(DenseMatrix::identity(dims[p]));
  return std::make_shared<const ControlledObject>(x, std::move(dims), std::move(rho), field);
}

std::vector<ObjectPtr> orbit_regular_objects(const SpacePtr& x, const Coefficients& field) {
  std::vector<ObjectPtr> out;
  for (const auto& orbit : x->orbits()) out.push_back(orbit_regular_object(x, orbit, field));
  return out;
}

ObjectPtr direct_sum(std::span<const ObjectPtr> objects) {
  if (objects.empty()) throw InvalidInput("direct sum of an empty list");
  const SpacePtr& x = objects.front()->space_ptr();
  const auto& group = x->group();
  std::vector<std::size_t> dims(x->size(), 0);
  for (const auto& o : objects) {
    if (o->space_ptr().get() != x.get()) throw InvalidInput("direct sum over different spaces");
    for (PointIndex p = 0; p < x->size(); ++p) dims[p] += o->dim(p);
  }
  std::vector<std::vector<DenseMatrix>> rho(group.order());
  for (GroupElement g = 0; g < group.order(); ++g)
    for (PointIndex p = 0; p < x->size(); ++p) {
      const PointIndex q = x->act(group.inverse(g), p);
      DenseMatrix r(dims[q], dims[p]);
      std::size_t off = 0;
      for (const auto& o : objects) {
        const DenseMatrix& c = o->rho(g, p);
        for (std::size_t i = 0; i < c.rows(); ++i)
          for (std::size_t j = 0; j < c.cols(); ++j) r(off + i, off + j) = c(i, j);
        off += o->dim(p);
      }
      rho[g].push_back(std::move(r));
    }
  return std::make_shared<const ControlledObject>(x, std::move(dims), std::move(rho), objects.front()->field());
}

ObjectPtr induced_object(const SpacePtr& x, PointIndex base, const Coefficients& field) {
  const auto& group = x->group();
  // basis of M(y): the group elements h with h.base = y, in element order
  std::vector<std::vector<GroupElement>> fibre(x->size());
  for (GroupElement h = 0; h < group.order(); ++h) fibre[x->act(h, base)].push_back(h);
  std::vector<std::size_t> dims(x->size());
  for (PointIndex p = 0; p < x->size(); ++p) dims[p] = fibre[p].size();
  auto position = [&](PointIndex y, GroupElement h) {
    return static_cast<std::size_t>(std::lower_bound(fibre[y].begin(), fibre[y].end(), h) - fibre[y].begin());
  };
  std::vector<std::vector<DenseMatrix>> rho(group.order());
  for (GroupElement g = 0; g < group.order(); ++g) {
    const GroupElement ginv = group.inverse(g);
    for (PointIndex y = 0; y < x->size(); ++y) {
      const PointIndex gy = x->act(ginv, y);
      DenseMatrix r(dims[gy], dims[y]);
      for (std::size_t j = 0; j < fibre[y].size(); ++j) r(position(gy, group.multiply(ginv, fibre[y][j])), j) = 1;
      rho[g].push_back(std::move(r));
    }
  }
  return std::make_shared<const ControlledObject>(x, std::move(dims), std::move(rho), field);
}

std::vector<ObjectPtr> generating_objects(const SpacePtr& x, const Coefficients& field) {
  std::vector<ObjectPtr> out;
  for (const auto& orbit : x->orbits()) out.push_back(induced_object(x, *orbit.begin(), field));
  return out;
}

ObjectPtr generator(const SpacePtr& x, const Coefficients& field) {
  const auto objs = generating_objects(x, field);
  if (objs.empty()) {
    std::vector<std::vector<DenseMatrix>> rho(x->group().order());
    return std::make_shared<const ControlledObject>(x, std::vector<std::size_t>{}, std::move(rho), field);
  }
  return direct_sum(objs);
}

FiniteAlgebra endomorphism_algebra(const ObjectPtr& p) {
  const HomSpace end(p, p);
  FiniteAlgebra alg;
  alg.field = p->field();
  alg.dim = end.dim();
  for (std::size_t a = 0; a < alg.dim; ++a) alg.labels.push_back("e" + std::to_string(a));
  alg.structure.assign(alg.dim * alg.dim * alg.dim, Scalar(0));
  for (std::size_t a = 0; a < alg.dim; ++a)
    for (std::size_t b = 0; b < alg.dim; ++b) {
      const auto c = end.coordinates(compose(end.basis()[a], end.basis()[b]));
      for (std::size_t k = 0; k < alg.dim; ++k) alg.structure[(a * alg.dim + b) * alg.dim + k] = c[k];
    }
  alg.unit = end.coordinates(ControlledMorphism::identity(p));
  return alg;
}

ControlledCategory build_category(std::vector<ObjectPtr> objects) {
  ControlledCategory cat;
  cat.objects = std::move(objects);
  const std::size_t m = cat.objects.size();
  const Coefficients field = m == 0 ? Coefficients::rationals() : cat.objects.front()->field();
  cat.homs.resize(m);
  std::vector<std::vector<std::size_t>> dims(m, std::vector<std::size_t>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      cat.homs[i].emplace_back(cat.objects[j], cat.objects[i]);
      dims[i][j] = cat.homs[i][j].dim();
    }
  cat.linear = LinearCategory(field, dims);
  auto to_sparse = [](const std::vector<Scalar>& v) {
    SparseCoords s;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0) s.emplace_back(static_cast<Index>(k), v[k]);
    return s;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t a = 0; a < dims[i][j]; ++a)
          for (std::size_t b = 0; b < dims[j][k]; ++b) {
            const auto c = compose(cat.homs[i][j].basis()[a], cat.homs[j][k].basis()[b]);
            cat.linear.set_compose(i, j, k, a, b, to_sparse(cat.homs[i][k].coordinates(c)));
          }
  for (std::size_t i = 0; i < m; ++i)
    cat.linear.set_identity(i, to_sparse(cat.homs[i][i].coordinates(ControlledMorphism::identity(cat.objects[i]))));
  return cat;
}

// --- pushforward ------------------------------------------------------------

namespace {

// Position of each source point inside the fibre of its image.
std::vector<std::size_t> fibre_offsets(const SpaceMap& f, const ControlledObject& m) {
  std::vector<std::size_t> off(f.source->size(), 0);
  std::vector<std::size_t> fill(f.target->size(), 0);
  for (PointIndex p = 0; p < f.source->size(); ++p) {
    off[p] = fill[f(p)];
    fill[f(p)] += m.dim(p);
  }
  return off;
}

}  // namespace

ObjectPtr pushforward(const SpaceMap& f, const ObjectPtr& m) {
  if (m->space_ptr().get() != f.source.get()) throw InvalidInput("object does not live on the map's source");
  const auto check = is_morphism(f);
  if (!check.ok) throw InvalidInput("pushforward along an invalid map: " + check.violations.front());
  const auto& x = *f.source;
  const auto& y = *f.target;
  const auto& group = y.group();
  std::vector<std::size_t> dims(y.size(), 0);
  for (PointIndex p = 0; p < x.size(); ++p) dims[f(p)] += m->dim(p);
  const auto off = fibre_offsets(f, *m);
  std::vector<std::vector<DenseMatrix>> rho(group.order());
  for (GroupElement g = 0; g < group.order(); ++g) {
    for (PointIndex q = 0; q < y.size(); ++q) rho[g].emplace_back(dims[y.act(group.inverse(g), q)], dims[q]);
    for (PointIndex p = 0; p < x.size(); ++p) {
      const PointIndex gp = x.act(group.inverse(g), p);
      const DenseMatrix& c = m->rho(g, p);
      DenseMatrix& r = rho[g][f(p)];
      for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) r(off[gp] + i, off[p] + j) = c(i, j);
    }
  }
  return std::make_shared<const ControlledObject>(f.target, std::move(dims), std::move(rho), m->field());
}

ControlledMorphism pushforward(const SpaceMap& f, const ControlledMorphism& a, const ObjectPtr& source,
                               const ObjectPtr& target) {
  if (a.source()->space_ptr().get() != f.source.get()) throw InvalidInput("morphism does not live on the map's source");
  if (source->space_ptr().get() != f.target.get() || target->space_ptr().get() != f.target.get())
    throw InvalidInput("pushforward objects must live on the map's target");
  const auto src_off = fibre_offsets(f, *a.source());
  const auto tgt_off = fibre_offsets(f, *a.target());
  ControlledMorphism::Blocks out;
  for (const auto& [key, block] : a.blocks()) {
    const auto [p, q] = key;
    const ControlledMorphism::BlockKey k{f(p), f(q)};
    auto it = out.find(k);
    if (it == out.end()) it = out.emplace(k, DenseMatrix(target->dim(f(q)), source->dim(f(p)))).first;
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j) it->second(tgt_off[q] + i, src_off[p] + j) += block(i, j);
  }
  return ControlledMorphism(ControlledMorphism::Unchecked{}, source, target, std::move(out));
}

void require_good_characteristic(const GBornCoarseSpace& x, const Coefficients& field) {
  if (!field.is_field()) throw DomainError("field required");
  if (x.group().order() > 1 && !field.divides_not(static_cast<std::int64_t>(x.group().order())))
    throw DomainError("characteristic " + std::to_string(field.characteristic()) + " divides |G| = " +
                      std::to_string(x.group().order()) + "; the generating objects are not claimed to generate");
}

}  // namespace coarsehh
