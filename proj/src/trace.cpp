#include "coarsehh/trace.hpp"
#include "coarsehh/error.hpp"

#include <functional>

namespace coarsehh {

TraceContext::TraceContext(SpacePtr x, std::vector<ObjectPtr> objects, Coefficients field, int max_degree,
                           std::size_t cap)
    : space_(std::move(x)), field_(field), max_degree_(max_degree) {
  for (const auto& o : objects)
    if (o->space_ptr().get() != space_.get() || !(o->field() == field_))
      throw InvalidInput("trace context objects must live on its space over its field");
  nerve_ = nerve_of_objects(std::move(objects), max_degree, cap);
  chains_ = coarse_chain_complex(space_, max_degree, field_, true, cap);
}

TraceContext TraceContext::generating(const SpacePtr& x, const Coefficients& field, int max_degree,
                                         std::size_t cap) {
  require_good_characteristic(*x, field);
  return TraceContext(x, generating_objects(x, field), field, max_degree, cap);
}

ControlledChain phi_elementary(std::span<const ControlledMorphism> tensor) {
  if (tensor.empty()) throw InvalidInput("empty tensor");
  const int n = static_cast<int>(tensor.size()) - 1;
  const auto& space = tensor.front().source()->space_ptr();
  const Coefficients& k = tensor.front().source()->field();
  for (int i = 0; i <= n; ++i) {
    const auto& next = tensor[(i + 1) % (n + 1)];
    if (!(*tensor[i].source() == *next.target())) throw InvalidInput("tensor factors are not cyclically composable");
  }
  ControlledChain out{space, n, k, {}};

  // by_target[i][y]: blocks of A_i landing in y, as (x, block).
  std::vector<std::map<PointIndex, std::vector<std::pair<PointIndex, const DenseMatrix*>>>> by_target(n + 1);
  for (int i = 0; i <= n; ++i)
    for (const auto& [key, block] : tensor[i].blocks()) by_target[i][key.second].emplace_back(key.first, &block);

  Tuple tuple(n + 1);
  auto record = [&](const Scalar& tr) {
    const Scalar v = k.normalize(tr);
    if (v == 0) return;
    Scalar& slot = out.terms[tuple];
    slot = k.normalize(slot + v);
    if (slot == 0) out.terms.erase(tuple);
  };

  if (n == 0) {
    for (const auto& [key, block] : tensor[0].blocks())
      if (key.first == key.second) {
        tuple[0] = key.first;
        record(block.trace());
      }
    return out;
  }

  // Walk A_1, ..., A_n backwards through the points, closing the loop at x_n.
  std::function<void(int, const DenseMatrix&)> walk = [&](int i, const DenseMatrix& acc) {
    const PointIndex prev = tuple[i - 1];
    const auto it = by_target[i].find(prev);
    if (it == by_target[i].end()) return;
    for (const auto& [x, block] : it->second) {
      if (i == n && x != tuple[n]) continue;
      if (i < n) tuple[i] = x;
      const DenseMatrix next = acc * *block;
      if (i == n) record(next.trace());
      else walk(i + 1, next);
    }
  };
  for (const auto& [key, block] : tensor[0].blocks()) {
    tuple[0] = key.first;
    tuple[n] = key.second;
    walk(1, block);
  }
  return out;
}

ControlledChain TraceContext::phi_cell(int n, Index idx) const {
  const NerveCell c = nerve_.module.cell(n, idx);
  std::vector<ControlledMorphism> tensor;
  for (int i = 0; i <= n; ++i)
    tensor.push_back(basis_morphism(c.objects[i], c.objects[(i + 1) % (n + 1)], c.morphisms[i]));
  return phi_elementary(tensor);
}

ControlledChain TraceContext::phi(int n, const std::vector<Scalar>& element) const {
  if (n < 0 || n > max_degree_) throw InvalidInput("trace degree out of range");
  if (element.size() != nerve_.module.dim(n)) throw InvalidInput("nerve element has the wrong length");
  ControlledChain out{space_, n, field_, {}};
  for (Index j = 0; j < element.size(); ++j) {
    if (field_.normalize(element[j]) == 0) continue;
    for (const auto& [t, v] : phi_cell(n, j).terms) {
      Scalar& slot = out.terms[t];
      slot = field_.normalize(slot + v * element[j]);
      if (slot == 0) out.terms.erase(t);
    }
  }
  return out;
}

Matrix TraceContext::phi_matrix(int n) const {
  if (n < 0 || n > max_degree_) throw InvalidInput("trace degree out of range");
  const ChainBasis& basis = chains_.bases[n];
  Matrix m(basis.size(), nerve_.module.dim(n));
  for (Index j = 0; j < nerve_.module.dim(n); ++j) {
    std::vector<Entry> col;
    for (const auto& [t, v] : phi_cell(n, j).terms) {
      const auto code = basis.encode(t);
      if (basis.is_representative(code)) col.push_back({*basis.orbit_of(code), v});
    }
    m.set_column(j, std::move(col));
  }
  return m.reduced(field_);
}

Matrix TraceContext::tot_phi_matrix(int n) const {
  std::size_t rows = 0, cols = 0;
  for (int k = 0; 2 * k <= n; ++k) {
    rows += chains_.complex.dims[n - 2 * k];
    cols += nerve_.module.dim(n - 2 * k);
  }
  Matrix m(rows, cols);
  std::size_t r = 0, c = 0;
  for (int k = 0; 2 * k <= n; ++k) {
    m.add_block(phi_matrix(n - 2 * k), r, c);
    r += chains_.complex.dims[n - 2 * k];
    c += nerve_.module.dim(n - 2 * k);
  }
  return m;
}

ChainComplex TraceContext::chain_tot() const {
  MixedComplex zero;
  zero.coeffs = field_;
  zero.dims = chains_.complex.dims;
  zero.b = chains_.complex.d;
  for (int n = 0; n < max_degree_; ++n) zero.B.emplace_back(zero.dims[n + 1], zero.dims[n]);
  return tot_B(zero);
}

std::vector<Scalar> iota(const TraceContext& ctx, int n, const Scalar& c) {
  const auto& x = ctx.space();
  if (x->size() != 1 || x->group().order() != 1 || ctx.objects().size() != 1 || ctx.objects()[0]->dim(0) != 1)
    throw InvalidInput("the point section needs the rank-one object on the trivial-group point");
  if (n < 0 || n > ctx.max_degree()) throw InvalidInput("degree out of range");
  const DenseMatrix* b = ctx.basis_morphism(0, 0, 0).block(0, 0);
  const Scalar v = (*b)(0, 0);
  const Coefficients& k = ctx.field();
  Scalar coord = k.mul(c, k.inv(v));
  for (int i = 0; i < n; ++i) coord = k.mul(coord, k.inv(v));
  std::vector<Scalar> out(ctx.nerve().module.dim(n));
  out[ctx.nerve().module.index_of(NerveCell{std::vector<std::uint32_t>(n + 1, 0), std::vector<std::uint32_t>(n + 1, 0)})] =
      coord;
  return out;
}

DennisClass dennis_trace_k0(const TraceContext& ctx, const ObjectPtr& m) {
  if (m->space_ptr().get() != ctx.space().get()) throw InvalidInput("object does not live on the context space");
  const auto& objs = ctx.objects();
  DennisClass out;
  std::vector<std::size_t> remaining = m->dims();
  std::vector<ObjectPtr> summands;
  for (const auto& o : objs) {
    std::size_t mult = 0;
    PointIndex first = 0;
    while (first < o->dims().size() && o->dim(first) == 0) ++first;
    if (first < o->dims().size()) mult = remaining[first] / o->dim(first);
    for (PointIndex p = 0; p < remaining.size(); ++p) {
      if (remaining[p] < mult * o->dim(p)) throw InvalidInput("object is not a direct sum of the context objects");
      remaining[p] -= mult * o->dim(p);
    }
    for (std::size_t r = 0; r < mult; ++r) summands.push_back(o);
    out.multiplicities.push_back(mult);
  }
  for (auto r : remaining)
    if (r != 0) throw InvalidInput("object is not a direct sum of the context objects");
  if (!summands.empty() && !(*direct_sum(summands) == *m))
    throw InvalidInput("object is not the direct sum of the context objects in context order");

  const auto& module = ctx.nerve().module;
  out.hochschild.assign(module.dim(0), Scalar(0));
  const auto& cat = ctx.nerve().category.linear;
  for (std::size_t i = 0; i < objs.size(); ++i)
    for (const auto& [a, v] : cat.identity(i)) {
      const Index idx = module.index_of(NerveCell{{static_cast<std::uint32_t>(i)}, {a}});
      out.hochschild[idx] = ctx.field().normalize(out.hochschild[idx] + v * Scalar(out.multiplicities[i]));
    }
  out.chain = ctx.phi(0, out.hochschild);
  return out;
}

namespace {

using Coords = std::vector<std::pair<Index, Scalar>>;

}  // namespace

std::vector<std::size_t> inclusion_object_map(const ControlledNerve& src, const ControlledNerve& tgt,
                                              const SpaceMap& f) {
  std::vector<std::size_t> map;
  for (const auto& o : src.category.objects) {
    const ObjectPtr pushed = pushforward(f, o);
    std::size_t found = tgt.category.objects.size();
    for (std::size_t j = 0; j < tgt.category.objects.size(); ++j)
      if (*tgt.category.objects[j] == *pushed) {
        found = j;
        break;
      }
    if (found == tgt.category.objects.size()) throw InvalidInput("pushforward of a source object is not a target object");
    map.push_back(found);
  }
  return map;
}

Matrix nerve_map_matrix(const ControlledNerve& src, const ControlledNerve& tgt, const SpaceMap& f,
                        const std::vector<std::size_t>& object_map, int n) {
  const auto& so = src.category.objects;
  const auto& to = tgt.category.objects;
  if (object_map.size() != so.size()) throw InvalidInput("object map has the wrong length");
  for (std::size_t i = 0; i < so.size(); ++i)
    if (object_map[i] >= to.size() || !(*pushforward(f, so[i]) == *to[object_map[i]]))
      throw InvalidInput("object map does not match the pushforward");
  const Coefficients& k = tgt.module.field();

  // images[i][j][a]: coordinates of f_* of basis a of Hom(j -> i).
  std::vector<std::vector<std::vector<Coords>>> images(so.size(), std::vector<std::vector<Coords>>(so.size()));
  for (std::size_t i = 0; i < so.size(); ++i)
    for (std::size_t j = 0; j < so.size(); ++j) {
      const auto& ti = to[object_map[i]];
      const auto& tj = to[object_map[j]];
      const HomSpace& target_hom = tgt.category.homs[object_map[i]][object_map[j]];
      for (const auto& m : src.category.homs[i][j].basis()) {
        const auto coords = target_hom.coordinates(pushforward(f, m, tj, ti));
        Coords sparse;
        for (Index a = 0; a < coords.size(); ++a)
          if (coords[a] != 0) sparse.emplace_back(a, coords[a]);
        images[i][j].push_back(std::move(sparse));
      }
    }

  Matrix out(tgt.module.dim(n), src.module.dim(n));
  for (Index col = 0; col < src.module.dim(n); ++col) {
    const NerveCell c = src.module.cell(n, col);
    NerveCell d;
    for (auto o : c.objects) d.objects.push_back(static_cast<std::uint32_t>(object_map[o]));
    d.morphisms.assign(n + 1, 0);
    std::vector<Entry> entries;
    std::function<void(int, const Scalar&)> expand = [&](int i, const Scalar& coeff) {
      if (i > n) {
        entries.push_back({tgt.module.index_of(d), coeff});
        return;
      }
      for (const auto& [a, v] : images[c.objects[i]][c.objects[(i + 1) % (n + 1)]][c.morphisms[i]]) {
        d.morphisms[i] = a;
        expand(i + 1, coeff * v);
      }
    };
    expand(0, Scalar(1));
    out.set_column(col, std::move(entries));
  }
  return out.reduced(k);
}

Matrix nerve_map_matrix(const TraceContext& src, const TraceContext& tgt, const SpaceMap& f,
                        const std::vector<std::size_t>& object_map, int n) {
  return nerve_map_matrix(src.nerve(), tgt.nerve(), f, object_map, n);
}

}  // namespace coarsehh
