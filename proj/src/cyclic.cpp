#include "coarsehh/cyclic.hpp"
#include "coarsehh/error.hpp"

#include <algorithm>

namespace coarsehh {

namespace {

using Combination = std::vector<std::pair<NerveCell, Scalar>>;

Matrix reduce(const Matrix& m, const Coefficients& k) { return m.reduced(k); }

bool same(const Matrix& a, const Matrix& b, const Coefficients& k) { return reduce(a, k) == reduce(b, k); }

Matrix power(const Matrix& t, int e, const Coefficients& k) {
  Matrix r = Matrix::identity(t.cols());
  for (int i = 0; i < e; ++i) r = reduce(t * r, k);
  return r;
}

std::string deg(int n) { return " in degree " + std::to_string(n); }

}  // namespace

std::size_t CyclicModule::tuple_offset(int n, const std::vector<std::uint32_t>& objects) const {
  std::size_t code = 0;
  const std::size_t m = cat_.object_count();
  for (auto o : objects) code = code * m + o;
  return tuple_offsets_[n][code];
}

Index CyclicModule::index_of(const NerveCell& c) const {
  const int n = static_cast<int>(c.objects.size()) - 1;
  if (n < 0 || n > max_degree_ || c.morphisms.size() != c.objects.size())
    throw InvalidInput("nerve cell of the wrong length");
  const std::size_t m = cat_.object_count();
  for (auto o : c.objects)
    if (o >= m) throw InvalidInput("nerve cell references an unknown object");
  std::size_t local = 0;
  for (int i = 0; i <= n; ++i) {
    const std::size_t radix = cat_.hom_dim(c.objects[i], c.objects[(i + 1) % (n + 1)]);
    if (c.morphisms[i] >= radix) throw InvalidInput("nerve cell references an unknown morphism");
    local = local * radix + c.morphisms[i];
  }
  return static_cast<Index>(tuple_offset(n, c.objects) + local);
}

NerveCell CyclicModule::cell(int n, Index idx) const {
  if (n < 0 || n > max_degree_ || idx >= dims_[n]) throw InvalidInput("nerve index out of range");
  const auto& offs = tuple_offsets_[n];
  // Last tuple code whose offset is <= idx and which is nonempty.
  std::size_t code = offs.size();
  {
    std::size_t lo = 0, hi = offs.size();
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (offs[mid] <= idx) lo = mid + 1;
      else hi = mid;
    }
    code = lo - 1;
  }
  const std::size_t m = cat_.object_count();
  NerveCell c;
  c.objects.assign(n + 1, 0);
  c.morphisms.assign(n + 1, 0);
  // Empty tuples share the offset of the next one; walk back to a tuple
  // that actually has idx inside it.
  for (;;) {
    std::size_t rest = code;
    for (int i = n; i >= 0; --i) {
      c.objects[i] = static_cast<std::uint32_t>(rest % m);
      rest /= m;
    }
    std::size_t count = 1;
    for (int i = 0; i <= n; ++i) count *= cat_.hom_dim(c.objects[i], c.objects[(i + 1) % (n + 1)]);
    if (count > 0 && idx < offs[code] + count) break;
    --code;
  }
  std::size_t local = idx - offs[code];
  for (int i = n; i >= 0; --i) {
    const std::size_t radix = cat_.hom_dim(c.objects[i], c.objects[(i + 1) % (n + 1)]);
    c.morphisms[i] = static_cast<std::uint32_t>(local % radix);
    local /= radix;
  }
  return c;
}

CyclicModule CyclicModule::from_algebra(const FiniteAlgebra& e, int max_degree, std::size_t cap) {
  return from_category(e.as_category(), max_degree, cap);
}

CyclicModule CyclicModule::from_category(const LinearCategory& cat, int max_degree, std::size_t cap) {
  if (max_degree < 0) throw InvalidInput("max degree must be nonnegative");
  CyclicModule cm;
  cm.cat_ = cat;
  cm.max_degree_ = max_degree;
  const std::size_t m = cat.object_count();
  const Coefficients& k = cat.field();

  for (int n = 0; n <= max_degree; ++n) {
    std::size_t codes = 1;
    for (int i = 0; i <= n; ++i) {
      codes *= std::max<std::size_t>(m, 1);
      if (codes > 50 * cap) throw GuardExceeded("nerve object tuples exceed the size guard" + deg(n));
    }
    if (m == 0) codes = 0;
    std::vector<std::size_t> offs(codes + 1, 0);
    std::vector<std::uint32_t> obj(n + 1, 0);
    std::size_t total = 0;
    for (std::size_t code = 0; code < codes; ++code) {
      std::size_t rest = code;
      for (int i = n; i >= 0; --i) {
        obj[i] = static_cast<std::uint32_t>(rest % m);
        rest /= m;
      }
      std::size_t count = 1;
      for (int i = 0; i <= n; ++i) count *= cat.hom_dim(obj[i], obj[(i + 1) % (n + 1)]);
      offs[code] = total;
      total += count;
      if (total > cap)
        throw GuardExceeded("nerve has more than " + std::to_string(cap) + " basis elements" + deg(n));
    }
    offs[codes] = total;
    cm.tuple_offsets_.push_back(std::move(offs));
    cm.dims_.push_back(total);
  }

  auto build = [&](int n, int target_degree, auto&& image) {
    Matrix out(cm.dims_[target_degree], cm.dims_[n]);
    for (Index j = 0; j < cm.dims_[n]; ++j) {
      const NerveCell c = cm.cell(n, j);
      std::vector<Entry> col;
      for (auto& [cell, coeff] : image(c)) col.push_back({cm.index_of(cell), k.normalize(coeff)});
      out.set_column(j, std::move(col));
    }
    return out;
  };

  cm.faces_.resize(max_degree + 1);
  cm.degeneracies_.resize(max_degree + 1);
  for (int n = 0; n <= max_degree; ++n) {
    const std::size_t len = n + 1;
    if (n >= 1)
      for (int i = 0; i <= n; ++i)
        cm.faces_[n].push_back(build(n, n - 1, [&](const NerveCell& c) {
          Combination out;
          if (i < n) {
            const auto ci = c.objects[i], cj = c.objects[i + 1], ck = c.objects[(i + 2) % len];
            for (const auto& [r, v] : cat.compose(ci, cj, ck, c.morphisms[i], c.morphisms[i + 1])) {
              NerveCell d = c;
              d.objects.erase(d.objects.begin() + i + 1);
              d.morphisms.erase(d.morphisms.begin() + i + 1);
              d.morphisms[i] = r;
              out.emplace_back(std::move(d), v);
            }
          } else {
            const auto ci = c.objects[n], cj = c.objects[0], ck = c.objects[1];
            for (const auto& [r, v] : cat.compose(ci, cj, ck, c.morphisms[n], c.morphisms[0])) {
              NerveCell d;
              d.objects.push_back(c.objects[n]);
              d.morphisms.push_back(r);
              for (int q = 1; q < n; ++q) {
                d.objects.push_back(c.objects[q]);
                d.morphisms.push_back(c.morphisms[q]);
              }
              out.emplace_back(std::move(d), v);
            }
          }
          return out;
        }));
    if (n < max_degree) {
      for (int i = 0; i <= n; ++i)
        cm.degeneracies_[n].push_back(build(n, n + 1, [&](const NerveCell& c) {
          Combination out;
          const auto obj = c.objects[(i + 1) % len];
          for (const auto& [r, v] : cat.identity(obj)) {
            NerveCell d = c;
            d.objects.insert(d.objects.begin() + i + 1, obj);
            d.morphisms.insert(d.morphisms.begin() + i + 1, r);
            out.emplace_back(std::move(d), v);
          }
          return out;
        }));
      cm.extra_.push_back(build(n, n + 1, [&](const NerveCell& c) {
        Combination out;
        for (const auto& [r, v] : cat.identity(c.objects[0])) {
          NerveCell d = c;
          d.objects.insert(d.objects.begin(), c.objects[0]);
          d.morphisms.insert(d.morphisms.begin(), r);
          out.emplace_back(std::move(d), v);
        }
        return out;
      }));
    }
    cm.cyclic_.push_back(build(n, n, [&](const NerveCell& c) {
      NerveCell d = c;
      std::rotate(d.objects.rbegin(), d.objects.rbegin() + 1, d.objects.rend());
      std::rotate(d.morphisms.rbegin(), d.morphisms.rbegin() + 1, d.morphisms.rend());
      return Combination{{std::move(d), Scalar(n % 2 == 0 ? 1 : -1)}};
    }));
  }
  return cm;
}

std::string CyclicModule::verify() const {
  const Coefficients& k = field();
  const int top = max_degree_;
  for (int n = 0; n <= top; ++n) {
    const Matrix& t = cyclic_[n];
    if (!same(power(t, n + 1, k), Matrix::identity(dims_[n]), k)) return "t^(n+1) != 1" + deg(n);
    if (n >= 2)
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          if (!same(faces_[n - 1][i] * faces_[n][j], faces_[n - 1][j - 1] * faces_[n][i], k))
            return "d_" + std::to_string(i) + " d_" + std::to_string(j) + " != d_" + std::to_string(j - 1) + " d_" +
                   std::to_string(i) + deg(n);
    if (n >= 1) {
      for (int i = 1; i <= n; ++i)
        if (!same(faces_[n][i] * t, (cyclic_[n - 1] * faces_[n][i - 1]).scaled(-1), k))
          return "d_i t != -t d_(i-1) for i = " + std::to_string(i) + deg(n);
      const Matrix rhs = n % 2 == 0 ? faces_[n][n] : faces_[n][n].scaled(-1);
      if (!same(faces_[n][0] * t, rhs, k)) return "d_0 t != (-1)^n d_n" + deg(n);
    }
    if (n + 1 <= top) {
      const Matrix& t1 = cyclic_[n + 1];
      for (int i = 1; i <= n; ++i)
        if (!same(degeneracies_[n][i] * t, (t1 * degeneracies_[n][i - 1]).scaled(-1), k))
          return "s_i t != -t s_(i-1) for i = " + std::to_string(i) + deg(n);
      const Matrix rhs = t1 * t1 * degeneracies_[n][n];
      if (!same(degeneracies_[n][0] * t, n % 2 == 0 ? rhs : rhs.scaled(-1), k))
        return "s_0 t != (-1)^n t^2 s_n" + deg(n);
      const Matrix s = t1 * degeneracies_[n][n];
      if (!same(extra_[n], (n + 1) % 2 == 0 ? s : s.scaled(-1), k))
        return "extra degeneracy != (-1)^(n+1) t s_n" + deg(n);
      for (int i = 0; i <= n + 1; ++i)
        for (int j = 0; j <= n; ++j) {
          const Matrix lhs = faces_[n + 1][i] * degeneracies_[n][j];
          Matrix expect;
          if (i == j || i == j + 1) expect = Matrix::identity(dims_[n]);
          else if (i < j) expect = degeneracies_[n - 1][j - 1] * faces_[n][i];
          else expect = degeneracies_[n - 1][j] * faces_[n][i - 1];
          if (!same(lhs, expect, k))
            return "d_" + std::to_string(i) + " s_" + std::to_string(j) + " identity fails" + deg(n);
        }
    }
    if (n + 2 <= top)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= j; ++i)
          if (!same(degeneracies_[n + 1][i] * degeneracies_[n][j], degeneracies_[n + 1][j + 1] * degeneracies_[n][i],
                    k))
            return "s_" + std::to_string(i) + " s_" + std::to_string(j) + " identity fails" + deg(n);
  }
  return {};
}

// --- mixed complexes --------------------------------------------------------

std::string ChainComplex::verify() const {
  for (int n = 2; n <= top(); ++n)
    if (!reduce(d[n - 1] * d[n], coeffs).is_zero()) return "d^2 != 0" + deg(n);
  return {};
}

HomologyResult ChainComplex::homology(int n) const {
  if (n < 0 || n + 1 > top()) throw InvalidInput("homology degree " + std::to_string(n) + " out of range");
  return homology_at(d[n], d[n + 1], coeffs, n);
}

std::string MixedComplex::verify() const {
  const int t = top();
  for (int n = 0; n <= t; ++n) {
    if (n >= 2 && !reduce(b[n - 1] * b[n], coeffs).is_zero()) return "b^2 != 0" + deg(n);
    if (n + 2 <= t && !reduce(B[n + 1] * B[n], coeffs).is_zero()) return "B^2 != 0" + deg(n);
    if (n + 1 <= t) {
      Matrix s = b[n + 1] * B[n];
      if (n >= 1) s = s + B[n - 1] * b[n];
      if (!reduce(s, coeffs).is_zero()) return "bB + Bb != 0" + deg(n);
    }
  }
  return {};
}

MixedComplex to_mixed(const CyclicModule& m) {
  const Coefficients& k = m.field();
  MixedComplex c;
  c.coeffs = k;
  const int top = m.max_degree();
  for (int n = 0; n <= top; ++n) {
    c.dims.push_back(m.dim(n));
    Matrix bn(n == 0 ? 0 : m.dim(n - 1), m.dim(n));
    if (n >= 1)
      for (int i = 0; i <= n; ++i) bn = bn + (i % 2 == 0 ? m.face(n, i) : m.face(n, i).scaled(-1));
    c.b.push_back(reduce(bn, k));
  }
  for (int n = 0; n < top; ++n) {
    const Matrix& t = m.cyclic_operator(n);
    Matrix norm(m.dim(n), m.dim(n));
    Matrix ti = Matrix::identity(m.dim(n));
    for (int i = 0; i <= n; ++i) {
      norm = norm + ti;
      ti = reduce(t * ti, k);
    }
    const Matrix one_minus_t = Matrix::identity(m.dim(n + 1)) - m.cyclic_operator(n + 1);
    c.B.push_back(reduce(one_minus_t * (m.extra_degeneracy(n) * reduce(norm, k)), k));
  }
  const std::string failure = c.verify();
  if (!failure.empty()) throw IdentityViolation("mixed complex identities fail: " + failure);
  return c;
}

std::size_t tot_component_offset(const MixedComplex& c, int n, int k) {
  std::size_t off = 0;
  for (int i = 0; i < k; ++i) off += c.dims[n - 2 * i];
  return off;
}

ChainComplex tot_B(const MixedComplex& c) {
  ChainComplex out;
  out.coeffs = c.coeffs;
  const int top = c.top();
  for (int n = 0; n <= top; ++n) {
    std::size_t dim = 0;
    for (int k = 0; 2 * k <= n; ++k) dim += c.dims[n - 2 * k];
    out.dims.push_back(dim);
  }
  for (int n = 0; n <= top; ++n) {
    Matrix d(n == 0 ? 0 : out.dims[n - 1], out.dims[n]);
    if (n >= 1)
      for (int k = 0; 2 * k <= n; ++k) {
        const std::size_t col = tot_component_offset(c, n, k);
        const int deg_n = n - 2 * k;
        if (deg_n >= 1) d.add_block(c.b[deg_n], tot_component_offset(c, n - 1, k), col);
        if (k >= 1) d.add_block(c.B[deg_n], tot_component_offset(c, n - 1, k - 1), col);
      }
    out.d.push_back(std::move(d));
  }
  const std::string failure = out.verify();
  if (!failure.empty()) throw IdentityViolation("total complex: " + failure);
  return out;
}

ChainComplex hochschild_complex(const MixedComplex& c) {
  ChainComplex out;
  out.coeffs = c.coeffs;
  out.dims = c.dims;
  out.d = c.b;
  return out;
}

HomologyResult hh(const MixedComplex& c, int n) { return hochschild_complex(c).homology(n); }

HomologyResult hc(const MixedComplex& c, int n) { return tot_B(c).homology(n); }

}  // namespace coarsehh
