#include "coarsehh/harness/oracles.hpp"
#include "coarsehh/error.hpp"

namespace coarsehh::oracle {

namespace {

struct Bar {
  std::size_t g = 0;
  std::uint32_t unit = 0;
  std::vector<std::size_t> dims;
  std::vector<Matrix> b;  // b[n] : C_n -> C_{n-1}
  std::vector<Matrix> B;  // B[n] : C_n -> C_{n+1}
};

std::vector<std::uint32_t> digits(std::size_t code, int n, std::size_t g) {
  std::vector<std::uint32_t> t(n + 1);
  for (int i = n; i >= 0; --i) {
    t[i] = static_cast<std::uint32_t>(code % g);
    code /= g;
  }
  return t;
}

std::size_t code_of(const std::vector<std::uint32_t>& t, std::size_t g) {
  std::size_t c = 0;
  for (auto x : t) c = c * g + x;
  return c;
}

Bar bar_complex(const GroupTable& table, int top, const Coefficients& k, bool with_connes) {
  Bar bar;
  bar.g = table.size();
  if (bar.g == 0) throw InvalidInput("empty group table");
  if (!k.is_field()) throw DomainError("field required");
  if (!k.divides_not(static_cast<std::int64_t>(bar.g))) throw DomainError("characteristic divides the group order");
  // Identity: the element e with e*x = x for all x.
  bool found = false;
  for (std::uint32_t e = 0; e < bar.g && !found; ++e) {
    bool ok = true;
    for (std::uint32_t x = 0; x < bar.g; ++x) ok = ok && table[e][x] == x && table[x][e] == x;
    if (ok) {
      bar.unit = e;
      found = true;
    }
  }
  if (!found) throw InvalidInput("group table has no identity");

  std::size_t dim = bar.g;
  for (int n = 0; n <= top; ++n) {
    bar.dims.push_back(dim);
    dim *= bar.g;
  }
  auto signed_entry = [](std::size_t row, int sign) { return Entry{static_cast<Index>(row), Scalar(sign)}; };

  for (int n = 0; n <= top; ++n) {
    Matrix d(n == 0 ? 0 : bar.dims[n - 1], bar.dims[n]);
    if (n >= 1)
      for (std::size_t c = 0; c < bar.dims[n]; ++c) {
        const auto t = digits(c, n, bar.g);
        std::vector<Entry> col;
        for (int i = 0; i < n; ++i) {
          auto f = t;
          f[i] = table[t[i]][t[i + 1]];
          f.erase(f.begin() + i + 1);
          col.push_back(signed_entry(code_of(f, bar.g), i % 2 == 0 ? 1 : -1));
        }
        std::vector<std::uint32_t> last(t.begin(), t.end() - 1);
        last[0] = table[t[n]][t[0]];
        col.push_back(signed_entry(code_of(last, bar.g), n % 2 == 0 ? 1 : -1));
        d.set_column(c, std::move(col));
      }
    bar.b.push_back(d.reduced(k));
  }

  if (with_connes)
    for (int n = 0; n < top; ++n) {
      // B = (1 - t) s N on tuples: N sums signed rotations, s prepends the
      // unit, t rotates the last entry to the front with sign (-1)^(n+1).
      Matrix m(bar.dims[n + 1], bar.dims[n]);
      for (std::size_t c = 0; c < bar.dims[n]; ++c) {
        const auto t = digits(c, n, bar.g);
        std::vector<Entry> col;
        for (int r = 0; r <= n; ++r) {
          // t^r (g_0..g_n) = (-1)^{n r} (g_{n-r+1} .. g_n, g_0 .. g_{n-r})
          std::vector<std::uint32_t> rot(n + 1);
          for (int i = 0; i <= n; ++i) rot[i] = t[(i - r + n + 1) % (n + 1)];
          const int sign = (n * r) % 2 == 0 ? 1 : -1;
          std::vector<std::uint32_t> lifted{bar.unit};
          lifted.insert(lifted.end(), rot.begin(), rot.end());
          col.push_back(signed_entry(code_of(lifted, bar.g), sign));
          std::vector<std::uint32_t> turned{lifted.back()};
          turned.insert(turned.end(), lifted.begin(), lifted.end() - 1);
          col.push_back(signed_entry(code_of(turned, bar.g), (n + 1) % 2 == 0 ? -sign : sign));
        }
        m.set_column(c, std::move(col));
      }
      bar.B.push_back(m.reduced(k));
    }
  return bar;
}

}  // namespace

std::vector<std::size_t> hh_group_algebra(const GroupTable& table, int top, const Coefficients& field) {
  const Bar bar = bar_complex(table, top, field, false);
  std::vector<std::size_t> out;
  for (int n = 0; n < top; ++n) out.push_back(homology_at(bar.b[n], bar.b[n + 1], field, n).betti);
  return out;
}

std::vector<std::size_t> hc_group_algebra(const GroupTable& table, int top, const Coefficients& field) {
  const Bar bar = bar_complex(table, top, field, true);
  // Tot_n = C_n ⊕ C_{n-2} ⊕ ...
  std::vector<std::size_t> tot_dims;
  auto offset = [&](int n, int k) {
    std::size_t off = 0;
    for (int i = 0; i < k; ++i) off += bar.dims[n - 2 * i];
    return off;
  };
  for (int n = 0; n <= top; ++n) tot_dims.push_back(offset(n, n / 2 + 1));
  std::vector<Matrix> d;
  for (int n = 0; n <= top; ++n) {
    Matrix m(n == 0 ? 0 : tot_dims[n - 1], tot_dims[n]);
    if (n >= 1)
      for (int k = 0; 2 * k <= n; ++k) {
        const int deg = n - 2 * k;
        if (deg >= 1) m.add_block(bar.b[deg], offset(n - 1, k), offset(n, k));
        if (k >= 1) m.add_block(bar.B[deg], offset(n - 1, k - 1), offset(n, k));
      }
    d.push_back(m);
  }
  std::vector<std::size_t> out;
  for (int n = 0; n < top; ++n) out.push_back(homology_at(d[n], d[n + 1], field, n).betti);
  return out;
}

std::size_t commutator_hh0(const FiniteAlgebra& e) {
  Matrix span(e.dim, e.dim * e.dim);
  for (std::size_t a = 0; a < e.dim; ++a)
    for (std::size_t b = 0; b < e.dim; ++b) {
      std::vector<Entry> col;
      for (std::size_t c = 0; c < e.dim; ++c) {
        const Scalar v = e.constant(a, b, c) - e.constant(b, a, c);
        if (v != 0) col.push_back({static_cast<Index>(c), v});
      }
      span.set_column(a * e.dim + b, std::move(col));
    }
  return e.dim - rank(span, e.field);
}

SimplexOracle contractible_simplex(std::size_t points, int top, const Coefficients& coeffs) {
  SimplexOracle out;
  if (points == 0) throw InvalidInput("the simplex oracle needs at least one point");
  std::vector<std::size_t> dims;
  std::size_t dim = points;
  for (int n = 0; n <= top + 1; ++n) {
    dims.push_back(dim);
    dim *= points;
  }
  // Boundaries and the cone homotopy with apex 0, on tuples coded base `points`.
  std::vector<Matrix> d(top + 2), h(top + 1);
  for (int n = 1; n <= top + 1; ++n) {
    d[n] = Matrix(dims[n - 1], dims[n]);
    for (std::size_t c = 0; c < dims[n]; ++c) {
      const auto t = digits(c, n, points);
      std::vector<Entry> col;
      for (int i = 0; i <= n; ++i) {
        auto f = t;
        f.erase(f.begin() + i);
        col.push_back({static_cast<Index>(code_of(f, points)), Scalar(i % 2 == 0 ? 1 : -1)});
      }
      d[n].set_column(c, std::move(col));
    }
  }
  for (int n = 0; n <= top; ++n) {
    h[n] = Matrix(dims[n + 1], dims[n]);
    for (std::size_t c = 0; c < dims[n]; ++c) h[n].set_column(c, {{static_cast<Index>(c), Scalar(1)}});
  }
  // degree 0: ∂h = 1 - ε where ε(x) = (apex)
  Matrix eps(dims[0], dims[0]);
  for (std::size_t c = 0; c < dims[0]; ++c) eps.set_column(c, {{0, Scalar(1)}});
  bool ok = ((d[1] * h[0]).reduced(coeffs) == (Matrix::identity(dims[0]) - eps).reduced(coeffs));
  for (int n = 1; n <= top && ok; ++n)
    ok = ((d[n + 1] * h[n] + h[n - 1] * d[n]).reduced(coeffs) == Matrix::identity(dims[n]).reduced(coeffs));
  out.homotopy_holds = ok;
  if (ok) {
    out.betti.assign(top, 0);
    if (top > 0) out.betti[0] = 1;
  }
  return out;
}

}  // namespace coarsehh::oracle
