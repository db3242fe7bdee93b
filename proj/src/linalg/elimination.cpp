#include "coarsehh/error.hpp"
#include "coarsehh/linalg.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

namespace coarsehh {

namespace {

struct RationalArith {
  using value_type = mpq_class;
  static bool zero(const value_type& v) { return v == 0; }
  static value_type factor(const value_type& target, const value_type& pivot) { return target / pivot; }
  static value_type axpy(const value_type& a, const value_type& f, const value_type& b) { return a - f * b; }
  static value_type neg_mul(const value_type& f, const value_type& b) { return -(f * b); }
  static std::size_t cost(const value_type& v) {
    return mpz_sizeinbase(v.get_num_mpz_t(), 2) + mpz_sizeinbase(v.get_den_mpz_t(), 2);
  }
};

struct ModArith {
  using value_type = std::uint32_t;
  std::uint64_t p;
  static bool zero(value_type v) { return v == 0; }
  value_type inverse(value_type a) const {
    std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p), nr = a;
    while (nr != 0) {
      const std::int64_t q = r / nr;
      std::tie(t, nt) = std::make_pair(nt, t - q * nt);
      std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<value_type>(t);
  }
  value_type factor(value_type target, value_type pivot) const {
    return static_cast<value_type>(std::uint64_t{target} * inverse(pivot) % p);
  }
  value_type axpy(value_type a, value_type f, value_type b) const {
    const std::uint64_t fb = std::uint64_t{f} * b % p;
    return static_cast<value_type>((a + p - fb) % p);
  }
  value_type neg_mul(value_type f, value_type b) const {
    const std::uint64_t fb = std::uint64_t{f} * b % p;
    return static_cast<value_type>((p - fb) % p);
  }
  static std::size_t cost(value_type v) { return v == 1 ? 0 : 1; }
};

// Gaussian elimination with a Markowitz-style pivot choice: the sparsest
// column first, and within it the shortest row with the cheapest entry.
// `rows` are sparse vectors over [0, width), sorted, without zeros.
template <class Arith>
std::size_t markowitz_rank(std::vector<std::vector<std::pair<Index, typename Arith::value_type>>> rows,
                           std::size_t width, const Arith& ar) {
  using V = typename Arith::value_type;
  using Row = std::vector<std::pair<Index, V>>;

  std::vector<std::uint32_t> count(width, 0);
  std::vector<std::vector<std::uint32_t>> where(width);
  for (std::uint32_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) {
      ++count[c];
      where[c].push_back(r);
    }
  std::vector<char> active(rows.size(), 1);

  using Item = std::pair<std::uint32_t, Index>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (Index c = 0; c < width; ++c)
    if (count[c] != 0) heap.push({count[c], c});

  auto lookup = [](const Row& row, Index c) -> const V* {
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const std::pair<Index, V>& e, Index col) { return e.first < col; });
    return (it != row.end() && it->first == c) ? &it->second : nullptr;
  };

  std::size_t rank = 0;
  Row merged;
  while (!heap.empty()) {
    const auto [cnt, c] = heap.top();
    heap.pop();
    if (count[c] == 0 || count[c] != cnt) continue;

    auto& cand = where[c];
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::erase_if(cand, [&](std::uint32_t r) { return !active[r] || lookup(rows[r], c) == nullptr; });
    if (cand.empty()) continue;

    std::uint32_t pivot = cand.front();
    auto score = [&](std::uint32_t r) {
      return std::make_pair(rows[r].size(), Arith::cost(*lookup(rows[r], c)));
    };
    for (std::uint32_t r : cand)
      if (score(r) < score(pivot)) pivot = r;
    const Row& prow = rows[pivot];
    const V pv = *lookup(prow, c);

    for (std::uint32_t r : cand) {
      if (r == pivot) continue;
      const V f = ar.factor(*lookup(rows[r], c), pv);
      const Row& rrow = rows[r];
      merged.clear();
      merged.reserve(rrow.size() + prow.size());
      std::size_t i = 0, j = 0;
      while (i < rrow.size() || j < prow.size()) {
        if (j == prow.size() || (i < rrow.size() && rrow[i].first < prow[j].first)) {
          merged.push_back(rrow[i++]);
        } else if (i == rrow.size() || prow[j].first < rrow[i].first) {
          const Index col = prow[j].first;
          merged.emplace_back(col, ar.neg_mul(f, prow[j].second));
          ++count[col];
          where[col].push_back(r);
          heap.push({count[col], col});
          ++j;
        } else {
          const Index col = prow[j].first;
          V nv = ar.axpy(rrow[i].second, f, prow[j].second);
          if (Arith::zero(nv)) {
            --count[col];
            if (col != c && count[col] != 0) heap.push({count[col], col});
          } else {
            merged.emplace_back(col, std::move(nv));
          }
          ++i;
          ++j;
        }
      }
      rows[r].swap(merged);
    }

    active[pivot] = 0;
    for (const auto& [col, v] : rows[pivot]) {
      --count[col];
      if (count[col] != 0) heap.push({count[col], col});
    }
    Row().swap(rows[pivot]);
    cand.clear();
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank(const Matrix& m, const Coefficients& coeffs) {
  if (!coeffs.is_field()) throw DomainError("field required");
  // Columns of m become the elimination rows; rank is transpose-invariant.
  if (coeffs.domain() == Domain::prime) {
    std::vector<std::vector<std::pair<Index, std::uint32_t>>> rows(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (const auto& e : m.column(j)) {
        const Scalar v = coeffs.normalize(e.value);
        if (v != 0) rows[j].emplace_back(e.row, static_cast<std::uint32_t>(v.get_num().get_ui()));
      }
    return markowitz_rank(std::move(rows), m.rows(), ModArith{coeffs.characteristic()});
  }
  std::vector<std::vector<std::pair<Index, mpq_class>>> rows(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const auto& e : m.column(j)) rows[j].emplace_back(e.row, e.value);
  return markowitz_rank(std::move(rows), m.rows(), RationalArith{});
}

KernelBasis kernel_basis(const Matrix& m, const Coefficients& coeffs) {
  if (!coeffs.is_field()) throw DomainError("field required");
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::vector<Scalar>> a = m.reduced(coeffs).to_dense();

  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < nc && row < nr; ++col) {
    std::size_t sel = row;
    while (sel < nr && a[sel][col] == 0) ++sel;
    if (sel == nr) continue;
    std::swap(a[sel], a[row]);
    const Scalar inv = coeffs.inv(a[row][col]);
    for (auto& v : a[row]) v = coeffs.mul(v, inv);
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Scalar f = a[i][col];
      for (std::size_t j = col; j < nc; ++j)
        if (a[row][j] != 0) a[i][j] = coeffs.sub(a[i][j], coeffs.mul(f, a[row][j]));
    }
    pivot_cols.push_back(col);
    ++row;
  }

  KernelBasis kb;
  std::vector<char> is_pivot(nc, 0);
  for (auto c : pivot_cols) is_pivot[c] = 1;
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(nc);
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = coeffs.neg(a[i][f]);
    kb.vectors.push_back(std::move(v));
    kb.free_columns.push_back(static_cast<Index>(f));
  }
  return kb;
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  auto a = m.to_dense();
  const std::size_t n = a.size();
  Scalar det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a[sel][col] == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      std::swap(a[sel], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      const Scalar f = a[i][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

}  // namespace coarsehh
