#include "coarsehh/error.hpp"
#include "coarsehh/linalg.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace coarsehh {

namespace {

using Dense = std::vector<std::vector<mpz_class>>;

Dense integer_dense(const Matrix& m) {
  Dense a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const auto& e : m.column(j)) {
      if (e.value.get_den() != 1) throw DomainError("integer matrix required");
      a[e.row][j] = e.value.get_num();
    }
  return a;
}

Dense identity_dense(std::size_t n) {
  Dense a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 1;
  return a;
}

Matrix to_matrix(const Dense& a, std::size_t cols) {
  Matrix m(a.size(), cols);
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<Entry> col;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i][j] != 0) col.push_back({static_cast<Index>(i), Scalar(a[i][j])});
    m.set_column(j, std::move(col));
  }
  return m;
}

// In-place Smith reduction of a (r x c). When u / v are given they receive
// the row / column operations so that u * a_in * v = a_out.
void smith_reduce(Dense& a, std::size_t r, std::size_t c, Dense* u, Dense* v) {
  auto swap_rows = [&](std::size_t i, std::size_t k) {
    std::swap(a[i], a[k]);
    if (u) std::swap((*u)[i], (*u)[k]);
  };
  auto swap_cols = [&](std::size_t j, std::size_t k) {
    for (auto& row : a) std::swap(row[j], row[k]);
    if (v)
      for (auto& row : *v) std::swap(row[j], row[k]);
  };
  // row_i += f * row_k
  auto row_axpy = [&](std::size_t i, const mpz_class& f, std::size_t k) {
    for (std::size_t j = 0; j < c; ++j)
      if (a[k][j] != 0) a[i][j] += f * a[k][j];
    if (u)
      for (std::size_t j = 0; j < r; ++j)
        if ((*u)[k][j] != 0) (*u)[i][j] += f * (*u)[k][j];
  };
  // col_j += f * col_k
  auto col_axpy = [&](std::size_t j, const mpz_class& f, std::size_t k) {
    for (std::size_t i = 0; i < r; ++i)
      if (a[i][k] != 0) a[i][j] += f * a[i][k];
    if (v)
      for (std::size_t i = 0; i < c; ++i)
        if ((*v)[i][k] != 0) (*v)[i][j] += f * (*v)[i][k];
  };

  const std::size_t n = std::min(r, c);
  for (std::size_t t = 0; t < n; ++t) {
    // Smallest nonzero entry of the trailing block goes to (t, t).
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (a[i][j] != 0 && (!best || abs(a[i][j]) < abs(a[best->first][best->second]))) best = {i, j};
    if (!best) break;
    swap_rows(t, best->first);
    swap_cols(t, best->second);

    while (true) {
      bool changed = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a[i][t] == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        row_axpy(i, -q, t);
        if (a[i][t] != 0) changed = true;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a[t][j] == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        col_axpy(j, -q, t);
        if (a[t][j] != 0) changed = true;
      }
      if (changed) {
        // Move the smallest remainder in row/column t to the pivot.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < r; ++i)
          if (a[i][t] != 0 && abs(a[i][t]) < abs(a[bi][bj])) bi = i, bj = t;
        for (std::size_t j = t + 1; j < c; ++j)
          if (a[t][j] != 0 && abs(a[t][j]) < abs(a[bi][bj])) bi = t, bj = j;
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      bool fixed = false;
      for (std::size_t i = t + 1; i < r && !fixed; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (a[i][j] != 0 && !mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            row_axpy(t, 1, i);
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (a[t][t] < 0) {
      for (std::size_t j = 0; j < c; ++j) a[t][j] = -a[t][j];
      if (u)
        for (std::size_t j = 0; j < r; ++j) (*u)[t][j] = -(*u)[t][j];
    }
  }
}

}  // namespace

SmithForm smith_normal_form(const Matrix& m) {
  Dense a = integer_dense(m);
  Dense u = identity_dense(m.rows());
  Dense v = identity_dense(m.cols());
  smith_reduce(a, m.rows(), m.cols(), &u, &v);
  SmithForm sf;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) sf.diagonal.push_back(a[i][i]);
  sf.left = to_matrix(u, m.rows());
  sf.right = to_matrix(v, m.cols());
  return sf;
}

std::vector<mpz_class> invariant_factors(const Matrix& m) {
  using Row = std::vector<std::pair<Index, mpz_class>>;
  const std::size_t width = m.rows();
  std::vector<Row> rows(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const auto& e : m.column(j)) {
      if (e.value.get_den() != 1) throw DomainError("integer matrix required");
      rows[j].emplace_back(e.row, e.value.get_num());
    }

  std::vector<std::uint32_t> count(width, 0);
  std::vector<std::vector<std::uint32_t>> where(width);
  for (std::uint32_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) {
      ++count[c];
      where[c].push_back(r);
    }
  std::vector<char> active(rows.size(), 1);
  auto lookup = [](const Row& row, Index c) -> const mpz_class* {
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const std::pair<Index, mpz_class>& e, Index col) { return e.first < col; });
    return (it != row.end() && it->first == c) ? &it->second : nullptr;
  };

  // Unit pivots are unimodular: each contributes an invariant factor 1 and
  // the pivot row/column can be dropped afterwards.
  std::size_t ones = 0;
  Row merged;
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<std::uint32_t> order;
    for (std::uint32_t r = 0; r < rows.size(); ++r)
      if (active[r] && !rows[r].empty()) order.push_back(r);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t x, std::uint32_t y) { return rows[x].size() < rows[y].size(); });
    for (std::uint32_t p : order) {
      if (!active[p]) continue;
      const Row& prow = rows[p];
      std::optional<Index> pc;
      for (const auto& [c, v] : prow)
        if ((v == 1 || v == -1) && (!pc || count[c] < count[*pc])) pc = c;
      if (!pc) continue;
      const Index c = *pc;
      const mpz_class pv = *lookup(prow, c);
      auto& cand = where[c];
      std::sort(cand.begin(), cand.end());
      cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
      for (std::uint32_t r : cand) {
        if (r == p || !active[r]) continue;
        const mpz_class* rv = lookup(rows[r], c);
        if (!rv) continue;
        const mpz_class f = *rv * pv;  // pv^{-1} = pv
        const Row& rrow = rows[r];
        merged.clear();
        std::size_t i = 0, j = 0;
        while (i < rrow.size() || j < prow.size()) {
          if (j == prow.size() || (i < rrow.size() && rrow[i].first < prow[j].first)) {
            merged.push_back(rrow[i++]);
          } else if (i == rrow.size() || prow[j].first < rrow[i].first) {
            const Index col = prow[j].first;
            merged.emplace_back(col, -f * prow[j].second);
            ++count[col];
            where[col].push_back(r);
            ++j;
          } else {
            const Index col = prow[j].first;
            mpz_class nv = rrow[i].second - f * prow[j].second;
            if (nv == 0)
              --count[col];
            else
              merged.emplace_back(col, std::move(nv));
            ++i;
            ++j;
          }
        }
        rows[r].swap(merged);
      }
      active[p] = 0;
      for (const auto& [col, v] : rows[p]) --count[col];
      Row().swap(rows[p]);
      cand.clear();
      ++ones;
      progress = true;
    }
  }

  std::vector<Index> live_cols;
  std::vector<Index> col_pos(width, 0);
  for (Index c = 0; c < width; ++c)
    if (count[c] != 0) {
      col_pos[c] = static_cast<Index>(live_cols.size());
      live_cols.push_back(c);
    }
  Dense residual;
  for (std::uint32_t r = 0; r < rows.size(); ++r) {
    if (!active[r] || rows[r].empty()) continue;
    std::vector<mpz_class> dense(live_cols.size());
    for (const auto& [c, v] : rows[r]) dense[col_pos[c]] = v;
    residual.push_back(std::move(dense));
  }
  std::vector<mpz_class> factors(ones, mpz_class(1));
  if (!residual.empty()) {
    smith_reduce(residual, residual.size(), live_cols.size(), nullptr, nullptr);
    for (std::size_t i = 0; i < std::min(residual.size(), live_cols.size()); ++i)
      if (residual[i][i] != 0) factors.push_back(residual[i][i]);
  }
  return factors;
}

}  // namespace coarsehh
