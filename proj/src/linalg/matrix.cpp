#include "coarsehh/error.hpp"
#include "coarsehh/linalg.hpp"

#include <algorithm>

namespace coarsehh {

namespace {

std::vector<Entry> merge_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.row < b.row; });
  std::vector<Entry> out;
  out.reserve(entries.size());
  for (auto& e : entries) {
    if (!out.empty() && out.back().row == e.row)
      out.back().value += e.value;
    else
      out.push_back(std::move(e));
  }
  std::erase_if(out, [](const Entry& e) { return e.value == 0; });
  return out;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i].push_back({static_cast<Index>(i), Scalar(1)});
  return m;
}

Matrix Matrix::from_dense(const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw InvalidInput("ragged dense matrix");
    for (std::size_t j = 0; j < c; ++j)
      if (rows[i][j] != 0) m.columns_[j].push_back({static_cast<Index>(i), rows[i][j]});
  }
  return m;
}

Matrix Matrix::from_ints(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Scalar>> d;
  for (const auto& row : rows) {
    std::vector<Scalar> r;
    for (long v : row) r.emplace_back(v);
    d.push_back(std::move(r));
  }
  return from_dense(d);
}

std::size_t Matrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

bool Matrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

void Matrix::set_column(std::size_t j, std::vector<Entry> entries) {
  for (const auto& e : entries)
    if (e.row >= rows_) throw InvalidInput("matrix row index out of bounds");
  columns_.at(j) = merge_entries(std::move(entries));
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  const auto& col = columns_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const Entry& e, std::size_t row) { return e.row < row; });
  if (it != col.end() && it->row == r) return it->value;
  return Scalar(0);
}

Matrix Matrix::transpose() const {
  Matrix t(cols(), rows_);
  for (std::size_t j = 0; j < cols(); ++j)
    for (const auto& e : columns_[j]) t.columns_[e.row].push_back({static_cast<Index>(j), e.value});
  return t;
}

Matrix Matrix::scaled(const Scalar& s) const {
  if (s == 0) return Matrix(rows_, cols());
  Matrix m = *this;
  for (auto& c : m.columns_)
    for (auto& e : c) e.value *= s;
  return m;
}

Matrix Matrix::reduced(const Coefficients& coeffs) const {
  Matrix m(rows_, cols());
  for (std::size_t j = 0; j < cols(); ++j)
    for (const auto& e : columns_[j]) {
      Scalar v = coeffs.normalize(e.value);
      if (v != 0) m.columns_[j].push_back({e.row, std::move(v)});
    }
  return m;
}

std::vector<std::vector<Scalar>> Matrix::to_dense() const {
  std::vector<std::vector<Scalar>> d(rows_, std::vector<Scalar>(cols()));
  for (std::size_t j = 0; j < cols(); ++j)
    for (const auto& e : columns_[j]) d[e.row][j] = e.value;
  return d;
}

void Matrix::add_block(const Matrix& block, std::size_t row_offset, std::size_t col_offset) {
  if (row_offset + block.rows() > rows_ || col_offset + block.cols() > cols())
    throw InvalidInput("block does not fit");
  for (std::size_t j = 0; j < block.cols(); ++j) {
    if (block.columns_[j].empty()) continue;
    auto& col = columns_[col_offset + j];
    std::vector<Entry> entries = std::move(col);
    for (const auto& e : block.columns_[j])
      entries.push_back({static_cast<Index>(e.row + row_offset), e.value});
    col = merge_entries(std::move(entries));
  }
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix product dimension mismatch");
  Matrix m(a.rows(), b.cols());
  ColumnAccumulator acc(a.rows());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (const auto& eb : b.columns_[j])
      for (const auto& ea : a.columns_[eb.row]) acc.add(ea.row, ea.value * eb.value);
    m.columns_[j] = acc.take();
  }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInput("matrix sum dimension mismatch");
  Matrix m(a.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    std::vector<Entry> e = a.columns_[j];
    e.insert(e.end(), b.columns_[j].begin(), b.columns_[j].end());
    m.columns_[j] = merge_entries(std::move(e));
  }
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + b.scaled(-1); }

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const auto& x = a.columns_[j];
    const auto& y = b.columns_[j];
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i].row != y[i].row || x[i].value != y[i].value) return false;
  }
  return true;
}

void ColumnAccumulator::add(Index row, const Scalar& v) {
  if (!used_[row]) {
    used_[row] = true;
    touched_.push_back(row);
    values_[row] = v;
  } else {
    values_[row] += v;
  }
}

std::vector<Entry> ColumnAccumulator::take() {
  std::sort(touched_.begin(), touched_.end());
  std::vector<Entry> out;
  out.reserve(touched_.size());
  for (Index r : touched_) {
    used_[r] = false;
    if (values_[r] != 0) out.push_back({r, std::move(values_[r])});
    values_[r] = 0;
  }
  touched_.clear();
  return out;
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool DenseMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& v) { return v == 0; });
}

Scalar DenseMatrix::trace() const {
  Scalar t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

DenseMatrix DenseMatrix::reduced(const Coefficients& coeffs) const {
  DenseMatrix m = *this;
  for (auto& v : m.data_) v = coeffs.normalize(v);
  return m;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidInput("block product dimension mismatch");
  DenseMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += x * b(k, j);
    }
  return m;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("block sum dimension mismatch");
  DenseMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("block difference dimension mismatch");
  DenseMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

}  // namespace coarsehh
