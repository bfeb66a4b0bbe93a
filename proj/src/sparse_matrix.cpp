#include "sbrst/sparse_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace sbrst {

SparseRationalMatrix::SparseRationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), columns_(static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

SparseRationalMatrix SparseRationalMatrix::identity(int n) {
  SparseRationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

SparseRationalMatrix SparseRationalMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  SparseRationalMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged dense matrix");
    for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void SparseRationalMatrix::check_index(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
    throw std::out_of_range("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                            ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

Rational SparseRationalMatrix::at(int r, int c) const {
  check_index(r, c);
  const auto& col = columns_[c];
  auto it = col.find(r);
  return it == col.end() ? Rational(0) : it->second;
}

void SparseRationalMatrix::set(int r, int c, const Rational& v) {
  check_index(r, c);
  if (v == 0) {
    columns_[c].erase(r);
  } else {
    columns_[c][r] = v;
  }
}

void SparseRationalMatrix::add(int r, int c, const Rational& v) {
  check_index(r, c);
  add_entry(columns_[c], r, v);
}

void SparseRationalMatrix::set_column(int c, SparseVector v) {
  if (c < 0 || c >= cols_) throw std::out_of_range("column index outside matrix");
  for (auto it = v.begin(); it != v.end();) {
    if (it->first < 0 || it->first >= rows_) throw std::out_of_range("column entry outside row range");
    if (it->second == 0) {
      it = v.erase(it);
    } else {
      ++it;
    }
  }
  columns_[c] = std::move(v);
}

std::size_t SparseRationalMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& col : columns_) n += col.size();
  return n;
}

SparseRationalMatrix SparseRationalMatrix::transpose() const {
  SparseRationalMatrix t(cols_, rows_);
  for (int c = 0; c < cols_; ++c) {
    for (const auto& [r, v] : columns_[c]) t.columns_[r].emplace(c, v);
  }
  return t;
}

std::vector<std::vector<Rational>> SparseRationalMatrix::to_dense() const {
  std::vector<std::vector<Rational>> d(rows_, std::vector<Rational>(cols_, Rational(0)));
  for (int c = 0; c < cols_; ++c) {
    for (const auto& [r, v] : columns_[c]) d[r][c] = v;
  }
  return d;
}

SparseVector SparseRationalMatrix::apply(const SparseVector& x) const {
  SparseVector y;
  for (const auto& [c, v] : x) {
    if (c < 0 || c >= cols_) throw std::out_of_range("vector index outside column range");
    axpy(y, v, columns_[c]);
  }
  return y;
}

SparseRationalMatrix& SparseRationalMatrix::operator+=(const SparseRationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in +");
  for (int c = 0; c < cols_; ++c) axpy(columns_[c], 1, o.columns_[c]);
  return *this;
}

SparseRationalMatrix& SparseRationalMatrix::operator-=(const SparseRationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in -");
  for (int c = 0; c < cols_; ++c) axpy(columns_[c], -1, o.columns_[c]);
  return *this;
}

SparseRationalMatrix& SparseRationalMatrix::operator*=(const Rational& s) {
  if (s == 0) {
    for (auto& col : columns_) col.clear();
    return *this;
  }
  for (auto& col : columns_) {
    for (auto& [r, v] : col) v *= s;
  }
  return *this;
}

SparseRationalMatrix operator*(const SparseRationalMatrix& a, const SparseRationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in *");
  SparseRationalMatrix p(a.rows_, b.cols_);
  for (int c = 0; c < b.cols_; ++c) p.columns_[c] = a.apply(b.columns_[c]);
  return p;
}

bool operator==(const SparseRationalMatrix& a, const SparseRationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.columns_ == b.columns_;
}

Rational max_abs_difference(const SparseRationalMatrix& a, const SparseRationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("matrix shape mismatch in max_abs_difference");
  }
  Rational worst = 0;
  for (int c = 0; c < a.cols_; ++c) {
    SparseVector d = a.columns_[c];
    axpy(d, -1, b.columns_[c]);
    for (const auto& [r, v] : d) {
      Rational m = abs(v);
      if (m > worst) worst = m;
    }
  }
  return worst;
}

std::string SparseRationalMatrix::debug_string() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_ << " {";
  for (int c = 0; c < cols_; ++c) {
    for (const auto& [r, v] : columns_[c]) os << " (" << r << "," << c << ")=" << v.get_str();
  }
  os << " }";
  return os.str();
}

}  // namespace sbrst
