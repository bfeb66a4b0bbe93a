#ifndef SBRST_SPARSE_MATRIX_HPP
#define SBRST_SPARSE_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "sbrst/rational.hpp"

namespace sbrst {

/// Exact rational matrix stored column-wise; absent entries are zero.
class SparseRationalMatrix {
 public:
  SparseRationalMatrix() = default;
  SparseRationalMatrix(int rows, int cols);

  static SparseRationalMatrix identity(int n);
  static SparseRationalMatrix from_dense(const std::vector<std::vector<Rational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational at(int r, int c) const;
  void set(int r, int c, const Rational& v);
  void add(int r, int c, const Rational& v);

  const SparseVector& column(int c) const { return columns_.at(c); }
  void set_column(int c, SparseVector v);

  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  SparseRationalMatrix transpose() const;
  std::vector<std::vector<Rational>> to_dense() const;

  /// y = M x for a sparse x indexed by column.
  SparseVector apply(const SparseVector& x) const;

  SparseRationalMatrix& operator+=(const SparseRationalMatrix& o);
  SparseRationalMatrix& operator-=(const SparseRationalMatrix& o);
  SparseRationalMatrix& operator*=(const Rational& s);

  friend SparseRationalMatrix operator+(SparseRationalMatrix a, const SparseRationalMatrix& b) {
    return a += b;
  }
  friend SparseRationalMatrix operator-(SparseRationalMatrix a, const SparseRationalMatrix& b) {
    return a -= b;
  }
  friend SparseRationalMatrix operator*(SparseRationalMatrix a, const Rational& s) { return a *= s; }
  friend SparseRationalMatrix operator*(const Rational& s, SparseRationalMatrix a) { return a *= s; }
  friend SparseRationalMatrix operator*(const SparseRationalMatrix& a, const SparseRationalMatrix& b);
  friend bool operator==(const SparseRationalMatrix& a, const SparseRationalMatrix& b);

  /// Largest |a_ij - b_ij| over all entries; shapes must agree.
  friend Rational max_abs_difference(const SparseRationalMatrix& a, const SparseRationalMatrix& b);

  std::string debug_string() const;

 private:
  void check_index(int r, int c) const;

  int rows_ = 0;
  int cols_ = 0;
  std::vector<SparseVector> columns_;
};

}  // namespace sbrst

#endif  // SBRST_SPARSE_MATRIX_HPP
