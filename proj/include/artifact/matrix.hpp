#pragma once

#include "artifact/int.hpp"

#include <string>
#include <utility>
#include <vector>

namespace artifact {

// Sparse vector: (index, value) pairs sorted by index, no explicit zeros.
using SparseVec = std::vector<std::pair<int, Int>>;

// x += k * y
void axpy(SparseVec &x, const Int &k, const SparseVec &y);
Int sparse_get(const SparseVec &v, int idx);

// Row-major sparse integer matrix.
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

  static Matrix identity(int n);
  static Matrix from_dense(const std::vector<std::vector<long long>> &d, int cols = -1);
  static Matrix from_columns(int rows, const std::vector<SparseVec> &columns);
  static Matrix diagonal(const std::vector<Int> &d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nnz() const;

  Int get(int r, int c) const;
  void set(int r, int c, const Int &v);
  void add_to(int r, int c, const Int &v);

  const SparseVec &row(int r) const { return data_[r]; }
  SparseVec &row_mut(int r) { return data_[r]; }
  std::vector<SparseVec> columns() const;
  SparseVec column(int c) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix &o) const;
  Matrix operator+(const Matrix &o) const;
  Matrix operator-(const Matrix &o) const;
  Matrix operator-() const;
  Matrix scaled(const Int &k) const;
  bool operator==(const Matrix &o) const;
  bool is_zero() const;

  std::vector<Int> apply(const std::vector<Int> &x) const;
  SparseVec apply(const SparseVec &x) const;

  // reduce row r modulo mods[r] (0 = leave as is) into [0, mods[r])
  Matrix reduced_rows(const std::vector<Int> &mods) const;

  Matrix select_rows(const std::vector<int> &idx) const;
  Matrix select_cols(const std::vector<int> &idx) const;
  static Matrix hstack(const Matrix &a, const Matrix &b);
  static Matrix vstack(const Matrix &a, const Matrix &b);
  // place b into a copy of this at (r0, c0)
  void add_block(int r0, int c0, const Matrix &b);

  std::vector<std::vector<Int>> to_dense() const;
  std::string str() const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<SparseVec> data_;
};

} // namespace artifact
