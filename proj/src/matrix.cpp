#include "artifact/matrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace artifact {

void axpy(SparseVec &x, const Int &k, const SparseVec &y) {
  if (k.is_zero() || y.empty()) return;
  SparseVec out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(std::move(x[i++]));
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, k * y[j].second);
      ++j;
    } else {
      Int v = std::move(x[i].second);
      v += k * y[j].second;
      if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  x = std::move(out);
}

Int sparse_get(const SparseVec &v, int idx) {
  auto it = std::lower_bound(v.begin(), v.end(), idx,
                             [](const auto &e, int i) { return e.first < i; });
  if (it != v.end() && it->first == idx) return it->second;
  return Int(0);
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.data_[i].emplace_back(i, Int(1));
  return m;
}

Matrix Matrix::from_dense(const std::vector<std::vector<long long>> &d, int cols) {
  int c = cols >= 0 ? cols : (d.empty() ? 0 : static_cast<int>(d[0].size()));
  Matrix m(static_cast<int>(d.size()), c);
  for (int i = 0; i < m.rows_; ++i) {
    if (static_cast<int>(d[i].size()) != c) throw std::invalid_argument("ragged dense matrix");
    for (int j = 0; j < c; ++j)
      if (d[i][j] != 0) m.data_[i].emplace_back(j, Int(d[i][j]));
  }
  return m;
}

Matrix Matrix::from_columns(int rows, const std::vector<SparseVec> &columns) {
  Matrix m(rows, static_cast<int>(columns.size()));
  for (int j = 0; j < m.cols_; ++j)
    for (const auto &[i, v] : columns[j]) m.data_[i].emplace_back(j, v);
  return m;
}

Matrix Matrix::diagonal(const std::vector<Int> &d) {
  Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (int i = 0; i < m.rows_; ++i)
    if (!d[i].is_zero()) m.data_[i].emplace_back(i, d[i]);
  return m;
}

std::size_t Matrix::nnz() const {
  std::size_t n = 0;
  for (const auto &r : data_) n += r.size();
  return n;
}

Int Matrix::get(int r, int c) const { return sparse_get(data_.at(r), c); }

void Matrix::set(int r, int c, const Int &v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("Matrix::set");
  auto &row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto &e, int i) { return e.first < i; });
  if (it != row.end() && it->first == c) {
    if (v.is_zero())
      row.erase(it);
    else
      it->second = v;
  } else if (!v.is_zero()) {
    row.insert(it, {c, v});
  }
}

void Matrix::add_to(int r, int c, const Int &v) {
  if (v.is_zero()) return;
  set(r, c, get(r, c) + v);
}

std::vector<SparseVec> Matrix::columns() const {
  std::vector<SparseVec> cols(cols_);
  for (int i = 0; i < rows_; ++i)
    for (const auto &[j, v] : data_[i]) cols[j].emplace_back(i, v);
  return cols;
}

SparseVec Matrix::column(int c) const {
  SparseVec out;
  for (int i = 0; i < rows_; ++i) {
    Int v = get(i, c);
    if (!v.is_zero()) out.emplace_back(i, v);
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (const auto &[j, v] : data_[i]) t.data_[j].emplace_back(i, v);
  return t;
}

Matrix Matrix::operator*(const Matrix &o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Matrix product shape mismatch");
  Matrix p(rows_, o.cols_);
  std::map<int, Int> acc;
  for (int i = 0; i < rows_; ++i) {
    acc.clear();
    for (const auto &[k, a] : data_[i])
      for (const auto &[j, b] : o.data_[k]) acc[j] += a * b;
    for (auto &[j, v] : acc)
      if (!v.is_zero()) p.data_[i].emplace_back(j, std::move(v));
  }
  return p;
}

Matrix Matrix::operator+(const Matrix &o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix sum shape mismatch");
  Matrix s = *this;
  for (int i = 0; i < rows_; ++i) axpy(s.data_[i], Int(1), o.data_[i]);
  return s;
}

Matrix Matrix::operator-(const Matrix &o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix difference shape mismatch");
  Matrix s = *this;
  for (int i = 0; i < rows_; ++i) axpy(s.data_[i], Int(-1), o.data_[i]);
  return s;
}

Matrix Matrix::operator-() const { return scaled(Int(-1)); }

Matrix Matrix::scaled(const Int &k) const {
  if (k.is_zero()) return Matrix(rows_, cols_);
  Matrix s = *this;
  for (auto &r : s.data_)
    for (auto &e : r) e.second *= k;
  return s;
}

bool Matrix::operator==(const Matrix &o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Matrix::is_zero() const {
  for (const auto &r : data_)
    if (!r.empty()) return false;
  return true;
}

std::vector<Int> Matrix::apply(const std::vector<Int> &x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("Matrix::apply shape mismatch");
  std::vector<Int> y(rows_);
  for (int i = 0; i < rows_; ++i)
    for (const auto &[j, v] : data_[i])
      if (!x[j].is_zero()) y[i] += v * x[j];
  return y;
}

SparseVec Matrix::apply(const SparseVec &x) const {
  SparseVec y;
  for (int i = 0; i < rows_; ++i) {
    Int s;
    std::size_t a = 0, b = 0;
    const auto &r = data_[i];
    while (a < r.size() && b < x.size()) {
      if (r[a].first < x[b].first)
        ++a;
      else if (x[b].first < r[a].first)
        ++b;
      else
        s += r[a++].second * x[b++].second;
    }
    if (!s.is_zero()) y.emplace_back(i, std::move(s));
  }
  return y;
}

Matrix Matrix::reduced_rows(const std::vector<Int> &mods) const {
  Matrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i) {
    for (const auto &[j, v] : data_[i]) {
      Int w = mods[i].is_zero() ? v : mod(v, mods[i]);
      if (!w.is_zero()) m.data_[i].emplace_back(j, std::move(w));
    }
  }
  return m;
}

Matrix Matrix::select_rows(const std::vector<int> &idx) const {
  Matrix m(static_cast<int>(idx.size()), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) m.data_[i] = data_.at(idx[i]);
  return m;
}

Matrix Matrix::select_cols(const std::vector<int> &idx) const {
  std::vector<int> pos(cols_, -1);
  for (std::size_t k = 0; k < idx.size(); ++k) pos.at(idx[k]) = static_cast<int>(k);
  bool sorted = std::is_sorted(idx.begin(), idx.end());
  Matrix m(rows_, static_cast<int>(idx.size()));
  for (int i = 0; i < rows_; ++i) {
    for (const auto &[j, v] : data_[i])
      if (pos[j] >= 0) m.data_[i].emplace_back(pos[j], v);
    if (!sorted) std::sort(m.data_[i].begin(), m.data_[i].end(),
                           [](const auto &a, const auto &b) { return a.first < b.first; });
  }
  return m;
}

Matrix Matrix::hstack(const Matrix &a, const Matrix &b) {
  if (a.rows_ != b.rows_) throw std::invalid_argument("hstack row mismatch");
  Matrix m(a.rows_, a.cols_ + b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    m.data_[i] = a.data_[i];
    for (const auto &[j, v] : b.data_[i]) m.data_[i].emplace_back(j + a.cols_, v);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix &a, const Matrix &b) {
  if (a.cols_ != b.cols_) throw std::invalid_argument("vstack column mismatch");
  Matrix m(a.rows_ + b.rows_, a.cols_);
  for (int i = 0; i < a.rows_; ++i) m.data_[i] = a.data_[i];
  for (int i = 0; i < b.rows_; ++i) m.data_[a.rows_ + i] = b.data_[i];
  return m;
}

void Matrix::add_block(int r0, int c0, const Matrix &b) {
  if (r0 < 0 || c0 < 0 || r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
    throw std::out_of_range("add_block out of range");
  for (int i = 0; i < b.rows_; ++i) {
    if (b.data_[i].empty()) continue;
    SparseVec shifted;
    shifted.reserve(b.data_[i].size());
    for (const auto &[j, v] : b.data_[i]) shifted.emplace_back(j + c0, v);
    axpy(data_[r0 + i], Int(1), shifted);
  }
}

std::vector<std::vector<Int>> Matrix::to_dense() const {
  std::vector<std::vector<Int>> d(rows_, std::vector<Int>(cols_));
  for (int i = 0; i < rows_; ++i)
    for (const auto &[j, v] : data_[i]) d[i][j] = v;
  return d;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << get(i, j);
  }
  os << "]";
  return os.str();
}

} // namespace artifact
