#pragma once

// Dense matrices over F_{p^e} with deterministic Gaussian elimination.
// Pivoting always picks the first nonzero entry scanning down a column, so
// echelon forms, nullspace bases, and solutions are reproducible across runs.

#include <cstdint>
#include <vector>

#include "superalg/field.hpp"

namespace superalg {

class Matrix {
 public:
  Matrix() : F_(nullptr), rows_(0), cols_(0) {}
  Matrix(FieldPtr F, size_t rows, size_t cols)
      : F_(std::move(F)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Matrix identity(FieldPtr F, size_t n) {
    Matrix m(std::move(F), n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const FieldPtr& field() const { return F_; }

  uint32_t& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  uint32_t operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  uint32_t* row(size_t i) { return a_.data() + i * cols_; }
  const uint32_t* row(size_t i) const { return a_.data() + i * cols_; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (uint32_t v : a_)
      if (v) return false;
    return true;
  }

  Matrix operator+(const Matrix& o) const {
    Matrix r(F_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->add(a_[i], o.a_[i]);
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    Matrix r(F_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->sub(a_[i], o.a_[i]);
    return r;
  }

  Matrix scaled(uint32_t c) const {
    Matrix r(F_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->mul(a_[i], c);
    return r;
  }

  Matrix operator*(const Matrix& o) const {
    Matrix r(F_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i) {
      const uint32_t* lhs = row(i);
      uint32_t* dst = r.row(i);
      for (size_t k = 0; k < cols_; ++k)
        if (lhs[k]) F_->axpy_row(dst, o.row(k), lhs[k], o.cols_);
    }
    return r;
  }

  Matrix transposed() const {
    Matrix r(F_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Matrix pow(uint64_t k) const {
    Matrix acc = identity(F_, rows_), base = *this;
    while (k) {
      if (k & 1) acc = acc * base;
      if (k >>= 1) base = base * base;
    }
    return acc;
  }

  uint32_t trace() const {
    uint32_t t = 0;
    for (size_t i = 0; i < rows_; ++i) t = F_->add(t, (*this)(i, i));
    return t;
  }

  std::vector<uint32_t> apply(const std::vector<uint32_t>& v) const {
    std::vector<uint32_t> out(rows_, 0);
    for (size_t i = 0; i < rows_; ++i) {
      uint32_t acc = 0;
      const uint32_t* r = row(i);
      for (size_t j = 0; j < cols_; ++j)
        if (r[j] && v[j]) acc = F_->add(acc, F_->mul(r[j], v[j]));
      out[i] = acc;
    }
    return out;
  }

  /// In-place reduced row echelon form; returns pivot column indices.
  std::vector<size_t> rref() {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
      size_t sel = r;
      while (sel < rows_ && (*this)(sel, c) == 0) ++sel;
      if (sel == rows_) continue;
      if (sel != r)
        for (size_t j = 0; j < cols_; ++j)
          std::swap((*this)(r, j), (*this)(sel, j));
      uint32_t piv_inv = F_->inv((*this)(r, c));
      F_->scale_row(row(r), piv_inv, cols_);
      for (size_t i = 0; i < rows_; ++i) {
        if (i == r) continue;
        uint32_t v = (*this)(i, c);
        if (v) F_->axpy_row(row(i), row(r), F_->neg(v), cols_);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  size_t rank() const {
    Matrix tmp = *this;
    return tmp.rref().size();
  }

  /// Basis of the right nullspace as matrix rows, in reduced echelon shape
  /// with free variables set to 1 in ascending column order.
  Matrix nullspace() const {
    Matrix tmp = *this;
    std::vector<size_t> pivots = tmp.rref();
    std::vector<int64_t> pivot_of_col(cols_, -1);
    for (size_t k = 0; k < pivots.size(); ++k) pivot_of_col[pivots[k]] = int64_t(k);
    size_t nfree = cols_ - pivots.size();
    Matrix basis(F_, nfree, cols_);
    size_t bi = 0;
    for (size_t c = 0; c < cols_; ++c) {
      if (pivot_of_col[c] >= 0) continue;
      basis(bi, c) = 1;
      for (size_t k = 0; k < pivots.size(); ++k)
        basis(bi, pivots[k]) = F_->neg(tmp(k, c));
      ++bi;
    }
    return basis;
  }

  /// One solution x of Ax = b, or empty if inconsistent.
  std::vector<uint32_t> solve(const std::vector<uint32_t>& b) const {
    Matrix aug(F_, rows_, cols_ + 1);
    for (size_t i = 0; i < rows_; ++i) {
      for (size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_) = b[i];
    }
    std::vector<size_t> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return {};  // 0 = 1 row
    std::vector<uint32_t> x(cols_, 0);
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, cols_);
    return x;
  }

  /// Inverse; empty matrix if singular.
  Matrix inverse() const {
    Matrix aug(F_, rows_, 2 * cols_);
    for (size_t i = 0; i < rows_; ++i) {
      for (size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = 1;
    }
    std::vector<size_t> pivots = aug.rref();
    if (pivots.size() != rows_ || pivots.back() != rows_ - 1) return Matrix();
    Matrix inv(F_, rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
    return inv;
  }

 private:
  FieldPtr F_;
  size_t rows_, cols_;
  std::vector<uint32_t> a_;
};

/// Incremental row space: feed vectors, tracks an echelonized basis.
/// Used for span closure (Burnside) and image-dimension counts where the
/// generating set is produced lazily and can be large.
class RowSpace {
 public:
  RowSpace(FieldPtr F, size_t width) : F_(std::move(F)), width_(width) {}

  size_t dim() const { return rows_.size(); }
  size_t width() const { return width_; }
  const std::vector<std::vector<uint32_t>>& rows() const { return rows_; }

  /// Returns true if v enlarged the span.
  bool insert(std::vector<uint32_t> v) {
    reduce(v);
    size_t lead = leading(v);
    if (lead == width_) return false;
    uint32_t inv = F_->inv(v[lead]);
    F_->scale_row(v.data(), inv, width_);
    // keep rows sorted by leading index and back-substitute
    for (auto& r : rows_)
      if (r[lead]) F_->axpy_row(r.data(), v.data(), F_->neg(r[lead]), width_);
    size_t pos = 0;
    while (pos < rows_.size() && leading(rows_[pos]) < lead) ++pos;
    rows_.insert(rows_.begin() + long(pos), std::move(v));
    return true;
  }

  bool contains(std::vector<uint32_t> v) const {
    reduce(v);
    return leading(v) == width_;
  }

 private:
  size_t leading(const std::vector<uint32_t>& v) const {
    for (size_t i = 0; i < width_; ++i)
      if (v[i]) return i;
    return width_;
  }

  void reduce(std::vector<uint32_t>& v) const {
    for (const auto& r : rows_) {
      size_t lead = leading(r);
      if (v[lead]) F_->axpy_row(v.data(), r.data(), F_->neg(v[lead]), width_);
    }
  }

  FieldPtr F_;
  size_t width_;
  std::vector<std::vector<uint32_t>> rows_;
};

}  // namespace superalg
