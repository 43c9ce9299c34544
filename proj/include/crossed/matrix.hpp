#pragma once

// Dense exact matrices, vectors and flat tensors.
//
// A matrix represents a linear map in the usual way: column j holds the image
// of the j-th source basis vector, so a map V -> W of dimensions n -> m is an
// m x n matrix.  Tensors in V_1 (x) ... (x) V_k are stored flat, row-major
// (the last leg varies fastest).

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crossed/errors.hpp"
#include "crossed/scalar.hpp"

namespace crossed {

template <class T>
using Vec = std::vector<T>;

template <class T>
bool is_zero_vec(const Vec<T>& v) {
  return std::all_of(v.begin(), v.end(), [](const T& x) { return x.is_zero(); });
}

template <class T>
Vec<T> unit_vec(std::size_t n, std::size_t i) {
  Vec<T> v(n, T(0));
  v.at(i) = T(1);
  return v;
}

template <class T>
Vec<T> add(const Vec<T>& a, const Vec<T>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  Vec<T> r(a);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!b[i].is_zero()) r[i] += b[i];
  return r;
}

template <class T>
Vec<T> sub(const Vec<T>& a, const Vec<T>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  Vec<T> r(a);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!b[i].is_zero()) r[i] -= b[i];
  return r;
}

template <class T>
Vec<T> scale(const T& c, const Vec<T>& a) {
  Vec<T> r(a.size(), T(0));
  if (c.is_zero()) return r;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!a[i].is_zero()) r[i] = c * a[i];
  return r;
}

/// r += c * a
template <class T>
void axpy(Vec<T>& r, const T& c, const Vec<T>& a) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!a[i].is_zero()) r[i] += c * a[i];
}

/// Kronecker product of coordinate vectors: (a (x) b)[i*|b|+j] = a_i b_j.
template <class T>
Vec<T> kron(const Vec<T>& a, const Vec<T>& b) {
  Vec<T> r(a.size() * b.size(), T(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i * b.size() + j] = a[i] * b[j];
  }
  return r;
}

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, Vec<T> entries) : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols)
      throw DimensionMismatch("matrix entries " + std::to_string(data_.size()) + " != " + std::to_string(rows) + "x" + std::to_string(cols));
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix from_rows(const std::vector<Vec<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionMismatch("ragged matrix row " + std::to_string(i));
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  /// The matrix whose columns are the given vectors.
  static Matrix from_columns(const std::vector<Vec<T>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw DimensionMismatch("column " + std::to_string(j) + " has wrong length");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  const Vec<T>& data() const { return data_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  T& at(std::size_t i, std::size_t j) {
    check(i, j);
    return (*this)(i, j);
  }
  const T& at(std::size_t i, std::size_t j) const {
    check(i, j);
    return (*this)(i, j);
  }

  Vec<T> column(std::size_t j) const {
    Vec<T> c(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  Vec<T> row(std::size_t i) const { return Vec<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

  /// Image of a coordinate vector.
  Vec<T> apply(const Vec<T>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("apply: vector of length " + std::to_string(v.size()) + " to " + shape());
    Vec<T> r(rows_, T(0));
    for (std::size_t j = 0; j < cols_; ++j) {
      if (v[j].is_zero()) continue;
      for (std::size_t i = 0; i < rows_; ++i) {
        const T& a = (*this)(i, j);
        if (!a.is_zero()) r[i] += a * v[j];
      }
    }
    return r;
  }

  bool is_zero() const { return is_zero_vec(data_); }
  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw DimensionMismatch("index (" + std::to_string(i) + "," + std::to_string(j) + ") outside " + shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec<T> data_;
};

template <class T>
Matrix<T> mul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("mul: " + a.shape() + " * " + b.shape());
  Matrix<T> r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const T& y = b(k, j);
        if (!y.is_zero()) r(i, j) += x * y;
      }
    }
  return r;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

template <class T>
Matrix<T> add(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("add: " + a.shape() + " + " + b.shape());
  return Matrix<T>(a.rows(), a.cols(), add(a.data(), b.data()));
}

template <class T>
Matrix<T> sub(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("sub: " + a.shape() + " - " + b.shape());
  return Matrix<T>(a.rows(), a.cols(), sub(a.data(), b.data()));
}

template <class T>
Matrix<T> scale(const T& c, const Matrix<T>& a) {
  return Matrix<T>(a.rows(), a.cols(), scale(c, a.data()));
}

/// Kronecker product A (x) B, the matrix of the tensor product of maps.
template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return r;
}

/// Reduced row echelon form computed in place; returns the pivot columns.
template <class T>
std::vector<std::size_t> rref_in_place(Matrix<T>& m, std::size_t col_limit = static_cast<std::size_t>(-1)) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  std::size_t ncols = std::min(col_limit, m.cols());
  for (std::size_t c = 0; c < ncols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    T inv = T(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
  return rref_in_place(m).size();
}

/// Exact inverse; throws SingularMatrix when the rank is deficient.
template <class T>
Matrix<T> invert_matrix(const Matrix<T>& a) {
  if (!a.square()) throw DimensionMismatch("invert_matrix: non-square " + a.shape());
  std::size_t n = a.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = T(1);
  }
  auto piv = rref_in_place(aug, n);
  if (piv.size() < n) throw SingularMatrix("rank " + std::to_string(piv.size()) + " < " + std::to_string(n));
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// Some X with A X = B, or nullopt if the system is inconsistent.
template <class T>
std::optional<Matrix<T>> solve(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("solve: " + a.shape() + " vs rhs " + b.shape());
  std::size_t n = a.cols(), k = b.cols();
  Matrix<T> aug(a.rows(), n + k);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = b(i, j);
  }
  auto piv = rref_in_place(aug, n);
  for (std::size_t i = piv.size(); i < a.rows(); ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (!aug(i, n + j).is_zero()) return std::nullopt;
  Matrix<T> x(n, k);
  for (std::size_t r = 0; r < piv.size(); ++r)
    for (std::size_t j = 0; j < k; ++j) x(piv[r], j) = aug(r, n + j);
  return x;
}

/// The canonical element sum_i e_i (x) e^i of V (x) V*, stored as the
/// coordinate tensor (the n x n identity read row-major).
template <class T>
struct CanonicalPair {
  std::size_t n = 0;
  Vec<T> coords;

  /// Contract the V* leg against e_j: yields e_j.
  Vec<T> contract_second(std::size_t j) const {
    Vec<T> r(n, T(0));
    for (std::size_t i = 0; i < n; ++i) r[i] = coords[i * n + j];
    return r;
  }
};

template <class T>
CanonicalPair<T> dual_basis_pair(std::size_t n) {
  return {n, Matrix<T>::identity(n).data()};
}

/// A vector in a tensor product of spaces with the given dimensions.
template <class T>
struct Tensor {
  std::vector<std::size_t> dims;
  Vec<T> data;

  Tensor() = default;
  explicit Tensor(std::vector<std::size_t> d) : dims(std::move(d)), data(total(dims), T(0)) {}
  Tensor(std::vector<std::size_t> d, Vec<T> v) : dims(std::move(d)), data(std::move(v)) {
    if (data.size() != total(dims)) throw DimensionMismatch("tensor data length does not match its legs");
  }

  static std::size_t total(const std::vector<std::size_t>& d) {
    return std::accumulate(d.begin(), d.end(), std::size_t{1}, std::multiplies<>());
  }
  std::size_t legs() const { return dims.size(); }
  friend bool operator==(const Tensor&, const Tensor&) = default;
};

/// Output leg m is input leg perm[m] (0-based).  With perm = {1,2,0},
/// a (x) b (x) c goes to b (x) c (x) a.
template <class T>
Tensor<T> permute_legs(const Tensor<T>& t, const std::vector<std::size_t>& perm) {
  std::size_t k = t.legs();
  if (perm.size() != k) throw DimensionMismatch("permutation length " + std::to_string(perm.size()) + " for " + std::to_string(k) + " legs");
  std::vector<bool> seen(k, false);
  for (auto p : perm) {
    if (p >= k || seen[p]) throw DimensionMismatch("not a permutation of the legs");
    seen[p] = true;
  }
  std::vector<std::size_t> out_dims(k), in_stride(k, 1);
  for (std::size_t m = 0; m < k; ++m) out_dims[m] = t.dims[perm[m]];
  for (std::size_t l = k; l-- > 1;) in_stride[l - 1] = in_stride[l] * t.dims[l];
  Tensor<T> r(out_dims);
  std::vector<std::size_t> idx(k, 0);
  for (std::size_t flat = 0; flat < r.data.size(); ++flat) {
    std::size_t src = 0;
    for (std::size_t m = 0; m < k; ++m) src += idx[m] * in_stride[perm[m]];
    r.data[flat] = t.data[src];
    for (std::size_t m = k; m-- > 0;) {
      if (++idx[m] < out_dims[m]) break;
      idx[m] = 0;
    }
  }
  return r;
}

/// The flip v (x) w -> w (x) v on a two-leg coordinate vector.
template <class T>
Vec<T> flip(const Vec<T>& t, std::size_t d1, std::size_t d2) {
  if (t.size() != d1 * d2) throw DimensionMismatch("flip: length " + std::to_string(t.size()));
  Vec<T> r(t.size(), T(0));
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d2; ++j) r[j * d1 + i] = t[i * d2 + j];
  return r;
}

}  // namespace crossed
