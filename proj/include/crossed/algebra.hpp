#pragma once

// Finite-dimensional algebras and coalgebras by structure constants, plus the
// multilinear plumbing (leg maps, unit insertion, leg fusion) used to evaluate
// identities in tensor products of components.

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "crossed/errors.hpp"
#include "crossed/matrix.hpp"

namespace crossed {

/// Associative unital algebra: e_i e_j = sum_k c[i][j][k] e_k, with c stored
/// flat at (i*d + j)*d + k.
template <class T>
class ComponentAlgebra {
 public:
  using Term = std::pair<std::uint32_t, T>;

  ComponentAlgebra() = default;
  ComponentAlgebra(std::size_t dim, Vec<T> mu, Vec<T> unit) : dim_(dim), mu_(std::move(mu)), unit_(std::move(unit)) {
    if (mu_.size() != dim_ * dim_ * dim_) throw ShapeMismatch("multiplication tensor has " + std::to_string(mu_.size()) + " entries for dimension " + std::to_string(dim_));
    if (unit_.size() != dim_) throw ShapeMismatch("unit has length " + std::to_string(unit_.size()) + " for dimension " + std::to_string(dim_));
    index();
  }

  /// Builds the algebra from its product table given as a callback
  /// (i, j) -> coordinates of e_i e_j.
  template <class F>
  static ComponentAlgebra from_products(std::size_t dim, F&& prod, Vec<T> unit) {
    Vec<T> mu(dim * dim * dim, T(0));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        Vec<T> p = prod(i, j);
        for (std::size_t k = 0; k < dim; ++k) mu[(i * dim + j) * dim + k] = p[k];
      }
    return ComponentAlgebra(dim, std::move(mu), std::move(unit));
  }

  std::size_t dim() const { return dim_; }
  const Vec<T>& mu() const { return mu_; }
  const Vec<T>& unit() const { return unit_; }
  const T& c(std::size_t i, std::size_t j, std::size_t k) const { return mu_[(i * dim_ + j) * dim_ + k]; }

  /// Nonzero terms of e_i e_j.
  const std::vector<Term>& basis_product(std::size_t i, std::size_t j) const { return prod_[i * dim_ + j]; }

  Vec<T> mul(const Vec<T>& a, const Vec<T>& b) const {
    Vec<T> r(dim_, T(0));
    for (std::size_t i = 0; i < dim_; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (b[j].is_zero()) continue;
        T ab = a[i] * b[j];
        for (const auto& [k, v] : basis_product(i, j)) r[k] += ab * v;
      }
    }
    return r;
  }

  /// Matrix of left multiplication by a.
  Matrix<T> left_mult(const Vec<T>& a) const {
    Matrix<T> m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        for (const auto& [k, v] : basis_product(i, j)) m(k, j) += a[i] * v;
    }
    return m;
  }

  friend bool operator==(const ComponentAlgebra& a, const ComponentAlgebra& b) {
    return a.dim_ == b.dim_ && a.mu_ == b.mu_ && a.unit_ == b.unit_;
  }

 private:
  void index() {
    prod_.assign(dim_ * dim_, {});
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) {
          const T& v = c(i, j, k);
          if (!v.is_zero()) prod_[i * dim_ + j].emplace_back(static_cast<std::uint32_t>(k), v);
        }
  }

  std::size_t dim_ = 0;
  Vec<T> mu_;
  Vec<T> unit_;
  std::vector<std::vector<Term>> prod_;
};

/// Coassociative counital coalgebra; delta is (d*d) x d.
template <class T>
struct ComponentCoalgebra {
  std::size_t dim = 0;
  Matrix<T> delta;
  Vec<T> counit;

  friend bool operator==(const ComponentCoalgebra&, const ComponentCoalgebra&) = default;
};

/// Product of dimensions.
inline std::size_t dims_product(const std::vector<std::size_t>& d) { return Tensor<int>::total(d); }

namespace detail {
// Splits a flat index space around leg m: [outer][d_m][inner].
inline std::pair<std::size_t, std::size_t> around(const std::vector<std::size_t>& dims, std::size_t m) {
  if (m >= dims.size()) throw DimensionMismatch("leg " + std::to_string(m) + " out of range");
  std::size_t outer = 1, inner = 1;
  for (std::size_t l = 0; l < m; ++l) outer *= dims[l];
  for (std::size_t l = m + 1; l < dims.size(); ++l) inner *= dims[l];
  return {outer, inner};
}
}  // namespace detail

/// Applies a linear map to leg m of x; the map's rows may span several new
/// legs (e.g. a comultiplication turning one leg into two).
template <class T>
Vec<T> map_leg(const std::vector<std::size_t>& dims, const Vec<T>& x, std::size_t m, const Matrix<T>& f) {
  auto [outer, inner] = detail::around(dims, m);
  std::size_t din = dims[m], dout = f.rows();
  if (f.cols() != din) throw DimensionMismatch("map_leg: map " + f.shape() + " on leg of dimension " + std::to_string(din));
  if (x.size() != outer * din * inner) throw DimensionMismatch("map_leg: tensor length mismatch");
  Vec<T> r(outer * dout * inner, T(0));
  for (std::size_t a = 0; a < outer; ++a)
    for (std::size_t j = 0; j < din; ++j)
      for (std::size_t b = 0; b < inner; ++b) {
        const T& v = x[(a * din + j) * inner + b];
        if (v.is_zero()) continue;
        for (std::size_t o = 0; o < dout; ++o) {
          const T& fo = f(o, j);
          if (!fo.is_zero()) r[(a * dout + o) * inner + b] += fo * v;
        }
      }
  return r;
}

/// Inserts a new leg holding vector u before position m (m == dims.size()
/// appends).  Used for x_{1b3}-style unit insertions.
template <class T>
Vec<T> insert_leg(const std::vector<std::size_t>& dims, const Vec<T>& x, std::size_t m, const Vec<T>& u) {
  if (m > dims.size()) throw DimensionMismatch("insert_leg position out of range");
  std::size_t outer = 1, inner = 1;
  for (std::size_t l = 0; l < m; ++l) outer *= dims[l];
  for (std::size_t l = m; l < dims.size(); ++l) inner *= dims[l];
  std::size_t d = u.size();
  Vec<T> r(outer * d * inner, T(0));
  for (std::size_t a = 0; a < outer; ++a)
    for (std::size_t b = 0; b < inner; ++b) {
      const T& v = x[a * inner + b];
      if (v.is_zero()) continue;
      for (std::size_t k = 0; k < d; ++k)
        if (!u[k].is_zero()) r[(a * d + k) * inner + b] = v * u[k];
    }
  return r;
}

/// Evaluates a functional on leg m, removing that leg.
template <class T>
Vec<T> contract_leg(const std::vector<std::size_t>& dims, const Vec<T>& x, std::size_t m, const Vec<T>& f) {
  auto [outer, inner] = detail::around(dims, m);
  std::size_t d = dims[m];
  if (f.size() != d) throw DimensionMismatch("contract_leg: functional length mismatch");
  Vec<T> r(outer * inner, T(0));
  for (std::size_t a = 0; a < outer; ++a)
    for (std::size_t j = 0; j < d; ++j) {
      if (f[j].is_zero()) continue;
      for (std::size_t b = 0; b < inner; ++b) {
        const T& v = x[(a * d + j) * inner + b];
        if (!v.is_zero()) r[a * inner + b] += f[j] * v;
      }
    }
  return r;
}

/// Multiplies legs m and m+1 together inside algebra A (both legs must be A).
template <class T>
Vec<T> fuse_legs(const std::vector<std::size_t>& dims, const Vec<T>& x, std::size_t m, const ComponentAlgebra<T>& A) {
  if (m + 1 >= dims.size()) throw DimensionMismatch("fuse_legs: need two legs");
  std::size_t d = A.dim();
  if (dims[m] != d || dims[m + 1] != d) throw DimensionMismatch("fuse_legs: legs do not match the algebra");
  std::size_t outer = 1, inner = 1;
  for (std::size_t l = 0; l < m; ++l) outer *= dims[l];
  for (std::size_t l = m + 2; l < dims.size(); ++l) inner *= dims[l];
  Vec<T> r(outer * d * inner, T(0));
  for (std::size_t a = 0; a < outer; ++a)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const auto& terms = A.basis_product(i, j);
        if (terms.empty()) continue;
        for (std::size_t b = 0; b < inner; ++b) {
          const T& v = x[((a * d + i) * d + j) * inner + b];
          if (v.is_zero()) continue;
          for (const auto& [k, c] : terms) r[(a * d + k) * inner + b] += v * c;
        }
      }
  return r;
}

/// Tensor product of algebras A_1 (x) ... (x) A_k with componentwise product.
template <class T>
class TensorAlgebra {
 public:
  TensorAlgebra() = default;
  explicit TensorAlgebra(std::vector<const ComponentAlgebra<T>*> legs) : legs_(std::move(legs)) {
    for (auto* l : legs_) dims_.push_back(l->dim());
  }

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim() const { return dims_product(dims_); }
  std::size_t legs() const { return legs_.size(); }
  const ComponentAlgebra<T>& leg(std::size_t m) const { return *legs_[m]; }

  Vec<T> unit() const {
    Vec<T> u{T(1)};
    for (auto* l : legs_) u = kron(u, l->unit());
    return u;
  }

  /// Pure tensor of per-leg vectors.
  Vec<T> pure(const std::vector<Vec<T>>& parts) const {
    Vec<T> u{T(1)};
    for (const auto& p : parts) u = kron(u, p);
    return u;
  }

  Vec<T> mul(const Vec<T>& x, const Vec<T>& y) const {
    std::size_t n = dim();
    if (x.size() != n || y.size() != n) throw DimensionMismatch("tensor product length mismatch");
    if (legs_.empty()) return {x[0] * y[0]};
    if (legs_.size() == 1) return legs_[0]->mul(x, y);
    std::vector<std::size_t> xs, ys;
    for (std::size_t i = 0; i < n; ++i) {
      if (!x[i].is_zero()) xs.push_back(i);
      if (!y[i].is_zero()) ys.push_back(i);
    }
    Vec<T> r(n, T(0));
    std::size_t k = legs_.size();
    std::vector<std::size_t> xi(k), yi(k);
    for (auto a : xs) {
      split(a, xi);
      for (auto b : ys) {
        split(b, yi);
        T coef = x[a] * y[b];
        accumulate(r, xi, yi, 0, 0, coef);
      }
    }
    return r;
  }

  /// Inverse by the minimal polynomial of left multiplication: powers of x
  /// are reduced incrementally until the first linear dependence.  Returns
  /// nullopt when x is not invertible.
  std::optional<Vec<T>> inverse(const Vec<T>& x) const {
    std::size_t n = dim();
    struct Row {
      Vec<T> v;
      std::size_t pivot;
      Vec<T> combo;  // v = sum_k combo[k] x^k
    };
    std::vector<Row> rows;
    Vec<T> power = unit();
    for (std::size_t m = 0; m <= n; ++m) {
      Vec<T> v = power;
      Vec<T> combo(m + 1, T(0));
      combo[m] = T(1);
      for (const auto& r : rows) {
        if (v[r.pivot].is_zero()) continue;
        T f = v[r.pivot];
        axpy(v, -f, r.v);
        for (std::size_t k = 0; k < r.combo.size(); ++k)
          if (!r.combo[k].is_zero()) combo[k] -= f * r.combo[k];
      }
      std::size_t piv = 0;
      while (piv < n && v[piv].is_zero()) ++piv;
      if (piv == n) {
        // 0 = sum_k combo[k] x^k with combo[m] = 1: the minimal polynomial.
        if (combo[0].is_zero()) return std::nullopt;
        Vec<T> inv(n, T(0));
        Vec<T> p = unit();
        for (std::size_t k = 1; k <= m; ++k) {
          axpy(inv, combo[k], p);
          if (k < m) p = mul(p, x);
        }
        return scale(-T(1) / combo[0], inv);
      }
      T inv_p = T(1) / v[piv];
      v = scale(inv_p, v);
      combo = scale(inv_p, combo);
      rows.push_back({std::move(v), piv, std::move(combo)});
      for (auto& r : rows) r.combo.resize(m + 2, T(0));
      power = mul(power, x);
    }
    return std::nullopt;
  }

 private:
  void split(std::size_t flat, std::vector<std::size_t>& idx) const {
    for (std::size_t m = legs_.size(); m-- > 0;) {
      idx[m] = flat % dims_[m];
      flat /= dims_[m];
    }
  }

  void accumulate(Vec<T>& r, const std::vector<std::size_t>& xi, const std::vector<std::size_t>& yi, std::size_t m,
                  std::size_t flat, const T& coef) const {
    if (m == legs_.size()) {
      r[flat] += coef;
      return;
    }
    for (const auto& [k, c] : legs_[m]->basis_product(xi[m], yi[m]))
      accumulate(r, xi, yi, m + 1, flat * dims_[m] + k, coef * c);
  }

  std::vector<const ComponentAlgebra<T>*> legs_;
  std::vector<std::size_t> dims_;
};

}  // namespace crossed
