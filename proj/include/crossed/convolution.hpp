#pragma once

// Convolution algebras Conv_A(H) = (+)_b Hom(H_b, A) with
// (f1 * f2)(h) = f1(h') f2(h'').

#include "crossed/tcoalgebra.hpp"

namespace crossed {

/// f1: H_{b1} -> A and f2: H_{b2} -> A given as matrices; returns the
/// convolution product H_{b1 b2} -> A.
template <class T>
Matrix<T> convolution_product(const TCoalgebra<T>& H, const ComponentAlgebra<T>& A, std::size_t b1, const Matrix<T>& f1,
                              std::size_t b2, const Matrix<T>& f2) {
  if (f1.rows() != A.dim() || f2.rows() != A.dim() || f1.cols() != H.dim(b1) || f2.cols() != H.dim(b2))
    throw DimensionMismatch("convolution_product: maps " + f1.shape() + " and " + f2.shape());
  std::size_t b = H.group.mul(b1, b2), d1 = H.dim(b1), d2 = H.dim(b2);
  const auto& D = H.Delta(b1, b2);
  Matrix<T> r(A.dim(), H.dim(b));
  for (std::size_t h = 0; h < H.dim(b); ++h) {
    Vec<T> acc(A.dim(), T(0));
    for (std::size_t x = 0; x < d1; ++x)
      for (std::size_t y = 0; y < d2; ++y) {
        const T& c = D(x * d2 + y, h);
        if (c.is_zero()) continue;
        axpy(acc, c, A.mul(f1.column(x), f2.column(y)));
      }
    for (std::size_t k = 0; k < A.dim(); ++k) r(k, h) = acc[k];
  }
  return r;
}

/// The neutral element eta o eps : H_1 -> H_g of Conv_g(H).
template <class T>
Matrix<T> convolution_unit(const TCoalgebra<T>& H, std::size_t g) {
  std::size_t e = H.one();
  Matrix<T> r(H.dim(g), H.dim(e));
  for (std::size_t h = 0; h < H.dim(e); ++h)
    for (std::size_t k = 0; k < H.dim(g); ++k) r(k, h) = H.counit[h] * H.H(g).unit()[k];
  return r;
}

/// For f: H_a -> H_g finds g: H_{a^-1} -> H_g with f*g = g*f = eta o eps by
/// solving the linear system for the entries of g.
template <class T>
Matrix<T> convolution_inverse(const TCoalgebra<T>& H, std::size_t a, std::size_t g, const Matrix<T>& f) {
  const auto& G = H.group;
  const auto& A = H.H(g);
  std::size_t ai = G.inv(a), e = G.identity();
  std::size_t da = H.dim(a), dai = H.dim(ai), dg = A.dim(), d1 = H.dim(e);
  if (f.rows() != dg || f.cols() != da) throw DimensionMismatch("convolution_inverse: map " + f.shape());
  // Unknown g(e_y) = sum_k X[k][y] e_k, flattened at k*dai + y.
  std::size_t unknowns = dg * dai;
  Matrix<T> M(2 * d1 * dg, unknowns), rhs(2 * d1 * dg, 1);
  auto target = convolution_unit(H, g);
  for (int side = 0; side < 2; ++side) {
    // side 0: (f * g)(h) via Delta_{a,a^-1}; side 1: (g * f)(h) via Delta_{a^-1,a}.
    const auto& D = side == 0 ? H.Delta(a, ai) : H.Delta(ai, a);
    std::size_t dl = side == 0 ? da : dai, dr = side == 0 ? dai : da;
    for (std::size_t h = 0; h < d1; ++h) {
      std::size_t row0 = (side * d1 + h) * dg;
      for (std::size_t m = 0; m < dg; ++m) rhs(row0 + m, 0) = target(m, h);
      for (std::size_t x = 0; x < dl; ++x)
        for (std::size_t y = 0; y < dr; ++y) {
          const T& c = D(x * dr + y, h);
          if (c.is_zero()) continue;
          for (std::size_t k = 0; k < dg; ++k) {
            // side 0: f(e_x) e_k with unknown X[k][y]; side 1: e_k f(e_y) with X[k][x].
            Vec<T> p = side == 0 ? A.mul(f.column(x), unit_vec<T>(dg, k)) : A.mul(unit_vec<T>(dg, k), f.column(y));
            std::size_t col = k * dai + (side == 0 ? y : x);
            for (std::size_t m = 0; m < dg; ++m)
              if (!p[m].is_zero()) M(row0 + m, col) += c * p[m];
          }
        }
    }
  }
  auto sol = solve(M, rhs);
  if (!sol) throw NotConvolutionInvertible("no convolution inverse for the given map on H_" + G.name(a));
  Matrix<T> r(dg, dai);
  for (std::size_t k = 0; k < dg; ++k)
    for (std::size_t y = 0; y < dai; ++y) r(k, y) = (*sol)(k * dai + y, 0);
  return r;
}

}  // namespace crossed
