#pragma once

// The Drinfeld double of an ordinary finite-dimensional Hopf algebra,
// written directly from the classical formulas with raw loops over the
// structure constants.  It shares no code with the crossed construction and
// serves as its oracle at the trivial group and for D(H_pk).
//
// D(A) = A (x) A*, basis e_i (x) e^p at index i*d + p.

#include "crossed/hopf.hpp"

namespace crossed {

template <class T>
struct ClassicalDouble {
  HopfAlgebra<T> hopf;
  Vec<T> r;  // sum_i (e_i (x) eps) (x) (1 (x) e^i)
};

template <class T>
ClassicalDouble<T> classical_double(const HopfAlgebra<T>& A) {
  const std::size_t d = A.dim(), D = d * d;
  auto c = [&](std::size_t i, std::size_t j, std::size_t k) -> const T& { return A.algebra.c(i, j, k); };
  auto dl = [&](std::size_t x, std::size_t y, std::size_t h) -> const T& { return A.delta(x * d + y, h); };
  Matrix<T> Sinv = invert_matrix(A.antipode);
  const Vec<T>& one = A.algebra.unit();

  // (Delta (x) id) Delta e_i, as coefficients [i][(a*d+b)*d+c]
  std::vector<Vec<T>> d3(d, Vec<T>(d * d * d, T(0)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y) {
        if (dl(x, y, i).is_zero()) continue;
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = 0; b < d; ++b)
            if (!dl(a, b, x).is_zero()) d3[i][(a * d + b) * d + y] += dl(a, b, x) * dl(x, y, i);
      }

  // e^p e^q = sum_y <Delta e_y, e_p (x) e_q> e^y
  auto dual_mul = [&](const Vec<T>& f, const Vec<T>& g) {
    Vec<T> r(d, T(0));
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t p = 0; p < d; ++p) {
        if (f[p].is_zero()) continue;
        for (std::size_t q = 0; q < d; ++q)
          if (!g[q].is_zero()) r[y] += f[p] * g[q] * dl(p, q, y);
      }
    return r;
  };
  auto alg_mul = [&](const Vec<T>& x, const Vec<T>& y) {
    Vec<T> r(d, T(0));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        if (x[i].is_zero() || y[j].is_zero()) continue;
        for (std::size_t k = 0; k < d; ++k) r[k] += x[i] * y[j] * c(i, j, k);
      }
    return r;
  };
  auto e = [&](std::size_t i) {
    Vec<T> v(d, T(0));
    v[i] = T(1);
    return v;
  };

  // (e_i (x) e^p)(e_k (x) e^q) = sum e_b e_k (x) e^p G with
  // G(v) = e^q(S^-1(e_c) v e_a), e_a (x) e_b (x) e_c running over Delta3(e_i).
  Vec<T> mu(D * D * D, T(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t cc = 0; cc < d; ++cc) {
          const T& coef = d3[i][(a * d + b) * d + cc];
          if (coef.is_zero()) continue;
          auto left = Sinv.column(cc);
          for (std::size_t q = 0; q < d; ++q) {
            Vec<T> G(d, T(0));
            for (std::size_t v = 0; v < d; ++v) G[v] = alg_mul(alg_mul(left, e(v)), e(a))[q];
            for (std::size_t p = 0; p < d; ++p) {
              auto fg = dual_mul(e(p), G);
              for (std::size_t k = 0; k < d; ++k) {
                auto hk = alg_mul(e(b), e(k));
                std::size_t I = i * d + p, J = k * d + q;
                for (std::size_t x = 0; x < d; ++x) {
                  if (hk[x].is_zero()) continue;
                  for (std::size_t y = 0; y < d; ++y)
                    if (!fg[y].is_zero()) mu[(I * D + J) * D + x * d + y] += coef * hk[x] * fg[y];
                }
              }
            }
          }
        }
  Vec<T> unit(D, T(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t p = 0; p < d; ++p) unit[i * d + p] = one[i] * A.counit[p];
  ComponentAlgebra<T> alg(D, std::move(mu), unit);

  // Delta(h (x) f) = (h' (x) f') (x) (h'' (x) f''), <f' (x) f'', x (x) y> = f(yx)
  Matrix<T> delta(D * D, D);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v) {
          if (dl(u, v, i).is_zero()) continue;
          for (std::size_t x = 0; x < d; ++x)
            for (std::size_t y = 0; y < d; ++y) {
              const T& f = c(y, x, p);
              if (!f.is_zero()) delta((u * d + x) * D + v * d + y, i * d + p) += dl(u, v, i) * f;
            }
        }

  // eps(h (x) f) = eps(h) f(1)
  Vec<T> counit(D, T(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t p = 0; p < d; ++p) counit[i * d + p] = A.counit[i] * one[p];

  // S(h (x) f) = (S(h) (x) eps)(1 (x) (S*)^-1 f); (S*)^-1 = (S^-1)^T
  Matrix<T> S(D, D);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t p = 0; p < d; ++p) {
      Vec<T> l(D, T(0)), r(D, T(0));
      auto sh = A.antipode.column(i);
      for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
          l[x * d + y] = sh[x] * A.counit[y];
          r[x * d + y] = one[x] * Sinv(p, y);
        }
      auto s = alg.mul(l, r);
      for (std::size_t m = 0; m < D; ++m) S(m, i * d + p) = s[m];
    }

  ClassicalDouble<T> out{{A.field, std::move(alg), std::move(delta), std::move(counit), std::move(S)}, Vec<T>(D * D, T(0))};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y)
        for (std::size_t p = 0; p < d; ++p) {
          // (e_i (x) eps)[x*d+p'] (x) (1 (x) e^i)[y*d+p]
          T left = (x == i ? T(1) : T(0));
          for (std::size_t pp = 0; pp < d; ++pp) {
            T l = left * A.counit[pp];
            T r = one[y] * (p == i ? T(1) : T(0));
            if (!l.is_zero() && !r.is_zero()) out.r[(x * d + pp) * D + y * d + p] += l * r;
          }
        }
  return out;
}

}  // namespace crossed
