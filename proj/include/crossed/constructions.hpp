#pragma once

// Structures built from other structures: T-H-coalgebras from a Hopf algebra
// with a group action, the coopposite and the mirror.

#include "crossed/hopf.hpp"

namespace crossed {

namespace detail {

/// Applies f to leg m of every column of D (D maps into a tensor product
/// with the given leg dimensions).
template <class T>
Matrix<T> map_leg_columns(const Matrix<T>& D, const std::vector<std::size_t>& dims, std::size_t m, const Matrix<T>& f) {
  std::vector<Vec<T>> cols;
  for (std::size_t j = 0; j < D.cols(); ++j) cols.push_back(map_leg(dims, D.column(j), m, f));
  auto out = dims;
  out[m] = f.rows();
  return Matrix<T>::from_columns(cols, dims_product(out));
}

/// Matrix of the flip composed after D: rows (x,y) become (y,x).
template <class T>
Matrix<T> flip_rows(const Matrix<T>& D, std::size_t d1, std::size_t d2) {
  Matrix<T> r(D.rows(), D.cols());
  for (std::size_t x = 0; x < d1; ++x)
    for (std::size_t y = 0; y < d2; ++y)
      for (std::size_t j = 0; j < D.cols(); ++j) r(y * d1 + x, j) = D(x * d2 + y, j);
  return r;
}

}  // namespace detail

/// Checks that f is a Hopf automorphism of A; throws NotHopfAutomorphism
/// with the first failing identity.
template <class T>
void require_hopf_automorphism(const HopfAlgebra<T>& A, const Matrix<T>& f, const std::string& label) {
  std::size_t d = A.dim();
  auto fail = [&](const std::string& w) { throw NotHopfAutomorphism(label + ": " + w); };
  if (f.rows() != d || f.cols() != d) fail("shape " + f.shape());
  if (rank(f) != d) fail("not invertible");
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j)
      if (auto w = compare("i=" + std::to_string(i) + ",j=" + std::to_string(j), f.apply(A.algebra.mul(unit_vec<T>(d, i), unit_vec<T>(d, j))),
                           A.algebra.mul(f.column(i), f.column(j))))
        fail("not multiplicative at " + w->where + ", " + w->witness);
    auto dl = A.delta.apply(f.column(i));
    auto dr = map_leg({d, d}, map_leg({d, d}, A.delta.column(i), 0, f), 1, f);
    if (auto w = compare("i=" + std::to_string(i), dl, dr)) fail("does not commute with Delta at " + w->where + ", " + w->witness);
    T ef(0);
    for (std::size_t k = 0; k < d; ++k) ef += A.counit[k] * f(k, i);
    if (!(ef == A.counit[i])) fail("does not preserve the counit at i=" + std::to_string(i));
    if (auto w = compare("i=" + std::to_string(i), A.antipode.apply(f.column(i)), f.apply(A.antipode.column(i))))
      fail("does not commute with the antipode at " + w->where + ", " + w->witness);
  }
  if (auto w = compare(std::string("unit"), f.apply(A.algebra.unit()), A.algebra.unit())) fail("does not fix the unit");
}

/// The T-coalgebra with every component equal to A, Delta_{a,b} = Delta,
/// s_a = s and phi_b = action[b].
template <class T>
TCoalgebra<T> thcoalgebra(const HopfAlgebra<T>& A, const FiniteGroup& G, const std::vector<Matrix<T>>& action) {
  std::size_t n = G.order();
  if (action.size() != n) throw ShapeMismatch("expected one automorphism per group element, got " + std::to_string(action.size()));
  for (std::size_t b = 0; b < n; ++b) require_hopf_automorphism(A, action[b], "action of " + G.name(b));
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t c = 0; c < n; ++c)
      if (!(mul(action[b], action[c]) == action[G.mul(b, c)]))
        throw NotHomomorphism("action(" + G.name(b) + ") action(" + G.name(c) + ") != action(" + G.name(G.mul(b, c)) + ")");
  TCoalgebra<T> H;
  H.field = A.field;
  H.group = G;
  H.components.assign(n, A.algebra);
  H.delta.assign(n * n, A.delta);
  H.counit = A.counit;
  H.antipode.assign(n, A.antipode);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a) H.phi.push_back(action[b]);
  return H;
}

/// s_a^-1 : H_{a^-1} -> H_a for every a.
template <class T>
std::vector<Matrix<T>> antipode_inverse(const TCoalgebra<T>& H) {
  std::vector<Matrix<T>> r;
  for (std::size_t a = 0; a < H.n(); ++a) {
    const auto& s = H.S(a);
    if (!s.square()) throw AntipodeNotInvertible("s_" + H.group.name(a) + " has shape " + s.shape());
    try {
      r.push_back(invert_matrix(s));
    } catch (const SingularMatrix& err) {
      throw AntipodeNotInvertible("s_" + H.group.name(a) + " is singular (" + err.what() + ")");
    }
  }
  return r;
}

/// H^cop_a = H_{a^-1}, Delta^cop_{a,b} = flip o Delta_{b^-1,a^-1},
/// s^cop_a = s_a^-1, phi and eps unchanged.
template <class T>
TCoalgebra<T> coopposite(const TCoalgebra<T>& H) {
  check_shapes(H);
  const auto& G = H.group;
  std::size_t n = G.order();
  auto sinv = antipode_inverse(H);
  TCoalgebra<T> C;
  C.field = H.field;
  C.group = G;
  for (std::size_t a = 0; a < n; ++a) C.components.push_back(H.H(G.inv(a)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t ai = G.inv(a), bi = G.inv(b);
      C.delta.push_back(detail::flip_rows(H.Delta(bi, ai), H.dim(bi), H.dim(ai)));
    }
  C.counit = H.counit;
  C.antipode = std::move(sinv);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a) C.phi.push_back(H.Phi(b, G.inv(a)));
  return C;
}

/// The mirror: H_a replaced by H_{a^-1}, Delta_{a,b}(h) = phi_b(h') (x) h''
/// with h' in H_{b^-1 a^-1 b}, h'' in H_{b^-1}, and s_a = phi_a o s_{a^-1}.
template <class T>
TCoalgebra<T> mirror(const TCoalgebra<T>& H) {
  check_shapes(H);
  const auto& G = H.group;
  std::size_t n = G.order();
  TCoalgebra<T> M;
  M.field = H.field;
  M.group = G;
  for (std::size_t a = 0; a < n; ++a) M.components.push_back(H.H(G.inv(a)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t bi = G.inv(b), x = G.conj(bi, G.inv(a));  // b^-1 a^-1 b
      M.delta.push_back(detail::map_leg_columns(H.Delta(x, bi), H.dims({x, bi}), 0, H.Phi(b, x)));
    }
  M.counit = H.counit;
  for (std::size_t a = 0; a < n; ++a) M.antipode.push_back(mul(H.Phi(a, a), H.S(G.inv(a))));
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a) M.phi.push_back(H.Phi(b, G.inv(a)));
  return M;
}

}  // namespace crossed
