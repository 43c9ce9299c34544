#pragma once

// Duals of a finite-type T-coalgebra: the outer dual T-algebra of
// componentwise duals, the inner dual built on its packed form, and the
// coopposite inner dual.

#include "crossed/constructions.hpp"

namespace crossed {

/// Component a is H_a* with the coalgebra dual to the product of H_a;
/// mu_{a,b} = Delta_{a,b}^T, unit eps, S_a = s_{a^-1}^T and
/// psi_b on H_a* = (phi_{b^-1} on H_{bab^-1})^T.
template <class T>
TAlgebra<T> outer_dual(const TCoalgebra<T>& H) {
  check_shapes(H);
  const auto& G = H.group;
  std::size_t n = G.order();
  TAlgebra<T> A;
  A.field = H.field;
  A.group = G;
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t d = H.dim(a);
    ComponentCoalgebra<T> C{d, Matrix<T>(d * d, d), H.H(a).unit()};
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) C.delta(i * d + j, k) = H.H(a).c(i, j, k);
    A.components.push_back(std::move(C));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) A.mu.push_back(transpose(H.Delta(a, b)));
  A.unit = H.counit;
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a) A.psi.push_back(transpose(H.Phi(G.inv(b), G.conj(b, a))));
  for (std::size_t a = 0; a < n; ++a) A.antipode.push_back(transpose(H.S(G.inv(a))));
  return A;
}

/// The T-H-coalgebra based on the packed outer dual, with the packed
/// conjugation as the group action.
template <class T>
TCoalgebra<T> inner_dual(const TCoalgebra<T>& H) {
  auto P = pack_talgebra(outer_dual(H));
  return thcoalgebra(P.hopf, P.group, P.psi);
}

/// The packed outer dual with opposite comultiplication,
/// <Delta_*(f), h (x) k> = <f, kh>, and antipode the inverse of the packed one.
template <class T>
HopfAlgebra<T> coop_dual_hopf(const TCoalgebra<T>& H) {
  auto P = pack_talgebra(outer_dual(H));
  std::size_t N = P.hopf.dim();
  HopfAlgebra<T> C = P.hopf;
  C.delta = detail::flip_rows(P.hopf.delta, N, N);
  try {
    C.antipode = invert_matrix(P.hopf.antipode);
  } catch (const SingularMatrix&) {
    throw AntipodeNotInvertible("packed dual antipode is singular");
  }
  return C;
}

template <class T>
TCoalgebra<T> coop_inner_dual(const TCoalgebra<T>& H) {
  auto P = pack_talgebra(outer_dual(H));
  return thcoalgebra(coop_dual_hopf(H), P.group, P.psi);
}

}  // namespace crossed
