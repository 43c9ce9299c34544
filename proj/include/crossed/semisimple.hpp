#pragma once

// Semisimplicity of the component algebras by the regular trace form, valid
// in characteristic 0.

#include "crossed/tcoalgebra.hpp"

namespace crossed {

struct SemisimplicityVerdict {
  std::string field;
  std::vector<std::size_t> dims;
  std::vector<std::size_t> ranks;  // rank of the trace form per component
  std::vector<bool> components;
  bool overall = false;
  bool h1 = false;          // verdict for the identity component
  bool consistent = false;  // h1 == overall, as it must be for a T-coalgebra
};

/// T(a,b) = tr(L_a L_b) of the left regular representation:
/// T[i][j] = sum_k c[i][j][k] tr(L_{e_k}).
template <class T>
Matrix<T> trace_form(const ComponentAlgebra<T>& A) {
  std::size_t d = A.dim();
  Vec<T> tr(d, T(0));
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t m = 0; m < d; ++m) tr[k] += A.c(k, m, m);
  Matrix<T> M(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) M(i, j) += A.c(i, j, k) * tr[k];
  return M;
}

/// Throws UnsupportedCharacteristic over GF(p).
template <class T>
bool algebra_semisimple(const ComponentAlgebra<T>& A, const FieldSpec& f) {
  if (!ScalarTraits<T>::characteristic_zero || !f.is_rational())
    throw UnsupportedCharacteristic("the trace-form criterion needs characteristic 0, field is " + f.name());
  return rank(trace_form(A)) == A.dim();
}

template <class T>
SemisimplicityVerdict is_semisimple(const TCoalgebra<T>& H) {
  if (!ScalarTraits<T>::characteristic_zero || !H.field.is_rational())
    throw UnsupportedCharacteristic("the trace-form criterion needs characteristic 0, field is " + H.field.name());
  SemisimplicityVerdict v;
  v.field = H.field.name();
  v.overall = true;
  for (std::size_t a = 0; a < H.n(); ++a) {
    std::size_t r = rank(trace_form(H.H(a)));
    v.dims.push_back(H.dim(a));
    v.ranks.push_back(r);
    v.components.push_back(r == H.dim(a));
    v.overall = v.overall && v.components.back();
  }
  v.h1 = v.components[H.one()];
  v.consistent = v.h1 == v.overall;
  return v;
}

}  // namespace crossed
