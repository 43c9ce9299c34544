#pragma once

// Built-in examples, constructed over any supported field.

#include <optional>
#include <string>

#include "crossed/constructions.hpp"
#include "crossed/families.hpp"

namespace crossed {

template <class T>
struct Example {
  std::string name;
  TCoalgebra<T> H;
  std::optional<RMatrixFamily<T>> R;
};

/// k as a Hopf algebra.
template <class T>
HopfAlgebra<T> trivial_hopf(const FieldSpec& f) {
  ComponentAlgebra<T> A(1, {T(1)}, {T(1)});
  return {f, A, Matrix<T>::identity(1), {T(1)}, Matrix<T>::identity(1)};
}

/// k[G]: e_g e_h = e_gh, Delta e_g = e_g (x) e_g, S e_g = e_{g^-1}.
template <class T>
HopfAlgebra<T> group_algebra(const FiniteGroup& G, const FieldSpec& f) {
  std::size_t n = G.order();
  auto A = ComponentAlgebra<T>::from_products(
      n, [&](std::size_t i, std::size_t j) { return unit_vec<T>(n, G.mul(i, j)); }, unit_vec<T>(n, G.identity()));
  Matrix<T> delta(n * n, n), S(n, n);
  for (std::size_t g = 0; g < n; ++g) {
    delta(g * n + g, g) = T(1);
    S(G.inv(g), g) = T(1);
  }
  return {f, std::move(A), std::move(delta), Vec<T>(n, T(1)), std::move(S)};
}

/// Sweedler's algebra H4 on the basis g^a x^b (index a + 2b):
/// g^2 = 1, x^2 = 0, xg = -gx, Delta g = g (x) g, Delta x = x (x) 1 + g (x) x.
template <class T>
HopfAlgebra<T> sweedler_hopf(const FieldSpec& f) {
  auto prod = [](std::size_t i, std::size_t j) {
    Vec<T> r(4, T(0));
    std::size_t a = i % 2, b = i / 2, c = j % 2, d = j / 2;
    if (b + d >= 2) return r;
    r[(a + c) % 2 + 2 * (b + d)] = (b * c) % 2 ? T(-1) : T(1);
    return r;
  };
  auto A = ComponentAlgebra<T>::from_products(4, prod, unit_vec<T>(4, 0));
  Matrix<T> delta(16, 4);
  delta(0 * 4 + 0, 0) = T(1);  // 1 -> 1 (x) 1
  delta(1 * 4 + 1, 1) = T(1);  // g -> g (x) g
  delta(2 * 4 + 0, 2) = T(1);  // x -> x (x) 1 + g (x) x
  delta(1 * 4 + 2, 2) = T(1);
  delta(3 * 4 + 1, 3) = T(1);  // gx -> gx (x) g + 1 (x) gx
  delta(0 * 4 + 3, 3) = T(1);
  Matrix<T> S(4, 4);
  S(0, 0) = T(1);
  S(1, 1) = T(1);
  S(3, 2) = T(-1);  // S(x) = -gx
  S(2, 3) = T(1);   // S(gx) = x
  return {f, std::move(A), std::move(delta), Vec<T>{T(1), T(1), T(0), T(0)}, std::move(S)};
}

/// R0 = (1 (x) 1 + 1 (x) g + g (x) 1 - g (x) g) / 2 on H4.
template <class T>
Vec<T> sweedler_r0(const FieldSpec& f) {
  if (!f.is_rational() && f.p == 2) throw PreconditionFailed("R0 needs 2 to be invertible");
  T h = ScalarTraits<T>::make(f, 1, 2);
  Vec<T> r(16, T(0));
  r[0 * 4 + 0] = h;
  r[0 * 4 + 1] = h;
  r[1 * 4 + 0] = h;
  r[1 * 4 + 1] = -h;
  return r;
}

/// H_a = k delta_a with Delta_{a,b}(delta_ab) = delta_a (x) delta_b,
/// s_a(delta_a) = delta_{a^-1}, phi_b(delta_a) = delta_{bab^-1}.
template <class T>
TCoalgebra<T> function_tcoalgebra(const FiniteGroup& G, const FieldSpec& f) {
  std::size_t n = G.order();
  TCoalgebra<T> H;
  H.field = f;
  H.group = G;
  H.components.assign(n, ComponentAlgebra<T>(1, {T(1)}, {T(1)}));
  H.delta.assign(n * n, Matrix<T>::identity(1));
  H.counit = {T(1)};
  H.antipode.assign(n, Matrix<T>::identity(1));
  H.phi.assign(n * n, Matrix<T>::identity(1));
  return H;
}

/// H4 over Z/2, the generator acting by g -> g, x -> -x.
template <class T>
TCoalgebra<T> sweedler_z2(const FieldSpec& f) {
  Matrix<T> flip = Matrix<T>::identity(4);
  flip(2, 2) = T(-1);
  flip(3, 3) = T(-1);
  return thcoalgebra(sweedler_hopf<T>(f), cyclic_group(2), {Matrix<T>::identity(4), flip});
}

/// k[G] for abelian G, with Z/2 acting by inversion.
template <class T>
TCoalgebra<T> group_hopf_inversion(const FiniteGroup& G, const FieldSpec& f) {
  if (!G.abelian()) throw PreconditionFailed("inversion is an automorphism only for abelian groups");
  std::size_t n = G.order();
  Matrix<T> inv(n, n);
  for (std::size_t g = 0; g < n; ++g) inv(G.inv(g), g) = T(1);
  return thcoalgebra(group_algebra<T>(G, f), cyclic_group(2), {Matrix<T>::identity(n), inv});
}

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"trivial-k",    "group-algebra",         "function-tcoalg",
                                              "sweedler-z2",  "sweedler-classical-qt", "group-hopf"};
  return names;
}

/// Looks up a built-in example.  `name` may carry its group in parentheses,
/// as in "function-tcoalg(S3)"; otherwise `group` is used, falling back to
/// each example's default (S3 for function-tcoalg, Z2 for group-algebra,
/// Z3 for group-hopf).
template <class T>
Example<T> builtin(std::string name, const FieldSpec& f, std::string group = "") {
  if (auto open = name.find('('); open != std::string::npos) {
    if (name.back() != ')') throw UnknownExample("malformed example name '" + name + "'");
    group = name.substr(open + 1, name.size() - open - 2);
    name = name.substr(0, open);
  }
  auto pick = [&](const char* dflt) {
    if (group.empty()) group = dflt;
    return builtin_group(group);
  };
  Example<T> ex;
  if (name == "trivial-k") {
    ex.H = as_tcoalgebra(trivial_hopf<T>(f));
  } else if (name == "group-algebra") {
    auto G = pick("Z2");
    ex.H = as_tcoalgebra(group_algebra<T>(G, f));
    name += "(" + group + ")";
  } else if (name == "function-tcoalg") {
    auto G = pick("S3");
    ex.H = function_tcoalgebra<T>(G, f);
    name += "(" + group + ")";
  } else if (name == "sweedler-z2") {
    ex.H = sweedler_z2<T>(f);
  } else if (name == "sweedler-classical-qt") {
    ex.H = as_tcoalgebra(sweedler_hopf<T>(f));
    ex.R = make_rmatrix(ex.H, {sweedler_r0<T>(f)});
  } else if (name == "group-hopf") {
    auto G = pick("Z3");
    ex.H = group_hopf_inversion<T>(G, f);
    name += "(" + group + ")";
  } else {
    throw UnknownExample("unknown example '" + name + "'");
  }
  ex.name = name;
  require_valid(ex.H, ex.name);
  return ex;
}

}  // namespace crossed
