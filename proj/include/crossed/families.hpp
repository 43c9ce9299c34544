#pragma once

// Grade-indexed families of elements: universal R-matrices R_{a,b} in
// H_a (x) H_b with their inverses, and twists theta_a in H_a.

#include "crossed/tcoalgebra.hpp"

namespace crossed {

template <class T>
struct RMatrixFamily {
  std::size_t n = 0;
  std::vector<Vec<T>> r;     // [a*n + b]
  std::vector<Vec<T>> rinv;  // [a*n + b]

  const Vec<T>& R(std::size_t a, std::size_t b) const { return r[a * n + b]; }
  const Vec<T>& Rinv(std::size_t a, std::size_t b) const { return rinv[a * n + b]; }
  friend bool operator==(const RMatrixFamily&, const RMatrixFamily&) = default;
};

/// Inverts x in H_a (x) H_b (or in H_a alone when b is omitted); throws
/// NotInvertible.
template <class T>
Vec<T> invert_in(const TCoalgebra<T>& H, std::vector<std::size_t> grades, const Vec<T>& x, const std::string& what) {
  auto A = H.tensor(std::move(grades));
  if (x.size() != A.dim()) throw ShapeMismatch(what + " has length " + std::to_string(x.size()) + ", expected " + std::to_string(A.dim()));
  auto inv = A.inverse(x);
  if (!inv) throw NotInvertible(what + " is not invertible");
  return *inv;
}

/// Attaches inverses to the given R-matrix entries.  When `rinv` is
/// supplied it is checked to be a two-sided inverse instead.
template <class T>
RMatrixFamily<T> make_rmatrix(const TCoalgebra<T>& H, std::vector<Vec<T>> r, std::vector<Vec<T>> rinv = {}) {
  const auto& G = H.group;
  std::size_t n = G.order();
  if (r.size() != n * n) throw ShapeMismatch("R-matrix family needs " + std::to_string(n * n) + " entries");
  RMatrixFamily<T> F;
  F.n = n;
  F.r = std::move(r);
  if (rinv.empty()) {
    std::vector<Vec<T>> inv(n * n);
    parallel_for(n * n, [&](std::size_t k) {
      std::size_t a = k / n, b = k % n;
      inv[k] = invert_in(H, {a, b}, F.r[k], "R(" + G.name(a) + "," + G.name(b) + ")");
    });
    F.rinv = std::move(inv);
  } else {
    if (rinv.size() != n * n) throw ShapeMismatch("inverse family has the wrong size");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        auto A = H.tensor({a, b});
        const auto& x = F.r[a * n + b];
        const auto& y = rinv[a * n + b];
        if (x.size() != A.dim() || y.size() != A.dim()) throw ShapeMismatch("R-matrix entry has the wrong length");
        if (!(A.mul(x, y) == A.unit()) || !(A.mul(y, x) == A.unit()))
          throw NotInvertible("supplied inverse of R(" + G.name(a) + "," + G.name(b) + ") is not two-sided");
      }
    F.rinv = std::move(rinv);
  }
  return F;
}

template <class T>
RMatrixFamily<T> trivial_rmatrix(const TCoalgebra<T>& H) {
  std::vector<Vec<T>> r;
  for (std::size_t a = 0; a < H.n(); ++a)
    for (std::size_t b = 0; b < H.n(); ++b) r.push_back(kron(H.H(a).unit(), H.H(b).unit()));
  auto inv = r;
  return make_rmatrix(H, std::move(r), std::move(inv));
}

template <class T>
struct TwistFamily {
  std::vector<Vec<T>> t;  // [a]
  const Vec<T>& at(std::size_t a) const { return t[a]; }
  friend bool operator==(const TwistFamily&, const TwistFamily&) = default;
};

/// Componentwise inverse of a family of elements.
template <class T>
TwistFamily<T> invert_family(const TCoalgebra<T>& H, const TwistFamily<T>& x) {
  if (x.t.size() != H.n()) throw ShapeMismatch("family needs one element per group element");
  TwistFamily<T> r;
  for (std::size_t a = 0; a < H.n(); ++a) r.t.push_back(invert_in(H, {a}, x.t[a], "element in grade " + H.group.name(a)));
  return r;
}

}  // namespace crossed
