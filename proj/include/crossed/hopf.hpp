#pragma once

// Ordinary Hopf algebras, T-algebras, and the packed (graded) forms of
// T-algebras and T-coalgebras with the inverse unpacking.

#include <string>
#include <vector>

#include "crossed/tcoalgebra.hpp"

namespace crossed {

template <class T>
struct HopfAlgebra {
  FieldSpec field;
  ComponentAlgebra<T> algebra;
  Matrix<T> delta;  // (d*d) x d
  Vec<T> counit;
  Matrix<T> antipode;

  std::size_t dim() const { return algebra.dim(); }
  friend bool operator==(const HopfAlgebra&, const HopfAlgebra&) = default;
};

/// A Hopf algebra seen as a T-coalgebra over the trivial group.
template <class T>
TCoalgebra<T> as_tcoalgebra(const HopfAlgebra<T>& A) {
  TCoalgebra<T> H;
  H.field = A.field;
  H.group = trivial_group();
  H.components = {A.algebra};
  H.delta = {A.delta};
  H.counit = A.counit;
  H.antipode = {A.antipode};
  H.phi = {Matrix<T>::identity(A.dim())};
  return H;
}

/// Component 1 of a T-coalgebra as a Hopf algebra (valid when the group is
/// trivial, or for T-H-coalgebras whose components are all the same).
template <class T>
HopfAlgebra<T> component_hopf(const TCoalgebra<T>& H) {
  std::size_t e = H.one();
  return {H.field, H.H(e), H.Delta(e, e), H.counit, H.S(e)};
}

template <class T>
ValidationReport validate_hopf(const HopfAlgebra<T>& A, const std::string& subject = "Hopf algebra") {
  return validate(as_tcoalgebra(A), subject);
}

/// T-algebra: coalgebras C_a with multiplications mu_{a,b}: C_a (x) C_b ->
/// C_ab, unit in C_1, conjugations psi_b: C_a -> C_{bab^-1} and antipodes
/// S_a: C_a -> C_{a^-1}.
template <class T>
struct TAlgebra {
  FieldSpec field;
  FiniteGroup group;
  std::vector<ComponentCoalgebra<T>> components;
  std::vector<Matrix<T>> mu;  // [a*n + b]: (d_a d_b) -> d_ab
  Vec<T> unit;
  std::vector<Matrix<T>> psi;       // [b*n + a]
  std::vector<Matrix<T>> antipode;  // [a]

  std::size_t n() const { return group.order(); }
  std::size_t dim(std::size_t a) const { return components[a].dim; }
  const Matrix<T>& Mu(std::size_t a, std::size_t b) const { return mu[a * n() + b]; }
  const Matrix<T>& Psi(std::size_t b, std::size_t a) const { return psi[b * n() + a]; }
  const Matrix<T>& S(std::size_t a) const { return antipode[a]; }
  friend bool operator==(const TAlgebra&, const TAlgebra&) = default;
};

template <class T>
void check_shapes(const TAlgebra<T>& A) {
  const auto& G = A.group;
  std::size_t n = G.order();
  auto fail = [](const std::string& w) { throw ShapeMismatch(w); };
  if (A.components.size() != n || A.mu.size() != n * n || A.psi.size() != n * n || A.antipode.size() != n)
    fail("T-algebra block counts do not match the group order");
  if (A.unit.size() != A.dim(G.identity())) fail("unit has wrong length");
  for (std::size_t a = 0; a < n; ++a) {
    const auto& C = A.components[a];
    if (C.delta.rows() != C.dim * C.dim || C.delta.cols() != C.dim || C.counit.size() != C.dim)
      fail("coalgebra component " + G.name(a) + " has inconsistent shapes");
    for (std::size_t b = 0; b < n; ++b) {
      const auto& M = A.Mu(a, b);
      if (M.rows() != A.dim(G.mul(a, b)) || M.cols() != A.dim(a) * A.dim(b)) fail("mu(" + G.name(a) + "," + G.name(b) + ") has shape " + M.shape());
      const auto& P = A.Psi(b, a);
      if (P.rows() != A.dim(G.conj(b, a)) || P.cols() != A.dim(a)) fail("psi block has shape " + P.shape());
    }
    if (A.S(a).rows() != A.dim(G.inv(a)) || A.S(a).cols() != A.dim(a)) fail("S block has shape " + A.S(a).shape());
  }
}

template <class T>
ValidationReport validate_talgebra(const TAlgebra<T>& A, const std::string& subject = "T-algebra") {
  check_shapes(A);
  using detail::TaskList;
  const auto& G = A.group;
  const std::size_t n = G.order(), e = G.identity();
  ValidationReport rep;
  rep.subject = subject;
  auto L = [&](std::initializer_list<std::pair<const char*, std::size_t>> p) { return grade_label(G, p); };
  auto idx = [](const char* k, std::size_t v) { return std::string(",") + k + "=" + std::to_string(v); };
  auto ev = [](std::size_t d, std::size_t i) { return unit_vec<T>(d, i); };
  auto eps = [&](std::size_t a, const Vec<T>& x) {
    T s(0);
    for (std::size_t k = 0; k < x.size(); ++k)
      if (!x[k].is_zero()) s += A.components[a].counit[k] * x[k];
    return s;
  };
  auto m2 = [&](std::size_t a, std::size_t b, const Vec<T>& x, const Vec<T>& y) { return A.Mu(a, b).apply(kron(x, y)); };

  {
    TaskList co, cu;
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t d = A.dim(a);
      for (std::size_t h = 0; h < d; ++h) {
        co.add([&, a, h, d] {
          const auto& C = A.components[a];
          auto lhs = map_leg({d, d}, C.delta.column(h), 0, C.delta);
          auto rhs = map_leg({d, d}, C.delta.column(h), 1, C.delta);
          return compare(L({{"alpha", a}}) + idx("h", h), lhs, rhs);
        });
        cu.add([&, a, h, d] {
          const auto& C = A.components[a];
          std::string w = L({{"alpha", a}}) + idx("h", h);
          if (auto f = compare(w + ",side=left", contract_leg({d, d}, C.delta.column(h), 0, C.counit), ev(d, h))) return f;
          return compare(w + ",side=right", contract_leg({d, d}, C.delta.column(h), 1, C.counit), ev(d, h));
        });
      }
    }
    rep.axioms.push_back(detail::run_tasks("coalgebra-coassociativity", "axiom", co));
    rep.axioms.push_back(detail::run_tasks("coalgebra-counit", "axiom", cu));
  }

  {
    TaskList assoc, unit, comorph, counitmorph;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t i = 0; i < A.dim(a); ++i)
            for (std::size_t j = 0; j < A.dim(b); ++j)
              for (std::size_t k = 0; k < A.dim(c); ++k)
                assoc.add([&, a, b, c, i, j, k] {
                  auto lhs = m2(G.mul(a, b), c, m2(a, b, ev(A.dim(a), i), ev(A.dim(b), j)), ev(A.dim(c), k));
                  auto rhs = m2(a, G.mul(b, c), ev(A.dim(a), i), m2(b, c, ev(A.dim(b), j), ev(A.dim(c), k)));
                  return compare(L({{"alpha", a}, {"beta", b}, {"gamma", c}}) + idx("i", i) + idx("j", j) + idx("k", k), lhs, rhs);
                });
        for (std::size_t i = 0; i < A.dim(a); ++i)
          for (std::size_t j = 0; j < A.dim(b); ++j) {
            comorph.add([&, a, b, i, j] {
              std::size_t da = A.dim(a), db = A.dim(b), ab = G.mul(a, b);
              auto lhs = A.components[ab].delta.apply(m2(a, b, ev(da, i), ev(db, j)));
              Tensor<T> t({da, da, db, db}, kron(A.components[a].delta.column(i), A.components[b].delta.column(j)));
              auto p = permute_legs(t, {0, 2, 1, 3});
              auto rhs = map_leg({da * db, da * db}, p.data, 0, A.Mu(a, b));
              rhs = map_leg({A.dim(ab), da * db}, rhs, 1, A.Mu(a, b));
              return compare(L({{"alpha", a}, {"beta", b}}) + idx("i", i) + idx("j", j), lhs, rhs);
            });
            counitmorph.add([&, a, b, i, j] {
              auto lhs = eps(G.mul(a, b), m2(a, b, ev(A.dim(a), i), ev(A.dim(b), j)));
              return compare(L({{"alpha", a}, {"beta", b}}) + idx("i", i) + idx("j", j), lhs,
                             A.components[a].counit[i] * A.components[b].counit[j]);
            });
          }
      }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t i = 0; i < A.dim(a); ++i)
        unit.add([&, a, i] {
          std::string w = L({{"alpha", a}}) + idx("i", i);
          if (auto f = compare(w + ",side=left", m2(e, a, A.unit, ev(A.dim(a), i)), ev(A.dim(a), i))) return f;
          return compare(w + ",side=right", m2(a, e, ev(A.dim(a), i), A.unit), ev(A.dim(a), i));
        });
    comorph.add([&] { return compare(std::string("unit"), A.components[e].delta.apply(A.unit), kron(A.unit, A.unit)); });
    counitmorph.add([&] { return compare(std::string("unit"), eps(e, A.unit), T(1)); });
    rep.axioms.push_back(detail::run_tasks("mu-associativity", "axiom", assoc));
    rep.axioms.push_back(detail::run_tasks("mu-unit", "axiom", unit));
    rep.axioms.push_back(detail::run_tasks("mu-comultiplicative", "axiom", comorph));
    rep.axioms.push_back(detail::run_tasks("mu-counital", "axiom", counitmorph));
  }

  {
    TaskList cop, mult, hom, iso;
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t a = 0; a < n; ++a) {
        std::size_t ba = G.conj(b, a);
        for (std::size_t h = 0; h < A.dim(a); ++h)
          cop.add([&, a, b, ba, h] {
            const auto& P = A.Psi(b, a);
            auto lhs = A.components[ba].delta.apply(P.column(h));
            auto rhs = map_leg({A.dim(a), A.dim(a)}, A.components[a].delta.column(h), 0, P);
            rhs = map_leg({A.dim(ba), A.dim(a)}, rhs, 1, P);
            std::string w = L({{"beta", b}, {"alpha", a}}) + idx("h", h);
            if (auto f = compare(w, lhs, rhs)) return f;
            return compare(w + ",counit", eps(ba, P.column(h)), A.components[a].counit[h]);
          });
        for (std::size_t c = 0; c < n; ++c) {
          std::size_t bc = G.conj(b, c);
          for (std::size_t i = 0; i < A.dim(a); ++i)
            for (std::size_t j = 0; j < A.dim(c); ++j)
              mult.add([&, a, b, c, ba, bc, i, j] {
                auto lhs = A.Psi(b, G.mul(a, c)).apply(m2(a, c, ev(A.dim(a), i), ev(A.dim(c), j)));
                auto rhs = m2(ba, bc, A.Psi(b, a).column(i), A.Psi(b, c).column(j));
                return compare(L({{"beta", b}, {"alpha", a}, {"gamma", c}}) + idx("i", i) + idx("j", j), lhs, rhs);
              });
          hom.add([&, a, b, c] {
            auto lhs = mul(A.Psi(b, G.conj(c, a)), A.Psi(c, a));
            return detail::compare_matrix(L({{"beta", b}, {"gamma", c}, {"alpha", a}}), lhs, A.Psi(G.mul(b, c), a));
          });
        }
        iso.add([&, a, b] {
          const auto& P = A.Psi(b, a);
          if (!P.square() || rank(P) != P.cols())
            return std::optional<Failure>(Failure{L({{"beta", b}, {"alpha", a}}), "psi block is not invertible"});
          return std::optional<Failure>();
        });
      }
    for (std::size_t b = 0; b < n; ++b)
      mult.add([&, b] { return compare(L({{"beta", b}}) + ",unit", A.Psi(b, e).apply(A.unit), A.unit); });
    rep.axioms.push_back(detail::run_tasks("psi-coalgebra-morphism", "axiom", cop));
    rep.axioms.push_back(detail::run_tasks("psi-multiplicative", "axiom", mult));
    rep.axioms.push_back(detail::run_tasks("psi-homomorphism", "axiom", hom));
    rep.axioms.push_back(detail::run_tasks("psi-invertible", "axiom", iso));
  }

  {
    TaskList left, right;
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t ai = G.inv(a), d = A.dim(a);
      for (std::size_t h = 0; h < d; ++h) {
        auto expect = [&, a, h] { return scale(A.components[a].counit[h], A.unit); };
        left.add([&, a, ai, h, d, expect] {
          auto x = map_leg({d, d}, A.components[a].delta.column(h), 0, A.S(a));
          return compare(L({{"alpha", a}}) + idx("h", h), A.Mu(ai, a).apply(x), expect());
        });
        right.add([&, a, ai, h, d, expect] {
          auto x = map_leg({d, d}, A.components[a].delta.column(h), 1, A.S(a));
          return compare(L({{"alpha", a}}) + idx("h", h), A.Mu(a, ai).apply(x), expect());
        });
      }
    }
    rep.axioms.push_back(detail::run_tasks("antipode-left", "axiom", left));
    rep.axioms.push_back(detail::run_tasks("antipode-right", "axiom", right));
  }
  return rep;
}

enum class GradedKind { TAlgebra, TCoalgebra };

/// A Hopf algebra on (+)_a H_a with a group grading and an automorphism
/// family psi_b, the packed form of a T-algebra or a T-coalgebra.
template <class T>
struct GradedHopfAlgebra {
  FiniteGroup group;
  std::vector<std::size_t> grading;  // dimension of each graded piece
  HopfAlgebra<T> hopf;
  std::vector<Matrix<T>> psi;  // [b]: total automorphism
  GradedKind kind = GradedKind::TCoalgebra;

  std::size_t offset(std::size_t a) const {
    std::size_t o = 0;
    for (std::size_t k = 0; k < a; ++k) o += grading[k];
    return o;
  }
  std::size_t total() const {
    std::size_t t = 0;
    for (auto d : grading) t += d;
    return t;
  }
  /// Graded piece containing total basis index k.
  std::size_t grade_of(std::size_t k) const {
    for (std::size_t a = 0; a < grading.size(); ++a) {
      if (k < grading[a]) return a;
      k -= grading[a];
    }
    throw DimensionMismatch("basis index out of range");
  }
  friend bool operator==(const GradedHopfAlgebra&, const GradedHopfAlgebra&) = default;
};

/// Validates the Hopf axioms of the total algebra plus the automorphism
/// conditions on psi.
template <class T>
ValidationReport validate_graded(const GradedHopfAlgebra<T>& P, const std::string& subject = "packed Hopf algebra") {
  ValidationReport rep = validate_hopf(P.hopf, subject);
  using detail::TaskList;
  const auto& A = P.hopf;
  std::size_t N = A.dim();
  TaskList aut, hom;
  for (std::size_t b = 0; b < P.group.order(); ++b) {
    aut.add([&, b, N] {
      const auto& M = P.psi[b];
      std::string w = "beta=" + P.group.name(b);
      if (rank(M) != N) return std::optional<Failure>(Failure{w, "not invertible"});
      for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j)
          if (auto f = compare(w + ",i=" + std::to_string(i) + ",j=" + std::to_string(j),
                               M.apply(A.algebra.mul(unit_vec<T>(N, i), unit_vec<T>(N, j))),
                               A.algebra.mul(M.column(i), M.column(j))))
            return f;
        auto lhs = A.delta.apply(M.column(i));
        auto rhs = map_leg({N, N}, map_leg({N, N}, A.delta.column(i), 0, M), 1, M);
        if (auto f = compare(w + ",delta,i=" + std::to_string(i), lhs, rhs)) return f;
      }
      return compare(w + ",unit", M.apply(A.algebra.unit()), A.algebra.unit());
    });
    for (std::size_t c = 0; c < P.group.order(); ++c)
      hom.add([&, b, c] {
        return detail::compare_matrix("beta=" + P.group.name(b) + ",gamma=" + P.group.name(c), mul(P.psi[b], P.psi[c]),
                                      P.psi[P.group.mul(b, c)]);
      });
  }
  rep.axioms.push_back(detail::run_tasks("psi-hopf-automorphism", "axiom", aut));
  rep.axioms.push_back(detail::run_tasks("psi-homomorphism", "axiom", hom));
  return rep;
}

/// Packed form of a T-algebra: the coalgebra (+)_a C_a with multiplication
/// assembled from the mu blocks.
template <class T>
GradedHopfAlgebra<T> pack_talgebra(const TAlgebra<T>& A) {
  check_shapes(A);
  const auto& G = A.group;
  std::size_t n = G.order();
  GradedHopfAlgebra<T> P;
  P.group = G;
  P.kind = GradedKind::TAlgebra;
  for (std::size_t a = 0; a < n; ++a) P.grading.push_back(A.dim(a));
  std::size_t N = P.total();
  Vec<T> mu(N * N * N, T(0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t ab = G.mul(a, b), oa = P.offset(a), ob = P.offset(b), oab = P.offset(ab);
      const auto& M = A.Mu(a, b);
      for (std::size_t i = 0; i < A.dim(a); ++i)
        for (std::size_t j = 0; j < A.dim(b); ++j)
          for (std::size_t k = 0; k < A.dim(ab); ++k)
            mu[((oa + i) * N + ob + j) * N + oab + k] = M(k, i * A.dim(b) + j);
    }
  Vec<T> unit(N, T(0));
  for (std::size_t k = 0; k < A.unit.size(); ++k) unit[P.offset(G.identity()) + k] = A.unit[k];
  Matrix<T> delta(N * N, N), S(N, N);
  Vec<T> counit(N, T(0));
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t o = P.offset(a), d = A.dim(a), ai = G.inv(a), oi = P.offset(ai);
    const auto& C = A.components[a];
    for (std::size_t h = 0; h < d; ++h) {
      counit[o + h] = C.counit[h];
      for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) delta((o + x) * N + o + y, o + h) = C.delta(x * d + y, h);
      for (std::size_t k = 0; k < A.dim(ai); ++k) S(oi + k, o + h) = A.S(a)(k, h);
    }
  }
  P.hopf = {A.field, ComponentAlgebra<T>(N, std::move(mu), std::move(unit)), std::move(delta), std::move(counit), std::move(S)};
  for (std::size_t b = 0; b < n; ++b) {
    Matrix<T> M(N, N);
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t o = P.offset(a), ob = P.offset(G.conj(b, a));
      const auto& B = A.Psi(b, a);
      for (std::size_t i = 0; i < B.rows(); ++i)
        for (std::size_t j = 0; j < B.cols(); ++j) M(ob + i, o + j) = B(i, j);
    }
    P.psi.push_back(std::move(M));
  }
  return P;
}

/// Packed form of a T-coalgebra: the algebra (+)_a H_a (componentwise
/// product) with Delta(h) = sum over bc = a of Delta_{b,c}(h).
template <class T>
GradedHopfAlgebra<T> pack_tcoalgebra(const TCoalgebra<T>& H) {
  check_shapes(H);
  const auto& G = H.group;
  std::size_t n = G.order();
  GradedHopfAlgebra<T> P;
  P.group = G;
  P.kind = GradedKind::TCoalgebra;
  for (std::size_t a = 0; a < n; ++a) P.grading.push_back(H.dim(a));
  std::size_t N = P.total();
  Vec<T> mu(N * N * N, T(0)), unit(N, T(0));
  Matrix<T> delta(N * N, N), S(N, N);
  Vec<T> counit(N, T(0));
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t o = P.offset(a), d = H.dim(a);
    for (std::size_t i = 0; i < d; ++i) {
      unit[o + i] = H.H(a).unit()[i];
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) mu[((o + i) * N + o + j) * N + o + k] = H.H(a).c(i, j, k);
    }
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t c = G.mul(G.inv(b), a), ob = P.offset(b), oc = P.offset(c);  // b c = a
      const auto& D = H.Delta(b, c);
      for (std::size_t h = 0; h < d; ++h)
        for (std::size_t x = 0; x < H.dim(b); ++x)
          for (std::size_t y = 0; y < H.dim(c); ++y) delta((ob + x) * N + oc + y, o + h) = D(x * H.dim(c) + y, h);
    }
    std::size_t oi = P.offset(G.inv(a));
    for (std::size_t h = 0; h < d; ++h)
      for (std::size_t k = 0; k < H.S(a).rows(); ++k) S(oi + k, o + h) = H.S(a)(k, h);
  }
  for (std::size_t h = 0; h < H.counit.size(); ++h) counit[P.offset(G.identity()) + h] = H.counit[h];
  P.hopf = {H.field, ComponentAlgebra<T>(N, std::move(mu), std::move(unit)), std::move(delta), std::move(counit), std::move(S)};
  for (std::size_t b = 0; b < n; ++b) {
    Matrix<T> M(N, N);
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t o = P.offset(a), ob = P.offset(G.conj(b, a));
      const auto& B = H.Phi(b, a);
      for (std::size_t i = 0; i < B.rows(); ++i)
        for (std::size_t j = 0; j < B.cols(); ++j) M(ob + i, o + j) = B(i, j);
    }
    P.psi.push_back(std::move(M));
  }
  return P;
}

namespace detail {

[[noreturn]] inline void grading_violation(const std::string& bullet, const std::string& witness) {
  throw GradingViolation(bullet + ": " + witness);
}

}  // namespace detail

/// Recovers the T-coalgebra from a graded Hopf algebra after checking that
/// (1) the product is the product algebra of the graded pieces, (2) Delta(H_a)
/// lies in the sum of H_b (x) H_c over bc = a, (3) eps vanishes off H_1,
/// (4) s(H_a) lies in H_{a^-1}, (5) psi_b(H_a) lies in H_{bab^-1}.
template <class T>
TCoalgebra<T> unpack_tcoalgebra(const GradedHopfAlgebra<T>& P) {
  const auto& G = P.group;
  const auto& A = P.hopf;
  std::size_t n = G.order(), N = A.dim();
  if (P.grading.size() != n || P.total() != N) throw ShapeMismatch("grading does not match the total dimension");
  if (P.psi.size() != n) throw ShapeMismatch("expected one automorphism per group element");
  auto name = [&](std::size_t k) {
    std::size_t a = P.grade_of(k);
    return "e_" + std::to_string(k - P.offset(a)) + " in H_" + G.name(a);
  };
  // (1) product algebra.
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y) {
      std::size_t a = P.grade_of(x), b = P.grade_of(y);
      for (const auto& [k, c] : A.algebra.basis_product(x, y)) {
        (void)c;
        if (a != b || P.grade_of(k) != a)
          detail::grading_violation("product is not the product of the graded pieces",
                                       name(x) + " times " + name(y) + " has a term along " + name(k));
      }
    }
  // (2) coproduct grading.
  for (std::size_t h = 0; h < N; ++h) {
    std::size_t a = P.grade_of(h);
    for (std::size_t x = 0; x < N; ++x)
      for (std::size_t y = 0; y < N; ++y) {
        if (A.delta(x * N + y, h).is_zero()) continue;
        if (G.mul(P.grade_of(x), P.grade_of(y)) != a)
          detail::grading_violation("coproduct does not respect the grading",
                                       "Delta(" + name(h) + ") has a term along " + name(x) + " (x) " + name(y));
      }
  }
  // (3) counit.
  for (std::size_t h = 0; h < N; ++h)
    if (P.grade_of(h) != G.identity() && !A.counit[h].is_zero())
      detail::grading_violation("counit does not vanish off H_1", "eps(" + name(h) + ") = " + A.counit[h].to_string());
  // (4) antipode, (5) automorphisms.
  for (std::size_t h = 0; h < N; ++h) {
    std::size_t a = P.grade_of(h);
    for (std::size_t k = 0; k < N; ++k) {
      if (!A.antipode(k, h).is_zero() && P.grade_of(k) != G.inv(a))
        detail::grading_violation("antipode does not map H_a to H_{a^-1}", "s(" + name(h) + ") has a term along " + name(k));
      for (std::size_t b = 0; b < n; ++b)
        if (!P.psi[b](k, h).is_zero() && P.grade_of(k) != G.conj(b, a))
          detail::grading_violation("automorphism does not respect the grading",
                                       "psi_" + G.name(b) + "(" + name(h) + ") has a term along " + name(k));
    }
  }
  TCoalgebra<T> H;
  H.field = A.field;
  H.group = G;
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t o = P.offset(a), d = P.grading[a];
    Vec<T> mu(d * d * d, T(0)), unit(d, T(0));
    for (std::size_t i = 0; i < d; ++i) {
      unit[i] = A.algebra.unit()[o + i];
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) mu[(i * d + j) * d + k] = A.algebra.c(o + i, o + j, o + k);
    }
    H.components.emplace_back(d, std::move(mu), std::move(unit));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t ab = G.mul(a, b), oa = P.offset(a), ob = P.offset(b), oab = P.offset(ab);
      std::size_t da = P.grading[a], db = P.grading[b];
      Matrix<T> D(da * db, P.grading[ab]);
      for (std::size_t h = 0; h < P.grading[ab]; ++h)
        for (std::size_t x = 0; x < da; ++x)
          for (std::size_t y = 0; y < db; ++y) D(x * db + y, h) = A.delta((oa + x) * N + ob + y, oab + h);
      H.delta.push_back(std::move(D));
    }
  std::size_t o1 = P.offset(G.identity());
  for (std::size_t h = 0; h < P.grading[G.identity()]; ++h) H.counit.push_back(A.counit[o1 + h]);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t ai = G.inv(a);
    Matrix<T> s(P.grading[ai], P.grading[a]);
    for (std::size_t h = 0; h < P.grading[a]; ++h)
      for (std::size_t k = 0; k < P.grading[ai]; ++k) s(k, h) = A.antipode(P.offset(ai) + k, P.offset(a) + h);
    H.antipode.push_back(std::move(s));
  }
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t ba = G.conj(b, a);
      Matrix<T> M(P.grading[ba], P.grading[a]);
      for (std::size_t h = 0; h < P.grading[a]; ++h)
        for (std::size_t k = 0; k < P.grading[ba]; ++k) M(k, h) = P.psi[b](P.offset(ba) + k, P.offset(a) + h);
      H.phi.push_back(std::move(M));
    }
  return H;
}

/// Inverse of pack_talgebra: the coproduct must be block diagonal, the
/// product graded, the unit in H_1, S and psi graded.
template <class T>
TAlgebra<T> unpack_talgebra(const GradedHopfAlgebra<T>& P) {
  const auto& G = P.group;
  const auto& A = P.hopf;
  std::size_t n = G.order(), N = A.dim();
  if (P.grading.size() != n || P.total() != N) throw ShapeMismatch("grading does not match the total dimension");
  auto name = [&](std::size_t k) {
    std::size_t a = P.grade_of(k);
    return "e_" + std::to_string(k - P.offset(a)) + " in H_" + G.name(a);
  };
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y)
      for (const auto& [k, c] : A.algebra.basis_product(x, y)) {
        (void)c;
        if (P.grade_of(k) != G.mul(P.grade_of(x), P.grade_of(y)))
          detail::grading_violation("product does not respect the grading", name(x) + " times " + name(y) + " has a term along " + name(k));
      }
  for (std::size_t k = 0; k < N; ++k)
    if (!A.algebra.unit()[k].is_zero() && P.grade_of(k) != G.identity())
      detail::grading_violation("unit does not lie in H_1", "unit has a term along " + name(k));
  for (std::size_t h = 0; h < N; ++h)
    for (std::size_t x = 0; x < N; ++x)
      for (std::size_t y = 0; y < N; ++y)
        if (!A.delta(x * N + y, h).is_zero() && (P.grade_of(x) != P.grade_of(h) || P.grade_of(y) != P.grade_of(h)))
          detail::grading_violation("coproduct is not block diagonal", "Delta(" + name(h) + ") has a term along " + name(x) + " (x) " + name(y));
  for (std::size_t h = 0; h < N; ++h)
    for (std::size_t k = 0; k < N; ++k) {
      if (!A.antipode(k, h).is_zero() && P.grade_of(k) != G.inv(P.grade_of(h)))
        detail::grading_violation("antipode does not map H_a to H_{a^-1}", "S(" + name(h) + ") has a term along " + name(k));
      for (std::size_t b = 0; b < n; ++b)
        if (!P.psi[b](k, h).is_zero() && P.grade_of(k) != G.conj(b, P.grade_of(h)))
          detail::grading_violation("automorphism does not respect the grading", "psi_" + G.name(b) + "(" + name(h) + ") has a term along " + name(k));
    }
  TAlgebra<T> R;
  R.field = A.field;
  R.group = G;
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t o = P.offset(a), d = P.grading[a];
    ComponentCoalgebra<T> C{d, Matrix<T>(d * d, d), Vec<T>(d, T(0))};
    for (std::size_t h = 0; h < d; ++h) {
      C.counit[h] = A.counit[o + h];
      for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) C.delta(x * d + y, h) = A.delta((o + x) * N + o + y, o + h);
    }
    R.components.push_back(std::move(C));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t ab = G.mul(a, b), da = P.grading[a], db = P.grading[b];
      Matrix<T> M(P.grading[ab], da * db);
      for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
          for (std::size_t k = 0; k < P.grading[ab]; ++k)
            M(k, i * db + j) = A.algebra.c(P.offset(a) + i, P.offset(b) + j, P.offset(ab) + k);
      R.mu.push_back(std::move(M));
    }
  for (std::size_t k = 0; k < P.grading[G.identity()]; ++k) R.unit.push_back(A.algebra.unit()[P.offset(G.identity()) + k]);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t ba = G.conj(b, a);
      Matrix<T> M(P.grading[ba], P.grading[a]);
      for (std::size_t h = 0; h < P.grading[a]; ++h)
        for (std::size_t k = 0; k < P.grading[ba]; ++k) M(k, h) = P.psi[b](P.offset(ba) + k, P.offset(a) + h);
      R.psi.push_back(std::move(M));
    }
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t ai = G.inv(a);
    Matrix<T> s(P.grading[ai], P.grading[a]);
    for (std::size_t h = 0; h < P.grading[a]; ++h)
      for (std::size_t k = 0; k < P.grading[ai]; ++k) s(k, h) = A.antipode(P.offset(ai) + k, P.offset(a) + h);
    R.antipode.push_back(std::move(s));
  }
  return R;
}

}  // namespace crossed
