#pragma once

// The quantum double D(H) of a T-coalgebra over a finite group.
//
// D_a(H) = H_{a^-1} (x) K with K = (+)_b H_b* the packed outer dual.  Basis
// element e_i (x) e^p (i a basis index of H_{a^-1}, p a basis index of K in
// group table order) sits at index i*N + p, N = dim K.

#include "crossed/duals.hpp"
#include "crossed/families.hpp"
#include "crossed/quasitriangular.hpp"

namespace crossed {

template <class T>
struct QuantumDouble {
  TCoalgebra<T> D;
  RMatrixFamily<T> R;
  GradedHopfAlgebra<T> dual;  // packed outer dual K with its conjugation
  Matrix<T> dual_sinv;        // antipode of the coopposite of K
  std::size_t N = 0;

  std::size_t offset(std::size_t b) const { return dual.offset(b); }
  /// Index of e_i (x) e^p in D_a.
  std::size_t index(std::size_t i, std::size_t p) const { return i * N + p; }
};

namespace detail {

template <class T>
struct DoubleContext {
  const TCoalgebra<T>& H;
  GradedHopfAlgebra<T> P;
  std::vector<Matrix<T>> sinv;
  std::size_t N;

  explicit DoubleContext(const TCoalgebra<T>& h) : H(h), P(pack_talgebra(outer_dual(h))), sinv(antipode_inverse(h)), N(P.total()) {}

  Vec<T> dual_vec(std::size_t b, const Vec<T>& f) const {
    Vec<T> r(N, T(0));
    std::size_t o = P.offset(b);
    for (std::size_t x = 0; x < f.size(); ++x) r[o + x] = f[x];
    return r;
  }
};

/// Structure constants of D_a from
/// (h (x) f)(k (x) g) = h'' k (x) f <g, s_d^-1(h''') _ phi_a(h')>,
/// h split along (a^-1 d a, a^-1, d^-1) where d is the grade of g.
template <class T>
ComponentAlgebra<T> double_component_algebra(const DoubleContext<T>& C, std::size_t a) {
  const auto& H = C.H;
  const auto& G = H.group;
  const auto& K = C.P.hopf.algebra;
  std::size_t n = G.order(), ai = G.inv(a), d = H.dim(ai), N = C.N, dim = d * N;
  const auto& A = H.H(ai);

  struct Term {
    T coef;
    std::size_t b;
    std::vector<Vec<T>> g;  // g[q] in K for each basis q of H_delta*
  };
  // terms[i * n + delta]
  std::vector<std::vector<Term>> terms(d * n);
  parallel_for(d * n, [&](std::size_t job) {
    std::size_t i = job / n, dl = job % n;
    std::size_t x = G.conj(ai, dl), di = G.inv(dl);
    std::size_t dx = H.dim(x), dd = H.dim(dl), ddi = H.dim(di);
    auto X = iterated_delta(H, {x, ai, di}, unit_vec<T>(d, i));
    for (std::size_t ia = 0; ia < dx; ++ia)
      for (std::size_t ib = 0; ib < d; ++ib)
        for (std::size_t ic = 0; ic < ddi; ++ic) {
          const T& c = X[(ia * d + ib) * ddi + ic];
          if (c.is_zero()) continue;
          auto u = C.sinv[dl].column(ic);
          auto w = H.Phi(a, x).column(ia);
          const auto& Hd = H.H(dl);
          Term t{c, ib, std::vector<Vec<T>>(dd, Vec<T>(dd, T(0)))};
          for (std::size_t y = 0; y < dd; ++y) {
            auto v = Hd.mul(Hd.mul(u, unit_vec<T>(dd, y)), w);
            for (std::size_t q = 0; q < dd; ++q) t.g[q][y] = v[q];
          }
          for (auto& g : t.g) g = C.dual_vec(dl, g);
          terms[job].push_back(std::move(t));
        }
  });

  std::vector<std::size_t> grade_of(N);
  for (std::size_t k = 0; k < N; ++k) grade_of[k] = C.P.grade_of(k);
  Vec<T> mu(dim * dim * dim, T(0));
  parallel_for(dim, [&](std::size_t I) {
    std::size_t i = I / N, p = I % N;
    auto ep = unit_vec<T>(N, p);
    for (std::size_t k = 0; k < d; ++k) {
      auto ek = unit_vec<T>(d, k);
      for (std::size_t q = 0; q < N; ++q) {
        std::size_t dl = grade_of[q], ql = q - C.P.offset(dl);
        Vec<T> r(dim, T(0));
        for (const auto& t : terms[i * n + dl]) {
          auto hk = A.mul(unit_vec<T>(d, t.b), ek);
          auto fg = K.mul(ep, t.g[ql]);
          axpy(r, t.coef, kron(hk, fg));
        }
        std::size_t J = k * N + q;
        for (std::size_t m = 0; m < dim; ++m) mu[(I * dim + J) * dim + m] = r[m];
      }
    }
  });
  return ComponentAlgebra<T>(dim, std::move(mu), kron(A.unit(), K.unit()));
}

}  // namespace detail

/// D(H) with its universal R-matrix
/// R_{a,b} = sum_i (e_i (x) eps) (x) (1_{b^-1} (x) e^{a^-1.i}) over a basis of
/// H_{a^-1}, and inverse sum_i (s_a(e_i) (x) eps) (x) (1_{b^-1} (x) e^{a.i}).
template <class T>
QuantumDouble<T> quantum_double(const TCoalgebra<T>& H) {
  check_shapes(H);
  detail::DoubleContext<T> C(H);
  const auto& G = H.group;
  std::size_t n = G.order(), N = C.N;
  const auto& Kh = C.P.hopf;
  QuantumDouble<T> Q;
  Q.N = N;
  Q.dual = C.P;
  try {
    Q.dual_sinv = invert_matrix(Kh.antipode);
  } catch (const SingularMatrix&) {
    throw AntipodeNotInvertible("antipode of the packed dual is singular");
  }
  auto& D = Q.D;
  D.field = H.field;
  D.group = G;
  D.components.resize(n);
  for (std::size_t a = 0; a < n; ++a) D.components[a] = detail::double_component_algebra(C, a);

  auto hd = [&](std::size_t a) { return H.dim(G.inv(a)); };
  // Delta_{a,b}(h (x) F) = (phi_b(h') (x) F') (x) (h'' (x) F''), with
  // h' in H_{b^-1 a^-1 b}, h'' in H_{b^-1} and F' (x) F'' the opposite
  // comultiplication of K.
  D.delta.resize(n * n);
  parallel_for(n * n, [&](std::size_t job) {
    std::size_t a = job / n, b = job % n, ab = G.mul(a, b);
    std::size_t bi = G.inv(b), xg = G.conj(bi, G.inv(a));
    std::size_t da = hd(a), db = hd(b), dab = hd(ab);
    Matrix<T> M(da * N * db * N, dab * N);
    for (std::size_t i = 0; i < dab; ++i) {
      auto hp = map_leg(H.dims({xg, bi}), H.Delta(xg, bi).column(i), 0, H.Phi(b, xg));
      for (std::size_t p = 0; p < N; ++p) {
        auto fp = flip(Kh.delta.column(p), N, N);
        for (std::size_t u = 0; u < da; ++u)
          for (std::size_t v = 0; v < db; ++v) {
            const T& hc = hp[u * db + v];
            if (hc.is_zero()) continue;
            for (std::size_t f1 = 0; f1 < N; ++f1)
              for (std::size_t f2 = 0; f2 < N; ++f2) {
                const T& fc = fp[f1 * N + f2];
                if (fc.is_zero()) continue;
                M((u * N + f1) * (db * N) + v * N + f2, i * N + p) += hc * fc;
              }
          }
      }
    }
    D.delta[job] = std::move(M);
  });

  // <eps, h (x) f> = <eps, h> <f, 1>
  std::size_t e = G.identity();
  D.counit.assign(H.dim(e) * N, T(0));
  for (std::size_t i = 0; i < H.dim(e); ++i)
    for (std::size_t p = 0; p < N; ++p) D.counit[i * N + p] = H.counit[i] * Kh.counit[p];

  // s_a(h (x) F) = ((phi_a o s_{a^-1})(h) (x) eps)(1_a (x) s_*(F)) in D_{a^-1}
  D.antipode.resize(n);
  parallel_for(n, [&](std::size_t a) {
    std::size_t ai = G.inv(a), d = hd(a);
    const auto& target = D.H(ai);
    auto sh = mul(H.Phi(a, a), H.S(ai));
    Matrix<T> M(H.dim(a) * N, d * N);
    for (std::size_t i = 0; i < d; ++i) {
      auto left = kron(sh.column(i), Kh.algebra.unit());
      for (std::size_t p = 0; p < N; ++p) {
        auto right = kron(H.H(a).unit(), Q.dual_sinv.column(p));
        auto r = target.mul(left, right);
        for (std::size_t m = 0; m < r.size(); ++m) M(m, i * N + p) = r[m];
      }
    }
    D.antipode[a] = std::move(M);
  });

  // phi_b(h (x) f) = phi_b(h) (x) phi*_{b^-1}(f)
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a) D.phi.push_back(kron(H.Phi(b, G.inv(a)), C.P.psi[b]));

  std::vector<Vec<T>> r, ri;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t ai = G.inv(a), bi = G.inv(b);
      auto one_b = H.H(bi).unit();
      const auto& eps = Kh.algebra.unit();
      Vec<T> x(D.dim(a) * D.dim(b), T(0)), y(D.dim(a) * D.dim(b), T(0));
      for (std::size_t i = 0; i < H.dim(ai); ++i)
        axpy(x, T(1), kron(kron(unit_vec<T>(H.dim(ai), i), eps), kron(one_b, unit_vec<T>(N, Q.offset(ai) + i))));
      for (std::size_t i = 0; i < H.dim(a); ++i)
        axpy(y, T(1), kron(kron(H.S(a).column(i), eps), kron(one_b, unit_vec<T>(N, Q.offset(a) + i))));
      r.push_back(std::move(x));
      ri.push_back(std::move(y));
    }
  Q.R = make_rmatrix(D, std::move(r), std::move(ri));
  return Q;
}

/// Product in D_a; both factors must have the length of D_a.
template <class T>
Vec<T> double_product(const QuantumDouble<T>& Q, std::size_t a, const Vec<T>& x, const Vec<T>& y) {
  if (a >= Q.D.n()) throw GradeMismatch("grade index " + std::to_string(a) + " out of range");
  if (x.size() != Q.D.dim(a) || y.size() != Q.D.dim(a))
    throw GradeMismatch("elements of length " + std::to_string(x.size()) + " and " + std::to_string(y.size()) + " are not in D_" +
                        Q.D.group.name(a));
  return Q.D.H(a).mul(x, y);
}

/// Morphisms i: mirror(H) -> D(H), h -> h (x) eps and
/// j: coop_inner_dual(H) -> D(H), f -> 1 (x) f, one matrix per grade.
template <class T>
struct DoubleEmbeddings {
  TCoalgebra<T> mirror;
  TCoalgebra<T> coop_dual;
  std::vector<Matrix<T>> i, j;
};

template <class T>
DoubleEmbeddings<T> double_embeddings(const TCoalgebra<T>& H, const QuantumDouble<T>& Q) {
  const auto& G = H.group;
  DoubleEmbeddings<T> E{mirror(H), coop_inner_dual(H), {}, {}};
  const auto& eps = Q.dual.hopf.algebra.unit();
  for (std::size_t a = 0; a < G.order(); ++a) {
    std::size_t ai = G.inv(a), d = H.dim(ai);
    std::vector<Vec<T>> ci, cj;
    for (std::size_t h = 0; h < d; ++h) ci.push_back(kron(unit_vec<T>(d, h), eps));
    for (std::size_t p = 0; p < Q.N; ++p) cj.push_back(kron(H.H(ai).unit(), unit_vec<T>(Q.N, p)));
    E.i.push_back(Matrix<T>::from_columns(ci, Q.D.dim(a)));
    E.j.push_back(Matrix<T>::from_columns(cj, Q.D.dim(a)));
  }
  return E;
}

/// Checks that the maps m_a: S_a -> D_a form an injective morphism of
/// T-coalgebras: multiplicative, unital, compatible with Delta, eps, s, phi.
template <class T>
ValidationReport check_morphism(const TCoalgebra<T>& S, const TCoalgebra<T>& D, const std::vector<Matrix<T>>& m,
                                const std::string& subject) {
  const auto& G = S.group;
  std::size_t n = G.order();
  if (m.size() != n) throw ShapeMismatch(subject + ": expected one map per grade");
  for (std::size_t a = 0; a < n; ++a)
    if (m[a].rows() != D.dim(a) || m[a].cols() != S.dim(a)) throw ShapeMismatch(subject + ": map in grade " + G.name(a) + " has shape " + m[a].shape());
  ValidationReport rep;
  rep.subject = subject;
  detail::TaskList mult, unit, delta, counit, anti, conj, inj;
  for (std::size_t a = 0; a < n; ++a) {
    std::string w = grade_label(G, {{"alpha", a}});
    for (std::size_t x = 0; x < S.dim(a); ++x)
      for (std::size_t y = 0; y < S.dim(a); ++y)
        mult.add([&, a, x, y, w] {
          auto ex = unit_vec<T>(S.dim(a), x), ey = unit_vec<T>(S.dim(a), y);
          return compare(w + ",x=" + std::to_string(x) + ",y=" + std::to_string(y), m[a].apply(S.H(a).mul(ex, ey)),
                         D.H(a).mul(m[a].column(x), m[a].column(y)));
        });
    unit.add([&, a, w] { return compare(w, m[a].apply(S.H(a).unit()), D.H(a).unit()); });
    inj.add([&, a, w] {
      std::size_t r = rank(m[a]);
      if (r == S.dim(a)) return std::optional<Failure>();
      return std::optional<Failure>(Failure{w, "rank " + std::to_string(r) + " < " + std::to_string(S.dim(a))});
    });
    for (std::size_t x = 0; x < S.dim(a); ++x) {
      std::string wx = w + ",x=" + std::to_string(x);
      anti.add([&, a, x, wx] {
        std::size_t ai = G.inv(a);
        return compare(wx, D.S(a).apply(m[a].column(x)), m[ai].apply(S.S(a).column(x)));
      });
      for (std::size_t b = 0; b < n; ++b) {
        conj.add([&, a, b, x, wx] {
          std::size_t c = G.conj(b, a);
          return compare(wx + ",beta=" + G.name(b), D.Phi(b, a).apply(m[a].column(x)), m[c].apply(S.Phi(b, a).column(x)));
        });
      }
    }
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t ab = G.mul(a, b);
      for (std::size_t x = 0; x < S.dim(ab); ++x)
        delta.add([&, a, b, ab, x] {
          auto lhs = D.Delta(a, b).apply(m[ab].column(x));
          auto t = map_leg(S.dims({a, b}), S.Delta(a, b).column(x), 0, m[a]);
          t = map_leg({D.dim(a), S.dim(b)}, t, 1, m[b]);
          return compare(grade_label(G, {{"alpha", a}, {"beta", b}}) + ",x=" + std::to_string(x), lhs, t);
        });
    }
  }
  std::size_t e = G.identity();
  for (std::size_t x = 0; x < S.dim(e); ++x)
    counit.add([&, e, x] {
      T v(0);
      auto c = m[e].column(x);
      for (std::size_t k = 0; k < c.size(); ++k) v += D.counit[k] * c[k];
      return compare("x=" + std::to_string(x), v, S.counit[x]);
    });
  rep.axioms.push_back(detail::run_tasks("morphism-multiplicative", "axiom", mult));
  rep.axioms.push_back(detail::run_tasks("morphism-unit", "axiom", unit));
  rep.axioms.push_back(detail::run_tasks("morphism-delta", "axiom", delta));
  rep.axioms.push_back(detail::run_tasks("morphism-counit", "axiom", counit));
  rep.axioms.push_back(detail::run_tasks("morphism-antipode", "axiom", anti));
  rep.axioms.push_back(detail::run_tasks("morphism-phi", "axiom", conj));
  rep.axioms.push_back(detail::run_tasks("morphism-injective", "axiom", inj));
  return rep;
}

template <class T>
ValidationReport check_double_embeddings(const TCoalgebra<T>& H, const QuantumDouble<T>& Q) {
  auto E = double_embeddings(H, Q);
  ValidationReport rep;
  rep.subject = "double embeddings";
  rep.append(check_morphism(E.mirror, Q.D, E.i, "i"), "i:");
  rep.append(check_morphism(E.coop_dual, Q.D, E.j, "j"), "j:");
  return rep;
}

/// p_a = mu_a o (j_a (x) i_a) on the basis e^p (x) e_h (index p*d + h).
template <class T>
Matrix<T> pa_matrix(const TCoalgebra<T>& H, const QuantumDouble<T>& Q, std::size_t a) {
  auto E = double_embeddings(H, Q);
  std::size_t d = E.i[a].cols();
  std::vector<Vec<T>> cols;
  for (std::size_t p = 0; p < Q.N; ++p)
    for (std::size_t h = 0; h < d; ++h) cols.push_back(Q.D.H(a).mul(E.j[a].column(p), E.i[a].column(h)));
  return Matrix<T>::from_columns(cols, Q.D.dim(a));
}

template <class T>
ValidationReport check_pa_bijective(const TCoalgebra<T>& H, const QuantumDouble<T>& Q) {
  const auto& G = H.group;
  ValidationReport rep;
  rep.subject = "p_alpha bijective";
  detail::TaskList tasks;
  for (std::size_t a = 0; a < G.order(); ++a)
    tasks.add([&, a] {
      auto M = pa_matrix(H, Q, a);
      std::string w = grade_label(G, {{"alpha", a}});
      if (!M.square()) return std::optional<Failure>(Failure{w, "shape " + M.shape()});
      std::size_t r = rank(M);
      if (r != M.rows()) return std::optional<Failure>(Failure{w, "rank " + std::to_string(r) + " of " + M.shape()});
      return std::optional<Failure>();
    });
  rep.axioms.push_back(detail::run_tasks("p-alpha-bijective", "axiom", tasks));
  return rep;
}

/// R_{a,b} against (i_a (x) j_b) of the canonical element of
/// H_{a^-1} (x) H_{a^-1}*, the dual factor placed in K.
template <class T>
ValidationReport check_canonical_r(const TCoalgebra<T>& H, const QuantumDouble<T>& Q, const RMatrixFamily<T>& R) {
  const auto& G = H.group;
  std::size_t n = G.order();
  auto E = double_embeddings(H, Q);
  ValidationReport rep;
  rep.subject = "canonical R";
  detail::TaskList tasks;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      tasks.add([&, a, b] {
        std::size_t ai = G.inv(a), d = H.dim(ai);
        auto can = dual_basis_pair<T>(d);
        // widen the dual leg from H_{a^-1}* to K
        Matrix<T> incl(Q.N, d);
        for (std::size_t x = 0; x < d; ++x) incl(Q.offset(ai) + x, x) = T(1);
        auto t = map_leg({d, d}, can.coords, 1, incl);
        t = map_leg({d, Q.N}, t, 0, E.i[a]);
        t = map_leg({Q.D.dim(a), Q.N}, t, 1, E.j[b]);
        return compare(grade_label(G, {{"alpha", a}, {"beta", b}}), R.R(a, b), t);
      });
  rep.axioms.push_back(detail::run_tasks("canonical-element", "axiom", tasks));
  return rep;
}

/// The product of D_a is determined by the embeddings: with
/// (h (x) eps)(1 (x) g) = sum h_b (x) g_b read off D, the rebuilt product
/// (h (x) f)(k (x) g) = sum h_b k (x) f g_b must agree with D, and
/// (1 (x) f)(h (x) eps) = h (x) f.
template <class T>
ValidationReport check_product_rebuild(const TCoalgebra<T>& H, const QuantumDouble<T>& Q) {
  const auto& G = H.group;
  std::size_t n = G.order(), N = Q.N;
  const auto& K = Q.dual.hopf.algebra;
  const auto& eps = K.unit();
  ValidationReport rep;
  rep.subject = "double product rebuild";
  detail::TaskList order, rebuild;
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t ai = G.inv(a), d = H.dim(ai);
    const auto& A = H.H(ai);
    const auto& Da = Q.D.H(a);
    for (std::size_t h = 0; h < d; ++h)
      for (std::size_t f = 0; f < N; ++f)
        order.add([&, a, h, f, d] {
          const auto& A = H.H(G.inv(a));
          auto lhs = Q.D.H(a).mul(kron(A.unit(), unit_vec<T>(N, f)), kron(unit_vec<T>(d, h), eps));
          return compare(grade_label(G, {{"alpha", a}}) + ",h=" + std::to_string(h) + ",f=" + std::to_string(f), lhs,
                         kron(unit_vec<T>(d, h), unit_vec<T>(N, f)));
        });
    for (std::size_t h = 0; h < d; ++h)
      rebuild.add([&, a, h, d] {
        const auto& A = H.H(G.inv(a));
        const auto& Da = Q.D.H(a);
        // cross[g] = (h (x) eps)(1 (x) e^g) as a d x N coefficient array
        std::vector<Vec<T>> cross;
        for (std::size_t g = 0; g < N; ++g) cross.push_back(Da.mul(kron(unit_vec<T>(d, h), eps), kron(A.unit(), unit_vec<T>(N, g))));
        for (std::size_t f = 0; f < N; ++f)
          for (std::size_t k = 0; k < d; ++k)
            for (std::size_t g = 0; g < N; ++g) {
              Vec<T> r(d * N, T(0));
              for (std::size_t hb = 0; hb < d; ++hb)
                for (std::size_t gb = 0; gb < N; ++gb) {
                  const T& c = cross[g][hb * N + gb];
                  if (c.is_zero()) continue;
                  axpy(r, c, kron(A.mul(unit_vec<T>(d, hb), unit_vec<T>(d, k)), K.mul(unit_vec<T>(N, f), unit_vec<T>(N, gb))));
                }
              auto direct = Da.mul(kron(unit_vec<T>(d, h), unit_vec<T>(N, f)), kron(unit_vec<T>(d, k), unit_vec<T>(N, g)));
              if (auto fl = compare(grade_label(G, {{"alpha", a}}) + ",h=" + std::to_string(h) + ",f=" + std::to_string(f) +
                                        ",k=" + std::to_string(k) + ",g=" + std::to_string(g),
                                    direct, r))
                return fl;
            }
        return std::optional<Failure>();
      });
    (void)A;
    (void)Da;
  }
  rep.axioms.push_back(detail::run_tasks("dual-then-mirror-order", "derived", order));
  rep.axioms.push_back(detail::run_tasks("product-from-embeddings", "derived", rebuild));
  return rep;
}

/// All universal-property checks on one double.
template <class T>
ValidationReport check_double_universal(const TCoalgebra<T>& H, const QuantumDouble<T>& Q) {
  ValidationReport rep;
  rep.subject = "quantum double universal property";
  rep.append(check_double_embeddings(H, Q), "");
  rep.append(check_pa_bijective(H, Q), "");
  rep.append(check_canonical_r(H, Q, Q.R), "");
  rep.append(check_product_rebuild(H, Q), "");
  return rep;
}

}  // namespace crossed
