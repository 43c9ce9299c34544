#pragma once

// Factorizability of a quasitriangular Hopf algebra and the comparison of
// D_1(H) with the classical double of the packed form H_pk.

#include "crossed/classical_double.hpp"
#include "crossed/double.hpp"
#include "crossed/semisimple.hpp"

namespace crossed {

/// At the trivial group, compares every structure block of D(H) and its
/// R-matrix with the classical double.
template <class T>
AxiomResult compare_hopf_oracle(const QuantumDouble<T>& Q, const ClassicalDouble<T>& C) {
  if (Q.D.n() != 1) throw PreconditionFailed("the classical oracle applies at the trivial group only");
  const auto& D = Q.D;
  std::vector<std::pair<std::string, std::function<std::optional<Failure>()>>> blocks{
      {"product", [&] { return compare("mu", D.H(0).mu(), C.hopf.algebra.mu()); }},
      {"unit", [&] { return compare("unit", D.H(0).unit(), C.hopf.algebra.unit()); }},
      {"coproduct", [&] { return compare("delta", D.Delta(0, 0).data(), C.hopf.delta.data()); }},
      {"counit", [&] { return compare("counit", D.counit, C.hopf.counit); }},
      {"antipode", [&] { return compare("antipode", D.S(0).data(), C.hopf.antipode.data()); }},
      {"conjugation", [&] { return compare("phi", D.Phi(0, 0).data(), Matrix<T>::identity(D.dim(0)).data()); }},
      {"rmatrix", [&] { return compare("R", Q.R.R(0, 0), C.r); }}};
  return run_axiom("oracle-compare", "derived", blocks.size(), [&](std::size_t k) { return blocks[k].second(); });
}

template <class T>
struct Factorizability {
  Matrix<T> lambda;  // column m is lambda(e^m)
  std::size_t rank = 0;
  bool bijective = false;
};

/// lambda(f) = <f, zeta_i xi_j> xi_i zeta_j for R = xi_i (x) zeta_i, read off
/// sigma(R) R = zeta_i xi_j (x) xi_i zeta_j.
template <class T>
Factorizability<T> factorizability(const ComponentAlgebra<T>& A, const Vec<T>& R) {
  std::size_t d = A.dim();
  if (R.size() != d * d) throw ShapeMismatch("R has length " + std::to_string(R.size()) + ", expected " + std::to_string(d * d));
  TensorAlgebra<T> AA({&A, &A});
  auto M = AA.mul(flip(R, d, d), R);
  Factorizability<T> F;
  F.lambda = Matrix<T>(d, d);
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t k = 0; k < d; ++k) F.lambda(k, m) = M[m * d + k];
  F.rank = rank(F.lambda);
  F.bijective = F.rank == d;
  return F;
}

template <class T>
Factorizability<T> factorizability(const TCoalgebra<T>& H, const RMatrixFamily<T>& R) {
  std::size_t e = H.one();
  return factorizability(H.H(e), R.R(e, e));
}

/// lambda for D_1(H) with R_{1,1}, next to the route through D(H_pk):
/// lambda of the classical double restricted to D_1(H)* and read back on the
/// image of D_1(H).  Since R_{1,1} has dim H_1 terms, rank <= (dim H_1)^2.
template <class T>
struct D1Factorizability {
  Factorizability<T> direct;
  std::size_t bound = 0;           // (dim H_1)^2
  std::size_t packed_rank = 0;     // rank of lambda on D(H_pk)
  std::size_t packed_dim = 0;
  std::size_t restricted_rank = 0;
};

template <class T>
D1Factorizability<T> d1_factorizability(const TCoalgebra<T>& H) {
  auto Q = quantum_double(H);
  auto P = pack_tcoalgebra(H);
  auto C = classical_double(P.hopf);
  std::size_t e = H.one(), N = Q.N, d1 = H.dim(e), o1 = P.offset(e), D1 = d1 * N;
  D1Factorizability<T> out;
  out.direct = factorizability(Q.D, Q.R);
  out.bound = d1 * d1;
  auto FC = factorizability(C.hopf.algebra, C.r);
  out.packed_rank = FC.rank;
  out.packed_dim = N * N;
  Matrix<T> L(D1, D1);
  for (std::size_t I = 0; I < D1; ++I)
    for (std::size_t J = 0; J < D1; ++J) L(I, J) = FC.lambda((o1 + I / N) * N + I % N, (o1 + J / N) * N + J % N);
  out.restricted_rank = rank(L);
  return out;
}

template <class T>
struct PackedEmbedding {
  ValidationReport report;
  bool identical = false;  // products of D(H_pk) and (D(H))_pk agree everywhere
  std::string witness;     // first basis pair where they differ
};

/// D_1(H) = H_1 (x) K sits in D(H_pk) = H_pk (x) K through
/// e_i (x) e^p -> e_{1.i} (x) e^p.  Checks (a) products, the image of the unit
/// as a local identity, counit, antipode and the coproduct after projecting
/// back onto the image, (b) x R_pk = x R_{1,1} and R_pk x = R_{1,1} x for
/// x = iota(u) (x) iota(v), and (c) compares the products of D(H_pk) and of
/// the packed double (D(H))_pk under (a, i, p) -> e_{a^-1.i} (x) e^p.
template <class T>
PackedEmbedding<T> check_packed_double_embedding(const TCoalgebra<T>& H) {
  const auto& G = H.group;
  std::size_t n = G.order(), e = G.identity();
  auto P = pack_tcoalgebra(H);
  auto C = classical_double(P.hopf);
  auto Q = quantum_double(H);
  std::size_t N = Q.N, d1 = H.dim(e), o1 = P.offset(e), D1 = d1 * N, DC = N * N;
  if (P.total() != N) throw DimensionMismatch("packed form and packed dual differ in dimension");
  const auto& A1 = Q.D.H(e);
  const auto& AC = C.hopf.algebra;
  auto iota_idx = [&](std::size_t I) { return (o1 + I / N) * N + I % N; };
  auto iota = [&](const Vec<T>& x) {
    Vec<T> r(DC, T(0));
    for (std::size_t I = 0; I < D1; ++I) r[iota_idx(I)] = x[I];
    return r;
  };
  auto in_image = [&](std::size_t J) { return J / N >= o1 && J / N < o1 + d1; };

  PackedEmbedding<T> out;
  auto& rep = out.report;
  rep.subject = "D_1(H) in D(H_pk)";
  detail::TaskList prod, unit, counit, anti, co, rr, rl;
  auto one = iota(A1.unit());
  for (std::size_t x = 0; x < D1; ++x) {
    std::string wx = "x=" + std::to_string(x);
    for (std::size_t y = 0; y < D1; ++y)
      prod.add([&, x, y, wx] {
        auto ex = unit_vec<T>(D1, x), ey = unit_vec<T>(D1, y);
        return compare(wx + ",y=" + std::to_string(y), iota(A1.mul(ex, ey)), AC.mul(iota(ex), iota(ey)));
      });
    unit.add([&, x, wx] {
      auto ix = iota(unit_vec<T>(D1, x));
      if (auto f = compare(wx + ",side=left", AC.mul(one, ix), ix)) return f;
      return compare(wx + ",side=right", AC.mul(ix, one), ix);
    });
    counit.add([&, x, wx] {
      T v(0);
      auto ix = iota(unit_vec<T>(D1, x));
      for (std::size_t J = 0; J < DC; ++J) v += C.hopf.counit[J] * ix[J];
      return compare(wx, v, Q.D.counit[x]);
    });
    anti.add([&, x, wx] { return compare(wx, C.hopf.antipode.apply(iota(unit_vec<T>(D1, x))), iota(Q.D.S(e).column(x))); });
    co.add([&, x, wx] {
      auto big = C.hopf.delta.column(iota_idx(x));
      Vec<T> r(D1 * D1, T(0));
      for (std::size_t J = 0; J < DC; ++J) {
        if (!in_image(J)) continue;
        for (std::size_t K = 0; K < DC; ++K) {
          if (!in_image(K)) continue;
          const T& c = big[J * DC + K];
          if (!c.is_zero()) r[((J / N - o1) * N + J % N) * D1 + (K / N - o1) * N + K % N] = c;
        }
      }
      return compare(wx, r, Q.D.Delta(e, e).column(x));
    });
  }
  TensorAlgebra<T> CC({&AC, &AC});
  Vec<T> r11(DC * DC, T(0));
  const auto& R11 = Q.R.R(e, e);
  for (std::size_t I = 0; I < D1; ++I)
    for (std::size_t J = 0; J < D1; ++J)
      if (!R11[I * D1 + J].is_zero()) r11[iota_idx(I) * DC + iota_idx(J)] = R11[I * D1 + J];
  for (std::size_t u = 0; u < D1; ++u)
    for (std::size_t v = 0; v < D1; ++v) {
      std::string w = "u=" + std::to_string(u) + ",v=" + std::to_string(v);
      auto x = [&, u, v] {
        Vec<T> t(DC * DC, T(0));
        t[iota_idx(u) * DC + iota_idx(v)] = T(1);
        return t;
      };
      rr.add([&, x, w] {
        auto t = x();
        return compare(w, CC.mul(t, C.r), CC.mul(t, r11));
      });
      rl.add([&, x, w] {
        auto t = x();
        return compare(w, CC.mul(C.r, t), CC.mul(r11, t));
      });
    }
  rep.axioms.push_back(detail::run_tasks("embedding-product", "axiom", prod));
  rep.axioms.push_back(detail::run_tasks("embedding-local-unit", "axiom", unit));
  rep.axioms.push_back(detail::run_tasks("embedding-counit", "axiom", counit));
  rep.axioms.push_back(detail::run_tasks("embedding-antipode", "axiom", anti));
  rep.axioms.push_back(detail::run_tasks("embedding-coproduct-projected", "axiom", co));
  rep.axioms.push_back(detail::run_tasks("x-R-pk-equals-x-R11", "axiom", rr));
  rep.axioms.push_back(detail::run_tasks("R-pk-x-equals-R11-x", "axiom", rl));

  // (c) witness search
  auto Dp = pack_tcoalgebra(Q.D);
  std::vector<std::size_t> to_c(DC);  // packed-double index -> classical index
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t ai = G.inv(a), o = Dp.offset(a);
    for (std::size_t i = 0; i < H.dim(ai); ++i)
      for (std::size_t p = 0; p < N; ++p) to_c[o + i * N + p] = (P.offset(ai) + i) * N + p;
  }
  out.identical = true;
  for (std::size_t x = 0; x < DC && out.identical; ++x)
    for (std::size_t y = 0; y < DC && out.identical; ++y) {
      auto pk = Dp.hopf.algebra.mul(unit_vec<T>(DC, x), unit_vec<T>(DC, y));
      auto cl = AC.mul(unit_vec<T>(DC, to_c[x]), unit_vec<T>(DC, to_c[y]));
      Vec<T> mapped(DC, T(0));
      for (std::size_t k = 0; k < DC; ++k) mapped[to_c[k]] = pk[k];
      if (auto f = compare("x=" + std::to_string(x) + ",y=" + std::to_string(y), mapped, cl)) {
        out.identical = false;
        out.witness = "packed basis pair " + f->where + ": " + f->witness;
      }
    }
  return out;
}

}  // namespace crossed
