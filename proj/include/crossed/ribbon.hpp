#pragma once

// Twists on quasitriangular T-coalgebras under both definitions (theta and
// v = theta^-1), the ribbon extension RT(H) and the semisimple twist u^-1.

#include "crossed/quasitriangular.hpp"
#include "crossed/semisimple.hpp"

namespace crossed {

namespace detail {

template <class T>
void check_family_shape(const TCoalgebra<T>& H, const TwistFamily<T>& x, const std::string& what) {
  if (x.t.size() != H.n()) throw ShapeMismatch(what + " needs one element per group element");
  for (std::size_t a = 0; a < H.n(); ++a)
    if (x.t[a].size() != H.dim(a)) throw ShapeMismatch(what + " in grade " + H.group.name(a) + " has the wrong length");
}

/// u_a s_{a^-1}(u_{a^-1}) in H_a.
template <class T>
Vec<T> u_su(const TCoalgebra<T>& H, const DrinfeldFamily<T>& D, std::size_t a) {
  std::size_t ai = H.group.inv(a);
  return H.H(a).mul(D.u[a], H.S(ai).apply(D.u[ai]));
}

}  // namespace detail

/// Axioms (1)-(4) of a twist theta, then the derived properties:
/// phi_{a^-1}(h) = theta h theta^-1, eps(theta_1) = 1, theta_1 central,
/// theta phi_a(h) = h theta, theta u = u theta, theta^-2 = s(u_{a^-1}) u_a.
template <class T>
ValidationReport check_twist_theta(const TCoalgebra<T>& H, const RMatrixFamily<T>& R, const TwistFamily<T>& theta) {
  detail::check_family_shape(H, theta, "twist");
  const auto& G = H.group;
  std::size_t n = G.order(), e = G.identity();
  ValidationReport rep;
  rep.subject = "twist (theta)";
  std::vector<std::optional<Vec<T>>> inv(n);
  for (std::size_t a = 0; a < n; ++a) inv[a] = H.tensor({a}).inverse(theta.at(a));
  detail::TaskList tinv;
  for (std::size_t a = 0; a < n; ++a)
    tinv.add([&, a] {
      if (inv[a]) return std::optional<Failure>();
      return std::optional<Failure>(Failure{grade_label(G, {{"alpha", a}}), "theta is not invertible"});
    });
  rep.axioms.push_back(detail::run_tasks("theta-invertible", "axiom", tinv));
  if (!rep.passed()) return rep;
  auto Q = compute_q(H, R);
  auto D = drinfeld_elements(H, R);
  auto L = [&](std::initializer_list<std::pair<const char*, std::size_t>> p) { return grade_label(G, p); };
  detail::TaskList a1, a2, a3, a4, s1, s2, s3, s4, s5, s6;
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t ai = G.inv(a), d = H.dim(a);
    std::string w = L({{"alpha", a}});
    a2.add([&, a, ai, w] { return compare(w, H.S(a).apply(theta.at(a)), theta.at(ai)); });
    s5.add([&, a, w] {
      const auto& A = H.H(a);
      return compare(w, A.mul(theta.at(a), D.u[a]), A.mul(D.u[a], theta.at(a)));
    });
    s6.add([&, a, ai, w] {
      const auto& A = H.H(a);
      auto lhs = A.mul(*inv[a], *inv[a]);
      auto rhs = A.mul(H.S(ai).apply(D.u[ai]), D.u[a]);
      return compare(w, lhs, rhs);
    });
    for (std::size_t h = 0; h < d; ++h) {
      std::string wh = w + ",h=" + std::to_string(h);
      a1.add([&, a, h, d, wh] {
        const auto& A = H.H(a);
        auto eh = unit_vec<T>(d, h);
        return compare(wh, H.Phi(a, a).apply(eh), A.mul(A.mul(*inv[a], eh), theta.at(a)));
      });
      s1.add([&, a, ai, h, d, wh] {
        const auto& A = H.H(a);
        auto eh = unit_vec<T>(d, h);
        return compare(wh, H.Phi(ai, a).apply(eh), A.mul(A.mul(theta.at(a), eh), *inv[a]));
      });
      s4.add([&, a, h, d, wh] {
        const auto& A = H.H(a);
        auto eh = unit_vec<T>(d, h);
        return compare(wh, A.mul(theta.at(a), H.Phi(a, a).apply(eh)), A.mul(eh, theta.at(a)));
      });
    }
    for (std::size_t b = 0; b < n; ++b) {
      a3.add([&, a, b] {
        auto lhs = H.Delta(a, b).apply(theta.at(G.mul(a, b)));
        auto rhs = H.tensor({a, b}).mul(kron(theta.at(a), theta.at(b)), Q.Q(a, b));
        return compare(L({{"alpha", a}, {"beta", b}}), lhs, rhs);
      });
      a4.add([&, a, b] { return compare(L({{"beta", b}, {"alpha", a}}), H.Phi(b, a).apply(theta.at(a)), theta.at(G.conj(b, a))); });
    }
  }
  s2.add([&, e] {
    T v(0);
    for (std::size_t k = 0; k < H.dim(e); ++k) v += H.counit[k] * theta.at(e)[k];
    return compare(std::string("alpha=1"), v, T(1));
  });
  for (std::size_t h = 0; h < H.dim(e); ++h)
    s3.add([&, e, h] {
      const auto& A = H.H(e);
      auto eh = unit_vec<T>(H.dim(e), h);
      return compare("h=" + std::to_string(h), A.mul(theta.at(e), eh), A.mul(eh, theta.at(e)));
    });
  rep.axioms.push_back(detail::run_tasks("theta-1-conjugation", "axiom", a1));
  rep.axioms.push_back(detail::run_tasks("theta-2-antipode", "axiom", a2));
  rep.axioms.push_back(detail::run_tasks("theta-3-coproduct", "axiom", a3));
  rep.axioms.push_back(detail::run_tasks("theta-4-phi", "axiom", a4));
  rep.axioms.push_back(detail::run_tasks("theta-inverse-conjugation", "derived", s1));
  rep.axioms.push_back(detail::run_tasks("theta-counit", "derived", s2));
  rep.axioms.push_back(detail::run_tasks("theta-1-central", "derived", s3));
  rep.axioms.push_back(detail::run_tasks("theta-phi-exchange", "derived", s4));
  rep.axioms.push_back(detail::run_tasks("theta-u-commute", "derived", s5));
  rep.axioms.push_back(detail::run_tasks("theta-square-inverse", "derived", s6));
  return rep;
}

/// Axioms (1)-(5) of the second definition:
/// h v_a = v_a phi_{a^-1}(h), v_a^2 = u_a s_{a^-1}(u_{a^-1}),
/// Delta(v_ab) = Q~_{a,b}(v_a (x) v_b), s_a(v_a) = v_{a^-1}, phi_b(v_a) = v_{bab^-1}.
template <class T>
ValidationReport check_twist_v(const TCoalgebra<T>& H, const RMatrixFamily<T>& R, const TwistFamily<T>& v) {
  detail::check_family_shape(H, v, "twist v");
  const auto& G = H.group;
  std::size_t n = G.order();
  auto Q = compute_q(H, R);
  auto D = drinfeld_elements(H, R);
  ValidationReport rep;
  rep.subject = "twist (v)";
  auto L = [&](std::initializer_list<std::pair<const char*, std::size_t>> p) { return grade_label(G, p); };
  detail::TaskList vinv, a1, a2, a3, a4, a5;
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t ai = G.inv(a), d = H.dim(a);
    std::string w = L({{"alpha", a}});
    vinv.add([&, a, w] {
      if (H.tensor({a}).inverse(v.at(a))) return std::optional<Failure>();
      return std::optional<Failure>(Failure{w, "v is not invertible"});
    });
    a2.add([&, a, w] { return compare(w, H.H(a).mul(v.at(a), v.at(a)), detail::u_su(H, D, a)); });
    a4.add([&, a, ai, w] { return compare(w, H.S(a).apply(v.at(a)), v.at(ai)); });
    for (std::size_t h = 0; h < d; ++h)
      a1.add([&, a, ai, h, d, w] {
        const auto& A = H.H(a);
        auto eh = unit_vec<T>(d, h);
        return compare(w + ",h=" + std::to_string(h), A.mul(eh, v.at(a)), A.mul(v.at(a), H.Phi(ai, a).apply(eh)));
      });
    for (std::size_t b = 0; b < n; ++b) {
      a3.add([&, a, b] {
        auto lhs = H.Delta(a, b).apply(v.at(G.mul(a, b)));
        auto rhs = H.tensor({a, b}).mul(Q.Qinv(a, b), kron(v.at(a), v.at(b)));
        return compare(L({{"alpha", a}, {"beta", b}}), lhs, rhs);
      });
      a5.add([&, a, b] { return compare(L({{"beta", b}, {"alpha", a}}), H.Phi(b, a).apply(v.at(a)), v.at(G.conj(b, a))); });
    }
  }
  rep.axioms.push_back(detail::run_tasks("v-invertible", "axiom", vinv));
  rep.axioms.push_back(detail::run_tasks("v-1-exchange", "axiom", a1));
  rep.axioms.push_back(detail::run_tasks("v-2-square", "axiom", a2));
  rep.axioms.push_back(detail::run_tasks("v-3-coproduct", "axiom", a3));
  rep.axioms.push_back(detail::run_tasks("v-4-antipode", "axiom", a4));
  rep.axioms.push_back(detail::run_tasks("v-5-phi", "axiom", a5));
  return rep;
}

enum class TwistKind { Theta, V };

/// theta <-> v = theta^-1.  The input must pass its own checker; the output
/// is checked against the other one.  Throws ValidationFailed otherwise.
template <class T>
TwistFamily<T> twist_conversion(const TCoalgebra<T>& H, const RMatrixFamily<T>& R, const TwistFamily<T>& x, TwistKind from) {
  auto in = from == TwistKind::Theta ? check_twist_theta(H, R, x) : check_twist_v(H, R, x);
  if (!in.passed()) throw ValidationFailed("input twist fails " + in.failing_ids().front());
  auto y = invert_family(H, x);
  auto out = from == TwistKind::Theta ? check_twist_v(H, R, y) : check_twist_theta(H, R, y);
  if (!out.passed()) throw ValidationFailed("converted twist fails " + out.failing_ids().front());
  return y;
}

/// Delta(u_ab s(u_{(ab)^-1})) = Q~ (phi_a (x) phi_b)(Q~) (u_a s(u_{a^-1}) (x) u_b s(u_{b^-1})).
template <class T>
ValidationReport check_w_coproduct(const TCoalgebra<T>& H, const RMatrixFamily<T>& R) {
  const auto& G = H.group;
  std::size_t n = G.order();
  auto Q = compute_q(H, R);
  auto D = drinfeld_elements(H, R);
  ValidationReport rep;
  rep.subject = "u s(u) coproduct";
  detail::TaskList tasks;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      tasks.add([&, a, b] {
        auto A = H.tensor({a, b});
        auto lhs = H.Delta(a, b).apply(detail::u_su(H, D, G.mul(a, b)));
        auto pq = map_leg(H.dims({a, b}), Q.Qinv(a, b), 0, H.Phi(a, a));
        pq = map_leg(H.dims({a, b}), pq, 1, H.Phi(b, b));
        auto rhs = A.mul(A.mul(Q.Qinv(a, b), pq), kron(detail::u_su(H, D, a), detail::u_su(H, D, b)));
        return compare(grade_label(G, {{"alpha", a}, {"beta", b}}), lhs, rhs);
      });
  rep.axioms.push_back(detail::run_tasks("u-su-coproduct", "derived", tasks));
  return rep;
}

template <class T>
struct RibbonExtension {
  TCoalgebra<T> RT;
  RMatrixFamily<T> R;
  TwistFamily<T> v;
};

/// RT_a = H_a (+) H_a v_a with basis (e_i | e_i v_a):
/// (h + k v)(h' + k' v) = (hh' + k phi_a(k') w) + (hk' + k phi_a(h')) v,
/// w = u_a s_{a^-1}(u_{a^-1}); Delta(h + k v) = Delta(h) + Delta(k) Q~ (v (x) v);
/// s(h + k v) = s(h) + s(phi_{a^-1}(k)) v; phi_b(h + k v) = phi_b(h) + phi_b(k) v.
template <class T>
RibbonExtension<T> ribbon_extension(const TCoalgebra<T>& H, const RMatrixFamily<T>& R) {
  check_rmatrix_shapes(H, R);
  const auto& G = H.group;
  std::size_t n = G.order();
  auto Q = compute_q(H, R);
  auto D = drinfeld_elements(H, R);
  RibbonExtension<T> X;
  auto& RT = X.RT;
  RT.field = H.field;
  RT.group = G;
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t d = H.dim(a);
    const auto& A = H.H(a);
    const auto& ph = H.Phi(a, a);
    auto w = detail::u_su(H, D, a);
    auto prod = [&](std::size_t I, std::size_t J) {
      Vec<T> r(2 * d, T(0));
      bool vi = I >= d, vj = J >= d;
      auto ei = unit_vec<T>(d, vi ? I - d : I);
      auto ej = unit_vec<T>(d, vj ? J - d : J);
      Vec<T> part;
      if (!vi) {
        part = A.mul(ei, ej);
      } else {
        part = A.mul(ei, ph.column(vj ? J - d : J));
        if (vj) part = A.mul(part, w);
      }
      std::size_t off = (vi != vj) ? d : 0;
      for (std::size_t k = 0; k < d; ++k) r[off + k] = part[k];
      return r;
    };
    Vec<T> unit(2 * d, T(0));
    for (std::size_t k = 0; k < d; ++k) unit[k] = A.unit()[k];
    RT.components.push_back(ComponentAlgebra<T>::from_products(2 * d, prod, unit));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t ab = G.mul(a, b), da = H.dim(a), db = H.dim(b), dab = H.dim(ab);
      auto T2 = H.tensor({a, b});
      Matrix<T> M(4 * da * db, 2 * dab);
      auto put = [&](const Vec<T>& x, std::size_t sa, std::size_t sb, std::size_t col) {
        for (std::size_t i = 0; i < da; ++i)
          for (std::size_t j = 0; j < db; ++j) M((sa * da + i) * (2 * db) + sb * db + j, col) = x[i * db + j];
      };
      for (std::size_t k = 0; k < dab; ++k) {
        auto dk = H.Delta(a, b).column(k);
        put(dk, 0, 0, k);
        put(T2.mul(dk, Q.Qinv(a, b)), 1, 1, dab + k);
      }
      RT.delta.push_back(std::move(M));
    }
  RT.counit = H.counit;
  RT.counit.insert(RT.counit.end(), H.counit.begin(), H.counit.end());
  auto blockdiag = [](const Matrix<T>& x, const Matrix<T>& y) {
    Matrix<T> M(x.rows() + y.rows(), x.cols() + y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) M(i, j) = x(i, j);
    for (std::size_t i = 0; i < y.rows(); ++i)
      for (std::size_t j = 0; j < y.cols(); ++j) M(x.rows() + i, x.cols() + j) = y(i, j);
    return M;
  };
  for (std::size_t a = 0; a < n; ++a) RT.antipode.push_back(blockdiag(H.S(a), mul(H.S(a), H.Phi(G.inv(a), a))));
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a) RT.phi.push_back(blockdiag(H.Phi(b, a), H.Phi(b, a)));

  std::vector<Vec<T>> r, ri;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t da = H.dim(a), db = H.dim(b);
      Vec<T> x(4 * da * db, T(0)), y(4 * da * db, T(0));
      for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j) {
          x[i * (2 * db) + j] = R.R(a, b)[i * db + j];
          y[i * (2 * db) + j] = R.Rinv(a, b)[i * db + j];
        }
      r.push_back(std::move(x));
      ri.push_back(std::move(y));
    }
  X.R = make_rmatrix(RT, std::move(r), std::move(ri));
  for (std::size_t a = 0; a < n; ++a) {
    Vec<T> v(2 * H.dim(a), T(0));
    for (std::size_t k = 0; k < H.dim(a); ++k) v[H.dim(a) + k] = H.H(a).unit()[k];
    X.v.t.push_back(std::move(v));
  }
  return X;
}

/// theta_a = u_a^-1 for semisimple H in characteristic 0.  Checks the
/// hypotheses (characteristic, semisimplicity, s_{a^-1} o s_a = id) and the
/// identity s_{a^-1}(u_{a^-1}) = u_a before returning.
template <class T>
TwistFamily<T> ribbon_from_semisimple(const TCoalgebra<T>& H, const RMatrixFamily<T>& R) {
  if (!ScalarTraits<T>::characteristic_zero || !H.field.is_rational())
    throw PreconditionFailed("characteristic: needs characteristic 0, field is " + H.field.name());
  auto ss = is_semisimple(H);
  if (!ss.overall) {
    for (std::size_t a = 0; a < H.n(); ++a)
      if (!ss.components[a])
        throw PreconditionFailed("not semisimple: trace form of H_" + H.group.name(a) + " has rank " + std::to_string(ss.ranks[a]) + " < " +
                                 std::to_string(ss.dims[a]));
  }
  const auto& G = H.group;
  for (std::size_t a = 0; a < H.n(); ++a)
    if (!(mul(H.S(G.inv(a)), H.S(a)) == Matrix<T>::identity(H.dim(a))))
      throw PreconditionFailed("s^2 != id: s_{a^-1} o s_a is not the identity for a = " + G.name(a));
  auto D = drinfeld_elements(H, R);
  for (std::size_t a = 0; a < H.n(); ++a) {
    std::size_t ai = G.inv(a);
    if (!(H.S(ai).apply(D.u[ai]) == D.u[a])) throw PreconditionFailed("s(u_{a^-1}) != u_a for a = " + G.name(a));
  }
  TwistFamily<T> theta{D.uinv};
  auto rep = check_twist_theta(H, R, theta);
  if (!rep.passed()) throw ValidationFailed("theta = u^-1 fails " + rep.failing_ids().front());
  return theta;
}

/// (H_1, R_{1,1}, theta_1) as an ordinary ribbon Hopf algebra.
template <class T>
ValidationReport check_classical_ribbon(const TCoalgebra<T>& H, const RMatrixFamily<T>& R, const TwistFamily<T>& theta) {
  std::size_t e = H.one();
  auto C = as_tcoalgebra(component_hopf(H));
  auto F = make_rmatrix(C, {R.R(e, e)}, {R.Rinv(e, e)});
  auto rep = check_classical_qt(H, R);
  rep.append(check_twist_theta(C, F, TwistFamily<T>{{theta.at(e)}}), "ribbon:");
  return rep;
}

}  // namespace crossed
