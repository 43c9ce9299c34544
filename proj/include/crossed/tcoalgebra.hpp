#pragma once

// T-coalgebras over a finite group: a family of algebras H_a with
// comultiplications Delta_{a,b}: H_ab -> H_a (x) H_b, a counit on H_1,
// antipodes s_a: H_a -> H_{a^-1} and conjugations phi_b: H_a -> H_{bab^-1}.

#include <functional>
#include <string>
#include <vector>

#include "crossed/algebra.hpp"
#include "crossed/group.hpp"
#include "crossed/report.hpp"

namespace crossed {

template <class T>
struct TCoalgebra {
  FieldSpec field;
  FiniteGroup group;
  std::vector<ComponentAlgebra<T>> components;
  std::vector<Matrix<T>> delta;     // [a*n + b]: H_ab -> H_a (x) H_b
  Vec<T> counit;                    // row vector on H_1
  std::vector<Matrix<T>> antipode;  // [a]: H_a -> H_{a^-1}
  std::vector<Matrix<T>> phi;       // [b*n + a]: phi_b on H_a

  std::size_t n() const { return group.order(); }
  std::size_t dim(std::size_t a) const { return components[a].dim(); }
  const ComponentAlgebra<T>& H(std::size_t a) const { return components[a]; }
  const Matrix<T>& Delta(std::size_t a, std::size_t b) const { return delta[a * n() + b]; }
  const Matrix<T>& Phi(std::size_t b, std::size_t a) const { return phi[b * n() + a]; }
  const Matrix<T>& S(std::size_t a) const { return antipode[a]; }
  std::size_t one() const { return group.identity(); }

  TensorAlgebra<T> tensor(std::vector<std::size_t> grades) const {
    std::vector<const ComponentAlgebra<T>*> legs;
    for (auto g : grades) legs.push_back(&components[g]);
    return TensorAlgebra<T>(std::move(legs));
  }
  std::vector<std::size_t> dims(std::initializer_list<std::size_t> grades) const {
    std::vector<std::size_t> d;
    for (auto g : grades) d.push_back(dim(g));
    return d;
  }

  friend bool operator==(const TCoalgebra& x, const TCoalgebra& y) {
    return x.field == y.field && x.group == y.group && x.components == y.components && x.delta == y.delta &&
           x.counit == y.counit && x.antipode == y.antipode && x.phi == y.phi;
  }
};

inline std::string grade_label(const FiniteGroup& g, std::initializer_list<std::pair<const char*, std::size_t>> parts) {
  std::string s;
  for (const auto& [k, v] : parts) {
    if (!s.empty()) s += ",";
    s += k;
    s += "=";
    s += g.name(v);
  }
  return s;
}

/// Throws ShapeMismatch unless every block has the shape dictated by the
/// group and the component dimensions.
template <class T>
void check_shapes(const TCoalgebra<T>& H) {
  const auto& G = H.group;
  std::size_t n = G.order();
  auto fail = [](const std::string& what) { throw ShapeMismatch(what); };
  if (H.components.size() != n) fail("expected " + std::to_string(n) + " components, got " + std::to_string(H.components.size()));
  if (H.delta.size() != n * n) fail("expected " + std::to_string(n * n) + " comultiplication blocks");
  if (H.antipode.size() != n) fail("expected " + std::to_string(n) + " antipode blocks");
  if (H.phi.size() != n * n) fail("expected " + std::to_string(n * n) + " conjugation blocks");
  if (H.counit.size() != H.dim(G.identity())) fail("counit has length " + std::to_string(H.counit.size()));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto& D = H.Delta(a, b);
      if (D.rows() != H.dim(a) * H.dim(b) || D.cols() != H.dim(G.mul(a, b)))
        fail("Delta(" + G.name(a) + "," + G.name(b) + ") has shape " + D.shape());
      const auto& P = H.Phi(b, a);
      if (P.rows() != H.dim(G.conj(b, a)) || P.cols() != H.dim(a))
        fail("phi_" + G.name(b) + " on H_" + G.name(a) + " has shape " + P.shape());
    }
    const auto& s = H.S(a);
    if (s.rows() != H.dim(G.inv(a)) || s.cols() != H.dim(a)) fail("s_" + G.name(a) + " has shape " + s.shape());
  }
}

/// x in H_{a1...an} to H_{a1} (x) ... (x) H_{an}, splitting off the first
/// factor at each step.  By coassociativity any nesting gives the same value.
template <class T>
Vec<T> iterated_delta(const TCoalgebra<T>& H, const std::vector<std::size_t>& word, const Vec<T>& x) {
  const auto& G = H.group;
  if (word.empty()) throw GradeMismatch("empty word");
  std::vector<std::size_t> suffix(word.size());
  suffix.back() = word.back();
  for (std::size_t k = word.size() - 1; k-- > 0;) suffix[k] = G.mul(word[k], suffix[k + 1]);
  if (x.size() != H.dim(suffix[0])) throw GradeMismatch("element length " + std::to_string(x.size()) + " does not match grade " + G.name(suffix[0]));
  Vec<T> t = x;
  std::vector<std::size_t> dims;
  for (std::size_t k = 0; k < word.size(); ++k) dims.push_back(H.dim(word[k]));
  std::vector<std::size_t> cur{H.dim(suffix[0])};
  for (std::size_t k = 0; k + 1 < word.size(); ++k) {
    t = map_leg(cur, t, k, H.Delta(word[k], suffix[k + 1]));
    cur.back() = H.dim(word[k]);
    cur.push_back(H.dim(suffix[k + 1]));
  }
  return t;
}

namespace detail {

using Task = std::function<std::optional<Failure>()>;

struct TaskList {
  std::vector<Task> tasks;
  void add(Task t) { tasks.push_back(std::move(t)); }
};

inline AxiomResult run_tasks(const std::string& id, const std::string& category, const TaskList& list) {
  return run_axiom(id, category, list.tasks.size(), [&](std::size_t i) { return list.tasks[i](); });
}

template <class T>
std::optional<Failure> compare_matrix(const std::string& where, const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return Failure{where, "shapes " + a.shape() + " vs " + b.shape()};
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (auto f = compare(where + ",column=" + std::to_string(j), a.column(j), b.column(j))) return f;
  return std::nullopt;
}

}  // namespace detail

/// Components above `associativity_limit` (0: no limit) have their
/// associativity check skipped unless `force` is set; the check costs d^4
/// scalar products per component.
struct ValidateOptions {
  std::size_t associativity_limit = 0;
  bool force = false;
};

/// Checks every axiom on all basis tuples.  Derived checks (antipode anti-
/// (co)multiplicativity and friends) follow from the axioms; failures there
/// with passing axioms point at an internal inconsistency.
template <class T>
ValidationReport validate(const TCoalgebra<T>& H, const std::string& subject = "T-coalgebra", const ValidateOptions& opts = {}) {
  check_shapes(H);
  using detail::TaskList;
  const auto& G = H.group;
  const std::size_t n = G.order(), e = G.identity();
  ValidationReport rep;
  rep.subject = subject;
  auto L = [&](std::initializer_list<std::pair<const char*, std::size_t>> p) { return grade_label(G, p); };
  auto idx = [](const char* k, std::size_t v) { return std::string(",") + k + "=" + std::to_string(v); };
  auto ev = [](std::size_t d, std::size_t i) { return unit_vec<T>(d, i); };

  // Component algebras.
  {
    TaskList assoc, unit;
    std::vector<std::string> gated;
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t d = H.dim(a);
      const auto& A = H.H(a);
      bool skip = opts.associativity_limit && d > opts.associativity_limit && !opts.force;
      if (skip) gated.push_back(G.name(a));
      for (std::size_t i = 0; i < d && !skip; ++i)
        for (std::size_t j = 0; j < d; ++j)
          for (std::size_t k = 0; k < d; ++k)
            assoc.add([&, a, i, j, k, d] {
              auto lhs = A.mul(A.mul(ev(d, i), ev(d, j)), ev(d, k));
              auto rhs = A.mul(ev(d, i), A.mul(ev(d, j), ev(d, k)));
              return compare(L({{"alpha", a}}) + idx("i", i) + idx("j", j) + idx("k", k), lhs, rhs);
            });
      for (std::size_t i = 0; i < d; ++i)
        unit.add([&, a, i, d] {
          std::string w = L({{"alpha", a}}) + idx("i", i);
          if (auto f = compare(w + ",side=left", A.mul(A.unit(), ev(d, i)), ev(d, i))) return f;
          return compare(w + ",side=right", A.mul(ev(d, i), A.unit()), ev(d, i));
        });
    }
    if (gated.size() == n) {
      rep.axioms.push_back(skipped_axiom("algebra-associativity", "axiom",
                                         "components above dimension " + std::to_string(opts.associativity_limit) + "; use force"));
    } else {
      rep.axioms.push_back(detail::run_tasks("algebra-associativity", "axiom", assoc));
      if (!gated.empty()) {
        std::string list;
        for (const auto& g : gated) list += (list.empty() ? "" : ",") + g;
        rep.axioms.back().note = "skipped grades " + list + " above dimension " + std::to_string(opts.associativity_limit);
      }
    }
    rep.axioms.push_back(detail::run_tasks("algebra-unit", "axiom", unit));
  }

  // Delta_{a,b} is an algebra morphism.
  {
    TaskList mult;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t ab = G.mul(a, b), d = H.dim(ab);
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j)
            mult.add([&, a, b, ab, i, j, d] {
              const auto& D = H.Delta(a, b);
              auto TA = H.tensor({a, b});
              auto lhs = D.apply(H.H(ab).mul(ev(d, i), ev(d, j)));
              auto rhs = TA.mul(D.column(i), D.column(j));
              return compare(L({{"alpha", a}, {"beta", b}}) + idx("i", i) + idx("j", j), lhs, rhs);
            });
        mult.add([&, a, b, ab] {
          auto TA = H.tensor({a, b});
          return compare(L({{"alpha", a}, {"beta", b}}) + ",unit", H.Delta(a, b).apply(H.H(ab).unit()), TA.unit());
        });
      }
    rep.axioms.push_back(detail::run_tasks("delta-multiplicative", "axiom", mult));
  }

  // Coassociativity.
  {
    TaskList co;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          std::size_t abc = G.mul({a, b, c}), d = H.dim(abc);
          for (std::size_t h = 0; h < d; ++h)
            co.add([&, a, b, c, h, d] {
              std::size_t bc = G.mul(b, c), ab = G.mul(a, b);
              auto lhs = map_leg(H.dims({a, bc}), H.Delta(a, bc).apply(ev(d, h)), 1, H.Delta(b, c));
              auto rhs = map_leg(H.dims({ab, c}), H.Delta(ab, c).apply(ev(d, h)), 0, H.Delta(a, b));
              return compare(L({{"alpha", a}, {"beta", b}, {"gamma", c}}) + idx("h", h), lhs, rhs);
            });
        }
    rep.axioms.push_back(detail::run_tasks("coassociativity", "axiom", co));
  }

  // Counit laws and multiplicativity of the counit.
  {
    TaskList laws, mult;
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t d = H.dim(a);
      for (std::size_t h = 0; h < d; ++h)
        laws.add([&, a, h, d] {
          std::string w = L({{"alpha", a}}) + idx("h", h);
          auto left = contract_leg(H.dims({e, a}), H.Delta(e, a).column(h), 0, H.counit);
          if (auto f = compare(w + ",side=left", left, ev(d, h))) return f;
          auto right = contract_leg(H.dims({a, e}), H.Delta(a, e).column(h), 1, H.counit);
          return compare(w + ",side=right", right, ev(d, h));
        });
    }
    std::size_t d1 = H.dim(e);
    auto eps = [&](const Vec<T>& x) {
      T s(0);
      for (std::size_t k = 0; k < x.size(); ++k)
        if (!x[k].is_zero()) s += H.counit[k] * x[k];
      return s;
    };
    for (std::size_t i = 0; i < d1; ++i)
      for (std::size_t j = 0; j < d1; ++j)
        mult.add([&, i, j, d1, eps] {
          return compare("i=" + std::to_string(i) + ",j=" + std::to_string(j), eps(H.H(e).mul(ev(d1, i), ev(d1, j))),
                         H.counit[i] * H.counit[j]);
        });
    mult.add([&, eps] { return compare(std::string("unit"), eps(H.H(e).unit()), T(1)); });
    rep.axioms.push_back(detail::run_tasks("counit-laws", "axiom", laws));
    rep.axioms.push_back(detail::run_tasks("counit-multiplicative", "axiom", mult));
  }

  // Conjugation.
  {
    TaskList mult, hom, iso, dcompat, ecompat, ident;
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t a = 0; a < n; ++a) {
        std::size_t d = H.dim(a), ba = G.conj(b, a);
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j)
            mult.add([&, a, b, ba, i, j, d] {
              const auto& P = H.Phi(b, a);
              auto lhs = P.apply(H.H(a).mul(ev(d, i), ev(d, j)));
              auto rhs = H.H(ba).mul(P.column(i), P.column(j));
              return compare(L({{"beta", b}, {"alpha", a}}) + idx("i", i) + idx("j", j), lhs, rhs);
            });
        mult.add([&, a, b, ba] {
          return compare(L({{"beta", b}, {"alpha", a}}) + ",unit", H.Phi(b, a).apply(H.H(a).unit()), H.H(ba).unit());
        });
        iso.add([&, a, b] {
          const auto& P = H.Phi(b, a);
          if (!P.square() || rank(P) != P.cols())
            return std::optional<Failure>(Failure{L({{"beta", b}, {"alpha", a}}), "phi block " + P.shape() + " is not invertible"});
          return std::optional<Failure>();
        });
        for (std::size_t c = 0; c < n; ++c)
          hom.add([&, a, b, c] {
            auto lhs = mul(H.Phi(b, G.conj(c, a)), H.Phi(c, a));
            return detail::compare_matrix(L({{"beta", b}, {"gamma", c}, {"alpha", a}}), lhs, H.Phi(G.mul(b, c), a));
          });
        if (b == e)
          ident.add([&, a] { return detail::compare_matrix(L({{"alpha", a}}), H.Phi(e, a), Matrix<T>::identity(H.dim(a))); });
      }
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          std::size_t ab = G.mul(a, b), d = H.dim(ab);
          for (std::size_t h = 0; h < d; ++h)
            dcompat.add([&, a, b, c, ab, h] {
              std::size_t ca = G.conj(c, a), cb = G.conj(c, b);
              auto lhs = H.Delta(ca, cb).apply(H.Phi(c, ab).column(h));
              auto rhs = H.Delta(a, b).column(h);
              rhs = map_leg(H.dims({a, b}), rhs, 0, H.Phi(c, a));
              rhs = map_leg(H.dims({ca, b}), rhs, 1, H.Phi(c, b));
              return compare(L({{"gamma", c}, {"alpha", a}, {"beta", b}}) + idx("h", h), lhs, rhs);
            });
        }
      for (std::size_t h = 0; h < H.dim(e); ++h)
        ecompat.add([&, c, h] {
          T lhs(0);
          auto col = H.Phi(c, e).column(h);
          for (std::size_t k = 0; k < col.size(); ++k) lhs += H.counit[k] * col[k];
          return compare(L({{"gamma", c}}) + idx("h", h), lhs, H.counit[h]);
        });
    }
    rep.axioms.push_back(detail::run_tasks("phi-multiplicative", "axiom", mult));
    rep.axioms.push_back(detail::run_tasks("phi-invertible", "axiom", iso));
    rep.axioms.push_back(detail::run_tasks("phi-homomorphism", "axiom", hom));
    rep.axioms.push_back(detail::run_tasks("phi-delta", "axiom", dcompat));
    rep.axioms.push_back(detail::run_tasks("phi-counit", "axiom", ecompat));
    rep.axioms.push_back(detail::run_tasks("phi-identity", "derived", ident));
  }

  // Antipode.
  {
    TaskList left, right;
    std::size_t d1 = H.dim(e);
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t ai = G.inv(a);
      for (std::size_t h = 0; h < d1; ++h) {
        left.add([&, a, ai, h] {
          auto x = map_leg(H.dims({ai, a}), H.Delta(ai, a).column(h), 0, H.S(ai));
          auto lhs = fuse_legs(H.dims({a, a}), x, 0, H.H(a));
          return compare(L({{"alpha", a}}) + idx("h", h), lhs, scale(H.counit[h], H.H(a).unit()));
        });
        right.add([&, a, ai, h] {
          auto x = map_leg(H.dims({a, ai}), H.Delta(a, ai).column(h), 1, H.S(ai));
          auto lhs = fuse_legs(H.dims({a, a}), x, 0, H.H(a));
          return compare(L({{"alpha", a}}) + idx("h", h), lhs, scale(H.counit[h], H.H(a).unit()));
        });
      }
    }
    rep.axioms.push_back(detail::run_tasks("antipode-left", "axiom", left));
    rep.axioms.push_back(detail::run_tasks("antipode-right", "axiom", right));
  }

  // Consequences: s is antimultiplicative, unital, anticomultiplicative,
  // counital; compatibility with phi is the inferred form of the remark
  // that it follows from the axioms.
  {
    TaskList antimult, anticomult, counital, phis;
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t d = H.dim(a), ai = G.inv(a);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          antimult.add([&, a, ai, i, j, d] {
            const auto& s = H.S(a);
            auto lhs = s.apply(H.H(a).mul(ev(d, i), ev(d, j)));
            auto rhs = H.H(ai).mul(s.column(j), s.column(i));
            return compare(L({{"alpha", a}}) + idx("i", i) + idx("j", j), lhs, rhs);
          });
      antimult.add([&, a, ai] { return compare(L({{"alpha", a}}) + ",unit", H.S(a).apply(H.H(a).unit()), H.H(ai).unit()); });
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t ab = G.mul(a, b), dab = H.dim(ab);
        for (std::size_t h = 0; h < dab; ++h)
          anticomult.add([&, a, b, ab, h] {
            std::size_t ai = G.inv(a), bi = G.inv(b);
            auto lhs = map_leg(H.dims({a, b}), H.Delta(a, b).column(h), 0, H.S(a));
            lhs = map_leg(H.dims({ai, b}), lhs, 1, H.S(b));
            auto sh = H.S(ab).column(h);  // in H_{b^-1 a^-1}
            auto rhs = flip(H.Delta(bi, ai).apply(sh), H.dim(bi), H.dim(ai));
            return compare(L({{"alpha", a}, {"beta", b}}) + idx("h", h), lhs, rhs);
          });
        phis.add([&, a, b] {
          auto lhs = mul(H.Phi(b, ai), H.S(a));
          auto rhs = mul(H.S(G.conj(b, a)), H.Phi(b, a));
          return detail::compare_matrix(L({{"beta", b}, {"alpha", a}}), lhs, rhs);
        });
      }
    }
    for (std::size_t h = 0; h < H.dim(e); ++h)
      counital.add([&, h] {
        T lhs(0);
        auto col = H.S(e).column(h);
        for (std::size_t k = 0; k < col.size(); ++k) lhs += H.counit[k] * col[k];
        return compare("h=" + std::to_string(h), lhs, H.counit[h]);
      });
    rep.axioms.push_back(detail::run_tasks("antipode-antimultiplicative", "derived", antimult));
    rep.axioms.push_back(detail::run_tasks("antipode-anticomultiplicative", "derived", anticomult));
    rep.axioms.push_back(detail::run_tasks("antipode-counit", "derived", counital));
    rep.axioms.push_back(detail::run_tasks("phi-antipode", "inferred", phis));
  }
  return rep;
}

/// Validates and throws ValidationFailed naming the first failing check.
template <class T>
void require_valid(const TCoalgebra<T>& H, const std::string& what) {
  auto rep = validate(H, what);
  if (!rep.passed()) {
    auto ids = rep.failing_ids();
    const auto* a = rep.find(ids.front());
    std::string msg = what + " fails " + ids.front();
    if (!a->failures.empty()) msg += " at " + a->failures.front().where + ": " + a->failures.front().witness;
    throw ValidationFailed(msg);
  }
}

}  // namespace crossed
