#include <gtest/gtest.h>

#include "crossed/double.hpp"
#include "crossed/library.hpp"
#include "crossed/ribbon.hpp"

using namespace crossed;
using Q = Rational;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

struct QT {
  TCoalgebra<Q> H;
  RMatrixFamily<Q> R;
};

QT h4() {
  auto ex = builtin<Q>("sweedler-classical-qt", kQ);
  return {ex.H, *ex.R};
}

const QT& dfs3() {
  static QT q = [] {
    auto Dq = quantum_double(builtin<Q>("function-tcoalg", kQ).H);
    return QT{Dq.D, Dq.R};
  }();
  return q;
}

TwistFamily<Q> scaled(TwistFamily<Q> x, const Q& c) {
  for (auto& v : x.t)
    for (auto& e : v) e *= c;
  return x;
}

}  // namespace

TEST(Ribbon, SweedlerWithR0IsTriangularWithTrivialTwist) {
  // R0 is symmetric with R0^2 = 1 (x) 1, so v = 1 works and u s(u) = g g = 1.
  auto s = h4();
  TwistFamily<Q> one{{unit_vec<Q>(4, 0)}};
  EXPECT_TRUE(check_twist_v(s.H, s.R, one).passed());
  EXPECT_TRUE(check_twist_theta(s.H, s.R, one).passed());
  EXPECT_TRUE(check_classical_ribbon(s.H, s.R, one).passed());
  // g is not central
  TwistFamily<Q> g{{unit_vec<Q>(4, 1)}};
  EXPECT_FALSE(check_twist_v(s.H, s.R, g).passed());
}

TEST(RibbonExtension, DoublesDimensionAndValidates) {
  for (const QT& q : {dfs3(), h4()}) {
    auto X = ribbon_extension(q.H, q.R);
    for (std::size_t a = 0; a < q.H.n(); ++a) EXPECT_EQ(X.RT.dim(a), 2 * q.H.dim(a));
    auto rep = validate(X.RT);
    EXPECT_TRUE(rep.passed()) << to_text(rep);
    EXPECT_TRUE(check_qt(X.RT, X.R).passed());
    EXPECT_TRUE(check_twist_v(X.RT, X.R, X.v).passed());
    auto theta = twist_conversion(X.RT, X.R, X.v, TwistKind::V);
    EXPECT_TRUE(check_twist_theta(X.RT, X.R, theta).passed());
  }
}

TEST(RibbonExtension, ContainsOriginalAsFirstHalf) {
  auto s = h4();
  auto X = ribbon_extension(s.H, s.R);
  const auto& A = s.H.H(0);
  const auto& B = X.RT.H(0);
  auto lift = [](const Vec<Q>& h) {
    Vec<Q> r(8, Q(0));
    for (std::size_t k = 0; k < 4; ++k) r[k] = h[k];
    return r;
  };
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      EXPECT_EQ(B.mul(unit_vec<Q>(8, i), unit_vec<Q>(8, j)), lift(A.mul(unit_vec<Q>(4, i), unit_vec<Q>(4, j))));
  // v sits at the second half's unit slot
  EXPECT_EQ(X.v.at(0), unit_vec<Q>(8, 4));
}

TEST(RibbonExtension, ScaledTwistFails) {
  auto X = ribbon_extension(dfs3().H, dfs3().R);
  auto theta = twist_conversion(X.RT, X.R, X.v, TwistKind::V);
  auto rep = check_twist_theta(X.RT, X.R, scaled(theta, Q(2)));
  EXPECT_FALSE(rep.passed());
  EXPECT_FALSE(rep.find("theta-3-coproduct")->passed());
  EXPECT_FALSE(check_twist_v(X.RT, X.R, scaled(X.v, Q(2))).passed());
}

TEST(RibbonExtension, ZeroTwistIsNotInvertible) {
  auto X = ribbon_extension(dfs3().H, dfs3().R);
  auto zero = scaled(X.v, Q(0));
  auto rep = check_twist_v(X.RT, X.R, zero);
  EXPECT_FALSE(rep.find("v-invertible")->passed());
  EXPECT_THROW(twist_conversion(X.RT, X.R, zero, TwistKind::V), ValidationFailed);
}

TEST(TwistConversion, RoundTrips) {
  auto X = ribbon_extension(dfs3().H, dfs3().R);
  auto theta = twist_conversion(X.RT, X.R, X.v, TwistKind::V);
  EXPECT_EQ(twist_conversion(X.RT, X.R, theta, TwistKind::Theta), X.v);
  for (std::size_t a = 0; a < X.RT.n(); ++a) EXPECT_EQ(X.RT.H(a).mul(theta.at(a), X.v.at(a)), X.RT.H(a).unit());
}

TEST(TwistConversion, WCoproduct) {
  EXPECT_TRUE(check_w_coproduct(dfs3().H, dfs3().R).passed());
  auto s = h4();
  EXPECT_TRUE(check_w_coproduct(s.H, s.R).passed());
}

TEST(SemisimpleRibbon, ThetaIsInverseDrinfeldElement) {
  const auto& q = dfs3();
  auto theta = ribbon_from_semisimple(q.H, q.R);
  auto D = drinfeld_elements(q.H, q.R);
  EXPECT_EQ(theta.t, D.uinv);
  EXPECT_TRUE(check_twist_theta(q.H, q.R, theta).passed());
  EXPECT_TRUE(check_classical_ribbon(q.H, q.R, theta).passed());
}

TEST(SemisimpleRibbon, Preconditions) {
  auto s = h4();
  EXPECT_THROW(ribbon_from_semisimple(s.H, s.R), PreconditionFailed);  // H4 is not semisimple
  auto F = FieldSpec::prime(7);
  auto ex = builtin<ModP>("sweedler-classical-qt", F);
  EXPECT_THROW(ribbon_from_semisimple(ex.H, *ex.R), PreconditionFailed);
}
