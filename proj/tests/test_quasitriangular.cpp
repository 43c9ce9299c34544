#include <gtest/gtest.h>

#include "crossed/double.hpp"
#include "crossed/library.hpp"

using namespace crossed;
using Q = Rational;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

struct QT {
  TCoalgebra<Q> H;
  RMatrixFamily<Q> R;
};

QT double_qt(const std::string& n) {
  auto Dq = quantum_double(builtin<Q>(n, kQ).H);
  return {Dq.D, Dq.R};
}

QT h4() {
  auto ex = builtin<Q>("sweedler-classical-qt", kQ);
  return {ex.H, *ex.R};
}

const QT& dfs3() {
  static QT q = double_qt("function-tcoalg");
  return q;
}
const QT& dsz2() {
  static QT q = double_qt("sweedler-z2");
  return q;
}

}  // namespace

TEST(Quasitriangular, BuiltinStructuresPass) {
  for (const QT* q : {&dfs3(), &dsz2()}) {
    auto rep = check_qt(q->H, q->R);
    EXPECT_TRUE(rep.passed()) << to_text(rep);
  }
  auto s = h4();
  EXPECT_TRUE(check_qt(s.H, s.R).passed());
  EXPECT_TRUE(check_classical_qt(s.H, s.R).passed());
}

TEST(Quasitriangular, YangBaxterOnAllTriples) {
  auto rep = check_yang_baxter(dfs3().H, dfs3().R);
  ASSERT_NE(rep.find("yang-baxter"), nullptr);
  EXPECT_EQ(rep.find("yang-baxter")->instances, 216u);
  EXPECT_TRUE(rep.passed());
  EXPECT_TRUE(check_yang_baxter(dsz2().H, dsz2().R).passed());
}

TEST(Quasitriangular, ConjugationLemma) {
  EXPECT_TRUE(check_r_conjugation_lemma(dfs3().H, dfs3().R).passed());
  EXPECT_TRUE(check_r_conjugation_lemma(dsz2().H, dsz2().R).passed());
}

TEST(Quasitriangular, TrivialRFailsIntertwining) {
  // 1 (x) 1 is invertible and satisfies both coproduct rules, but H4 is
  // not cocommutative.
  auto s = h4();
  Vec<Q> one(16, Q(0));
  one[0] = Q(1);
  auto rep = check_qt(s.H, make_rmatrix(s.H, {one}));
  EXPECT_EQ(rep.failing_ids(), std::vector<std::string>{"R-a"});
  EXPECT_FALSE(rep.find("R-a")->failures.front().witness.empty());
}

TEST(Quasitriangular, PerturbedR0Fails) {
  auto s = h4();
  auto r = s.R.r[0];
  r[2 * 4 + 1] += Q(1);  // + x (x) g
  auto rep = check_qt(s.H, make_rmatrix(s.H, {r}));
  EXPECT_EQ(rep.failing_ids(), (std::vector<std::string>{"R-a", "R-b", "R-c"}));
  EXPECT_FALSE(rep.find("R-b")->failures.front().where.empty());
}

TEST(Quasitriangular, NonInvertibleRIsRejected) {
  auto s = h4();
  Vec<Q> zero(16, Q(0));
  EXPECT_THROW(make_rmatrix(s.H, {zero}), NotInvertible);
  EXPECT_THROW(make_rmatrix(s.H, {Vec<Q>(3, Q(1))}), ShapeMismatch);
}

TEST(Quasitriangular, QFamily) {
  for (const QT* q : {&dfs3(), &dsz2()}) EXPECT_TRUE(check_q(q->H, compute_q(q->H, q->R)).passed());
}

TEST(Quasitriangular, MirrorIsQuasitriangular) {
  for (const QT* q : {&dfs3(), &dsz2()}) {
    auto [M, F] = mirror_qt(q->H, q->R);
    EXPECT_TRUE(validate(M).passed());
    EXPECT_TRUE(check_qt(M, F).passed());
  }
}

TEST(Drinfeld, SweedlerElementIsG) {
  // u = sum S(r2) r1 = (1 + g + g - 1) / 2 = g, worked out by hand
  auto s = h4();
  auto D = drinfeld_elements(s.H, s.R);
  Vec<Q> g{Q(0), Q(1), Q(0), Q(0)};
  EXPECT_EQ(D.u[0], g);
  EXPECT_EQ(D.uinv[0], g);
}

TEST(Drinfeld, TrivialRGivesUnit) {
  auto H = builtin<Q>("group-algebra", kQ, "S3").H;
  Vec<Q> r(36, Q(0));
  r[0] = Q(1);  // 1 (x) 1
  auto R = make_rmatrix(H, {r});
  ASSERT_TRUE(check_qt(H, R).passed());
  auto D = drinfeld_elements(H, R);
  EXPECT_EQ(D.u[0], unit_vec<Q>(6, 0));
}

TEST(Drinfeld, PropertiesHold) {
  for (const QT* q : {&dfs3(), &dsz2()}) {
    auto rep = check_drinfeld(q->H, q->R, drinfeld_elements(q->H, q->R));
    EXPECT_TRUE(rep.passed()) << to_text(rep);
  }
  auto s = h4();
  EXPECT_TRUE(check_drinfeld(s.H, s.R, drinfeld_elements(s.H, s.R)).passed());
}

// The other leg order in the third inverse formula gives u^-1 only when the
// double antipode squares to the identity.
TEST(Drinfeld, PrintedLegOrderIsNotTheInverse) {
  const auto& F = dfs3();
  auto DF = drinfeld_elements(F.H, F.R);
  for (std::size_t a = 0; a < F.H.n(); ++a) EXPECT_EQ(u_inverse_printed_order(F.H, F.R, a), DF.uinv[a]);
  const auto& S = dsz2();
  auto DS = drinfeld_elements(S.H, S.R);
  bool differs = false;
  for (std::size_t a = 0; a < S.H.n(); ++a) differs = differs || u_inverse_printed_order(S.H, S.R, a) != DS.uinv[a];
  EXPECT_TRUE(differs);
}

TEST(Drinfeld, DetectsWrongElement) {
  auto s = h4();
  auto D = drinfeld_elements(s.H, s.R);
  D.u[0] = unit_vec<Q>(4, 0);
  D.uinv[0] = unit_vec<Q>(4, 0);
  EXPECT_FALSE(check_drinfeld(s.H, s.R, D).passed());
}
