#include <gtest/gtest.h>

#include "crossed/duals.hpp"
#include "crossed/library.hpp"

using namespace crossed;
using Q = Rational;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

TCoalgebra<Q> fs3() { return builtin<Q>("function-tcoalg", kQ).H; }
TCoalgebra<Q> sz2() { return builtin<Q>("sweedler-z2", kQ).H; }

/// Functions on G written out directly: delta_a delta_b = [a=b] delta_a,
/// Delta delta_g = sum_{ab=g} delta_a (x) delta_b, eps = evaluation at 1,
/// S delta_a = delta_{a^-1}.
HopfAlgebra<Q> functions_on(const FiniteGroup& G) {
  std::size_t n = G.order();
  Vec<Q> mu(n * n * n, Q(0)), unit(n, Q(1)), counit(n, Q(0));
  Matrix<Q> delta(n * n, n), S(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    mu[(a * n + a) * n + a] = Q(1);
    S(G.inv(a), a) = Q(1);
    for (std::size_t b = 0; b < n; ++b) delta(a * n + b, G.mul(a, b)) = Q(1);
  }
  counit[G.identity()] = Q(1);
  return {kQ, ComponentAlgebra<Q>(n, mu, unit), delta, counit, S};
}

}  // namespace

TEST(OuterDual, GroupAlgebraDualIsFunctions) {
  auto G = cyclic_group(3);
  auto H = as_tcoalgebra(group_algebra<Q>(G, kQ));
  auto A = outer_dual(H);
  EXPECT_TRUE(validate_talgebra(A).passed());
  auto F = functions_on(G);
  // the product of the dual is the transpose of Delta of k[Z3]
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(A.Mu(0, 0)(k, a * 3 + b), F.algebra.c(a, b, k));
  EXPECT_EQ(A.components[0].delta, F.delta);
  EXPECT_EQ(A.components[0].counit, F.counit);
}

TEST(OuterDual, UnitIsCounit) {
  for (auto H : {fs3(), sz2()}) EXPECT_EQ(outer_dual(H).unit, H.counit);
}

TEST(OuterDual, FunctionsOnS3PackToGroupAlgebra) {
  auto H = fs3();
  auto P = pack_talgebra(outer_dual(H));
  EXPECT_TRUE(validate_graded(P).passed());
  auto K = group_algebra<Q>(H.group, kQ);
  EXPECT_EQ(P.hopf.algebra, K.algebra);
  EXPECT_EQ(P.hopf.delta, K.delta);
  EXPECT_EQ(P.hopf.counit, K.counit);
  EXPECT_EQ(P.hopf.antipode, K.antipode);
}

TEST(InnerDual, Dimensions) {
  auto D = inner_dual(sz2());
  EXPECT_TRUE(validate(D).passed());
  for (std::size_t a = 0; a < 2; ++a) EXPECT_EQ(D.dim(a), 8u);
}

TEST(InnerDual, TrivialGroupIsClassicalDual) {
  auto A = sweedler_hopf<Q>(kQ);
  auto D = inner_dual(as_tcoalgebra(A));
  ASSERT_EQ(D.n(), 1u);
  // e^p e^q = sum_y Delta_y(p, q) e^y and Delta e^y = sum m_{ij}^y e^i (x) e^j
  for (std::size_t p = 0; p < 4; ++p)
    for (std::size_t q = 0; q < 4; ++q)
      for (std::size_t y = 0; y < 4; ++y) {
        EXPECT_EQ(D.H(0).c(p, q, y), A.delta(p * 4 + q, y));
        EXPECT_EQ(D.Delta(0, 0)(p * 4 + q, y), A.algebra.c(p, q, y));
      }
  EXPECT_EQ(D.counit, A.algebra.unit());
  EXPECT_EQ(D.S(0), transpose(A.antipode));
}

TEST(InnerDual, AntipodeIsSumOfTransposes) {
  for (auto H : {sz2(), fs3()}) {
    const auto& G = H.group;
    auto D = inner_dual(H);
    auto P = pack_tcoalgebra(H);
    std::size_t N = P.total();
    Matrix<Q> expect(N, N);
    for (std::size_t a = 0; a < H.n(); ++a) {
      std::size_t ai = G.inv(a);
      const auto& s = H.S(ai);  // H_{a^-1} -> H_a
      for (std::size_t i = 0; i < H.dim(a); ++i)
        for (std::size_t j = 0; j < H.dim(ai); ++j) expect(P.offset(ai) + j, P.offset(a) + i) = s(i, j);
    }
    EXPECT_EQ(D.S(D.one()), expect);
  }
}

TEST(CoopInnerDual, CommutativeCaseMatchesInner) {
  auto H = fs3();
  auto I = inner_dual(H), C = coop_inner_dual(H);
  EXPECT_TRUE(validate(C).passed());
  EXPECT_EQ(C.Delta(0, 0), I.Delta(0, 0));
}

TEST(CoopInnerDual, SweedlerDiffersButValidates) {
  auto H = sz2();
  auto I = inner_dual(H), C = coop_inner_dual(H);
  EXPECT_TRUE(validate(I).passed());
  EXPECT_TRUE(validate(C).passed());
  EXPECT_NE(C.Delta(0, 0), I.Delta(0, 0));
  auto Sc = C.S(0);
  auto inv = invert_matrix(Sc);
  EXPECT_EQ(mul(Sc, inv), Matrix<Q>::identity(Sc.rows()));
  EXPECT_EQ(Sc, invert_matrix(I.S(0)));
}

TEST(Pack, TrivialGroupUnchanged) {
  auto A = sweedler_hopf<Q>(kQ);
  auto P = pack_tcoalgebra(as_tcoalgebra(A));
  EXPECT_EQ(P.hopf, A);
  auto Pd = pack_talgebra(outer_dual(as_tcoalgebra(A)));
  auto D = inner_dual(as_tcoalgebra(A));
  EXPECT_EQ(Pd.hopf, component_hopf(D));
}

TEST(Pack, UnitLivesInIdentityComponent) {
  for (auto H : {fs3(), sz2()}) {
    auto P = pack_talgebra(outer_dual(H));
    std::size_t e = H.one(), o = P.offset(e);
    for (std::size_t k = 0; k < P.total(); ++k) {
      bool in_one = k >= o && k < o + P.grading[e];
      EXPECT_EQ(P.hopf.algebra.unit()[k], in_one ? H.counit[k - o] : Q(0));
    }
  }
}

TEST(Pack, FunctionsOnS3) {
  auto H = fs3();
  auto P = pack_tcoalgebra(H);
  EXPECT_EQ(P.hopf, functions_on(H.group));
  EXPECT_TRUE(validate_graded(P).passed());
}

TEST(Pack, SweedlerAntipodeIsBlockwise) {
  auto H = sz2();
  auto P = pack_tcoalgebra(H);
  EXPECT_EQ(P.total(), 8u);
  EXPECT_TRUE(validate_graded(P).passed());
  for (std::size_t a = 0; a < 2; ++a) {
    std::size_t ai = H.group.inv(a);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        bool in_block = i >= P.offset(ai) && i < P.offset(ai) + 4;
        EXPECT_EQ(P.hopf.antipode(i, P.offset(a) + j), in_block ? H.S(a)(i - P.offset(ai), j) : Q(0));
      }
  }
}

TEST(Pack, RoundTrips) {
  for (const auto& n : builtin_names()) {
    auto H = builtin<Q>(n, kQ).H;
    EXPECT_EQ(unpack_tcoalgebra(pack_tcoalgebra(H)), H) << n;
    auto A = outer_dual(H);
    EXPECT_EQ(unpack_talgebra(pack_talgebra(A)), A) << n;
  }
}

TEST(Unpack, CounitOffIdentityComponent) {
  auto P = pack_tcoalgebra(fs3());
  P.hopf.counit[1] = Q(1);
  EXPECT_THROW(unpack_tcoalgebra(P), GradingViolation);
}

TEST(Unpack, GroupAlgebraIsNotGradedByElements) {
  auto G = builtin_group("S3");
  GradedHopfAlgebra<Q> P;
  P.group = G;
  P.grading.assign(6, 1);
  P.hopf = group_algebra<Q>(G, kQ);
  for (std::size_t b = 0; b < 6; ++b) P.psi.push_back(Matrix<Q>::identity(6));
  EXPECT_THROW(unpack_tcoalgebra(P), GradingViolation);
}
