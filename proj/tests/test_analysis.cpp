#include <gtest/gtest.h>

#include "crossed/analysis.hpp"
#include "crossed/library.hpp"

using namespace crossed;
using Q = Rational;

namespace {
const FieldSpec kQ = FieldSpec::rationals();
TCoalgebra<Q> example(const std::string& n, const std::string& g = "") { return builtin<Q>(n, kQ, g).H; }
}  // namespace

TEST(Semisimplicity, Verdicts) {
  auto f = is_semisimple(example("function-tcoalg"));
  EXPECT_TRUE(f.overall);
  EXPECT_TRUE(f.consistent);
  EXPECT_TRUE(is_semisimple(example("group-algebra", "S3")).overall);
  EXPECT_TRUE(is_semisimple(example("group-hopf")).overall);

  auto s = is_semisimple(example("sweedler-z2"));
  EXPECT_FALSE(s.overall);
  EXPECT_FALSE(s.h1);
  EXPECT_TRUE(s.consistent);
  // the radical of H4 is spanned by x and gx
  EXPECT_EQ(s.ranks, (std::vector<std::size_t>{2, 2}));
}

TEST(Semisimplicity, DoubleOfFunctions) {
  auto Dq = quantum_double(example("function-tcoalg"));
  auto v = is_semisimple(Dq.D);
  EXPECT_TRUE(v.overall);
  EXPECT_TRUE(v.consistent);
  EXPECT_FALSE(is_semisimple(quantum_double(example("sweedler-z2")).D).overall);
}

TEST(Semisimplicity, NeedsCharacteristicZero) {
  auto H = builtin<ModP>("function-tcoalg", FieldSpec::prime(5)).H;
  EXPECT_THROW(is_semisimple(H), UnsupportedCharacteristic);
}

TEST(Factorizability, TrivialRHasRankOne) {
  // lambda(f) = f(1) 1 when R = 1 (x) 1
  auto H = example("group-algebra", "S3");
  Vec<Q> r(36, Q(0));
  r[0] = Q(1);
  auto F = factorizability(H, make_rmatrix(H, {r}));
  EXPECT_EQ(F.rank, 1u);
  EXPECT_FALSE(F.bijective);
  for (std::size_t m = 0; m < 6; ++m) EXPECT_EQ(F.lambda.column(m), m == 0 ? unit_vec<Q>(6, 0) : Vec<Q>(6, Q(0)));
}

TEST(Factorizability, ClassicalDoubleIsFactorizable) {
  auto C = classical_double(sweedler_hopf<Q>(kQ));
  auto F = factorizability(C.hopf.algebra, C.r);
  EXPECT_EQ(F.rank, 16u);
  EXPECT_TRUE(F.bijective);
}

// R_{1,1} has only dim H_1 terms on each side, which caps the rank of
// lambda at (dim H_1)^2 < dim D_1.  The crossed D_1 is therefore not
// factorizable on either example, although D(H_pk) is.
TEST(Factorizability, IdentityComponentOfDoubleIsDeficient) {
  auto f = d1_factorizability(example("function-tcoalg"));
  EXPECT_EQ(f.bound, 1u);
  EXPECT_EQ(f.direct.rank, 1u);
  EXPECT_EQ(f.direct.lambda.rows(), 6u);
  EXPECT_FALSE(f.direct.bijective);
  EXPECT_EQ(f.packed_rank, 36u);
  EXPECT_EQ(f.packed_dim, 36u);
  EXPECT_EQ(f.restricted_rank, 1u);

  auto s = d1_factorizability(example("sweedler-z2"));
  EXPECT_EQ(s.bound, 16u);
  EXPECT_EQ(s.direct.rank, 16u);
  EXPECT_EQ(s.direct.lambda.rows(), 32u);
  EXPECT_FALSE(s.direct.bijective);
  EXPECT_EQ(s.packed_rank, 64u);
  EXPECT_EQ(s.restricted_rank, 16u);
}

TEST(Factorizability, TrivialGroupAgreesWithClassical) {
  auto f = d1_factorizability(example("sweedler-classical-qt"));
  EXPECT_EQ(f.direct.rank, 16u);
  EXPECT_TRUE(f.direct.bijective);
  EXPECT_EQ(f.packed_rank, 16u);
}

TEST(PackedEmbedding, FunctionsOnS3) {
  auto P = check_packed_double_embedding(example("function-tcoalg"));
  EXPECT_TRUE(P.report.passed()) << to_text(P.report);
  EXPECT_FALSE(P.identical);
  EXPECT_FALSE(P.witness.empty());
}

TEST(PackedEmbedding, Sweedler) {
  auto P = check_packed_double_embedding(example("sweedler-z2"));
  EXPECT_TRUE(P.report.passed()) << to_text(P.report);
}

TEST(PackedEmbedding, TrivialGroupIsIdentical) {
  auto P = check_packed_double_embedding(example("sweedler-classical-qt"));
  EXPECT_TRUE(P.report.passed());
  EXPECT_TRUE(P.identical);
  EXPECT_TRUE(P.witness.empty());
}
