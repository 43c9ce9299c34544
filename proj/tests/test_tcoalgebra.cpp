#include <gtest/gtest.h>

#include "crossed/convolution.hpp"
#include "crossed/library.hpp"
#include "fuzz.hpp"

using namespace crossed;
using Q = Rational;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

TCoalgebra<Q> fs3() { return builtin<Q>("function-tcoalg", kQ).H; }
TCoalgebra<Q> sz2() { return builtin<Q>("sweedler-z2", kQ).H; }

Matrix<Q> random_map(std::size_t rows, std::size_t cols, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(-3, 3);
  Matrix<Q> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Q(dist(rng));
  return m;
}

}  // namespace

TEST(Builtins, AllValidate) {
  for (const auto& n : builtin_names()) {
    auto ex = builtin<Q>(n, kQ);
    auto rep = validate(ex.H);
    EXPECT_TRUE(rep.passed()) << n << "\n" << to_text(rep);
    EXPECT_GT(rep.total_instances(), 0u);
  }
}

TEST(Builtins, Shapes) {
  auto H = fs3();
  EXPECT_EQ(H.n(), 6u);
  for (std::size_t a = 0; a < 6; ++a) EXPECT_EQ(H.dim(a), 1u);
  auto S = sz2();
  EXPECT_EQ(S.n(), 2u);
  EXPECT_EQ(S.dim(0), 4u);
  EXPECT_EQ(S.dim(1), 4u);
  EXPECT_THROW(builtin<Q>("no-such-thing", kQ), UnknownExample);
  EXPECT_THROW(builtin<Q>("group-hopf(S3)", kQ), PreconditionFailed);
  EXPECT_EQ(builtin<Q>("function-tcoalg(Z4)", kQ).H.n(), 4u);
}

TEST(Builtins, OverPrimeFields) {
  for (std::uint64_t p : {3u, 5u, 7u}) {
    auto f = FieldSpec::prime(p);
    for (const auto& n : builtin_names()) {
      auto ex = builtin<ModP>(n, f);
      EXPECT_TRUE(validate(ex.H).passed()) << n << " over GF" << p;
    }
  }
  // R0 needs 1/2
  EXPECT_THROW(builtin<ModP>("sweedler-classical-qt", FieldSpec::prime(2)), PreconditionFailed);
}

TEST(Validate, MutatedAntipodeNamesAntipodeAxiom) {
  auto H = fs3();
  H.antipode[1](0, 0) = Q(5);
  auto rep = validate(H);
  ASSERT_FALSE(rep.passed());
  auto ids = rep.failing_ids();
  bool antipode = false;
  for (const auto& id : ids) antipode = antipode || id.rfind("antipode", 0) == 0;
  EXPECT_TRUE(antipode) << to_text(rep);
  const auto* a = rep.find(ids.front());
  ASSERT_FALSE(a->failures.empty());
  EXPECT_NE(a->failures.front().where.find("alpha="), std::string::npos);
}

TEST(Validate, MutationFuzzAlwaysDetected) {
  auto results = fuzz::mutation_fuzz({"function-tcoalg", "sweedler-z2", "group-algebra", "group-hopf"}, 200, 2024);
  ASSERT_EQ(results.size(), 200u);
  for (const auto& m : results) {
    EXPECT_TRUE(m.detected) << m.example << " " << m.block;
    EXPECT_TRUE(m.located) << m.example << " " << m.block;
  }
}

TEST(Validate, ShapeErrors) {
  auto H = fs3();
  H.counit.push_back(Q(0));
  EXPECT_THROW(validate(H), ShapeMismatch);
  auto S = sz2();
  S.delta.pop_back();
  EXPECT_THROW(validate(S), ShapeMismatch);
}

TEST(Validate, AssociativityGate) {
  auto S = sz2();
  ValidateOptions opts;
  opts.associativity_limit = 2;
  auto rep = validate(S, "gated", opts);
  const auto* a = rep.find("algebra-associativity");
  ASSERT_NE(a, nullptr);
  EXPECT_TRUE(a->skipped);
  opts.force = true;
  auto forced = validate(S, "forced", opts);
  EXPECT_FALSE(forced.find("algebra-associativity")->skipped);
}

TEST(THCoalgebra, TrivialGroupIsTheHopfAlgebra) {
  auto A = sweedler_hopf<Q>(kQ);
  auto H = thcoalgebra(A, trivial_group(), {Matrix<Q>::identity(4)});
  EXPECT_EQ(H, as_tcoalgebra(A));
  EXPECT_EQ(component_hopf(H), A);
}

TEST(THCoalgebra, SweedlerWithSignAction) { EXPECT_TRUE(validate(sz2()).passed()); }

TEST(THCoalgebra, RejectsNonAutomorphism) {
  auto A = sweedler_hopf<Q>(kQ);
  Matrix<Q> f = Matrix<Q>::identity(4);  // x -> gx breaks Delta
  f(2, 2) = Q(0);
  f(3, 2) = Q(1);
  f(3, 3) = Q(0);
  f(2, 3) = Q(1);
  EXPECT_THROW(thcoalgebra(A, cyclic_group(2), {Matrix<Q>::identity(4), f}), NotHopfAutomorphism);
}

TEST(Coopposite, CocommutativeTrivialGroup) {
  auto H = builtin<Q>("group-algebra(S3)", kQ).H;
  auto C = coopposite(H);
  EXPECT_EQ(C.Delta(0, 0), H.Delta(0, 0));
  EXPECT_TRUE(validate(C).passed());
}

TEST(Coopposite, ReindexesAndIsInvolutive) {
  auto H = fs3();
  auto C = coopposite(H);
  EXPECT_TRUE(validate(C).passed());
  for (std::size_t a = 0; a < 6; ++a) EXPECT_EQ(C.H(a), H.H(H.group.inv(a)));
  EXPECT_EQ(coopposite(C), H);
  auto S = sz2();
  EXPECT_EQ(coopposite(coopposite(S)), S);
}

TEST(Mirror, TrivialGroupUnchanged) {
  auto H = as_tcoalgebra(sweedler_hopf<Q>(kQ));
  EXPECT_EQ(mirror(H), H);
}

TEST(Mirror, ValidAndInvolutive) {
  for (auto H : {fs3(), sz2(), builtin<Q>("group-hopf", kQ).H}) {
    auto M = mirror(H);
    EXPECT_TRUE(validate(M).passed());
    for (std::size_t a = 0; a < H.n(); ++a) EXPECT_EQ(M.H(a), H.H(H.group.inv(a)));
    EXPECT_EQ(mirror(M), H);
  }
}

TEST(AntipodeInverse, InvolutiveCase) {
  auto H = fs3();
  auto inv = antipode_inverse(H);
  for (std::size_t a = 0; a < 6; ++a) EXPECT_EQ(inv[a], H.S(H.group.inv(a)));
}

TEST(AntipodeInverse, SweedlerIsSCubed) {
  auto S = sz2();
  auto inv = antipode_inverse(S);
  auto s = S.S(0);
  EXPECT_EQ(inv[0], mul(s, mul(s, s)));
  EXPECT_NE(mul(s, s), Matrix<Q>::identity(4));
  EXPECT_EQ(mul(mul(s, s), mul(s, s)), Matrix<Q>::identity(4));
}

TEST(AntipodeInverse, ZeroBlock) {
  auto H = fs3();
  H.antipode[2] = Matrix<Q>(1, 1);
  EXPECT_THROW(antipode_inverse(H), AntipodeNotInvertible);
}

TEST(IteratedDelta, SingleLetter) {
  auto S = sz2();
  Vec<Q> x{Q(1), Q(2), Q(3), Q(4)};
  EXPECT_EQ(iterated_delta(S, {1}, x), x);
}

TEST(IteratedDelta, CounitOnFirstLeg) {
  for (auto H : {sz2(), fs3()}) {
    for (std::size_t a = 0; a < H.n(); ++a) {
      for (std::size_t i = 0; i < H.dim(a); ++i) {
        auto x = unit_vec<Q>(H.dim(a), i);
        auto t = iterated_delta(H, {H.one(), a}, x);
        EXPECT_EQ(contract_leg(H.dims({H.one(), a}), t, 0, H.counit), x);
      }
    }
  }
}

TEST(IteratedDelta, FunctionsSplitIntoDeltas) {
  auto H = fs3();
  const auto& G = H.group;
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b)
      for (std::size_t c = 0; c < 6; ++c) EXPECT_EQ(iterated_delta(H, {a, b, c}, Vec<Q>{Q(1)}), Vec<Q>{Q(1)}) << G.name(a);
  EXPECT_THROW(iterated_delta(H, {}, Vec<Q>{Q(1)}), GradeMismatch);
}

TEST(IteratedDelta, CoassociativeSplitting) {
  // (Delta_{a,b} (x) id) Delta_{ab,c} = (id (x) Delta_{b,c}) Delta_{a,bc}
  auto S = sz2();
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c) {
        std::size_t ab = S.group.mul(a, b), bc = S.group.mul(b, c);
        for (std::size_t i = 0; i < 4; ++i) {
          auto x = unit_vec<Q>(4, i);
          auto left = map_leg({4, 4}, S.Delta(ab, c).apply(x), 0, S.Delta(a, b));
          auto right = map_leg({4, 4}, S.Delta(a, bc).apply(x), 1, S.Delta(b, c));
          EXPECT_EQ(left, right);
          EXPECT_EQ(iterated_delta(S, {a, b, c}, x), right);
        }
      }
}

TEST(Convolution, UnitIsNeutral) {
  std::mt19937 rng(1);
  auto S = sz2();
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t g = 0; g < 2; ++g) {
      auto f = random_map(4, 4, rng);
      auto u = convolution_unit(S, g);
      EXPECT_EQ(convolution_product(S, S.H(g), S.one(), u, a, f), f);
      EXPECT_EQ(convolution_product(S, S.H(g), a, f, S.one(), u), f);
    }
}

TEST(Convolution, IdentityTimesAntipode) {
  for (auto H : {sz2(), fs3()}) {
    const auto& G = H.group;
    for (std::size_t a = 0; a < H.n(); ++a) {
      std::size_t ai = G.inv(a);
      // id: H_a -> H_a and s_{a^-1}: H_{a^-1} -> H_a, both in Conv_a
      auto prod = convolution_product(H, H.H(a), a, Matrix<Q>::identity(H.dim(a)), ai, H.S(ai));
      EXPECT_EQ(prod, convolution_unit(H, a));
    }
  }
}

TEST(Convolution, Associative) {
  std::mt19937 rng(9);
  auto S = sz2();
  const auto& A = S.H(0);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c) {
        auto f1 = random_map(4, 4, rng), f2 = random_map(4, 4, rng), f3 = random_map(4, 4, rng);
        std::size_t ab = S.group.mul(a, b), bc = S.group.mul(b, c);
        auto left = convolution_product(S, A, ab, convolution_product(S, A, a, f1, b, f2), c, f3);
        auto right = convolution_product(S, A, a, f1, bc, convolution_product(S, A, b, f2, c, f3));
        EXPECT_EQ(left, right);
      }
  auto H = fs3();
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      auto f1 = random_map(1, 1, rng), f2 = random_map(1, 1, rng), f3 = random_map(1, 1, rng);
      std::size_t ab = H.group.mul(a, b);
      auto left = convolution_product(H, H.H(0), ab, convolution_product(H, H.H(0), a, f1, b, f2), a, f3);
      auto right = convolution_product(H, H.H(0), a, f1, H.group.mul(b, a), convolution_product(H, H.H(0), b, f2, a, f3));
      EXPECT_EQ(left, right);
    }
}

TEST(Convolution, InverseOfIdentityIsAntipode) {
  for (auto H : {sz2(), fs3()}) {
    for (std::size_t a = 0; a < H.n(); ++a)
      EXPECT_EQ(convolution_inverse(H, a, a, Matrix<Q>::identity(H.dim(a))), H.S(H.group.inv(a)));
  }
}

TEST(Convolution, UnitIsSelfInverse) {
  auto S = sz2();
  auto u = convolution_unit(S, S.one());
  EXPECT_EQ(convolution_inverse(S, S.one(), S.one(), u), u);
}

TEST(Convolution, ZeroMapHasNoInverse) {
  auto S = sz2();
  EXPECT_THROW(convolution_inverse(S, 1, 1, Matrix<Q>(4, 4)), NotConvolutionInvertible);
}
