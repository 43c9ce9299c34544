#include <gtest/gtest.h>

#include "crossed/group.hpp"

using namespace crossed;

TEST(FiniteGroup, Trivial) {
  auto g = make_group({{0}});
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.identity(), 0u);
  EXPECT_EQ(g.inv(0), 0u);
}

TEST(FiniteGroup, CyclicTwo) {
  auto g = make_group({{0, 1}, {1, 0}});
  EXPECT_EQ(g.order(), 2u);
  EXPECT_EQ(g.inv(1), 1u);
  EXPECT_TRUE(g.abelian());
}

TEST(FiniteGroup, IdentityNotFirst) {
  auto g = make_group({{1, 0}, {0, 1}});
  EXPECT_EQ(g.identity(), 1u);
}

TEST(FiniteGroup, Rejects) {
  EXPECT_THROW(make_group({}), NotAGroup);
  EXPECT_THROW(make_group({{0, 1}, {1}}), NotAGroup);
  EXPECT_THROW(make_group({{0, 1}, {0, 1}}), NotAGroup);  // no inverse for 1
  EXPECT_THROW(make_group({{0, 2}, {1, 0}}), NotAGroup);
  EXPECT_THROW(builtin_group("Q8"), UnknownExample);
}

TEST(FiniteGroup, S3IsNonabelian) {
  auto g = builtin_group("S3");
  EXPECT_EQ(g.order(), 6u);
  EXPECT_FALSE(g.abelian());
  std::size_t r = 1, s = 3;
  EXPECT_NE(g.conj(r, s), s);
}

TEST(FiniteGroup, ConjugationLaws) {
  for (auto name : {"1", "Z4", "S3"}) {
    auto g = builtin_group(name);
    for (std::size_t a = 0; a < g.order(); ++a) {
      EXPECT_EQ(g.conj(g.identity(), a), a);
      for (std::size_t b = 0; b < g.order(); ++b) {
        if (g.abelian()) {
          EXPECT_EQ(g.conj(b, a), a);
        }
        for (std::size_t c = 0; c < g.order(); ++c) EXPECT_EQ(g.conj(g.mul(b, c), a), g.conj(b, g.conj(c, a)));
      }
    }
  }
}

TEST(FiniteGroup, TranspositionsStayTranspositions) {
  auto g = builtin_group("S3");
  // transpositions: elements of order 2
  auto is_transposition = [&](std::size_t x) { return x != g.identity() && g.mul(x, x) == g.identity(); };
  for (std::size_t t = 0; t < 6; ++t) {
    if (!is_transposition(t)) continue;
    for (std::size_t c = 0; c < 6; ++c) {
      bool three_cycle = c != g.identity() && g.mul(c, g.mul(c, c)) == g.identity();
      if (three_cycle) {
        EXPECT_TRUE(is_transposition(g.conj(c, t)));
      }
    }
  }
}
