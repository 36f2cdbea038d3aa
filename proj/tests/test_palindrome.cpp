#include <gtest/gtest.h>

#include "chebsalem/errors.hpp"
#include "chebsalem/palindrome.hpp"
#include "support/oracles.hpp"

namespace cs = chebsalem;
using cs::ChebCoords;
using cs::IntPoly;
using cs::PalindromicPoly;

TEST(Lift, SmallExamples) {
  EXPECT_EQ(cs::lift(IntPoly{0, 1}).inner(), IntPoly({1, 0, 1}));
  EXPECT_EQ(cs::lift(IntPoly{-2, 0, 1}).inner(), IntPoly({1, 0, 0, 0, 1}));
  const auto g = cs::lift(IntPoly{-1, -4, 1, 1});
  EXPECT_EQ(g.inner(), IntPoly({1, 1, -1, 1, -1, 1, 1}));
  EXPECT_EQ(g.symmetry(), 1);
  EXPECT_EQ(g.inner(), oracle::lift_by_expansion(IntPoly{-1, -4, 1, 1}));
}

TEST(Lift, FromCoordinates) {
  EXPECT_EQ(cs::lift_cheb(ChebCoords({0, 0, 0, 0, 0, 0, 0, 0, 1})).inner(), (IntPoly::monomial(16) + IntPoly{1}));
  EXPECT_EQ(cs::lift_cheb(ChebCoords({1, 1})).inner(), IntPoly({1, 1, 1}));
  const IntPoly a2 = cs::lift_cheb(ChebCoords({2, 2, 1})).inner();
  EXPECT_EQ(a2, IntPoly({1, 2, 2, 2, 1}));
  // (z^4 - 1)(z + 1) = a2 * (z - 1)
  EXPECT_EQ((a2 * IntPoly{-1, 1}), IntPoly({-1, -1, 0, 0, 1, 1}));
}

TEST(Unlift, Examples) {
  EXPECT_EQ(cs::unlift(IntPoly{1, 0, 0, 0, 1}), IntPoly({-2, 0, 1}));
  EXPECT_EQ(cs::unlift(IntPoly{1, 1, 1}), IntPoly({1, 1}));
  EXPECT_THROW(cs::unlift(IntPoly{1, 2, 3}), cs::NotPalindromic);
  EXPECT_THROW(cs::unlift(IntPoly{-1, 0, 1}), cs::NotPalindromic);
  EXPECT_THROW(cs::unlift(IntPoly{1, 1}), cs::OddDegree);
}

TEST(PalindromicPoly, ValidatesSymmetry) {
  EXPECT_NO_THROW(PalindromicPoly(IntPoly{-1, 0, 1}, -1));
  EXPECT_THROW(PalindromicPoly(IntPoly{-1, 0, 1}, 1), cs::NotPalindromic);
  EXPECT_THROW(PalindromicPoly(IntPoly{1, 2}, 1), cs::NotPalindromic);
  EXPECT_EQ(PalindromicPoly::detect_symmetry(IntPoly{1, 3, 1}), 1);
  EXPECT_EQ(PalindromicPoly::detect_symmetry(IntPoly{1, 0, -1}), -1);
  EXPECT_FALSE(PalindromicPoly::detect_symmetry(IntPoly{1, 2}).has_value());
}

TEST(ReciprocalConjugate, Examples) {
  EXPECT_EQ(cs::reciprocal_conjugate(IntPoly{-1, -1, 1}, -1), IntPoly({-1, 1, 1}));
  EXPECT_EQ(cs::reciprocal_conjugate(IntPoly{-1, 0, -1, 0, 1}, -1), IntPoly({-1, 0, 1, 0, 1}));
  const IntPoly pal{1, 3, 1};
  EXPECT_EQ(cs::reciprocal_conjugate(pal, 1), pal);
}

TEST(EqualModulus, Examples) {
  const auto r = cs::equal_modulus_on_circle(IntPoly{-1, -1, 1}, IntPoly{-1, 1, 1});
  EXPECT_TRUE(r.pass);
  EXPECT_LT(r.max_deviation, 1e-40);
  EXPECT_TRUE(r.exact_reciprocal);
  EXPECT_EQ(r.exact_sign, -1);

  const auto bad = cs::equal_modulus_on_circle(IntPoly{-2, 1}, IntPoly{2, 1});
  EXPECT_FALSE(bad.pass);
  EXPECT_GE(bad.max_deviation, 1.0);

  const auto same = cs::equal_modulus_on_circle(IntPoly{5, 1, 7}, IntPoly{5, 1, 7});
  EXPECT_TRUE(same.pass);
  EXPECT_EQ(same.max_deviation, 0.0);
  EXPECT_THROW(cs::equal_modulus_on_circle(IntPoly{1}, IntPoly{1}, 4), std::invalid_argument);
}

TEST(LiftProperty, MatchesExpansionAndRoundTrips) {
  oracle::Rng rng(99);
  for (int t = 0; t < 100; ++t) {
    const IntPoly f = rng.poly(static_cast<int>(rng.uniform(0, 40)), 64);
    const auto g = cs::lift(f);
    EXPECT_EQ(g.inner(), oracle::lift_by_expansion(f));
    EXPECT_EQ(g.degree(), 2 * f.degree());
    EXPECT_EQ(cs::unlift(g), f);
    EXPECT_EQ(cs::lift(cs::unlift(g)), g);
    EXPECT_EQ(cs::lift_cheb(cs::to_cheb(f)), g);
  }
}

TEST(LiftProperty, Multiplicative) {
  oracle::Rng rng(5);
  for (int t = 0; t < 60; ++t) {
    const IntPoly f = rng.small_poly(static_cast<int>(rng.uniform(0, 15)), 100);
    const IntPoly g = rng.small_poly(static_cast<int>(rng.uniform(0, 15)), 100);
    EXPECT_EQ(cs::lift(f * g).inner(), cs::lift(f).inner() * cs::lift(g).inner());
  }
}

TEST(ReciprocalConjugateProperty, InvolutionAndModulus) {
  oracle::Rng rng(17);
  for (int t = 0; t < 30; ++t) {
    IntPoly f = rng.small_poly(static_cast<int>(rng.uniform(1, 12)), 20);
    if (f.coeff(0) == 0) f += IntPoly{1};
    for (int s : {1, -1}) {
      const IntPoly g = cs::reciprocal_conjugate(f, s);
      EXPECT_EQ(cs::reciprocal_conjugate(g, s), f);
      const auto rep = cs::equal_modulus_on_circle(f, g, 32);
      EXPECT_TRUE(rep.pass) << rep.max_deviation;
      EXPECT_TRUE(rep.exact_reciprocal);
    }
  }
}
