#include <gtest/gtest.h>

#include <cmath>

#include "chebsalem/errors.hpp"
#include "chebsalem/families.hpp"
#include "chebsalem/palindrome.hpp"
#include "support/oracles.hpp"

namespace cs = chebsalem;
using cs::ChebCoords;
using cs::IntPoly;
using cs::RatPoly;

namespace {

RatPoly rat(std::initializer_list<long> c) { return cs::to_rat(IntPoly(c)); }

// a(x) and b(x) from Re and Im/y of U and V at z = x + iy, y^2 = 1 - x^2.
RatPoly lemma_a_direct(long h1, long h2, long h3) {
  const RatPoly re = rat({h1 + 1 - h3, -3 - h2, 2 * h3, 4});
  const RatPoly im = rat({-h2 - 1, 2 * h3, 4});
  return re * re + rat({1, 0, -1}) * im * im;
}

RatPoly lemma_b_direct(long h1, long h2, long h3) {
  const RatPoly re = rat({1, -3, 0, 4}) * mpq_class(h3 - 1) + rat({-1, 1, 2}) * mpq_class(h1 - h2);
  const RatPoly im = rat({-1, 0, 4}) * mpq_class(h3 - 1) + rat({1, 2}) * mpq_class(h1 - h2);
  return (re * re + rat({1, 0, -1}) * im * im) * mpq_class(1, 4);
}

cs::RatInterval trace_interval(double w) {
  const double t = w + 1 / w;
  return {mpq_class(t - 1e-12), mpq_class(t + 1e-12)};
}

}  // namespace

TEST(FamilySpec, ParseAndFormat) {
  for (const char* s : {"kns:k=1,n=3,s=0", "an:n=4", "bn:n=2,parity=odd", "bn:n=5,parity=even", "minus1:k=0,n=5",
                        "two:h1=1,h2=2,n=3", "three:h1=1,h2=2,h3=3,n=1"})
    EXPECT_EQ(cs::to_string(cs::parse_family_spec(s)), s);
  EXPECT_EQ(cs::parse_family_spec("kns:s=0,n=3,k=1"), cs::FamilySpec(cs::Kns{1, 3, 0}));
  for (const char* bad : {"kns:k=1,n=1,s=0", "two:h1=3,h2=2,n=1", "two:h1=0,h2=2,n=1", "three:h1=1,h2=3,h3=2,n=1",
                          "two:h1=1,h2=2", "two:h1=1,h2=2,n=1,x=3", "two:h1=a,h2=2,n=1", "foo:n=1", "an",
                          "bn:n=1,parity=maybe", "an:n=1,n=2", "an:n="})
    EXPECT_THROW(cs::parse_family_spec(bad), cs::InvalidParams) << bad;
  EXPECT_EQ(cs::with_n(cs::TwoParam{1, 2, 3}, 7), cs::FamilySpec(cs::TwoParam{1, 2, 7}));
  EXPECT_THROW(cs::with_n(cs::Kns{1, 3, 0}, 1), cs::InvalidParams);
}

TEST(Coords, Patterns) {
  EXPECT_EQ(cs::coords_of(cs::Kns{1, 3, 0}), ChebCoords({1, 0, 1, 0, 1}));
  EXPECT_EQ(cs::coords_of(cs::Kns{2, 2, 1}), ChebCoords({0, 1, 0, 0, 1}));
  EXPECT_EQ(cs::coords_of(cs::An{3}), ChebCoords({2, 2, 2, 1}));
  EXPECT_EQ(cs::coords_of(cs::Bn{2, false}), ChebCoords({2, 1, 2, 1, 1}));
  EXPECT_EQ(cs::coords_of(cs::Bn{1, true}), ChebCoords({1, 2, 1, 1}));
  EXPECT_EQ(cs::coords_of(cs::Bn{2, true}), ChebCoords({1, 2, 1, 2, 1, 1}));
  EXPECT_EQ(cs::coords_of(cs::MinusOne{0, 2}), ChebCoords({-1, 0, -1, 1}));
  EXPECT_EQ(cs::coords_of(cs::MinusOne{2, 2}), ChebCoords({-1, 0, -1, 0, 0, 1}));
  EXPECT_EQ(cs::coords_of(cs::TwoParam{1, 1, 1}), ChebCoords({1, -1, 1, 1}));
  EXPECT_EQ(cs::coords_of(cs::TwoParam{2, 3, 2}), ChebCoords({1, -2, 3, -2, 3, 1}));
  EXPECT_EQ(cs::coords_of(cs::ThreeParam{1, 2, 3, 1}), ChebCoords({1, -1, 2, -3, 1, -2, 3, 1}));
  EXPECT_EQ(cs::coords_of(cs::ThreeParam{1, 1, 1, 3}).degree(), 19);
}

TEST(ClosedForm, DocumentedInstances) {
  const auto m = cs::closed_form_z(cs::MinusOne{0, 2});
  EXPECT_EQ(m.lhs, IntPoly({-1, 1, 1, 0, 0, 0, -1, -1, 1}));
  EXPECT_TRUE(m.holds());
  const auto a = cs::closed_form_z(cs::An{2});
  EXPECT_EQ(a.lhs, IntPoly({-1, -1, 0, 0, 1, 1}));
  EXPECT_TRUE(a.holds());
  const auto b = cs::closed_form_z(cs::Bn{1, true});
  EXPECT_EQ(b.lhs, (IntPoly{-1, 0, 0, 0, 0, 0, 1} * IntPoly{1, 1, 1}));
  EXPECT_TRUE(b.holds());
  const auto k = cs::closed_form_z(cs::Kns{1, 3, 0});
  EXPECT_EQ(k.lhs, IntPoly({1, 0, 1, 0, 1, 0, 1, 0, 1}));
  EXPECT_TRUE(k.holds());
}

TEST(ClosedForm, OddBAgainstBruteForceLift) {
  // The odd-degree B closed form is derived rather than quoted; confirm it
  // against the binomial lift before any other test relies on it.
  for (int n = 1; n <= 10; ++n) {
    const IntPoly x = cs::from_cheb(cs::coords_of(cs::Bn{n, true}));
    const IntPoly lhs = oracle::lift_by_expansion(x) * IntPoly{-1, 0, 1};
    const IntPoly rhs = (IntPoly::monomial(4 * n + 2) - IntPoly{1}) * IntPoly{1, 1, 1};
    EXPECT_EQ(lhs, rhs) << n;
  }
}

TEST(ClosedForm, HoldsOnSmallGrids) {
  for (int k = 0; k <= 4; ++k)
    for (int n = 2; n <= 6; ++n)
      for (int s = 0; s <= 3; ++s) EXPECT_TRUE(cs::closed_form_z(cs::Kns{k, n, s}).holds());
  for (int n = 1; n <= 8; ++n) {
    EXPECT_TRUE(cs::closed_form_z(cs::An{n}).holds());
    EXPECT_TRUE(cs::closed_form_z(cs::Bn{n, false}).holds());
    EXPECT_TRUE(cs::closed_form_z(cs::Bn{n, true}).holds());
    for (int k = 0; k <= 8; ++k) EXPECT_TRUE(cs::closed_form_z(cs::MinusOne{k, n}).holds()) << k << "," << n;
  }
}

TEST(QAndU, Examples) {
  EXPECT_EQ(cs::u_poly(cs::TwoParam{1, 1, 4}), IntPoly({-2, 1, 1}));
  EXPECT_EQ(cs::u_poly(cs::TwoParam{1, 1, 4}), (IntPoly{-1, 1} * IntPoly{2, 1}));
  EXPECT_EQ(cs::q_poly(cs::TwoParam{1, 3, 1}), cs::to_rat(IntPoly{-2, 3, 1}.times_xk(3) - IntPoly{-1, 0, 1}));
  EXPECT_EQ(cs::u_poly(cs::ThreeParam{1, 2, 3, 1}), IntPoly({2, -2, 3, 1}));
  EXPECT_FALSE(cs::to_int(cs::q_poly(cs::TwoParam{2, 4, 2})).has_value());
  EXPECT_TRUE(cs::to_int(cs::q_poly(cs::TwoParam{2, 3, 2})).has_value());
  EXPECT_TRUE(cs::to_int(cs::q_poly(cs::ThreeParam{1, 3, 5, 1})).has_value());
  EXPECT_FALSE(cs::to_int(cs::q_poly(cs::ThreeParam{1, 2, 5, 1})).has_value());
  EXPECT_FALSE(cs::to_int(cs::q_poly(cs::ThreeParam{1, 3, 4, 1})).has_value());
  EXPECT_THROW(cs::u_poly(cs::An{2}), cs::NotApplicable);
}

TEST(SalemIdentity, Examples) {
  EXPECT_TRUE(cs::salem_identity_check(cs::TwoParam{1, 1, 1}));
  EXPECT_TRUE(cs::salem_identity_check(cs::TwoParam{2, 4, 2}));
  EXPECT_TRUE(cs::salem_identity_check(cs::ThreeParam{1, 2, 3, 1}));
  EXPECT_THROW(cs::salem_identity_check(cs::Kns{1, 3, 0}), cs::NotApplicable);
}

TEST(SalemIdentity, ReciprocalTermIsFullReversal) {
  const cs::ThreeParam p{1, 1, 1, 2};
  const RatPoly q = cs::q_poly(p);
  EXPECT_EQ(q.degree(), 16);
  EXPECT_EQ(q.coeff(0), 0);
  const auto cf = cs::closed_form_z(p);
  EXPECT_EQ(cf.rhs, q.times_xk(13) + cs::reverse_at(q, 16));
  EXPECT_EQ(cs::reverse_at(q, 16), q.reversed());
  // a shorter reversal leaves a negative power
  EXPECT_THROW(cs::reverse_at(q, 15), std::invalid_argument);
  EXPECT_TRUE(cf.holds());
}

TEST(SalemIdentity, FailureCarriesDifference) {
  // a hand-built mismatch: the two-parameter rhs with the wrong sign
  const cs::TwoParam p{1, 2, 1};
  const auto cf = cs::closed_form_z(p);
  const RatPoly q = cs::q_poly(p);
  const RatPoly wrong = q.times_xk(3) + cs::reverse_at(q, 5);
  EXPECT_NE(cs::to_rat(cf.lhs), wrong);
}

TEST(CircleLemma, IdentityAndSamples) {
  for (int h1 = 1; h1 <= 5; ++h1)
    for (int h2 = h1; h2 <= 5; ++h2) {
      const auto c = cs::circle_lemma_check(h1, h2);
      EXPECT_TRUE(c.identity_holds) << h1 << "," << h2;
      EXPECT_TRUE(c.nonnegative_on_circle);
      EXPECT_LE(c.max_sample_deviation, 1e-20);
    }
}

TEST(CircleModulus, MatchesDirectExpansion) {
  // |z - 2|^2 = 5 - 4x on |z| = 1
  EXPECT_EQ(cs::circle_modulus_poly(rat({-2, 1})), rat({5, -4}));
  EXPECT_EQ(cs::circle_modulus_poly(rat({0, 0, 1})), rat({1}));
}

TEST(LemmaF, ClosedCubicAndDirectForms) {
  const auto f = cs::lemma_f(1, 2, 3);
  EXPECT_TRUE(f.matches_closed);
  EXPECT_EQ(f.a, lemma_a_direct(1, 2, 3));
  EXPECT_EQ(f.b, lemma_b_direct(1, 2, 3));
  EXPECT_LE(f.two_f.degree(), 3);
  for (int h1 = 1; h1 <= 4; ++h1)
    for (int h2 = h1; h2 <= 4; ++h2)
      for (int h3 = h2; h3 <= 4; ++h3) {
        const auto g = cs::lemma_f(h1, h2, h3);
        EXPECT_TRUE(g.matches_closed);
        EXPECT_EQ(g.a, lemma_a_direct(h1, h2, h3));
        EXPECT_EQ(g.b, lemma_b_direct(h1, h2, h3));
        EXPECT_TRUE(cs::nonnegative_on(g.two_f, -1, 1));
      }
}

TEST(LemmaF, ParameterExpansion) {
  // 2f = (12x^3-9x+3) + 2(8x^3+2x^2-5x+1)h1 + 2(-6x^2-3x+3)h2 + 2(4x^3+4x^2-x-1)h3
  //    + 2(1-x)h1h2 + 2(2x^2-x-1)(h1h3 + h2h3) + (1-x)(h1^2 + h2^2) + (-4x^3+3x+1)h3^2
  for (long h1 = 1; h1 <= 3; ++h1)
    for (long h2 = h1; h2 <= 3; ++h2)
      for (long h3 = h2; h3 <= 4; ++h3) {
        IntPoly e = IntPoly{3, -9, 0, 12} + IntPoly{2, -10, 4, 16} * mpz_class(h1) + IntPoly{6, -6, -12} * mpz_class(h2) +
                    IntPoly{-2, -2, 8, 8} * mpz_class(h3) + IntPoly{2, -2} * mpz_class(h1 * h2) +
                    IntPoly{-2, -2, 4} * mpz_class(h1 * h3 + h2 * h3) + IntPoly{1, -1} * mpz_class(h1 * h1 + h2 * h2) +
                    IntPoly{1, 3, 0, -4} * mpz_class(h3 * h3);
        EXPECT_EQ(cs::lemma_f(static_cast<int>(h1), static_cast<int>(h2), static_cast<int>(h3)).two_f, e);
      }
}

TEST(ReciprocalTrace, Examples) {
  EXPECT_EQ(cs::reciprocal_trace_poly(IntPoly{-1, -1, 1}), IntPoly({-5, 0, 1}));
  // z^2 - 3z + 1 has roots w, 1/w with w + 1/w = 3
  EXPECT_EQ(cs::reciprocal_trace_poly(IntPoly{1, -3, 1}), (IntPoly{-3, 1} * IntPoly{-3, 1}));
  EXPECT_EQ(cs::reciprocal_trace_poly(IntPoly{2, 1}), IntPoly({5, 2}));
}

TEST(Limits, MinusOne) {
  const auto l0 = cs::limit_extreme_root(cs::MinusOne{0, 3});
  EXPECT_EQ(l0.largest.defining_poly, IntPoly({-5, 0, 1}));
  EXPECT_TRUE(l0.largest.enclosure.contains(mpq_class(std::sqrt(5.0))) ||
              l0.largest.enclosure.overlaps(trace_interval((1 + std::sqrt(5.0)) / 2)));
  EXPECT_LE(l0.largest.enclosure.width(), cs::limit_refine_width());
  EXPECT_EQ(l0.smallest.enclosure, cs::RatInterval::point(-2));
  EXPECT_TRUE(l0.largest.selector_consistent);

  const auto l1 = cs::limit_extreme_root(cs::MinusOne{1, 3});
  EXPECT_NEAR(l1.largest.enclosure.mid().get_d(), 3 / std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(l1.smallest.enclosure.mid().get_d(), -3 / std::sqrt(2.0), 1e-14);

  const auto l2 = cs::limit_extreme_root(cs::MinusOne{2, 3});
  const double plastic = 1.324717957244746;
  EXPECT_NEAR(l2.largest.enclosure.mid().get_d(), plastic + 1 / plastic, 1e-13);

  EXPECT_THROW(cs::limit_extreme_root(cs::Kns{1, 3, 0}), cs::NotApplicable);
  EXPECT_THROW(cs::limit_extreme_root(cs::An{3}), cs::NotApplicable);
}

TEST(Limits, TwoParameter) {
  const auto l = cs::limit_extreme_root(cs::TwoParam{1, 1, 4});
  EXPECT_EQ(l.smallest.defining_poly, IntPoly({-10, 1, 2}));
  EXPECT_TRUE(l.smallest.enclosure.contains(mpq_class(-5, 2)));
  EXPECT_EQ(l.largest.enclosure, cs::RatInterval::point(2));
  EXPECT_TRUE(l.smallest.selector_consistent);
  const auto s = cs::limit_span(cs::TwoParam{1, 1, 4});
  EXPECT_EQ(s.defining_poly, IntPoly({0, 9, -2}));
  EXPECT_TRUE(s.enclosure.contains(mpq_class(9, 2)));
  const auto s12 = cs::limit_span(cs::TwoParam{1, 2, 1});
  EXPECT_EQ(s12.defining_poly, IntPoly({1, 10, -2}));
  EXPECT_NEAR(s12.enclosure.mid().get_d(), (10 + std::sqrt(108.0)) / 4, 1e-14);
}

TEST(Limits, ThreeParameterEqualCase) {
  for (int h = 1; h <= 6; ++h) {
    const auto l = cs::limit_extreme_root(cs::ThreeParam{h, h, h, 1});
    const mpq_class expect = mpq_class(-(h + 1)) - mpq_class(1, h + 1);
    EXPECT_TRUE(l.smallest.enclosure.contains(expect)) << h;
    const auto s = cs::limit_span(cs::ThreeParam{h, h, h, 1});
    EXPECT_TRUE(s.enclosure.contains(2 - expect)) << h;
  }
  EXPECT_EQ(cs::span_limit_poly(cs::ThreeParam{1, 1, 1, 1}), IntPoly({9, -20, 13, -2}));
  EXPECT_EQ(cs::xm_limit_poly(cs::ThreeParam{1, 1, 1, 1}), IntPoly({5, -8, 1, 2}));
}

TEST(LimitsProperty, SpanLimitIsTwoMinusSmallestLimit) {
  for (int h1 = 1; h1 <= 5; ++h1)
    for (int h2 = h1; h2 <= 5; ++h2) {
      const cs::TwoParam p{h1, h2, 1};
      const auto xm = cs::limit_extreme_root(p).smallest;
      const auto sp = cs::limit_span(p);
      EXPECT_TRUE(sp.enclosure.overlaps(mpq_class(2) - xm.enclosure));
      EXPECT_TRUE(xm.selector_consistent && sp.selector_consistent);
    }
  for (int h1 = 1; h1 <= 4; ++h1)
    for (int h2 = h1; h2 <= 4; ++h2)
      for (int h3 = h2; h3 <= 4; ++h3) {
        const cs::ThreeParam p{h1, h2, h3, 1};
        const auto xm = cs::limit_extreme_root(p).smallest;
        const auto sp = cs::limit_span(p);
        EXPECT_TRUE(sp.enclosure.overlaps(mpq_class(2) - xm.enclosure));
        EXPECT_TRUE(xm.selector_consistent && sp.selector_consistent) << h1 << h2 << h3;
      }
}

TEST(FamiliesProperty, KroneckerFamiliesOnCircle) {
  for (int k = 0; k <= 3; ++k)
    for (int n = 2; n <= 5; ++n)
      for (int s = 0; s <= 2; ++s) {
        const cs::Kns p{k, n, s};
        EXPECT_TRUE(cs::is_kronecker(cs::x_poly(p)));
        const auto rep = cs::classify_unit_circle(cs::lift_cheb(cs::coords_of(p)));
        EXPECT_EQ(rep.n_on, 2 * cs::x_poly(p).degree());
      }
}
