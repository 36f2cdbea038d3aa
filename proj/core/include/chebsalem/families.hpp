#pragma once

// Parametric families given by repeating patterns of Chebyshev coordinates,
// their closed-form z-side identities, and the algebraic limits of their
// extreme roots.

#include <string>
#include <string_view>
#include <variant>

#include "chebsalem/chebbasis.hpp"
#include "chebsalem/rootcert.hpp"

namespace chebsalem {

// Ones at s + j(k+1), j < n.
struct Kns {
  int k = 0, n = 2, s = 0;
  friend bool operator==(const Kns&, const Kns&) = default;
};
// [2, ..., 2, 1], degree n.
struct An {
  int n = 1;
  friend bool operator==(const An&, const An&) = default;
};
// Even: [2,1,...,2,1,1], degree 2n. Odd: [1,2,...,1,2,1,1], degree 2n+1.
struct Bn {
  int n = 1;
  bool odd = false;
  friend bool operator==(const Bn&, const Bn&) = default;
};
// -1 at 0, 2, ..., 2n-2, then k zeros, leading 1; degree 2n+k-1.
struct MinusOne {
  int k = 0, n = 1;
  friend bool operator==(const MinusOne&, const MinusOne&) = default;
};
// [1, (-h1, h2) x n, 1], degree 2n+1.
struct TwoParam {
  int h1 = 1, h2 = 1, n = 1;
  friend bool operator==(const TwoParam&, const TwoParam&) = default;
};
// [1, (-h1, h2, -h3, h1, -h2, h3) x n, 1], degree 6n+1.
struct ThreeParam {
  int h1 = 1, h2 = 1, h3 = 1, n = 1;
  friend bool operator==(const ThreeParam&, const ThreeParam&) = default;
};

using FamilySpec = std::variant<Kns, An, Bn, MinusOne, TwoParam, ThreeParam>;

// "kns:k=1,n=3,s=0", "an:n=4", "bn:n=2,parity=odd", "minus1:k=0,n=5",
// "two:h1=1,h2=2,n=3", "three:h1=1,h2=2,h3=3,n=1". Throws InvalidParams.
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);

void validate(const FamilySpec& spec);  // throws InvalidParams
int family_n(const FamilySpec& spec);
FamilySpec with_n(const FamilySpec& spec, int n);

ChebCoords coords_of(const FamilySpec& spec);
IntPoly x_poly(const FamilySpec& spec);  // from_cheb(coords_of(spec))

// Both sides of the z-side identity: lhs = lift(P) * multiplier, rhs expanded
// from the product (or Q-combination) form.
struct ClosedForm {
  IntPoly multiplier;
  IntPoly lhs;
  RatPoly rhs;
  bool holds() const { return to_rat(lhs) == rhs; }
};
ClosedForm closed_form_z(const FamilySpec& spec);

// Two-parameter: Q = z^{2n+1} U - (h2-1)/2 (z^2-1), U = z^2 + h2 z - (h1+1).
// Three-parameter: Q = z^{6n+1} U + V, U = z^3 + h3 z^2 - h2 z + h1 + 1,
// V = ((1-h3) + (h2-h1) z + (h2-h1) z^2 + (1-h3) z^3) / 2.
RatPoly q_poly(const FamilySpec& spec);
IntPoly u_poly(const FamilySpec& spec);
RatPoly v_poly(const ThreeParam& spec);
// Degree of Q: 2n+3 or 6n+4.
int q_degree(const FamilySpec& spec);

// z^degree * p(1/z) for a declared degree >= deg p.
RatPoly reverse_at(const RatPoly& p, int degree);

// Exact check of lhs == rhs for the Q-combination; throws IdentityFailed
// carrying lhs - rhs.
bool salem_identity_check(const FamilySpec& spec);

// |U|^2 - |(h2-1)/2 (z^2-1)|^2 and (h1 - h2 a)^2 + (4h1 + 2h2 + 3) b^2 as
// polynomials in a = Re z, using b^2 = 1 - a^2 on |z| = 1.
struct CircleLemma {
  RatPoly difference;    // left side
  RatPoly closed_form;   // right side
  bool identity_holds = false;
  double max_sample_deviation = 0;  // complex evaluation at equispaced angles
  bool nonnegative_on_circle = false;
};
CircleLemma circle_lemma_check(int h1, int h2, int samples = 64);

// |P(z)|^2 on |z| = 1 as a polynomial in x = Re z (P with rational coefficients).
RatPoly circle_modulus_poly(const RatPoly& p);

// Polynomial whose roots are w + 1/w over the roots w of h (h(0) != 0).
IntPoly reciprocal_trace_poly(const IntPoly& h);

enum class RootSelector { LargestReal, SmallestReal, NegativeRoot, LargestRoot };
std::string to_string(RootSelector s);

struct AlgebraicLimit {
  IntPoly defining_poly;
  RootSelector selector = RootSelector::LargestReal;
  RatInterval enclosure;
  // The selector rule applied to defining_poly alone picks this same root.
  bool selector_consistent = true;
};

// 2^-80
mpq_class limit_refine_width();

struct ExtremeLimits {
  AlgebraicLimit smallest;
  AlgebraicLimit largest;
};

// Limits of the smallest and largest roots of x_poly as n grows, identified
// through the z-side root; throws NotApplicable for KNS/AN/BN (limits +-2).
ExtremeLimits limit_extreme_root(const FamilySpec& spec, const mpq_class& width = limit_refine_width());
// Largest root of the resultant polynomial for the span limit, matched to 2 - x_m.
AlgebraicLimit limit_span(const FamilySpec& spec, const mpq_class& width = limit_refine_width());
// Closed quadratic (two-parameter) or cubic (three-parameter) for the
// smallest-root limit and for the span limit.
IntPoly xm_limit_poly(const FamilySpec& spec);
IntPoly span_limit_poly(const FamilySpec& spec);

// 2f = 2(a - b) with a = |U|^2, b = |V|^2 on |z| = 1 as polynomials in Re z.
struct LemmaF {
  RatPoly a;
  RatPoly b;
  IntPoly two_f;
  IntPoly two_f_closed;  // from the closed cubic coefficients
  bool matches_closed = false;
};
LemmaF lemma_f(int h1, int h2, int h3);

}  // namespace chebsalem
