#pragma once

// The substitution x = z + 1/z. A polynomial f of degree d in x lifts to the
// self-reciprocal z^d * f(z + 1/z) of degree 2d; roots of f in (-2,2) become
// conjugate pairs on |z| = 1 and real roots with |x| > 2 become real
// reciprocal pairs z0, 1/z0.

#include <optional>

#include "chebsalem/chebbasis.hpp"
#include "chebsalem/highprec.hpp"
#include "chebsalem/poly.hpp"

namespace chebsalem {

// g(z) = symmetry * z^deg * g(1/z), symmetry in {+1, -1}. Validated on construction.
class PalindromicPoly {
 public:
  PalindromicPoly(IntPoly inner, int symmetry);

  const IntPoly& inner() const { return inner_; }
  int symmetry() const { return symmetry_; }
  int degree() const { return inner_.degree(); }

  // +1 or -1 when p is self-reciprocal up to that sign, nullopt otherwise.
  // The zero polynomial and nonzero constants report +1 (resp. their own symmetry).
  static std::optional<int> detect_symmetry(const IntPoly& p);
  // Wraps p with its detected symmetry; throws NotPalindromic.
  static PalindromicPoly from(const IntPoly& p);

  friend bool operator==(const PalindromicPoly&, const PalindromicPoly&) = default;

 private:
  IntPoly inner_;
  int symmetry_;
};

PalindromicPoly lift(const IntPoly& f);
PalindromicPoly lift_cheb(const ChebCoords& c);
// Inverse of lift; throws NotPalindromic (symmetry -1 or asymmetric) or OddDegree.
IntPoly unlift(const PalindromicPoly& g);
IntPoly unlift(const IntPoly& g);
// Chebyshev coordinates read directly off the palindromic coefficients.
ChebCoords unlift_cheb(const PalindromicPoly& g);

// sign * z^deg(f) * f(1/z)
IntPoly reciprocal_conjugate(const IntPoly& f, int sign);

struct ModulusReport {
  int samples = 0;
  double max_deviation = 0;   // max | |f| - |g| | / max(1, |f|) over the samples
  bool pass = false;          // max_deviation <= tol
  bool exact_reciprocal = false;  // g = +-z^deg f * f(1/z) exactly
  int exact_sign = 0;             // the sign in that identity, 0 if it does not hold
};

// Compares |f| and |g| at `samples` equispaced points of the unit circle.
ModulusReport equal_modulus_on_circle(const IntPoly& f, const IntPoly& g, int samples = 64,
                                      double tol = 1e-20);

}  // namespace chebsalem
