#pragma once

// Certified real-root analysis over the rationals (Sturm sequences), and
// exact unit-circle classification of self-reciprocal polynomials through
// the x = z + 1/z reduction. Numeric complex roots appear only in
// count_roots_in_disc, which reports what it cannot certify.

#include <cstddef>
#include <optional>
#include <vector>

#include "chebsalem/palindrome.hpp"
#include "chebsalem/poly.hpp"

namespace chebsalem {

struct RatInterval {
  mpq_class lo;
  mpq_class hi;

  mpq_class width() const { return hi - lo; }
  mpq_class mid() const { return (lo + hi) / 2; }
  bool is_point() const { return lo == hi; }
  bool contains(const mpq_class& v) const { return lo <= v && v <= hi; }
  bool overlaps(const RatInterval& o) const { return lo <= o.hi && o.lo <= hi; }

  static RatInterval point(const mpq_class& v) { return {v, v}; }
  friend RatInterval operator-(const RatInterval& a, const RatInterval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
  friend RatInterval operator-(const mpq_class& a, const RatInterval& b) { return {a - b.hi, a - b.lo}; }
  friend bool operator==(const RatInterval&, const RatInterval&) = default;
};

// 2^-40
mpq_class default_refine_width();

// Signed remainder sequence of a squarefree polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& squarefree);

  int variations_at(const mpq_class& x) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;
  // Distinct real roots in the half-open interval (a, b].
  int count(const mpq_class& a, const mpq_class& b) const;
  int count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

  const std::vector<IntPoly>& chain() const { return chain_; }

 private:
  std::vector<IntPoly> chain_;
};

// Isolating interval for one distinct real root. Either lo == hi == root, or
// the factor changes sign strictly across [lo, hi].
struct IsolatedRoot {
  RatInterval enclosure;
  int multiplicity = 1;
  std::size_t factor = 0;  // index into the squarefree stack
};

class RealRootSolver {
 public:
  explicit RealRootSolver(const IntPoly& p);

  const IntPoly& poly() const { return p_; }
  int degree() const { return p_.degree(); }
  const std::vector<SquarefreeFactor>& squarefree() const { return sqf_; }

  // Real roots with multiplicity.
  int count_real() const;
  // Real roots in [a, b] with multiplicity.
  int count_in_closed(const mpq_class& a, const mpq_class& b) const;
  // Real roots in (a, b) with multiplicity.
  int count_in_open(const mpq_class& a, const mpq_class& b) const;
  // Real roots > a and < a, with multiplicity.
  int count_above(const mpq_class& a) const;
  int count_below(const mpq_class& a) const;

  // All distinct real roots, ascending, pairwise disjoint, each of width <= width.
  std::vector<IsolatedRoot> isolate(const mpq_class& width) const;
  void refine(IsolatedRoot& r, const mpq_class& width) const;

 private:
  std::vector<RatInterval> isolate_factor(std::size_t i, const mpq_class& width) const;
  RatInterval tighten(std::size_t i, mpq_class lo, mpq_class hi, const mpq_class& width) const;

  IntPoly p_;
  std::vector<SquarefreeFactor> sqf_;
  std::vector<SturmSequence> sturm_;
};

struct RootReport {
  int degree = 0;
  std::vector<IsolatedRoot> real_roots;  // sorted ascending, disjoint
  std::vector<SquarefreeFactor> squarefree;
  int n_real = 0;  // with multiplicity
  bool is_hyperbolic = false;
  std::optional<RatInterval> span_enclosure;
  int n_in_critical = 0;  // real roots in [-2, 2], with multiplicity
};

RootReport isolate_real_roots(const IntPoly& p, const mpq_class& refine_to = default_refine_width());

// Enclosure of (largest real root - smallest real root) of width <= tol.
// Throws TooFewRealRoots with fewer than two real roots (counted with multiplicity).
RatInterval span(const IntPoly& p, const mpq_class& tol = default_refine_width());

enum class Ordering { Less, Equal, Greater };
struct SpanComparison {
  Ordering order = Ordering::Less;
  RatInterval enclosure;
};
// Exact comparison of the span with a rational bound (needs >= 1 real root).
SpanComparison compare_span(const IntPoly& p, const mpq_class& bound);

// All roots real and inside [-2, 2]; false for constants.
bool is_kronecker(const IntPoly& p);

// p >= 0 on [a, b], certified exactly.
bool nonnegative_on(const IntPoly& p, const mpq_class& a, const mpq_class& b);

struct CircleReport {
  int n_inside = 0;
  int n_on = 0;
  int n_outside = 0;
  int unit_factors_stripped = 0;  // deterministic (z - 1), (z + 1) factors removed first
  int x_real_outside = 0;         // real x-roots with |x| > 2
  int x_nonreal = 0;              // non-real x-roots
};

// Exact: reduces to the x-side and counts real roots of the unlifted polynomial.
CircleReport classify_unit_circle(const PalindromicPoly& g);

struct DiscCount {
  int inside = 0;
  int outside = 0;
  int uncertified = 0;
  std::vector<ApproxRoot> roots;
};

// Numeric root location with a posteriori inclusion disks. Roots whose disk
// cluster is not clear of the circle, or with ||z| - 1| <= margin, are uncertified.
DiscCount count_roots_in_disc(const RatPoly& q, double margin = 1e-12);

}  // namespace chebsalem
