#pragma once

// Salem and Pisot recognition by root geometry, cyclotomic stripping, and
// convergence of family extreme roots to their algebraic limits.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chebsalem/families.hpp"
#include "chebsalem/rootcert.hpp"

namespace chebsalem {

// Phi_d, memoized; throws std::invalid_argument for d < 1.
IntPoly cyclotomic_poly(int d);
int euler_phi(int d);

enum class SalemClass { SalemLike, NegativeSalemLike, Kronecker, Other };
std::string to_string(SalemClass c);

struct SalemAnalysis {
  IntPoly original;
  std::vector<std::pair<int, int>> cyclotomic_factors;  // (d, multiplicity), d ascending
  IntPoly core;                                         // original / prod Phi_d^mult
  SalemClass classification = SalemClass::Other;
  std::optional<RatInterval> tau_enclosure;  // real root of largest modulus, when off the circle

  IntPoly reconstruct() const;
};

// Divides out every Phi_d with phi(d) <= deg p as often as it divides.
// classification is left as Other.
SalemAnalysis strip_cyclotomic(const IntPoly& p);

// Exact: strips cyclotomics, then classifies the core with the x-side circle
// test. SalemLike: palindromic core of degree >= 4 with one real pair tau, 1/tau
// off the circle (tau > 1) and the rest on it; NegativeSalemLike when tau < -1.
// Kronecker: nothing left off the circle.
SalemAnalysis classify_salem(const IntPoly& p, const mpq_class& tau_width = default_refine_width());

enum class PisotClass {
  PisotLike,
  NegativePisotLike,
  ExtendedPisotLike,  // rational or non-monic coefficients
  ExtendedNegativePisotLike,
  No,
  Uncertified,  // some root within margin of the circle
};
std::string to_string(PisotClass c);

// One real root outside the closed disc and every other root inside by more
// than margin. Numeric location with inclusion disks; realness and sign of the
// big root are exact.
PisotClass pisot_check(const RatPoly& q, double margin = 1e-9);

enum class Extreme { Smallest, Largest };

struct ConvergenceRow {
  int n = 0;
  int degree = 0;
  int n_real = 0;          // with multiplicity
  int n_above_two = 0;     // real roots > 2
  int n_below_minus_two = 0;
  RatInterval root;        // extreme real root of x_poly
  RatInterval distance;    // |root - limit|, clamped at 0
};

struct ConvergenceStudy {
  FamilySpec spec;
  Extreme extreme = Extreme::Largest;
  AlgebraicLimit limit;
  std::vector<ConvergenceRow> rows;
  // Each distance enclosure lies strictly below the previous one.
  bool strictly_decreasing = false;
};

// Largest root for MINUS1, smallest for the parameter families. Throws
// NotApplicable for KNS/AN/BN.
Extreme default_extreme(const FamilySpec& spec);

ConvergenceStudy salem_convergence_study(const FamilySpec& spec, const std::vector<int>& n_values,
                                         const mpq_class& width = limit_refine_width());
ConvergenceStudy salem_convergence_study(const FamilySpec& spec, const std::vector<int>& n_values, Extreme extreme,
                                         const mpq_class& width = limit_refine_width());

}  // namespace chebsalem
