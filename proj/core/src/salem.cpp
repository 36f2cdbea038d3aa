#include "chebsalem/salem.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "chebsalem/errors.hpp"
#include "chebsalem/palindrome.hpp"

namespace chebsalem {

namespace {

RatInterval distance_between(const RatInterval& a, const RatInterval& b) {
  const RatInterval d = a - b;
  if (d.lo > 0) return d;
  if (d.hi < 0) return {-d.hi, -d.lo};
  return {0, std::max(mpq_class(-d.lo), d.hi)};
}

}  // namespace

int euler_phi(int d) {
  if (d < 1) throw std::invalid_argument("euler_phi needs d >= 1");
  int result = d;
  int m = d;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

IntPoly cyclotomic_poly(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic_poly needs d >= 1");
  static std::mutex mu;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  IntPoly divisor{1};
  for (int e = 1; e < d; ++e)
    if (d % e == 0) divisor *= cyclotomic_poly(e);
  const IntPoly phi = *exact_quotient(IntPoly::monomial(d) - IntPoly{1}, divisor);
  std::lock_guard lock(mu);
  cache.emplace(d, phi);
  return phi;
}

std::string to_string(SalemClass c) {
  switch (c) {
    case SalemClass::SalemLike: return "SalemLike";
    case SalemClass::NegativeSalemLike: return "NegativeSalemLike";
    case SalemClass::Kronecker: return "Kronecker";
    case SalemClass::Other: return "Other";
  }
  return "Other";
}

std::string to_string(PisotClass c) {
  switch (c) {
    case PisotClass::PisotLike: return "PisotLike";
    case PisotClass::NegativePisotLike: return "NegativePisotLike";
    case PisotClass::ExtendedPisotLike: return "ExtendedPisotLike";
    case PisotClass::ExtendedNegativePisotLike: return "ExtendedNegativePisotLike";
    case PisotClass::No: return "No";
    case PisotClass::Uncertified: return "Uncertified";
  }
  return "No";
}

IntPoly SalemAnalysis::reconstruct() const {
  IntPoly r = core;
  for (const auto& [d, mult] : cyclotomic_factors)
    for (int i = 0; i < mult; ++i) r *= cyclotomic_poly(d);
  return r;
}

SalemAnalysis strip_cyclotomic(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("strip_cyclotomic of the zero polynomial");
  SalemAnalysis a;
  a.original = p;
  a.core = p;
  // phi(d) >= sqrt(d / 2), so d > 2 deg^2 can never divide
  for (long d = 1; d <= 2L * a.core.degree() * a.core.degree(); ++d) {
    const int id = static_cast<int>(d);
    if (euler_phi(id) > a.core.degree()) continue;
    const IntPoly phi = cyclotomic_poly(id);
    int mult = 0;
    while (auto q = exact_quotient(a.core, phi)) {
      a.core = std::move(*q);
      ++mult;
    }
    if (mult > 0) a.cyclotomic_factors.emplace_back(id, mult);
  }
  return a;
}

SalemAnalysis classify_salem(const IntPoly& p, const mpq_class& tau_width) {
  SalemAnalysis a = strip_cyclotomic(p);
  const IntPoly& c = a.core;
  const bool unit_lc = abs(c.leading()) == 1;
  if (c.degree() == 0) {
    a.classification = unit_lc ? SalemClass::Kronecker : SalemClass::Other;
    return a;
  }
  const auto sym = PalindromicPoly::detect_symmetry(c);
  if (!sym || *sym != 1 || c.degree() % 2 != 0) return a;
  const CircleReport rep = classify_unit_circle(PalindromicPoly(c, 1));
  if (rep.n_outside == 0) {
    a.classification = unit_lc ? SalemClass::Kronecker : SalemClass::Other;
    return a;
  }
  if (rep.n_outside != 1 || rep.x_real_outside != 1 || rep.x_nonreal != 0 || c.degree() < 4 || !unit_lc) return a;

  const RealRootSolver solver(c);
  for (IsolatedRoot r : solver.isolate(tau_width)) {
    // no root sits on +-1 after stripping, so this terminates
    while (r.enclosure.contains(1) || r.enclosure.contains(-1)) solver.refine(r, r.enclosure.width() / 4);
    if (r.enclosure.lo > 1 || r.enclosure.hi < -1) {
      a.tau_enclosure = r.enclosure;
      a.classification = r.enclosure.lo > 0 ? SalemClass::SalemLike : SalemClass::NegativeSalemLike;
    }
  }
  return a;
}

PisotClass pisot_check(const RatPoly& q, double margin) {
  if (q.degree() < 1) return PisotClass::No;
  const DiscCount dc = count_roots_in_disc(q, margin);
  if (dc.uncertified > 0) return PisotClass::Uncertified;
  if (dc.outside != 1) return PisotClass::No;
  const IntPoly z = clear_denominators(q);
  const RealRootSolver solver(z);
  const int above = solver.count_above(1);
  const int below = solver.count_below(-1);
  if (above + below != 1) return PisotClass::No;
  const auto as_int = to_int(q);
  const bool extended = !as_int || !as_int->is_monic();
  if (above == 1) return extended ? PisotClass::ExtendedPisotLike : PisotClass::PisotLike;
  return extended ? PisotClass::ExtendedNegativePisotLike : PisotClass::NegativePisotLike;
}

Extreme default_extreme(const FamilySpec& spec) {
  if (std::holds_alternative<MinusOne>(spec)) return Extreme::Largest;
  if (std::holds_alternative<TwoParam>(spec) || std::holds_alternative<ThreeParam>(spec)) return Extreme::Smallest;
  throw NotApplicable("convergence study needs a minus1, two or three family; the others tend to -2 and 2");
}

ConvergenceStudy salem_convergence_study(const FamilySpec& spec, const std::vector<int>& n_values,
                                         const mpq_class& width) {
  return salem_convergence_study(spec, n_values, default_extreme(spec), width);
}

ConvergenceStudy salem_convergence_study(const FamilySpec& spec, const std::vector<int>& n_values, Extreme extreme,
                                         const mpq_class& width) {
  default_extreme(spec);
  ConvergenceStudy study;
  study.spec = spec;
  study.extreme = extreme;
  const ExtremeLimits limits = limit_extreme_root(spec, width);
  study.limit = extreme == Extreme::Largest ? limits.largest : limits.smallest;
  study.strictly_decreasing = true;
  for (int n : n_values) {
    const FamilySpec at = with_n(spec, n);
    const IntPoly x = x_poly(at);
    const RealRootSolver solver(x);
    ConvergenceRow row;
    row.n = n;
    row.degree = x.degree();
    row.n_real = solver.count_real();
    row.n_above_two = solver.count_above(2);
    row.n_below_minus_two = solver.count_below(-2);
    auto roots = solver.isolate(mpq_class(1, 256));
    if (roots.empty()) throw TooFewRealRoots("no real root in " + to_string(at));
    IsolatedRoot r = extreme == Extreme::Largest ? roots.back() : roots.front();
    solver.refine(r, width);
    row.root = r.enclosure;
    row.distance = distance_between(row.root, study.limit.enclosure);
    if (!study.rows.empty() && !(row.distance.hi < study.rows.back().distance.lo)) study.strictly_decreasing = false;
    study.rows.push_back(row);
  }
  return study;
}

}  // namespace chebsalem
