#include "chebsalem/rootcert.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "chebsalem/errors.hpp"

namespace chebsalem {

mpq_class default_refine_width() {
  mpz_class den = 1;
  den <<= 40;
  return mpq_class(mpz_class(1), den);
}

// ---------------------------------------------------------------------------
// SturmSequence

SturmSequence::SturmSequence(const IntPoly& squarefree) {
  if (squarefree.degree() < 1) throw std::invalid_argument("Sturm sequence of a constant");
  chain_.push_back(primitive_part(squarefree));
  chain_.push_back(primitive_part(squarefree.derivative()));
  while (true) {
    const IntPoly& a = chain_[chain_.size() - 2];
    const IntPoly& b = chain_.back();
    if (b.degree() < 1) break;
    PseudoRemainder pr = pseudo_remainder(a, b);
    if (pr.remainder.is_zero()) break;
    // prem = lc(b)^steps * rem; the chain needs -rem up to a positive factor
    const bool flipped = sgn(b.leading()) < 0 && pr.steps % 2 == 1;
    IntPoly next = flipped ? pr.remainder : -pr.remainder;
    chain_.push_back(primitive_part(next));
  }
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

int SturmSequence::variations_at(const mpq_class& x) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& q : chain_) s.push_back(sign_at(q, x));
  return count_variations(s);
}

int SturmSequence::variations_at_neg_inf() const {
  std::vector<int> s;
  for (const auto& q : chain_) {
    const int lc = sgn(q.leading());
    s.push_back(q.degree() % 2 == 0 ? lc : -lc);
  }
  return count_variations(s);
}

int SturmSequence::variations_at_pos_inf() const {
  std::vector<int> s;
  for (const auto& q : chain_) s.push_back(sgn(q.leading()));
  return count_variations(s);
}

int SturmSequence::count(const mpq_class& a, const mpq_class& b) const {
  if (b <= a) return 0;
  return variations_at(a) - variations_at(b);
}

// ---------------------------------------------------------------------------
// RealRootSolver

RealRootSolver::RealRootSolver(const IntPoly& p) : p_(p) {
  if (p.is_zero()) throw std::invalid_argument("real roots of the zero polynomial");
  sqf_ = squarefree_decomposition(p);
  sturm_.reserve(sqf_.size());
  for (const auto& f : sqf_) sturm_.emplace_back(f.factor);
}

int RealRootSolver::count_real() const {
  int n = 0;
  for (std::size_t i = 0; i < sqf_.size(); ++i) n += sqf_[i].multiplicity * sturm_[i].count_all();
  return n;
}

int RealRootSolver::count_in_closed(const mpq_class& a, const mpq_class& b) const {
  if (b < a) return 0;
  int n = 0;
  for (std::size_t i = 0; i < sqf_.size(); ++i) {
    const int at_a = sign_at(sqf_[i].factor, a) == 0 ? 1 : 0;
    n += sqf_[i].multiplicity * (sturm_[i].count(a, b) + at_a);
  }
  return n;
}

int RealRootSolver::count_in_open(const mpq_class& a, const mpq_class& b) const {
  if (b <= a) return 0;
  int n = 0;
  for (std::size_t i = 0; i < sqf_.size(); ++i) {
    const int at_b = sign_at(sqf_[i].factor, b) == 0 ? 1 : 0;
    n += sqf_[i].multiplicity * (sturm_[i].count(a, b) - at_b);
  }
  return n;
}

int RealRootSolver::count_above(const mpq_class& a) const {
  int n = 0;
  for (std::size_t i = 0; i < sqf_.size(); ++i)
    n += sqf_[i].multiplicity * (sturm_[i].variations_at(a) - sturm_[i].variations_at_pos_inf());
  return n;
}

int RealRootSolver::count_below(const mpq_class& a) const {
  int n = 0;
  for (std::size_t i = 0; i < sqf_.size(); ++i) {
    const int at_a = sign_at(sqf_[i].factor, a) == 0 ? 1 : 0;
    n += sqf_[i].multiplicity * (sturm_[i].variations_at_neg_inf() - sturm_[i].variations_at(a) - at_a);
  }
  return n;
}

namespace {

// Power of two strictly above every root modulus (Cauchy bound).
mpq_class root_bound(const IntPoly& f) {
  mpq_class m = 0;
  const mpz_class lc = abs(f.leading());
  for (int i = 0; i < f.degree(); ++i) {
    mpq_class r(mpz_class(abs(f.coeff(i))), lc);
    r.canonicalize();
    if (r > m) m = r;
  }
  m += 1;
  mpz_class b = 1;
  while (mpq_class(b) <= m) b <<= 1;
  return mpq_class(b);
}

}  // namespace

RatInterval RealRootSolver::tighten(std::size_t i, mpq_class lo, mpq_class hi, const mpq_class& width) const {
  // Invariant: exactly one root of factor i in (lo, hi].
  const IntPoly& f = sqf_[i].factor;
  while (true) {
    const int sh = sign_at(f, hi);
    if (sh == 0) return RatInterval::point(hi);
    const int sl = sign_at(f, lo);
    const mpq_class mid = (lo + hi) / 2;
    if (sl != 0) {
      // simple root, no root at hi: strict sign change across [lo, hi]
      if (hi - lo <= width) return {lo, hi};
      const int sm = sign_at(f, mid);
      if (sm == 0) return RatInterval::point(mid);
      if (sm == sl) lo = mid; else hi = mid;
    } else if (sturm_[i].count(lo, mid) == 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
}

std::vector<RatInterval> RealRootSolver::isolate_factor(std::size_t i, const mpq_class& width) const {
  struct Pending {
    mpq_class lo, hi;
    int count;
  };
  std::vector<RatInterval> out;
  const mpq_class b = root_bound(sqf_[i].factor);
  std::vector<Pending> stack;
  const int total = sturm_[i].count(-b, b);
  if (total > 0) stack.push_back({-b, b, total});
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    if (cur.count == 1) {
      out.push_back(tighten(i, cur.lo, cur.hi, width));
      continue;
    }
    const mpq_class mid = (cur.lo + cur.hi) / 2;
    const int left = sturm_[i].count(cur.lo, mid);
    if (left > 0) stack.push_back({cur.lo, mid, left});
    if (cur.count - left > 0) stack.push_back({mid, cur.hi, cur.count - left});
  }
  return out;
}

void RealRootSolver::refine(IsolatedRoot& r, const mpq_class& width) const {
  if (r.enclosure.is_point()) return;
  const IntPoly& f = sqf_[r.factor].factor;
  mpq_class lo = r.enclosure.lo, hi = r.enclosure.hi;
  const int sl = sign_at(f, lo);
  while (hi - lo > width) {
    const mpq_class mid = (lo + hi) / 2;
    const int sm = sign_at(f, mid);
    if (sm == 0) {
      r.enclosure = RatInterval::point(mid);
      return;
    }
    if (sm == sl) lo = mid; else hi = mid;
  }
  r.enclosure = {lo, hi};
}

std::vector<IsolatedRoot> RealRootSolver::isolate(const mpq_class& width) const {
  std::vector<IsolatedRoot> roots;
  for (std::size_t i = 0; i < sqf_.size(); ++i)
    for (auto& iv : isolate_factor(i, width)) roots.push_back({std::move(iv), sqf_[i].multiplicity, i});

  const auto by_lo = [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.enclosure.lo < b.enclosure.lo; };
  // roots of distinct factors are distinct; shrink until the enclosures separate
  while (true) {
    std::sort(roots.begin(), roots.end(), by_lo);
    bool clean = true;
    for (std::size_t k = 0; k + 1 < roots.size(); ++k) {
      if (!roots[k].enclosure.overlaps(roots[k + 1].enclosure)) continue;
      clean = false;
      for (auto* r : {&roots[k], &roots[k + 1]}) refine(*r, r->enclosure.width() / 2);
    }
    if (clean) return roots;
  }
}

// ---------------------------------------------------------------------------

RootReport isolate_real_roots(const IntPoly& p, const mpq_class& refine_to) {
  RealRootSolver solver(p);
  RootReport rep;
  rep.degree = p.degree();
  rep.real_roots = solver.isolate(refine_to);
  rep.squarefree = solver.squarefree();
  rep.n_real = solver.count_real();
  rep.is_hyperbolic = rep.n_real == rep.degree;
  rep.n_in_critical = solver.count_in_closed(-2, 2);
  if (!rep.real_roots.empty()) {
    RatInterval s = rep.real_roots.back().enclosure - rep.real_roots.front().enclosure;
    if (rep.real_roots.size() == 1) s = RatInterval::point(0);
    if (s.lo < 0) s.lo = 0;
    rep.span_enclosure = s;
  }
  return rep;
}

RatInterval span(const IntPoly& p, const mpq_class& tol) {
  RealRootSolver solver(p);
  if (solver.count_real() < 2)
    throw TooFewRealRoots("span needs two real roots, found " + std::to_string(solver.count_real()) + " in " +
                          to_string(p));
  const auto roots = solver.isolate(tol / 2);
  if (roots.size() == 1) return RatInterval::point(0);
  RatInterval s = roots.back().enclosure - roots.front().enclosure;
  if (s.lo < 0) s.lo = 0;
  return s;
}

namespace {

int closed_count(const SturmSequence& s, const IntPoly& f, const RatInterval& iv) {
  return s.count(iv.lo, iv.hi) + (sign_at(f, iv.lo) == 0 ? 1 : 0);
}

Ordering order_of(const mpq_class& a, const mpq_class& b) {
  if (a < b) return Ordering::Less;
  if (a > b) return Ordering::Greater;
  return Ordering::Equal;
}

}  // namespace

SpanComparison compare_span(const IntPoly& p, const mpq_class& bound) {
  RealRootSolver solver(p);
  if (solver.count_real() < 1) throw TooFewRealRoots("span of a polynomial without real roots: " + to_string(p));
  mpq_class width(1, 16);
  auto roots = solver.isolate(width);
  if (roots.size() == 1) return {order_of(0, bound), RatInterval::point(0)};

  // r_min + bound is a root of p iff the shifted gcd vanishes at r_min
  const IntPoly shifted = clear_denominators(to_rat(p).shifted(bound));
  const IntPoly common = gcd(p, shifted);
  bool shift_hits_root = false;
  if (common.degree() >= 1) {
    const IntPoly g = squarefree_part(common);
    shift_hits_root = closed_count(SturmSequence(g), g, roots.front().enclosure) > 0;
  }

  while (true) {
    RatInterval enc = roots.back().enclosure - roots.front().enclosure;
    if (enc.hi < bound) return {Ordering::Less, enc};
    if (enc.lo > bound) return {Ordering::Greater, enc};
    if (enc.is_point()) return {order_of(enc.lo, bound), enc};
    if (shift_hits_root) {
      // t = r_min + bound is a root, so t <= r_max; locate t among the isolated roots
      const RatInterval t{roots.front().enclosure.lo + bound, roots.front().enclosure.hi + bound};
      std::size_t hits = 0;
      bool hits_max = false;
      for (const auto& r : roots) {
        if (!r.enclosure.overlaps(t)) continue;
        ++hits;
        hits_max = hits_max || &r == &roots.back();
      }
      if (hits == 1 && hits_max) return {Ordering::Equal, enc};
      if (!hits_max && t.hi < roots.back().enclosure.lo) return {Ordering::Greater, enc};
    }
    width /= 2;
    for (auto& r : roots) solver.refine(r, width);
  }
}

bool is_kronecker(const IntPoly& p) {
  if (p.degree() < 1) return false;
  RealRootSolver solver(p);
  return solver.count_in_closed(-2, 2) == p.degree();
}

bool nonnegative_on(const IntPoly& p, const mpq_class& a, const mpq_class& b) {
  if (b < a) throw std::invalid_argument("nonnegative_on: empty interval");
  if (p.is_zero()) return true;
  if (a == b) return sign_at(p, a) >= 0;
  if (p.degree() == 0) return sgn(p.leading()) > 0;
  RealRootSolver solver(p);
  for (const auto& f : solver.squarefree()) {
    if (f.multiplicity % 2 == 0) continue;
    const SturmSequence s(f.factor);
    const int inside = s.count(a, b) - (sign_at(f.factor, b) == 0 ? 1 : 0);
    if (inside > 0) return false;
  }
  // constant sign on (a, b); find a non-root sample
  mpq_class lo = a, hi = b;
  while (true) {
    const mpq_class mid = (lo + hi) / 2;
    const int s = sign_at(p, mid);
    if (s != 0) return s > 0;
    hi = mid;
  }
}

CircleReport classify_unit_circle(const PalindromicPoly& g) {
  CircleReport rep;
  IntPoly h = g.inner();
  int s = g.symmetry();
  const IntPoly z_minus_1{-1, 1};
  const IntPoly z_plus_1{1, 1};
  while (true) {
    if (s == -1) {
      h = *exact_quotient(h, z_minus_1);
      s = 1;
    } else if (h.degree() % 2 == 1) {
      h = *exact_quotient(h, z_plus_1);
    } else {
      break;
    }
    ++rep.unit_factors_stripped;
  }
  rep.n_on = rep.unit_factors_stripped;
  if (h.degree() <= 0) return rep;

  const IntPoly f = unlift(PalindromicPoly(h, 1));
  RealRootSolver solver(f);
  const int crit = solver.count_in_closed(-2, 2);
  const int real = solver.count_real();
  rep.n_on += 2 * crit;
  rep.n_inside = rep.n_outside = f.degree() - crit;
  rep.x_real_outside = real - crit;
  rep.x_nonreal = f.degree() - real;
  return rep;
}

DiscCount count_roots_in_disc(const RatPoly& q, double margin) {
  DiscCount out;
  out.roots = approximate_roots(q);
  const std::size_t n = out.roots.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  const auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& a = out.roots[i];
      const auto& b = out.roots[j];
      if (abs(a.value - b.value) <= a.radius + b.radius) parent[find(i)] = find(j);
    }

  const BigReal inner = BigReal(1) - margin;
  const BigReal outer = BigReal(1) + margin;
  std::vector<int> state(n, 0);  // per cluster root: 1 inside, 2 outside, 3 mixed
  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = out.roots[i];
    const BigReal m = abs(r.value);
    const int here = (m + r.radius < inner) ? 1 : (m - r.radius > outer) ? 2 : 3;
    int& st = state[find(i)];
    st = (st == 0 || st == here) ? here : 3;
  }
  for (std::size_t i = 0; i < n; ++i) {
    switch (state[find(i)]) {
      case 1: ++out.inside; break;
      case 2: ++out.outside; break;
      default: ++out.uncertified; break;
    }
  }
  return out;
}

}  // namespace chebsalem
