#include "chebsalem/families.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <sstream>

#include "chebsalem/errors.hpp"
#include "chebsalem/highprec.hpp"
#include "chebsalem/palindrome.hpp"

namespace chebsalem {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// ---------------------------------------------------------------------------
// Spec parsing and validation

namespace {

std::map<std::string, std::string> parse_fields(std::string_view body, const std::string& text) {
  std::map<std::string, std::string> out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const std::size_t comma = std::min(body.find(',', pos), body.size());
    const std::string_view item = body.substr(pos, comma - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == item.size())
      throw InvalidParams("malformed field '" + std::string(item) + "' in '" + text + "'");
    std::string key(item.substr(0, eq));
    if (!out.emplace(key, std::string(item.substr(eq + 1))).second)
      throw InvalidParams("duplicate field '" + key + "' in '" + text + "'");
    pos = comma + 1;
  }
  return out;
}

class Fields {
 public:
  Fields(std::map<std::string, std::string> f, std::string text) : f_(std::move(f)), text_(std::move(text)) {}

  int integer(const std::string& key) {
    auto it = f_.find(key);
    if (it == f_.end()) throw InvalidParams("missing field '" + key + "' in '" + text_ + "'");
    int v = 0;
    const auto& s = it->second;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw InvalidParams("field '" + key + "' is not an integer in '" + text_ + "'");
    f_.erase(it);
    return v;
  }

  std::string word(const std::string& key) {
    auto it = f_.find(key);
    if (it == f_.end()) throw InvalidParams("missing field '" + key + "' in '" + text_ + "'");
    std::string v = it->second;
    f_.erase(it);
    return v;
  }

  void finish() const {
    if (!f_.empty()) throw InvalidParams("unknown field '" + f_.begin()->first + "' in '" + text_ + "'");
  }

 private:
  std::map<std::string, std::string> f_;
  std::string text_;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParams(what);
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  const std::string full(text);
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) throw InvalidParams("family spec needs 'name:fields', got '" + full + "'");
  const std::string name(text.substr(0, colon));
  Fields f(parse_fields(text.substr(colon + 1), full), full);
  FamilySpec spec;
  if (name == "kns") {
    const int k = f.integer("k"), n = f.integer("n"), s = f.integer("s");
    spec = Kns{k, n, s};
  } else if (name == "an") {
    spec = An{f.integer("n")};
  } else if (name == "bn") {
    const int n = f.integer("n");
    const std::string parity = f.word("parity");
    require(parity == "even" || parity == "odd", "parity must be even or odd in '" + full + "'");
    spec = Bn{n, parity == "odd"};
  } else if (name == "minus1") {
    const int k = f.integer("k"), n = f.integer("n");
    spec = MinusOne{k, n};
  } else if (name == "two") {
    const int h1 = f.integer("h1"), h2 = f.integer("h2"), n = f.integer("n");
    spec = TwoParam{h1, h2, n};
  } else if (name == "three") {
    const int h1 = f.integer("h1"), h2 = f.integer("h2"), h3 = f.integer("h3"), n = f.integer("n");
    spec = ThreeParam{h1, h2, h3, n};
  } else {
    throw InvalidParams("unknown family '" + name + "'");
  }
  f.finish();
  validate(spec);
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const Kns& p) { os << "kns:k=" << p.k << ",n=" << p.n << ",s=" << p.s; },
                 [&](const An& p) { os << "an:n=" << p.n; },
                 [&](const Bn& p) { os << "bn:n=" << p.n << ",parity=" << (p.odd ? "odd" : "even"); },
                 [&](const MinusOne& p) { os << "minus1:k=" << p.k << ",n=" << p.n; },
                 [&](const TwoParam& p) { os << "two:h1=" << p.h1 << ",h2=" << p.h2 << ",n=" << p.n; },
                 [&](const ThreeParam& p) {
                   os << "three:h1=" << p.h1 << ",h2=" << p.h2 << ",h3=" << p.h3 << ",n=" << p.n;
                 },
             },
             spec);
  return os.str();
}

void validate(const FamilySpec& spec) {
  const std::string s = to_string(spec);
  std::visit(overloaded{
                 [&](const Kns& p) { require(p.k >= 0 && p.n >= 2 && p.s >= 0, "kns needs k >= 0, n >= 2, s >= 0: " + s); },
                 [&](const An& p) { require(p.n >= 1, "an needs n >= 1: " + s); },
                 [&](const Bn& p) { require(p.n >= 1, "bn needs n >= 1: " + s); },
                 [&](const MinusOne& p) { require(p.k >= 0 && p.n >= 1, "minus1 needs k >= 0, n >= 1: " + s); },
                 [&](const TwoParam& p) {
                   require(p.n >= 1 && 1 <= p.h1 && p.h1 <= p.h2, "two needs 1 <= h1 <= h2, n >= 1: " + s);
                 },
                 [&](const ThreeParam& p) {
                   require(p.n >= 1 && 1 <= p.h1 && p.h1 <= p.h2 && p.h2 <= p.h3,
                           "three needs 1 <= h1 <= h2 <= h3, n >= 1: " + s);
                 },
             },
             spec);
}

int family_n(const FamilySpec& spec) {
  return std::visit([](const auto& p) { return p.n; }, spec);
}

FamilySpec with_n(const FamilySpec& spec, int n) {
  FamilySpec out = spec;
  std::visit([n](auto& p) { p.n = n; }, out);
  validate(out);
  return out;
}

// ---------------------------------------------------------------------------
// Coordinates and closed forms

ChebCoords coords_of(const FamilySpec& spec) {
  validate(spec);
  std::vector<mpz_class> c;
  std::visit(overloaded{
                 [&](const Kns& p) {
                   c.assign(static_cast<std::size_t>((p.n - 1) * (p.k + 1) + p.s + 1), 0);
                   for (int j = 0; j < p.n; ++j) c[static_cast<std::size_t>(p.s + j * (p.k + 1))] = 1;
                 },
                 [&](const An& p) {
                   c.assign(static_cast<std::size_t>(p.n), 2);
                   c.emplace_back(1);
                 },
                 [&](const Bn& p) {
                   const int d = p.odd ? 2 * p.n + 1 : 2 * p.n;
                   for (int j = 0; j < d; ++j) c.emplace_back((j % 2 == 0) == p.odd ? 1 : 2);
                   c.emplace_back(1);
                 },
                 [&](const MinusOne& p) {
                   c.assign(static_cast<std::size_t>(2 * p.n + p.k), 0);
                   for (int j = 0; j < p.n; ++j) c[static_cast<std::size_t>(2 * j)] = -1;
                   c.back() = 1;
                 },
                 [&](const TwoParam& p) {
                   c.emplace_back(1);
                   for (int j = 0; j < p.n; ++j) {
                     c.emplace_back(-p.h1);
                     c.emplace_back(p.h2);
                   }
                   c.emplace_back(1);
                 },
                 [&](const ThreeParam& p) {
                   c.emplace_back(1);
                   for (int j = 0; j < p.n; ++j)
                     for (int v : {-p.h1, p.h2, -p.h3, p.h1, -p.h2, p.h3}) c.emplace_back(v);
                   c.emplace_back(1);
                 },
             },
             spec);
  return ChebCoords(std::move(c));
}

IntPoly x_poly(const FamilySpec& spec) { return from_cheb(coords_of(spec)); }

namespace {

IntPoly zpow(int k) { return IntPoly::monomial(k); }
IntPoly zpow_minus_one(int k) { return IntPoly::monomial(k) - IntPoly{1}; }
RatPoly half(const IntPoly& p) { return to_rat(p) * mpq_class(1, 2); }

}  // namespace

RatPoly reverse_at(const RatPoly& p, int degree) {
  if (p.degree() > degree) throw std::invalid_argument("reverse_at: degree below the polynomial degree");
  std::vector<mpq_class> c(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i <= p.degree(); ++i) c[static_cast<std::size_t>(degree - i)] = p.coeff(i);
  return RatPoly(std::move(c));
}

IntPoly u_poly(const FamilySpec& spec) {
  validate(spec);
  if (const auto* p = std::get_if<TwoParam>(&spec)) return IntPoly{-(p->h1 + 1), p->h2, 1};
  if (const auto* p = std::get_if<ThreeParam>(&spec)) return IntPoly{p->h1 + 1, -p->h2, p->h3, 1};
  throw NotApplicable("U is defined for the two- and three-parameter families only: " + to_string(spec));
}

RatPoly v_poly(const ThreeParam& p) {
  return half(IntPoly{1 - p.h3, p.h2 - p.h1, p.h2 - p.h1, 1 - p.h3});
}

int q_degree(const FamilySpec& spec) {
  if (const auto* p = std::get_if<TwoParam>(&spec)) return 2 * p->n + 3;
  if (const auto* p = std::get_if<ThreeParam>(&spec)) return 6 * p->n + 4;
  throw NotApplicable("Q is defined for the two- and three-parameter families only: " + to_string(spec));
}

RatPoly q_poly(const FamilySpec& spec) {
  const IntPoly u = u_poly(spec);
  if (const auto* p = std::get_if<TwoParam>(&spec))
    return to_rat(u.times_xk(2 * p->n + 1)) - half(IntPoly{-1, 0, 1}) * mpq_class(p->h2 - 1);
  const auto& p3 = std::get<ThreeParam>(spec);
  return to_rat(u.times_xk(6 * p3.n + 1)) + v_poly(p3);
}

ClosedForm closed_form_z(const FamilySpec& spec) {
  validate(spec);
  const IntPoly lifted = lift(x_poly(spec)).inner();
  ClosedForm out;
  std::visit(overloaded{
                 [&](const Kns& p) {
                   out.multiplier = IntPoly{1};
                   const auto geometric = [&](int terms) {
                     return *exact_quotient(zpow_minus_one(terms * (p.k + 1)), zpow_minus_one(p.k + 1));
                   };
                   // T_0 lifts to a single middle term, so s = 0 folds into one geometric sum
                   if (p.s == 0) {
                     out.rhs = to_rat(geometric(2 * p.n - 1));
                   } else {
                     const IntPoly first = zpow((p.n - 1) * (p.k + 1) + 2 * p.s) + IntPoly{1};
                     out.rhs = to_rat(first * geometric(p.n));
                   }
                 },
                 [&](const An& p) {
                   out.multiplier = IntPoly{-1, 1};
                   out.rhs = to_rat(zpow_minus_one(2 * p.n) * IntPoly{1, 1});
                 },
                 [&](const Bn& p) {
                   out.multiplier = IntPoly{-1, 0, 1};
                   out.rhs = to_rat(zpow_minus_one(p.odd ? 4 * p.n + 2 : 4 * p.n) * IntPoly{1, 1, 1});
                 },
                 [&](const MinusOne& p) {
                   out.multiplier = IntPoly{-1, 0, 1};
                   if (p.k == 0) {
                     out.rhs = to_rat(IntPoly{-1, -1, 1}.times_xk(4 * p.n - 2) + IntPoly{-1, 1, 1});
                   } else {
                     const IntPoly pisot = zpow(p.k + 1) - zpow(p.k - 1) - IntPoly{1};
                     out.rhs = to_rat(pisot.times_xk(4 * p.n + p.k - 1) + zpow(p.k + 1) + IntPoly{-1, 0, 1});
                   }
                 },
                 [&](const TwoParam& p) {
                   out.multiplier = IntPoly{-1, 0, 1};
                   const RatPoly q = q_poly(spec);
                   out.rhs = q.times_xk(2 * p.n + 1) - reverse_at(q, q_degree(spec));
                 },
                 [&](const ThreeParam& p) {
                   out.multiplier = IntPoly{1, 0, 0, 1};
                   const RatPoly q = q_poly(spec);
                   out.rhs = q.times_xk(6 * p.n + 1) + reverse_at(q, q_degree(spec));
                 },
             },
             spec);
  out.lhs = lifted * out.multiplier;
  return out;
}

bool salem_identity_check(const FamilySpec& spec) {
  if (!std::holds_alternative<TwoParam>(spec) && !std::holds_alternative<ThreeParam>(spec))
    throw NotApplicable("the Q-combination identity applies to the two- and three-parameter families: " +
                        to_string(spec));
  const ClosedForm cf = closed_form_z(spec);
  if (!cf.holds()) {
    RatPoly diff = to_rat(cf.lhs) - cf.rhs;
    throw IdentityFailed("Q-combination identity fails for " + to_string(spec) + ": difference " + to_string(diff, "z"),
                         std::move(diff));
  }
  return true;
}

// ---------------------------------------------------------------------------
// Circle moduli

RatPoly circle_modulus_poly(const RatPoly& p) {
  // |p|^2 = c_0 + sum_{d>=1} c_d (z^d + z^-d), and z^d + z^-d = T_d(2x)
  const int n = p.degree();
  if (n < 0) return RatPoly();
  RatPoly out;
  for (int d = 0; d <= n; ++d) {
    mpq_class c = 0;
    for (int a = d; a <= n; ++a) c += p.coeff(a) * p.coeff(a - d);
    if (c == 0) continue;
    if (d == 0) {
      out += RatPoly::constant(c);
      continue;
    }
    const IntPoly t = chebyshev_T(d);
    std::vector<mpq_class> scaled(static_cast<std::size_t>(d) + 1);
    mpz_class pow2 = 1;
    for (int i = 0; i <= d; ++i, pow2 <<= 1) scaled[static_cast<std::size_t>(i)] = mpq_class(t.coeff(i) * pow2) * c;
    out += RatPoly(std::move(scaled));
  }
  return out;
}

CircleLemma circle_lemma_check(int h1, int h2, int samples) {
  require(1 <= h1 && h1 <= h2, "circle lemma needs 1 <= h1 <= h2");
  CircleLemma out;
  const RatPoly u = to_rat(IntPoly{-(h1 + 1), h2, 1});
  const RatPoly w = half(IntPoly{-1, 0, 1}) * mpq_class(h2 - 1);
  out.difference = circle_modulus_poly(u) - circle_modulus_poly(w);
  // (h1 - h2 a)^2 + (4h1 + 2h2 + 3)(1 - a^2)
  const RatPoly lin = to_rat(IntPoly{h1, -h2});
  out.closed_form = lin * lin + to_rat(IntPoly{1, 0, -1}) * mpq_class(4 * h1 + 2 * h2 + 3);
  out.identity_holds = out.difference == out.closed_form;
  out.nonnegative_on_circle = nonnegative_on(clear_denominators(out.closed_form), -1, 1);

  const BigReal two_pi = 2 * boost::math::constants::pi<BigReal>();
  BigReal worst = 0;
  for (int k = 0; k < samples; ++k) {
    const BigComplex z = unit_root(two_pi * k / samples);
    const BigReal lhs = norm(evaluate(u, z)) - norm(evaluate(w, z));
    const BigReal a = z.re, b = z.im;
    const BigReal rhs = (h1 - h2 * a) * (h1 - h2 * a) + (4 * h1 + 2 * h2 + 3) * b * b;
    worst = std::max(worst, BigReal(boost::multiprecision::abs(lhs - rhs)));
  }
  out.max_sample_deviation = static_cast<double>(worst);
  return out;
}

LemmaF lemma_f(int h1, int h2, int h3) {
  require(1 <= h1 && h1 <= h2 && h2 <= h3, "lemma f needs 1 <= h1 <= h2 <= h3");
  LemmaF out;
  const ThreeParam p{h1, h2, h3, 1};
  out.a = circle_modulus_poly(to_rat(u_poly(p)));
  out.b = circle_modulus_poly(v_poly(p));
  const auto two_f = to_int((out.a - out.b) * mpq_class(2));
  if (!two_f) throw IdentityFailed("2(a - b) is not integral", (out.a - out.b) * mpq_class(2));
  out.two_f = *two_f;

  const long a1 = h1, a2 = h2, a3 = h3;
  const long c3 = 2 * (-2 * a3 * a3 + 4 * a3 + 8 * a1 + 6);
  const long c2 = 4 * (a2 * (a3 - 3) + 2 * a3 + a1 * (a3 + 1));
  const long c1 = -a1 * a1 - 2 * (a2 + a3 + 5) * a1 - a2 * a2 + 3 * a3 * a3 - 2 * a3 - 2 * a2 * (a3 + 3) - 9;
  const long c0 = a1 * a1 + 2 * (a2 - a3 + 1) * a1 + a2 * a2 + a3 * a3 - 2 * a2 * (a3 - 3) - 2 * a3 + 3;
  out.two_f_closed = IntPoly{c0, c1, c2, c3};
  out.matches_closed = out.two_f == out.two_f_closed;
  return out;
}

IntPoly reciprocal_trace_poly(const IntPoly& h) {
  if (h.degree() < 1 || h.coeff(0) == 0) throw std::invalid_argument("reciprocal_trace_poly needs deg >= 1 and h(0) != 0");
  // h(z) h(1/z) = sum_d c_d z^d with c_d = c_{-d}; its Chebyshev coordinates are c_0..c_deg
  const int n = h.degree();
  std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1);
  for (int d = 0; d <= n; ++d)
    for (int a = d; a <= n; ++a) c[static_cast<std::size_t>(d)] += h.coeff(a) * h.coeff(a - d);
  IntPoly out = primitive_part(from_cheb(ChebCoords(std::move(c))));
  return sgn(out.leading()) < 0 ? -out : out;
}

// ---------------------------------------------------------------------------
// Limits

mpq_class limit_refine_width() {
  mpz_class den = 1;
  den <<= 80;
  return mpq_class(mpz_class(1), den);
}

std::string to_string(RootSelector s) {
  switch (s) {
    case RootSelector::LargestReal: return "largest_real";
    case RootSelector::SmallestReal: return "smallest_real";
    case RootSelector::NegativeRoot: return "negative_root";
    case RootSelector::LargestRoot: return "largest_root";
  }
  return "?";
}

IntPoly xm_limit_poly(const FamilySpec& spec) {
  if (const auto* p = std::get_if<TwoParam>(&spec)) {
    const long h1 = p->h1, h2 = p->h2;
    return IntPoly{-(h2 * h2 + (h1 + 2) * (h1 + 2)), h1 * h2, h1 + 1};
  }
  if (const auto* p = std::get_if<ThreeParam>(&spec)) {
    const long h1 = p->h1, h2 = p->h2, h3 = p->h3;
    return IntPoly{(h2 + 1) * (h2 + 1) + (h1 - h3 + 1) * (h1 - h3 + 1), -((h1 + 1) * (h2 + 3) + (h2 - 1) * h3),
                   (h1 + 1) * h3 - h2, h1 + 1};
  }
  throw NotApplicable("closed smallest-root limit polynomial exists for two/three-parameter families only");
}

IntPoly span_limit_poly(const FamilySpec& spec) {
  if (const auto* p = std::get_if<TwoParam>(&spec)) {
    const long h1 = p->h1, h2 = p->h2;
    return IntPoly{(h2 - h1) * (h2 - h1), 4 * (h1 + 1) + h1 * h2, -(h1 + 1)};
  }
  if (const auto* p = std::get_if<ThreeParam>(&spec)) {
    const long h1 = p->h1, h2 = p->h2, h3 = p->h3;
    const long c2 = 6 * (h1 + 1) - h2 + h1 * h3 + h3;
    const long c1 = -(9 * (h1 + 1) - h1 * h2 - h2 - h2 * h3 + h3 - 4 * (h2 - h1 * h3 - h3));
    const long c0 = (h1 - h2 + h3 + 2) * (h1 - h2 + h3 + 2);
    return IntPoly{c0, c1, c2, -(h1 + 1)};
  }
  throw NotApplicable("closed span-limit polynomial exists for two/three-parameter families only");
}

namespace {

bool beyond_unit(const RatInterval& w) { return w.lo > 1 || w.hi < -1; }

// w + 1/w is increasing on |w| > 1.
RatInterval trace_of(const RatInterval& w) { return {w.lo + 1 / w.lo, w.hi + 1 / w.hi}; }

std::size_t selected_index(const RealRootSolver& solver, std::vector<IsolatedRoot>& roots, RootSelector sel,
                           bool& unique) {
  unique = true;
  switch (sel) {
    case RootSelector::LargestReal:
    case RootSelector::LargestRoot: return roots.size() - 1;
    case RootSelector::SmallestReal: return 0;
    case RootSelector::NegativeRoot: break;
  }
  std::size_t found = roots.size(), count = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    auto& r = roots[i];
    while (r.enclosure.lo < 0 && r.enclosure.hi > 0) solver.refine(r, r.enclosure.width() / 2);
    if (r.enclosure.hi < 0) {
      ++count;
      found = i;
    }
  }
  unique = count == 1;
  return found;
}

// Root of `defining` equal to target(w), w the smallest or largest real root of h.
AlgebraicLimit match_root(const IntPoly& defining, RootSelector sel, const IntPoly& h, bool smallest_w,
                          const std::function<RatInterval(const RatInterval&)>& target, const mpq_class& width) {
  AlgebraicLimit out;
  out.defining_poly = defining;
  out.selector = sel;

  const RealRootSolver ds(defining);
  auto droots = ds.isolate(mpq_class(1, 16));
  const RealRootSolver hs(h);
  auto hroots = hs.isolate(mpq_class(1, 16));
  if (droots.empty() || hroots.empty()) throw IdentityFailed("no real root to match in " + to_string(defining), RatPoly());
  IsolatedRoot w = smallest_w ? hroots.front() : hroots.back();

  std::size_t idx = droots.size();
  while (true) {
    if (!beyond_unit(w.enclosure)) {
      hs.refine(w, w.enclosure.width() / 2);
      continue;
    }
    const RatInterval t = target(w.enclosure);
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < droots.size(); ++i)
      if (droots[i].enclosure.overlaps(t)) hits.push_back(i);
    if (hits.empty())
      throw IdentityFailed("limit polynomial " + to_string(defining) + " does not vanish at the z-side limit",
                           RatPoly());
    if (hits.size() == 1) {
      idx = hits.front();
      break;
    }
    hs.refine(w, w.enclosure.width() / 2);
    for (std::size_t i : hits) ds.refine(droots[i], droots[i].enclosure.width() / 2);
  }

  bool unique = true;
  const std::size_t chosen = selected_index(ds, droots, sel, unique);
  out.selector_consistent = unique && chosen == idx;
  ds.refine(droots[idx], width);
  out.enclosure = droots[idx].enclosure;
  return out;
}

AlgebraicLimit constant_limit(long v, RootSelector sel) {
  return {IntPoly{-v, 1}, sel, RatInterval::point(mpq_class(v)), true};
}

IntPoly pisot_side(const MinusOne& p) {
  if (p.k == 0) return IntPoly{-1, -1, 1};
  return IntPoly::monomial(p.k + 1) - IntPoly::monomial(p.k - 1) - IntPoly{1};
}

}  // namespace

ExtremeLimits limit_extreme_root(const FamilySpec& spec, const mpq_class& width) {
  validate(spec);
  if (const auto* p = std::get_if<MinusOne>(&spec)) {
    const IntPoly h = pisot_side(*p);
    const IntPoly image = reciprocal_trace_poly(h);
    ExtremeLimits out;
    out.largest = match_root(image, RootSelector::LargestReal, h, false, trace_of, width);
    if (p->k % 2 == 0) {
      out.smallest = constant_limit(-2, RootSelector::SmallestReal);
    } else {
      // h is even in z for odd k: the smallest real root is -z0
      out.smallest = match_root(image, RootSelector::SmallestReal, h, true, trace_of, width);
    }
    return out;
  }
  if (std::holds_alternative<TwoParam>(spec) || std::holds_alternative<ThreeParam>(spec)) {
    ExtremeLimits out;
    out.smallest = match_root(xm_limit_poly(spec), RootSelector::NegativeRoot, u_poly(spec), true, trace_of, width);
    out.largest = constant_limit(2, RootSelector::LargestReal);
    return out;
  }
  throw NotApplicable("extreme roots of " + to_string(spec) + " tend to -2 and 2");
}

AlgebraicLimit limit_span(const FamilySpec& spec, const mpq_class& width) {
  validate(spec);
  if (!std::holds_alternative<TwoParam>(spec) && !std::holds_alternative<ThreeParam>(spec))
    throw InvalidParams("span limit polynomial exists for two/three-parameter families only: " + to_string(spec));
  return match_root(
      span_limit_poly(spec), RootSelector::LargestRoot, u_poly(spec), true,
      [](const RatInterval& w) { return mpq_class(2) - trace_of(w); }, width);
}

}  // namespace chebsalem
