#include "chebsalem/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace chebsalem {

RatPoly to_rat(const IntPoly& p) {
  std::vector<mpq_class> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return RatPoly(std::move(v));
}

std::optional<IntPoly> to_int(const RatPoly& p) {
  std::vector<mpz_class> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) {
    if (c.get_den() != 1) return std::nullopt;
    v.emplace_back(c.get_num());
  }
  return IntPoly(std::move(v));
}

mpz_class content(const IntPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  const mpz_class g = content(p);
  if (g == 1) return p;
  std::vector<mpz_class> v(p.coeffs().begin(), p.coeffs().end());
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(v));
}

IntPoly clear_denominators(const RatPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) {
    mpz_class t = l / c.get_den();
    v.emplace_back(t * c.get_num());
  }
  return primitive_part(IntPoly(std::move(v)));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly(), a};
  std::vector<mpq_class> r(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  std::vector<mpq_class> q(static_cast<std::size_t>(a.degree() - db) + 1);
  const mpq_class& lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const mpq_class f = r[static_cast<std::size_t>(i)] / lb;
    q[static_cast<std::size_t>(i - db)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.coeff(j);
  }
  r.resize(static_cast<std::size_t>(db));
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return IntPoly();
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<mpz_class> r(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  std::vector<mpz_class> q(static_cast<std::size_t>(a.degree() - db) + 1);
  const mpz_class& lb = b.leading();
  mpz_class f;
  for (int i = a.degree(); i >= db; --i) {
    auto& top = r[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) {
      const auto& bj = b.coeffs()[static_cast<std::size_t>(j)];
      if (bj != 0) r[static_cast<std::size_t>(i - db + j)] -= f * bj;
    }
  }
  for (int i = 0; i < db; ++i)
    if (r[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

PseudoRemainder pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  PseudoRemainder out;
  std::vector<mpz_class> r(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const mpz_class& lb = b.leading();
  int dr = static_cast<int>(r.size()) - 1;
  while (dr >= db) {
    const mpz_class lr = r[static_cast<std::size_t>(dr)];
    for (auto& c : r) c *= lb;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(dr - db + j)] -= lr * b.coeffs()[static_cast<std::size_t>(j)];
    ++out.steps;
    while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) --dr;
    r.resize(static_cast<std::size_t>(dr + 1));
  }
  out.remainder = IntPoly(std::move(r));
  return out;
}

namespace {

IntPoly normalized(const IntPoly& p) {
  IntPoly q = primitive_part(p);
  if (!q.is_zero() && q.leading() < 0) q = -q;
  return q;
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly u = normalized(a);
  IntPoly v = normalized(b);
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPoly r = primitive_part(pseudo_remainder(u, v).remainder);
    u = std::move(v);
    v = std::move(r);
  }
  return normalized(u);
}

std::vector<SquarefreeFactor> squarefree_decomposition(const IntPoly& p) {
  std::vector<SquarefreeFactor> out;
  if (p.degree() < 1) return out;
  const IntPoly f = normalized(p);
  const IntPoly df = f.derivative();
  IntPoly a = gcd(f, df);
  IntPoly b = *exact_quotient(f, a);
  IntPoly c = *exact_quotient(df, a);
  IntPoly d = c - b.derivative();
  for (int i = 1; b.degree() >= 1; ++i) {
    a = gcd(b, d);
    if (a.degree() >= 1) out.push_back({a, i});
    IntPoly nb = *exact_quotient(b, a);
    c = d.is_zero() ? IntPoly() : *exact_quotient(d, a);
    b = std::move(nb);
    d = c - b.derivative();
  }
  return out;
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() < 1) return normalized(p);
  const IntPoly f = normalized(p);
  return normalized(*exact_quotient(f, gcd(f, f.derivative())));
}

int sign_at(const IntPoly& p, const mpq_class& x) {
  if (p.is_zero()) return 0;
  // sum a_i num^i den^(d-i) has the sign of p(x) since den > 0
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  mpz_class acc = p.leading();
  mpz_class den_pow = den;
  for (int i = p.degree() - 1; i >= 0; --i) {
    acc *= num;
    acc += p.coeffs()[static_cast<std::size_t>(i)] * den_pow;
    den_pow *= den;
  }
  return sgn(acc);
}

namespace {

template <class Coeff>
std::string render(const Poly<Coeff>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Coeff c = p.coeff(i);
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const bool unit = (c == 1);
    if (!unit || i == 0) os << c.get_str();
    if (i >= 1) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace

std::string to_string(const IntPoly& p, const std::string& var) { return render(p, var); }
std::string to_string(const RatPoly& p, const std::string& var) { return render(p, var); }

}  // namespace chebsalem
