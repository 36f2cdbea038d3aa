#include "chebsalem/highprec.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <limits>

namespace chebsalem {

BigReal norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }

BigReal abs(const BigComplex& z) { return boost::multiprecision::sqrt(norm(z)); }

BigComplex unit_root(const BigReal& angle) {
  return {boost::multiprecision::cos(angle), boost::multiprecision::sin(angle)};
}

BigReal to_big(const mpq_class& q) { return BigReal(q.get_mpq_t()); }

namespace {

template <class Poly>
BigComplex horner(const Poly& p, const BigComplex& z) {
  BigComplex acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc * z + BigComplex(to_big(mpq_class(p.coeff(i))));
  return acc;
}

struct BigPoly {
  std::vector<BigReal> c;  // ascending

  void eval_with_derivative(const BigComplex& z, BigComplex& v, BigComplex& dv) const {
    v = BigComplex();
    dv = BigComplex();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      dv = dv * z + v;
      v = v * z + BigComplex(*it);
    }
  }
  BigComplex eval(const BigComplex& z) const {
    BigComplex v;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * z + BigComplex(*it);
    return v;
  }
};

}  // namespace

BigComplex evaluate(const RatPoly& p, const BigComplex& z) { return horner(p, z); }
BigComplex evaluate(const IntPoly& p, const BigComplex& z) { return horner(p, z); }

std::vector<ApproxRoot> approximate_roots(const RatPoly& p, int max_iterations) {
  std::vector<ApproxRoot> out;
  if (p.degree() < 1) return out;

  // roots at the origin are exact
  int zeros = 0;
  while (p.coeff(zeros) == 0) ++zeros;
  for (int i = 0; i < zeros; ++i) out.push_back({BigComplex(), BigReal(0)});

  BigPoly q;
  for (int i = zeros; i <= p.degree(); ++i) q.c.push_back(to_big(p.coeff(i)));
  const int n = static_cast<int>(q.c.size()) - 1;
  if (n == 0) return out;

  const BigReal lc = q.c.back();
  const BigReal pi = boost::math::constants::pi<BigReal>();
  const BigReal r0 = boost::multiprecision::pow(boost::multiprecision::abs(q.c.front() / lc), BigReal(1) / n);
  std::vector<BigComplex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const BigReal angle = 2 * pi * k / n + BigReal(0.4);
    const BigComplex u = unit_root(angle);
    z[static_cast<std::size_t>(k)] = BigComplex(u.re * r0, u.im * r0);
  }

  const BigReal eps = BigReal("1e-46");
  for (int it = 0; it < max_iterations; ++it) {
    BigReal worst = 0;
    for (int k = 0; k < n; ++k) {
      auto& zk = z[static_cast<std::size_t>(k)];
      BigComplex v, dv;
      q.eval_with_derivative(zk, v, dv);
      if (v.re == 0 && v.im == 0) continue;
      const BigComplex w = v / dv;
      BigComplex s;
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        const BigComplex diff = zk - z[static_cast<std::size_t>(j)];
        if (diff.re == 0 && diff.im == 0) continue;
        s += BigComplex(1) / diff;
      }
      const BigComplex step = w / (BigComplex(1) - w * s);
      zk -= step;
      const BigReal scale = std::max(BigReal(1), abs(zk));
      worst = std::max(worst, BigReal(abs(step) / scale));
    }
    if (worst < eps) break;
  }

  for (int i = 0; i < n; ++i) {
    const auto& zi = z[static_cast<std::size_t>(i)];
    BigComplex denom(lc);
    bool collided = false;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const BigComplex diff = zi - z[static_cast<std::size_t>(j)];
      if (diff.re == 0 && diff.im == 0) collided = true;
      denom = denom * diff;
    }
    BigReal radius;
    if (collided) {
      radius = BigReal(std::numeric_limits<double>::max());
    } else {
      radius = n * abs(q.eval(zi)) / abs(denom);
    }
    out.push_back({zi, radius});
  }
  return out;
}

}  // namespace chebsalem
