#include "chebsalem/palindrome.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <stdexcept>

#include "chebsalem/errors.hpp"

namespace chebsalem {

std::optional<int> PalindromicPoly::detect_symmetry(const IntPoly& p) {
  const auto c = p.coeffs();
  const std::size_t n = c.size();
  bool plus = true, minus = true;
  for (std::size_t j = 0; j < n && (plus || minus); ++j) {
    const auto& a = c[j];
    const auto& b = c[n - 1 - j];
    if (a != b) plus = false;
    if (a != -b) minus = false;
  }
  if (plus) return 1;
  if (minus) return -1;
  return std::nullopt;
}

PalindromicPoly::PalindromicPoly(IntPoly inner, int symmetry)
    : inner_(std::move(inner)), symmetry_(symmetry) {
  if (symmetry != 1 && symmetry != -1) throw std::invalid_argument("symmetry must be +1 or -1");
  const auto c = inner_.coeffs();
  const std::size_t n = c.size();
  for (std::size_t j = 0; j < n; ++j) {
    const mpz_class expected = symmetry_ * c[n - 1 - j];
    if (c[j] != expected)
      throw NotPalindromic("coefficient " + std::to_string(j) + " breaks symmetry " +
                           std::to_string(symmetry_) + " in " + to_string(inner_, "z"));
  }
}

PalindromicPoly PalindromicPoly::from(const IntPoly& p) {
  const auto s = detect_symmetry(p);
  if (!s) throw NotPalindromic("not self-reciprocal: " + to_string(p, "z"));
  return PalindromicPoly(p, *s);
}

PalindromicPoly lift_cheb(const ChebCoords& c) {
  if (c.is_zero()) throw std::invalid_argument("lift of the zero polynomial");
  const std::size_t d = static_cast<std::size_t>(c.degree());
  std::vector<mpz_class> a(2 * d + 1);
  a[d] += c.coords()[0];
  for (std::size_t j = 1; j <= d; ++j) {
    a[d + j] += c.coords()[j];
    a[d - j] += c.coords()[j];
  }
  return PalindromicPoly(IntPoly(std::move(a)), 1);
}

PalindromicPoly lift(const IntPoly& f) { return lift_cheb(to_cheb(f)); }

ChebCoords unlift_cheb(const PalindromicPoly& g) {
  if (g.symmetry() != 1)
    throw NotPalindromic("unlift needs symmetry +1, got -1 for " + to_string(g.inner(), "z"));
  if (g.degree() % 2 != 0) throw OddDegree("unlift needs even degree, got " + std::to_string(g.degree()));
  const std::size_t d = static_cast<std::size_t>(g.degree() / 2);
  std::vector<mpz_class> c(d + 1);
  for (std::size_t j = 0; j <= d; ++j) c[j] = g.inner().coeffs()[d + j];
  return ChebCoords(std::move(c));
}

IntPoly unlift(const PalindromicPoly& g) { return from_cheb(unlift_cheb(g)); }

IntPoly unlift(const IntPoly& g) {
  const auto s = PalindromicPoly::detect_symmetry(g);
  if (!s || *s != 1) throw NotPalindromic("not palindromic with symmetry +1: " + to_string(g, "z"));
  return unlift(PalindromicPoly(g, 1));
}

IntPoly reciprocal_conjugate(const IntPoly& f, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  IntPoly r = f.reversed();
  return sign == 1 ? r : -r;
}

ModulusReport equal_modulus_on_circle(const IntPoly& f, const IntPoly& g, int samples, double tol) {
  if (samples < 8) throw std::invalid_argument("equal_modulus_on_circle needs at least 8 samples");
  ModulusReport rep;
  rep.samples = samples;
  if (!f.is_zero()) {
    const IntPoly r = f.reversed();
    if (g == r) {
      rep.exact_reciprocal = true;
      rep.exact_sign = 1;
    } else if (g == -r) {
      rep.exact_reciprocal = true;
      rep.exact_sign = -1;
    }
  }
  const BigReal two_pi = 2 * boost::math::constants::pi<BigReal>();
  BigReal worst = 0;
  for (int k = 0; k < samples; ++k) {
    const BigComplex z = unit_root(two_pi * k / samples);
    const BigReal af = abs(evaluate(f, z));
    const BigReal ag = abs(evaluate(g, z));
    const BigReal dev = boost::multiprecision::abs(af - ag) / std::max(BigReal(1), af);
    worst = std::max(worst, dev);
  }
  rep.max_deviation = static_cast<double>(worst);
  rep.pass = worst <= BigReal(tol);
  return rep;
}

}  // namespace chebsalem
