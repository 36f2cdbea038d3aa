#pragma once

// Dense univariate polynomials with exact GMP coefficients.
//
// Coefficients are stored in ascending order of degree with no trailing
// zeros; the zero polynomial is the empty vector and reports degree -1.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace chebsalem {

inline constexpr int kZeroDegree = -1;

template <class Coeff>
class Poly {
 public:
  using coeff_type = Coeff;

  Poly() = default;
  explicit Poly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static Poly monomial(int degree, const Coeff& c = Coeff(1)) {
    std::vector<Coeff> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(1); }
  static Poly constant(const Coeff& c) { return Poly(std::vector<Coeff>{c}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }

  // Coefficient of x^i; zero outside the stored range.
  Coeff coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Coeff(0);
    return c_[static_cast<std::size_t>(i)];
  }
  const Coeff& leading() const { return c_.back(); }
  std::span<const Coeff> coeffs() const { return c_; }
  const std::vector<Coeff>& vec() const { return c_; }

  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Coeff& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Coeff& s) { return a *= s; }
  friend Poly operator*(const Coeff& s, Poly a) { return a *= s; }
  friend Poly operator-(Poly a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Coeff> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  template <class Arg>
  Arg evaluate(const Arg& at) const {
    Arg acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + Arg(*it);
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Coeff> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return Poly(std::move(out));
  }

  // x^k * p
  Poly times_xk(int k) const {
    if (is_zero()) return Poly();
    std::vector<Coeff> out(static_cast<std::size_t>(k), Coeff(0));
    out.insert(out.end(), c_.begin(), c_.end());
    return Poly(std::move(out));
  }

  // x^deg * p(1/x); drops degree when p(0) = 0.
  Poly reversed() const { return Poly(std::vector<Coeff>(c_.rbegin(), c_.rend())); }

  // p(-x)
  Poly reflected() const {
    Poly r = *this;
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
  }

  // p(x + t), Taylor shift by repeated synthetic division.
  Poly shifted(const Coeff& t) const {
    std::vector<Coeff> a = c_;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = n - 1; j > i; --j) a[j - 1] += t * a[j];
    return Poly(std::move(a));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

using IntPoly = Poly<mpz_class>;
using RatPoly = Poly<mpq_class>;

RatPoly to_rat(const IntPoly& p);
// Integer polynomial equal to p, or nullopt when some coefficient is not integral.
std::optional<IntPoly> to_int(const RatPoly& p);

// Positive gcd of the coefficients (0 for the zero polynomial).
mpz_class content(const IntPoly& p);
// p / content(p); the sign of the leading coefficient is preserved.
IntPoly primitive_part(const IntPoly& p);
// c * p for the unique positive rational c making the result primitive integral.
IntPoly clear_denominators(const RatPoly& p);

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
// a / b when b divides a over the integers, nullopt otherwise.
std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b);

// lc(b)^k * a mod b for the number k of elimination steps performed.
struct PseudoRemainder {
  IntPoly remainder;
  int steps = 0;
};
PseudoRemainder pseudo_remainder(const IntPoly& a, const IntPoly& b);

// Primitive gcd with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

struct SquarefreeFactor {
  IntPoly factor;  // primitive, positive leading coefficient, degree >= 1
  int multiplicity = 1;
};
// Yun decomposition of p; constants are dropped.
std::vector<SquarefreeFactor> squarefree_decomposition(const IntPoly& p);
// p / gcd(p, p'), primitive with positive leading coefficient.
IntPoly squarefree_part(const IntPoly& p);

// Sign of p(x) for rational x, evaluated without leaving the integers.
int sign_at(const IntPoly& p, const mpq_class& x);

std::string to_string(const IntPoly& p, const std::string& var = "x");
std::string to_string(const RatPoly& p, const std::string& var = "x");

}  // namespace chebsalem
