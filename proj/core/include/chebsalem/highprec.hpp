#pragma once

// Multiprecision complex arithmetic used for cross-checks only: circle
// sampling and numeric root location. Nothing certified depends on it
// except through the explicit inclusion radii of approximate_roots().

#include <boost/multiprecision/mpfr.hpp>

#include <vector>

#include "chebsalem/poly.hpp"

namespace chebsalem {

// 50 decimal digits, about 166 bits of mantissa.
using BigReal = boost::multiprecision::mpfr_float_50;

struct BigComplex {
  BigReal re = 0;
  BigReal im = 0;

  BigComplex() = default;
  BigComplex(BigReal r, BigReal i = 0) : re(std::move(r)), im(std::move(i)) {}

  BigComplex& operator+=(const BigComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  BigComplex& operator-=(const BigComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    const BigReal d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
};

BigReal abs(const BigComplex& z);
BigReal norm(const BigComplex& z);
BigComplex unit_root(const BigReal& angle);  // e^{i angle}
BigReal to_big(const mpq_class& q);

BigComplex evaluate(const RatPoly& p, const BigComplex& z);
BigComplex evaluate(const IntPoly& p, const BigComplex& z);

// Approximate root with an inclusion radius: the union of all disks contains
// every root, and a connected component made of k disks contains exactly k roots.
struct ApproxRoot {
  BigComplex value;
  BigReal radius;
};

// Aberth-Ehrlich iteration followed by Weierstrass-type inclusion radii
// n * |p(z_i)| / |lc * prod_{j != i} (z_i - z_j)|.
std::vector<ApproxRoot> approximate_roots(const RatPoly& p, int max_iterations = 2000);

}  // namespace chebsalem
