#pragma once

// Chebyshev basis on [-2,2]: monic T_n with T_n(z + 1/z) = z^n + z^-n.
//
// The recurrence is T_0 = 1, T_1 = x, T_2 = x*T_1 - 2*T_0 and
// T_n = x*T_{n-1} - T_{n-2} for n >= 3. The doubling at n = 2 is what
// distinguishes this normalization from the usual [-1,1] one.

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "chebsalem/poly.hpp"

namespace chebsalem {

// Integer coordinates [c_0, ..., c_d] with respect to (T_0, ..., T_d).
class ChebCoords {
 public:
  ChebCoords() = default;
  explicit ChebCoords(std::vector<mpz_class> coords);
  ChebCoords(std::initializer_list<long> coords);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  mpz_class coord(int j) const;
  const std::vector<mpz_class>& coords() const { return c_; }

  friend bool operator==(const ChebCoords&, const ChebCoords&) = default;
  // Lexicographic on (c_0, c_1, ...).
  friend bool operator<(const ChebCoords& a, const ChebCoords& b);

 private:
  std::vector<mpz_class> c_;
};

// Upper-triangular change-of-basis matrix, entries indexed from 0.
class BasisMatrix {
 public:
  explicit BasisMatrix(std::size_t n);

  std::size_t size() const { return n_; }
  const mpq_class& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
  mpq_class& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }

  bool is_identity() const;
  bool is_upper_unitriangular() const;
  bool all_integral() const;

  friend BasisMatrix operator*(const BasisMatrix& a, const BasisMatrix& b);

 private:
  std::size_t n_;
  std::vector<mpq_class> e_;
};

IntPoly chebyshev_T(int n);

// m: column j holds the monomial coefficients of T_j (from the closed entry formulas).
BasisMatrix matrix_m(std::size_t size);
// b = m^{-1}: column j holds the Chebyshev coordinates of x^j (from the binomial formulas).
BasisMatrix matrix_b(std::size_t size);

ChebCoords to_cheb(const IntPoly& p);
IntPoly from_cheb(const ChebCoords& c);

std::string to_string(const ChebCoords& c);

}  // namespace chebsalem
