#include "chebsalem/chebbasis.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chebsalem {

namespace {

void trim(std::vector<mpz_class>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// C(n, k), zero outside 0 <= k <= n.
mpz_class binom(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

ChebCoords::ChebCoords(std::vector<mpz_class> coords) : c_(std::move(coords)) { trim(c_); }

ChebCoords::ChebCoords(std::initializer_list<long> coords) {
  for (long v : coords) c_.emplace_back(v);
  trim(c_);
}

mpz_class ChebCoords::coord(int j) const {
  if (j < 0 || j >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(j)];
}

bool operator<(const ChebCoords& a, const ChebCoords& b) {
  return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end(),
                                      [](const mpz_class& x, const mpz_class& y) { return x < y; });
}

BasisMatrix::BasisMatrix(std::size_t n) : n_(n), e_(n * n) {
  if (n == 0) throw std::invalid_argument("basis matrix size must be positive");
}

bool BasisMatrix::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool BasisMatrix::is_upper_unitriangular() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (at(i, i) != 1) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (at(i, j) != 0) return false;
  }
  return true;
}

bool BasisMatrix::all_integral() const {
  return std::all_of(e_.begin(), e_.end(), [](const mpq_class& q) { return q.get_den() == 1; });
}

BasisMatrix operator*(const BasisMatrix& a, const BasisMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("basis matrix size mismatch");
  BasisMatrix out(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = i; k < a.n_; ++k) {
      const mpq_class& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = k; j < a.n_; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

IntPoly chebyshev_T(int n) {
  if (n < 0) throw std::invalid_argument("chebyshev_T: negative index");
  IntPoly prev{1};
  if (n == 0) return prev;
  IntPoly cur = IntPoly::x();
  for (int j = 2; j <= n; ++j) {
    IntPoly next = cur.times_xk(1) - (j == 2 ? prev * mpz_class(2) : prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BasisMatrix matrix_m(std::size_t size) {
  BasisMatrix m(size);
  const long n = static_cast<long>(size);
  for (long r = 0; r < n; ++r) {
    for (long c = 0; c < n; ++c) {
      mpq_class v = 0;
      if (r == 0) {
        if (c == 0) {
          v = 1;
        } else if (c % 2 == 0) {
          v = ((c / 2) % 2 == 0) ? 2 : -2;
        }
      } else if (r % 2 == 0 && c % 2 == 0) {
        const long i = r / 2, j = c / 2;
        v = mpq_class(mpz_class(binom(i + j - 1, 2 * i - 1) * j), mpz_class(i));
        v.canonicalize();
        if ((i + j) % 2) v = -v;
      } else if (r % 2 == 1 && c % 2 == 1) {
        const long i = (r - 1) / 2, j = (c - 1) / 2;
        v = mpq_class(mpz_class(binom(i + j, 2 * i) * (2 * j + 1)), mpz_class(2 * i + 1));
        v.canonicalize();
        if ((i + j) % 2) v = -v;
      }
      m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = v;
    }
  }
  return m;
}

BasisMatrix matrix_b(std::size_t size) {
  BasisMatrix b(size);
  const long n = static_cast<long>(size);
  for (long r = 0; r < n; ++r) {
    for (long c = 0; c < n; ++c) {
      mpz_class v = 0;
      if (r % 2 == 0 && c % 2 == 0) {
        v = binom(c, (c + r) / 2);
      } else if (r % 2 == 1 && c % 2 == 1) {
        v = binom(c, (c - r) / 2);
      }
      // (c - r) < 0 makes the odd-row binomial vanish; enforce the triangle for the even rows too.
      if (c < r) v = 0;
      b.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = v;
    }
  }
  return b;
}

ChebCoords to_cheb(const IntPoly& p) {
  // Horner in the Chebyshev basis: x*T_0 = T_1, x*T_1 = T_2 + 2*T_0,
  // x*T_j = T_{j+1} + T_{j-1} for j >= 2.
  std::vector<mpz_class> acc;
  for (int i = p.degree(); i >= 0; --i) {
    std::vector<mpz_class> next(acc.size() + 1);
    for (std::size_t j = 0; j < acc.size(); ++j) {
      if (acc[j] == 0) continue;
      next[j + 1] += acc[j];
      if (j == 1) {
        next[0] += 2 * acc[j];
      } else if (j >= 2) {
        next[j - 1] += acc[j];
      }
    }
    next[0] += p.coeffs()[static_cast<std::size_t>(i)];
    acc = std::move(next);
  }
  return ChebCoords(std::move(acc));
}

IntPoly from_cheb(const ChebCoords& c) {
  if (c.is_zero()) return IntPoly();
  const int d = c.degree();
  std::vector<mpz_class> out(static_cast<std::size_t>(d) + 1);
  IntPoly prev{1};
  IntPoly cur = IntPoly::x();
  auto accumulate = [&](const IntPoly& t, const mpz_class& w) {
    if (w == 0) return;
    for (std::size_t i = 0; i < t.size(); ++i) out[i] += w * t.coeffs()[i];
  };
  accumulate(prev, c.coord(0));
  if (d >= 1) accumulate(cur, c.coord(1));
  for (int j = 2; j <= d; ++j) {
    IntPoly next = cur.times_xk(1) - (j == 2 ? prev * mpz_class(2) : prev);
    prev = std::move(cur);
    cur = std::move(next);
    accumulate(cur, c.coord(j));
  }
  return IntPoly(std::move(out));
}

std::string to_string(const ChebCoords& c) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c.coords().size(); ++i) {
    if (i) os << ",";
    os << c.coords()[i].get_str();
  }
  os << "]";
  return os.str();
}

}  // namespace chebsalem
