#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "chebsalem/poly.hpp"

namespace chebsalem {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPalindromic : public Error {
 public:
  using Error::Error;
};

class OddDegree : public Error {
 public:
  using Error::Error;
};

class TooFewRealRoots : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

class SearchSpaceTooLarge : public Error {
 public:
  using Error::Error;
};

class IdentityFailed : public Error {
 public:
  IdentityFailed(const std::string& what, RatPoly difference)
      : Error(what), difference_(std::move(difference)) {}
  const RatPoly& difference() const { return difference_; }

 private:
  RatPoly difference_;
};

class FixtureMismatch : public Error {
 public:
  FixtureMismatch(const std::string& row, const std::string& what)
      : Error(row + ": " + what), row_(row) {}
  const std::string& row() const { return row_; }

 private:
  std::string row_;
};

}  // namespace chebsalem
