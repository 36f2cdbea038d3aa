#pragma once

// Published degree-8 span < 4 polynomials (in Chebyshev coordinates, ordered
// by increasing span) and the degree-18 coordinate vector.

#include <string>
#include <vector>

namespace chebsalem {

struct Table8Row {
  std::string label;        // "8a" .. "8z"
  std::vector<long> coords;  // c_0 .. c_8
  bool kronecker = false;   // marked as cosine type
};

const std::vector<Table8Row>& table8_rows();
const std::vector<long>& degree18_coords();

}  // namespace chebsalem
