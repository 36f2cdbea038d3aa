#include "chebsalem/fixtures.hpp"

namespace chebsalem {

const std::vector<Table8Row>& table8_rows() {
  static const std::vector<Table8Row> rows{
      {"8a", {31, -30, 27, -22, 17, -11, 7, -4, 1}, false},
      {"8b", {1, -1, 1, -1, 1, -1, 1, -1, 1}, true},
      {"8c", {29, -27, 25, -20, 16, -11, 7, -4, 1}, false},
      {"8d", {17, -16, 15, -12, 10, -7, 4, -3, 1}, false},
      {"8e", {0, 0, 0, 0, 0, 0, 0, 0, 1}, true},
      {"8f", {0, -1, 0, -1, 0, -1, 0, 0, 1}, false},
      {"8g", {13, -12, 12, -10, 8, -6, 4, -3, 1}, false},
      {"8h", {13, -13, 12, -10, 8, -6, 4, -3, 1}, false},
      {"8i", {5, -5, 4, -4, 3, -3, 2, -2, 1}, false},
      {"8j", {7, -6, 6, -5, 4, -4, 2, -2, 1}, false},
      {"8k", {1, 0, 0, 0, -1, 0, 0, 0, 1}, true},
      {"8l", {17, -16, 14, -12, 10, -7, 6, -4, 1}, false},
      {"8m", {7, -6, 6, -6, 5, -3, 3, -3, 1}, false},
      {"8n", {3, -3, 3, -3, 3, -3, 2, -2, 1}, false},
      {"8o", {1, -4, 1, -3, 1, -2, 1, -1, 1}, false},
      {"8p", {-1, 0, 0, 0, 0, 0, 0, 0, 1}, true},
      {"8q", {11, -10, 10, -9, 8, -6, 4, -3, 1}, false},
      {"8r", {-1, 0, -1, 0, 0, 0, 1, 0, 1}, true},
      {"8s", {1, -2, 1, -2, 1, -2, 1, -1, 1}, false},
      {"8t", {5, -3, 3, -3, 3, -2, 1, -2, 1}, false},
      {"8u", {3, -5, 5, -2, 4, -3, 1, -2, 1}, false},
      {"8v", {3, -4, 4, -3, 3, -2, 1, -2, 1}, false},
      {"8w", {3, -1, 2, -2, 1, -2, 0, -1, 1}, false},
      {"8x", {21, -20, 18, -15, 13, -10, 7, -4, 1}, false},
      {"8y", {3, -4, 2, -4, 1, -3, 1, -1, 1}, false},
      {"8z", {5, -5, 5, -3, 4, -3, 1, -2, 1}, false},
  };
  return rows;
}

const std::vector<long>& degree18_coords() {
  static const std::vector<long> c{15, -15, 15, -14, 14, -13, 12, -11, 10, -9, 8, -7, 6, -5, 4, -3, 2, -2, 1};
  return c;
}

}  // namespace chebsalem
