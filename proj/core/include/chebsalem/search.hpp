#pragma once

// Exhaustive search over small Chebyshev-coordinate vectors for monic
// hyperbolic integer polynomials of small span, and verification of the
// published degree-8 and degree-18 examples.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chebsalem/chebbasis.hpp"
#include "chebsalem/rootcert.hpp"

namespace chebsalem {

struct SearchConfig {
  int degree = 2;
  std::vector<long> coeff_set{-1, 0, 1};  // choices for c_0 .. c_{d-1}; c_d = 1
  bool require_hyperbolic = true;
  mpq_class span_bound = 4;
  bool kronecker_only = false;
  // Optional heuristic: nonzero coordinates alternate in sign from the top.
  // Off by default since it can miss hits.
  bool prune_alternating = false;
  int threads = 0;  // 0: default_threads()
};

// CHEBSALEM_THREADS if set and positive, otherwise the hardware concurrency.
int default_threads();

// |coeff_set|^degree after deduplicating coeff_set.
std::uint64_t candidate_count(const SearchConfig& config);
inline constexpr std::uint64_t kMaxCandidates = 1'000'000'000;

struct SearchHit {
  ChebCoords coords;
  IntPoly poly;
  RatInterval span_enclosure;  // hi < span_bound
  bool kronecker = false;
  IntPoly canonical_form;
};

// Representative of p under x -> -x and integer shifts: the root mean lies in
// [0, 1/2]; at a tie the candidate with lexicographically smaller Chebyshev
// coordinates (from c_0) wins. Requires deg p >= 1.
IntPoly canonical_form(const IntPoly& p);

// Deterministic: hits arrive in lexicographic coordinate order (c_0 most
// significant, coeff_set ascending), first occurrence per canonical form, for
// any thread count. Throws SearchSpaceTooLarge, InvalidParams.
void enumerate(const SearchConfig& config, const std::function<void(const SearchHit&)>& sink);
std::vector<SearchHit> enumerate(const SearchConfig& config);

struct Table8RowReport {
  std::string label;
  IntPoly poly;
  bool monic_degree8 = false;
  bool hyperbolic = false;
  RatInterval span_enclosure;
  bool span_below_four = false;
  bool kronecker = false;
  bool kronecker_expected = false;
  bool ok() const { return monic_degree8 && hyperbolic && span_below_four && kronecker == kronecker_expected; }
};

struct Table8Report {
  std::vector<Table8RowReport> rows;
  bool ordered = false;  // adjacent span enclosures disjoint and increasing
  std::optional<std::string> first_failure;
  bool ok() const { return !first_failure.has_value(); }
};

// Never throws on mismatch; see first_failure.
Table8Report table8_report();
// Throws FixtureMismatch naming the first failing row.
Table8Report verify_table8();

struct Degree18Report {
  IntPoly poly;
  int n_real = 0;
  bool hyperbolic = false;
  RatInterval span_enclosure;  // width < 1e-10
  bool span_below_four = false;
  bool kronecker = false;
  bool ok() const { return hyperbolic && span_below_four && !kronecker; }
};

Degree18Report degree18_report();
Degree18Report verify_degree18();  // throws FixtureMismatch

}  // namespace chebsalem
