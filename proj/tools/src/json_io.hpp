#pragma once

// JSON encoding of polynomials, intervals and reports. Every payload carries
// "schema": "v1". Integers and rationals are strings ("-3", "5/2") so nothing
// passes through floating point; decimals are renderings only.

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "chebsalem/chebbasis.hpp"
#include "chebsalem/families.hpp"
#include "chebsalem/rootcert.hpp"
#include "chebsalem/salem.hpp"
#include "chebsalem/search.hpp"

namespace chebsalem::io {

using nlohmann::json;

inline constexpr std::string_view kSchema = "v1";

json payload(std::string_view command);

// Rounded to `digits` significant digits through MPFR.
std::string decimal(const mpq_class& q, int digits);

json rational(const mpq_class& q);
mpq_class parse_rational(const std::string& text);  // "p" or "p/q"; throws std::invalid_argument

// {"basis": "monomial" | "z-monomial" | "chebyshev", "coeffs": [...ascending]}
json poly_json(const IntPoly& p, std::string_view basis = "monomial");
json poly_json(const RatPoly& p, std::string_view basis = "monomial");
json cheb_json(const ChebCoords& c);
// Inverse of poly_json / cheb_json for integer payloads; a chebyshev payload is
// converted to the monomial basis.
IntPoly poly_from_json(const json& j);

json interval_json(const RatInterval& r, int digits);

json limit_json(const AlgebraicLimit& l, int digits);
json salem_json(const SalemAnalysis& a, int digits);
json hit_json(const SearchHit& h, int digits, bool pruned);
std::string hit_csv_header();
std::string hit_csv(const SearchHit& h);

// Comma-separated integers, e.g. "1,-1,0"; big values allowed.
std::vector<mpz_class> parse_int_list(const std::string& text);

}  // namespace chebsalem::io
