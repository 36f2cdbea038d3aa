#include "json_io.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace chebsalem::io {

namespace {

std::string join(const std::vector<mpz_class>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += v[i].get_str();
  }
  return s;
}

}  // namespace

json payload(std::string_view command) { return json{{"schema", kSchema}, {"command", command}}; }

std::string decimal(const mpq_class& q, int digits) {
  if (digits < 1) throw std::invalid_argument("decimal digits must be positive");
  mpfr_t x;
  mpfr_init2(x, static_cast<mpfr_prec_t>(digits) * 4 + 64);
  mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, x);
  std::string s(buf);
  mpfr_free_str(buf);
  mpfr_clear(x);
  return s;
}

json rational(const mpq_class& q) { return q.get_str(); }

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("not a rational number: '" + text + "'");
  q.canonicalize();
  return q;
}

json poly_json(const IntPoly& p, std::string_view basis) {
  json c = json::array();
  for (const auto& v : p.coeffs()) c.push_back(v.get_str());
  return {{"basis", basis}, {"coeffs", c}};
}

json poly_json(const RatPoly& p, std::string_view basis) {
  json c = json::array();
  for (const auto& v : p.coeffs()) c.push_back(v.get_str());
  return {{"basis", basis}, {"coeffs", c}};
}

json cheb_json(const ChebCoords& c) {
  json a = json::array();
  for (const auto& v : c.coords()) a.push_back(v.get_str());
  return {{"basis", "chebyshev"}, {"coeffs", a}};
}

IntPoly poly_from_json(const json& j) {
  std::vector<mpz_class> c;
  for (const auto& v : j.at("coeffs")) {
    mpz_class z;
    if (z.set_str(v.get<std::string>(), 10) != 0) throw std::invalid_argument("bad coefficient " + v.dump());
    c.push_back(z);
  }
  const std::string basis = j.at("basis").get<std::string>();
  if (basis == "chebyshev") return from_cheb(ChebCoords(std::move(c)));
  if (basis == "monomial" || basis == "z-monomial") return IntPoly(std::move(c));
  throw std::invalid_argument("unknown basis '" + basis + "'");
}

json interval_json(const RatInterval& r, int digits) {
  return {{"lo", rational(r.lo)}, {"hi", rational(r.hi)}, {"decimal", decimal(r.mid(), digits)}};
}

json limit_json(const AlgebraicLimit& l, int digits) {
  return {{"defining_poly", poly_json(l.defining_poly)},
          {"selector", to_string(l.selector)},
          {"selector_consistent", l.selector_consistent},
          {"enclosure", interval_json(l.enclosure, digits)}};
}

json salem_json(const SalemAnalysis& a, int digits) {
  json cyc = json::array();
  for (const auto& [d, m] : a.cyclotomic_factors) cyc.push_back({d, m});
  json out{{"cyclotomic", cyc}, {"core", poly_json(a.core, "z-monomial")}, {"class", to_string(a.classification)}};
  if (a.tau_enclosure) {
    out["tau"] = {rational(a.tau_enclosure->lo), rational(a.tau_enclosure->hi)};
    out["tau_decimal"] = decimal(a.tau_enclosure->mid(), digits);
  } else {
    out["tau"] = nullptr;
  }
  return out;
}

json hit_json(const SearchHit& h, int digits, bool pruned) {
  json out{{"schema", kSchema},
           {"coords", cheb_json(h.coords)["coeffs"]},
           {"poly", poly_json(h.poly)["coeffs"]},
           {"span", interval_json(h.span_enclosure, digits)},
           {"kronecker", h.kronecker},
           {"canonical", poly_json(h.canonical_form)["coeffs"]}};
  if (pruned) out["search"] = "pruned";
  return out;
}

std::string hit_csv_header() { return "coords,monomial_coeffs,span_lo,span_hi,kronecker"; }

std::string hit_csv(const SearchHit& h) {
  return join(h.coords.coords(), ';') + "," + join(h.poly.vec(), ';') + "," + h.span_enclosure.lo.get_str() + "," +
         h.span_enclosure.hi.get_str() + "," + (h.kronecker ? "true" : "false");
}

std::vector<mpz_class> parse_int_list(const std::string& text) {
  std::vector<mpz_class> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    std::string item = text.substr(start, end - start);
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    item = first == std::string::npos ? "" : item.substr(first, last - first + 1);
    if (!item.empty() && item[0] == '+') item.erase(0, 1);
    mpz_class z;
    if (item.empty() || z.set_str(item, 10) != 0) throw std::invalid_argument("not an integer: '" + item + "'");
    out.push_back(z);
    start = end + 1;
  }
  return out;
}

}  // namespace chebsalem::io
